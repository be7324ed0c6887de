#pragma once

// Genus-zero quantum K-theory of an isolated (-1,-1) curve: the multiple
// cover series a(r, q^r), b(r, q^r), the small I- and J-function
// coefficients of Y = P(O(-1) + O(-1) + O) over P^1 along the zero-section
// line class, the K+/K- verification linking them, the J-function of the
// resolved conifold X, and the JMGS right-hand side for arbitrary GV data.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bps/gv_transform.hpp"
#include "bps/kring.hpp"
#include "bps/laurent.hpp"
#include "bps/qrf.hpp"

namespace bps {

using QElem = KElem<QRationalFunction>;

/// a(r, q^r) = (r-1)/(1-q^r) + 1/(1-q^r)^2
QRationalFunction a_series(int r);
/// b(r, q^r) = (r^2-1)/(1-q^r) + 3/(1-q^r)^2 - 2/(1-q^r)^3
QRationalFunction b_series(int r);

/// Coefficient of Q^r in I^Y / (1-q):
///   (1-Pt)^2 prod_{m<r} (1-Pt q^m)^2 / ((Pt)^{2r} q^{r(r-1)} prod_{m<=r} (1-P q^m)^2),
/// evaluated in the Y ring without cancelling anything first.
QElem i_coefficient(int r);
/// The same coefficient after cancelling the products against each other:
///   (1-Pt)^2 / ((Pt)^{2r} q^{r(r-1)} (1-P q^r)^2).
QElem i_coefficient_cancelled(int r);

/// Coefficient of Q^r in J^Y / (1-q): (1-Pt)^2 [(2-P) a(r) + (1-P) b(r)].
QElem j_y_coefficient(int r);
/// Coefficient of Q^r in J^X / (1-q): (2-P) a(r) + (1-P) b(r) in the X ring.
QElem j_x_coefficient(int r);

/// Q-expansion r -> coefficient, r = 1..degree_max.
struct NovikovExpansion {
    RingTag tag;
    int degree_max;
    std::map<int, QElem> terms;
};

enum class JFunctionKind { I_Y, J_Y, J_X };
NovikovExpansion novikov_expansion(JFunctionKind kind, int r_max);

struct SplitCheckRow {
    int r = 0;
    bool pass = false;
    /// Per basis coordinate: K- part of the I-coefficient minus the J-coefficient.
    std::vector<QRationalFunction> residuals;
    /// Per basis coordinate: K+ part of the I-coefficient.
    std::vector<LaurentPoly> kplus;
    /// Non-empty when the split itself was refused.
    std::string error;
};

struct SplitCheckReport {
    bool all_pass = true;
    std::vector<SplitCheckRow> rows;
};

using JCoefficientFn = std::function<QElem(int)>;

/// For each r <= r_max, splits every coordinate of i_coefficient(r) into
/// K+ and K- and compares the K- part with the same coordinate of
/// `expected(r)` (j_y_coefficient by default).
SplitCheckReport verify_kminus_split(int r_max, const JCoefficientFn& expected = j_y_coefficient);

/// ∫_d ch(Φ_{1j}) = dot(vectors[j], d).
struct DivisorPairing {
    std::vector<std::vector<int>> vectors;

    [[nodiscard]] int size() const { return static_cast<int>(vectors.size()); }
    [[nodiscard]] long pair(int j, const DegreeVector& d) const;
};

/// Q^n coefficient of the JMGS right-hand side: the Φ^{1j} coefficients
/// and the Φ^{01} coefficient, exact and expanded.
struct JmgsTerm {
    std::vector<QRationalFunction> divisor_part;
    QRationalFunction structure_part;
    std::vector<QSeries> divisor_series;
    QSeries structure_series{{}, 0};
};

struct JmgsRhs {
    Rat constant{1};
    int q_order = 0;
    int divisor_count = 0;
    std::map<DegreeVector, JmgsTerm> terms;
};

/// 1 + sum_d sum_{r <= r_max} [ sum_j Φ^{1j} (d·v_j) a(r) GV_d + Φ^{01} b(r) GV_d ] Q^{rd},
/// grouped by the Novikov degree rd. GV must be genus zero.
JmgsRhs jmgs_rhs(const InvariantTable& gv, const DivisorPairing& pairing, int r_max, int q_order);

/// Reads a single-divisor JMGS term in the X ring through
/// Φ^{11} -> 1 + (1-P) and Φ^{01} -> (1-P).
QElem conifold_dictionary(const JmgsTerm& term);

}  // namespace bps

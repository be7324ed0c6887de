#pragma once

// The genus-filtered Gopakumar–Vafa <-> Gromov–Witten transform
//
//   sum_{g,b} GW_{g,b} q^b λ^{2g-2}
//     = sum_{g,k,b} GV_{g,b} (1/k) (2 sin(kλ/2))^{2g-2} q^{kb},
//
// its genus-zero Möbius form on rank-1 lattices, and an integrality check.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bps/laurent.hpp"
#include "bps/rat.hpp"

namespace bps {

/// Curve class in a chosen basis of H_2: nonnegative integer components.
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> components);
    DegreeVector(std::initializer_list<int> components) : DegreeVector(std::vector<int>(components)) {}

    [[nodiscard]] const std::vector<int>& components() const { return c_; }
    [[nodiscard]] int rank() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] int total() const;
    [[nodiscard]] bool is_zero() const;
    /// Componentwise divisibility by the integer k.
    [[nodiscard]] bool divisible_by(int k) const;
    [[nodiscard]] DegreeVector divided_by(int k) const;
    [[nodiscard]] DegreeVector scaled(int k) const;
    /// Componentwise <=.
    [[nodiscard]] bool within(const DegreeVector& bound) const;
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

private:
    std::vector<int> c_;
};

/// All nonzero classes 0 <= b <= bound, by total degree then lexicographically.
std::vector<DegreeVector> degrees_within(const DegreeVector& bound);

enum class TableKind { GW, GV };
std::string to_string(TableKind k);

/// Sparse (genus, degree) -> value table; missing entries are exact zeros.
class InvariantTable {
public:
    using Key = std::pair<int, DegreeVector>;

    InvariantTable(TableKind kind, int lattice_rank, int genus_max, DegreeVector degree_max);

    [[nodiscard]] TableKind kind() const { return kind_; }
    [[nodiscard]] int lattice_rank() const { return rank_; }
    [[nodiscard]] int genus_max() const { return genus_max_; }
    [[nodiscard]] const DegreeVector& degree_max() const { return degree_max_; }
    /// Nonzero entries only.
    [[nodiscard]] const std::map<Key, Rat>& entries() const { return entries_; }

    [[nodiscard]] Rat at(int genus, const DegreeVector& degree) const;
    /// Stores the value (erasing it when zero). Throws DomainError outside the bounds.
    void set(int genus, const DegreeVector& degree, const Rat& value);
    /// Whether (genus, degree) lies inside the declared bounds.
    [[nodiscard]] bool admits(int genus, const DegreeVector& degree) const;

    /// Same kind, bounds and values.
    friend bool operator==(const InvariantTable&, const InvariantTable&) = default;

private:
    TableKind kind_;
    int rank_;
    int genus_max_;
    DegreeVector degree_max_;
    std::map<Key, Rat> entries_;
};

/// λ-expansion of (2 sin(kλ/2))^{2g-2} known below `order` (order > -2).
LaurentSeries sin_power_series(int k, int g, int order);

/// Loop nesting for the triangular solve. Both respect the filtration and
/// give the same answer; the default is degree-major.
enum class SolveOrder { degree_major, genus_major };

InvariantTable gw_to_gv(const InvariantTable& gw, SolveOrder order = SolveOrder::degree_major);
InvariantTable gv_to_gw(const InvariantTable& gv);

int mobius(long n);

/// GV_d = sum_{e | d} mu(e)/e^3 GW_{d/e} on a rank-1, genus-0 table.
InvariantTable gw_to_gv_genus0_mobius(const InvariantTable& gw);

struct IntegralityViolation {
    int genus;
    DegreeVector degree;
    Rat value;
};

struct IntegralityReport {
    bool is_integral = true;
    std::vector<IntegralityViolation> violations;
};

IntegralityReport check_integrality(const InvariantTable& gv);

}  // namespace bps

#pragma once

// Truncated Laurent series in one formal variable.
//
// A series stores coefficients for exponents min_exp .. trunc_order-1.
// Exponents below min_exp are zero; exponents at or above trunc_order are
// unknown and reading them throws TruncationError.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bps/poly.hpp"
#include "bps/rat.hpp"

namespace bps {

enum class Var { lambda, q };

std::string_view var_symbol(Var v);

class LaurentSeries {
public:
    LaurentSeries(Var var, int min_exp, std::vector<Rat> coeffs, int trunc_order);

    /// The polynomial p known exactly up to (excluding) trunc_order.
    static LaurentSeries from_poly(Var var, const Poly& p, int trunc_order);
    /// c·var^e, known up to trunc_order.
    static LaurentSeries monomial(Var var, const Rat& c, int e, int trunc_order);

    [[nodiscard]] Var var() const { return var_; }
    [[nodiscard]] int min_exp() const { return min_exp_; }
    [[nodiscard]] int trunc_order() const { return trunc_; }
    /// Coefficients for min_exp .. trunc_order-1.
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] Rat coeff(int e) const;

    /// Same series known to a lower order.
    [[nodiscard]] LaurentSeries truncated(int order) const;

    /// Same variable, same truncation order and equal coefficients below it;
    /// stored leading or trailing zeros do not matter.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    Var var_;
    int min_exp_;
    std::vector<Rat> c_;
    int trunc_;
};

/// Product, truncated to min(a.trunc + b.min_exp, b.trunc + a.min_exp).
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);
/// Sum, truncated to the weaker operand.
LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_scale(const LaurentSeries& a, const Rat& s);
/// Multiplicative inverse known up to `order`. The coefficient at
/// a.min_exp() must be nonzero; order may not exceed a.trunc - 2·a.min_exp.
LaurentSeries laurent_invert(const LaurentSeries& a, int order);
/// a^n for n >= 0.
LaurentSeries laurent_pow(const LaurentSeries& a, int n);

/// Ascending text form followed by the truncation term, e.g.
/// "λ^-2 + 1/12 + 1/240·λ^2 + O(λ^4)".
std::string render(const LaurentSeries& s);
/// Inverse of render() for series in `var`.
LaurentSeries parse_laurent(std::string_view text, Var var);

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

/// Power series in q from exponent 0, known below trunc_order.
class QSeries {
public:
    QSeries(std::vector<Rat> coeffs, int trunc_order);

    [[nodiscard]] int trunc_order() const { return trunc_; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] Rat coeff(int e) const;
    [[nodiscard]] LaurentSeries as_laurent() const { return {Var::q, 0, c_, trunc_}; }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rat> c_;
    int trunc_;
};

std::string render(const QSeries& s);

}  // namespace bps

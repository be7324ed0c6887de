#pragma once

// Exact rational functions in q, and the split of such a function into a
// Laurent polynomial part (K+) and a proper part regular at q = 0 (K-).

#include <iosfwd>
#include <string>

#include "bps/laurent.hpp"
#include "bps/poly.hpp"
#include "bps/rat.hpp"

namespace bps {

/// q^shift · poly. Normalized so that poly has a nonzero constant term (or is zero with shift 0).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Poly poly, int shift);

    [[nodiscard]] const Poly& poly() const { return poly_; }
    [[nodiscard]] int shift() const { return shift_; }
    [[nodiscard]] bool is_zero() const { return poly_.is_zero(); }
    [[nodiscard]] Rat coeff(int e) const { return poly_.coeff(e - shift_); }
    [[nodiscard]] int min_exp() const { return shift_; }
    [[nodiscard]] int max_exp() const { return shift_ + poly_.degree(); }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Poly poly_;
    int shift_ = 0;
};

std::string render(const LaurentPoly& p);

class QRationalFunction {
public:
    QRationalFunction() : den_(1) {}
    QRationalFunction(const Rat& c) : num_(c), den_(1) {}  // NOLINT
    QRationalFunction(int c) : QRationalFunction(Rat(c)) {}  // NOLINT
    QRationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT
    QRationalFunction(const LaurentPoly& p);  // NOLINT
    /// num / den; den must be nonzero. Stored reduced with a monic denominator.
    QRationalFunction(Poly num, Poly den);

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    /// deg num < deg den, i.e. f -> 0 as q -> infinity.
    [[nodiscard]] bool is_proper() const { return num_.degree() < den_.degree(); }
    [[nodiscard]] bool regular_at_zero() const { return !den_.coeff(0).is_zero(); }
    [[nodiscard]] Rat eval(const Rat& x) const;
    /// f(q^r) for r >= 1.
    [[nodiscard]] QRationalFunction substitute_power(int r) const;
    [[nodiscard]] QRationalFunction inverse() const;

    QRationalFunction& operator+=(const QRationalFunction& o);
    QRationalFunction& operator-=(const QRationalFunction& o);
    QRationalFunction& operator*=(const QRationalFunction& o);
    QRationalFunction& operator/=(const QRationalFunction& o);

    friend QRationalFunction operator+(QRationalFunction a, const QRationalFunction& b) { return a += b; }
    friend QRationalFunction operator-(QRationalFunction a, const QRationalFunction& b) { return a -= b; }
    friend QRationalFunction operator*(QRationalFunction a, const QRationalFunction& b) { return a *= b; }
    friend QRationalFunction operator/(QRationalFunction a, const QRationalFunction& b) { return a /= b; }
    friend QRationalFunction operator-(const QRationalFunction& a);

    /// Cross-multiplication equality (coincides with field equality since both sides are reduced).
    friend bool operator==(const QRationalFunction& a, const QRationalFunction& b);

    friend std::ostream& operator<<(std::ostream& os, const QRationalFunction& f);

private:
    Poly num_;
    Poly den_;
};

/// "(num)/(den)", or just the numerator when the denominator is 1.
std::string render(const QRationalFunction& f);
/// Inverse of render(QRationalFunction).
QRationalFunction parse_qrf(const std::string& text);

/// Taylor coefficients at q = 0 below `order`. Throws DomainError on a pole at 0.
QSeries qrf_expand(const QRationalFunction& f, int order);

struct KSplit {
    LaurentPoly plus;          // K+ : Laurent polynomial in q
    QRationalFunction minus;   // K- : proper, regular at 0, poles at roots of unity
};

/// Unique decomposition f = plus + minus. The denominator of f must be a
/// power of q times a product of cyclotomic polynomials; anything else
/// throws DomainError.
KSplit kplus_kminus_split(const QRationalFunction& f);

/// True when p (with p(0) != 0) is a product of cyclotomic polynomials up to a constant.
bool is_cyclotomic_product(const Poly& p);

}  // namespace bps

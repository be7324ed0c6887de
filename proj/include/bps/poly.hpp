#pragma once

// Dense univariate polynomials in q over the rationals.

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bps/rat.hpp"

namespace bps {

class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // NOLINT: constants are polynomials
    Poly(int c) : Poly(Rat(c)) {}  // NOLINT
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    /// c * q^e
    static Poly monomial(const Rat& c, int e);
    /// 1 - c q^e, the building block of every denominator in this project.
    static Poly one_minus(const Rat& c, int e);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    /// Coefficient of q^e; zero outside the stored range.
    [[nodiscard]] Rat coeff(int e) const;
    [[nodiscard]] Rat leading() const;
    /// Exponent of the lowest nonzero term (the q-adic valuation); -1 for zero.
    [[nodiscard]] int valuation() const;

    [[nodiscard]] Rat eval(const Rat& x) const;
    /// p(q^r)
    [[nodiscard]] Poly substitute_power(int r) const;
    /// p / q^k, requiring q^k to divide p.
    [[nodiscard]] Poly shift_down(int k) const;
    [[nodiscard]] Poly shift_up(int k) const;
    [[nodiscard]] Poly monic() const;
    [[nodiscard]] Poly pow(int e) const;
    /// Keeps the terms of degree < n.
    [[nodiscard]] Poly truncate(int n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly&, const Poly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rat> c_;  // c_[i] is the coefficient of q^i; no trailing zeros
};

/// Euclidean division: a = quot * b + rem with deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Exact quotient a / b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// m-th cyclotomic polynomial.
Poly cyclotomic(int m);
int euler_phi(int m);

/// Text form in ascending exponents, e.g. "1 - 2·q + q^3".
std::string render_poly(const Poly& p, const std::string& var = "q");

}  // namespace bps

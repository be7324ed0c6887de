#pragma once

// Exact rational numbers. Thin value wrapper over GMP's mpq_class that keeps
// the canonical form (lowest terms, positive denominator) GMP already
// maintains, and adds the "p/q" string format used by every file format in
// this project.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bps {

class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, integers are rationals
    Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    /// Parses "p", "-p" or "p/q" (q != 0). Whitespace is not accepted.
    static Rat parse(std::string_view text);

    /// Renders as "p" when integral, else "p/q".
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    [[nodiscard]] Rat inverse() const;
    /// Integer power; negative exponents invert (zero base throws).
    [[nodiscard]] Rat pow(long e) const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

/// Binomial coefficient C(n, k) as an exact rational (0 outside 0 <= k <= n).
Rat binomial(long n, long k);
Rat factorial(long n);

}  // namespace bps

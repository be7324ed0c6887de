#include "bps/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bps/errors.hpp"
#include "bps/render.hpp"

namespace bps {

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int e) {
    if (e < 0) throw DomainError("negative exponent in polynomial monomial");
    if (c.is_zero()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::one_minus(const Rat& c, int e) { return Poly(1) - monomial(c, e); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(int e) const {
    if (e < 0 || e > degree()) return {};
    return c_[static_cast<std::size_t>(e)];
}

Rat Poly::leading() const {
    if (c_.empty()) return {};
    return c_.back();
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::substitute_power(int r) const {
    if (r < 1) throw DomainError("substitute_power needs r >= 1");
    if (c_.empty()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(r) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(r)] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::shift_down(int k) const {
    if (k < 0) return shift_up(-k);
    if (c_.empty()) return {};
    if (valuation() < k) throw DomainError("q^k does not divide polynomial");
    return Poly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

Poly Poly::shift_up(int k) const {
    if (k < 0) return shift_down(-k);
    if (c_.empty()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    return *this * leading().inverse();
}

Poly Poly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly out(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return out;
}

Poly Poly::truncate(int n) const {
    if (n <= 0) return {};
    if (n > degree()) return *this;
    return Poly(std::vector<Rat>(c_.begin(), c_.begin() + n));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << render_poly(p); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rat inv_lead = b.leading().inverse();
    const auto& bc = b.coeffs();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const Rat factor = rem[static_cast<std::size_t>(i + b.degree())] * inv_lead;
        quot[static_cast<std::size_t>(i)] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= factor * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

int euler_phi(int m) {
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

int mobius_small(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

}  // namespace

Poly cyclotomic(int m) {
    if (m < 1) throw DomainError("cyclotomic index must be positive");
    // Phi_m = prod_{d | m} (q^d - 1)^mu(m/d)
    Poly up(1);
    Poly down(1);
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        const int mu = mobius_small(m / d);
        if (mu == 1) up *= Poly::monomial(1, d) - Poly(1);
        if (mu == -1) down *= Poly::monomial(1, d) - Poly(1);
    }
    return exact_div(up, down);
}

std::string render_poly(const Poly& p, const std::string& var) {
    std::vector<std::pair<int, Rat>> terms;
    for (int e = 0; e <= p.degree(); ++e) {
        if (!p.coeff(e).is_zero()) terms.emplace_back(e, p.coeff(e));
    }
    return render_terms(terms, var);
}

}  // namespace bps

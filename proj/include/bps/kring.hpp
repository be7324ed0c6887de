#pragma once

// Finite-rank quotient rings
//
//   Y ring: Z[P, t] / ((1 - P)^2, (1 - Pt)^2 (1 - t)),  basis {1, P, t, Pt, t^2, Pt^2}
//   X ring: Z[P] / ((1 - P)^2),                          basis {1, P}
//
// in normal-form coordinates, with coefficients in any commutative ring
// that can absorb a Rat (Rat, Poly, QRationalFunction).
//
// Normal forms come from the rewrite rules P^2 -> 2P - 1 and
// t^3 -> (3 - 2P)(1 - t - 2Pt + (4P - 1)t^2); the second is derived from the
// relation at startup rather than typed in.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bps/errors.hpp"
#include "bps/rat.hpp"

namespace bps {

enum class RingTag { Y, X };

int ring_rank(RingTag tag);
std::string to_string(RingTag tag);

/// Exponents (a, b) of the basis monomial P^a t^b at the given index.
std::pair<int, int> basis_monomial(RingTag tag, int index);
/// "1", "P", "t", "Pt", "t^2", "Pt^2".
std::string basis_label(RingTag tag, int index);

/// Polynomial in P, t over the rationals, keyed by (deg_P, deg_t).
using BiPoly = std::map<std::pair<int, int>, Rat>;

enum class RewriteStrategy { p_first, t_first };

/// Reduces a polynomial to normal form by applying the rewrite rules with
/// the given priority until no rule applies. Returns normal-form coordinates.
std::vector<Rat> reduce(RingTag tag, const BiPoly& poly, RewriteStrategy strategy = RewriteStrategy::p_first);

/// The right-hand side of the t^3 rule, derived from the defining relation.
const BiPoly& t_cubed_rule();

/// One nonzero structure constant: e_i · e_j has coefficient `value` on e_k.
struct StructureTerm {
    int k;
    Rat value;
};

/// table[i * rank + j] lists the nonzero terms of e_i · e_j.
const std::vector<std::vector<StructureTerm>>& multiplication_table(RingTag tag);

template <class C>
class KElem {
public:
    KElem(RingTag tag, std::vector<C> coords) : tag_(tag), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != ring_rank(tag_)) {
            throw DomainError("coordinate vector of length " + std::to_string(coords_.size()) + " for a rank " +
                              std::to_string(ring_rank(tag_)) + " ring");
        }
    }

    static KElem zero(RingTag tag) { return KElem(tag, std::vector<C>(static_cast<std::size_t>(ring_rank(tag)), C(Rat(0)))); }
    static KElem scalar(RingTag tag, const C& c) {
        KElem out = zero(tag);
        out.coords_[0] = c;
        return out;
    }
    static KElem one(RingTag tag) { return scalar(tag, C(Rat(1))); }
    /// c · P^a t^b, reduced to normal form.
    static KElem monomial(RingTag tag, int a, int b, const C& c = C(Rat(1))) {
        const std::vector<Rat> nf = reduce(tag, BiPoly{{{a, b}, Rat(1)}});
        std::vector<C> coords;
        for (const Rat& r : nf) coords.push_back(r.is_zero() ? C(Rat(0)) : c * C(r));
        return KElem(tag, std::move(coords));
    }
    static KElem P(RingTag tag) { return monomial(tag, 1, 0); }
    static KElem t(RingTag tag) { return monomial(tag, 0, 1); }

    [[nodiscard]] RingTag tag() const { return tag_; }
    [[nodiscard]] const std::vector<C>& coords() const { return coords_; }
    [[nodiscard]] const C& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coords_) {
            if (!(c == C(Rat(0)))) return false;
        }
        return true;
    }

    KElem& operator+=(const KElem& o) {
        require_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    KElem& operator-=(const KElem& o) {
        require_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    KElem& operator*=(const C& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend KElem operator+(KElem a, const KElem& b) { return a += b; }
    friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
    friend KElem operator*(KElem a, const C& s) { return a *= s; }
    friend KElem operator*(const C& s, KElem a) { return a *= s; }
    friend KElem operator-(const KElem& a) { return zero(a.tag_) - a; }

    friend KElem operator*(const KElem& a, const KElem& b) {
        a.require_same(b);
        const int n = ring_rank(a.tag_);
        const auto& table = multiplication_table(a.tag_);
        std::vector<C> out(static_cast<std::size_t>(n), C(Rat(0)));
        for (int i = 0; i < n; ++i) {
            const C& ai = a.coords_[static_cast<std::size_t>(i)];
            if (ai == C(Rat(0))) continue;
            for (int j = 0; j < n; ++j) {
                const C& bj = b.coords_[static_cast<std::size_t>(j)];
                if (bj == C(Rat(0))) continue;
                const C prod = ai * bj;
                for (const auto& term : table[static_cast<std::size_t>(i * n + j)]) {
                    out[static_cast<std::size_t>(term.k)] += prod * C(term.value);
                }
            }
        }
        return KElem(a.tag_, std::move(out));
    }

    [[nodiscard]] KElem pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        KElem out = one(tag_);
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Multiplicative inverse by solving (this) · x = 1 in coordinates.
    /// Needs C to be a field; throws DomainError when the element is not a unit.
    [[nodiscard]] KElem inverse() const;

    friend bool operator==(const KElem& a, const KElem& b) { return a.tag_ == b.tag_ && a.coords_ == b.coords_; }

private:
    void require_same(const KElem& o) const {
        if (o.tag_ != tag_) throw DomainError("K-ring elements from different rings");
    }

    RingTag tag_;
    std::vector<C> coords_;
};

template <class C>
KElem<C> KElem<C>::inverse() const {
    const int n = ring_rank(tag_);
    // Column j of the matrix is (this) · e_j.
    std::vector<std::vector<C>> m(static_cast<std::size_t>(n), std::vector<C>(static_cast<std::size_t>(n) + 1, C(Rat(0))));
    for (int j = 0; j < n; ++j) {
        std::vector<C> e(static_cast<std::size_t>(n), C(Rat(0)));
        e[static_cast<std::size_t>(j)] = C(Rat(1));
        const KElem col = *this * KElem(tag_, std::move(e));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coord(i);
    }
    m[0][static_cast<std::size_t>(n)] = C(Rat(1));
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n && pivot < 0; ++r) {
            if (!(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] == C(Rat(0)))) pivot = r;
        }
        if (pivot < 0) throw DomainError("K-ring element is not invertible");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
        auto& prow = m[static_cast<std::size_t>(col)];
        const C inv = C(Rat(1)) / prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const C f = row[static_cast<std::size_t>(col)];
            if (f == C(Rat(0))) continue;
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * prow[c];
        }
    }
    std::vector<C> x;
    for (int i = 0; i < n; ++i) x.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
    return KElem(tag_, std::move(x));
}

/// Coefficientwise conversion, e.g. KElem<Rat> -> KElem<QRationalFunction>.
template <class To, class From>
KElem<To> convert(const KElem<From>& a) {
    std::vector<To> out;
    for (const auto& c : a.coords()) out.push_back(To(c));
    return KElem<To>(a.tag(), std::move(out));
}

/// X-ring element viewed in the Y ring through {1, P} -> {1, P}.
template <class C>
KElem<C> lift_to_y(const KElem<C>& x) {
    if (x.tag() != RingTag::X) throw DomainError("lift_to_y expects an X-ring element");
    return x.coord(0) * KElem<C>::one(RingTag::Y) + x.coord(1) * KElem<C>::P(RingTag::Y);
}

/// Left-hand side shape for cancellation_identity_check:
///   [(1-Pt)^2 if prefactor] · (1 - P^p_exponent q^m t^t_exponent)
/// compared against (1-Pt)^2 (1 - P q^m).
struct CancellationForm {
    int p_exponent = 1;
    int t_exponent = 1;
    bool prefactor = true;
};

/// True iff the two sides agree as Y-ring elements with q a free polynomial
/// variable, for every 1 <= m <= m_max. The default form is the identity
/// used to cancel the I-function products; other forms act as controls.
bool cancellation_identity_check(int m_max, CancellationForm form = {});

}  // namespace bps

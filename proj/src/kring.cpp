#include "bps/kring.hpp"

#include "bps/poly.hpp"

namespace bps {

int ring_rank(RingTag tag) { return tag == RingTag::Y ? 6 : 2; }

std::string to_string(RingTag tag) { return tag == RingTag::Y ? "Y" : "X"; }

std::pair<int, int> basis_monomial(RingTag tag, int index) {
    if (index < 0 || index >= ring_rank(tag)) throw DomainError("basis index out of range");
    return {index % 2, index / 2};
}

std::string basis_label(RingTag tag, int index) {
    const auto [a, b] = basis_monomial(tag, index);
    std::string out = a == 1 ? "P" : "";
    if (b >= 1) out += "t";
    if (b >= 2) out += "^" + std::to_string(b);
    return out.empty() ? "1" : out;
}

namespace {

BiPoly mul(const BiPoly& x, const BiPoly& y) {
    BiPoly out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) out[{mx.first + my.first, mx.second + my.second}] += cx * cy;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

void add_scaled(BiPoly& acc, const BiPoly& p, const Rat& c, int da, int db) {
    for (const auto& [m, v] : p) acc[{m.first + da, m.second + db}] += c * v;
}

const BiPoly& p_squared_rule() {
    static const BiPoly rule{{{1, 0}, Rat(2)}, {{0, 0}, Rat(-1)}};  // P^2 -> 2P - 1
    return rule;
}

/// Applies one rewrite to the first term matching `pred`; false when none does.
template <class Pred>
bool rewrite_once(BiPoly& poly, Pred pred, const BiPoly& rule, int da, int db) {
    for (auto it = poly.begin(); it != poly.end(); ++it) {
        if (it->second.is_zero() || !pred(it->first)) continue;
        const auto [a, b] = it->first;
        const Rat c = it->second;
        poly.erase(it);
        add_scaled(poly, rule, c, a - da, b - db);
        std::erase_if(poly, [](const auto& kv) { return kv.second.is_zero(); });
        return true;
    }
    return false;
}

bool reduce_p(BiPoly& poly) {
    return rewrite_once(poly, [](const std::pair<int, int>& m) { return m.first >= 2; }, p_squared_rule(), 2, 0);
}

bool reduce_t(BiPoly& poly) {
    return rewrite_once(poly, [](const std::pair<int, int>& m) { return m.second >= 3; }, t_cubed_rule(), 0, 3);
}

BiPoly p_normal(BiPoly poly) {
    while (reduce_p(poly)) {
    }
    return poly;
}

BiPoly derive_t_cubed_rule() {
    const BiPoly one_minus_pt{{{0, 0}, Rat(1)}, {{1, 1}, Rat(-1)}};
    const BiPoly one_minus_t{{{0, 0}, Rat(1)}, {{0, 1}, Rat(-1)}};
    const BiPoly relation = p_normal(mul(mul(one_minus_pt, one_minus_pt), one_minus_t));
    // relation = (l0 + l1 P) t^3 + rest, rest of t-degree <= 2
    Rat l0;
    Rat l1;
    BiPoly rest;
    for (const auto& [m, c] : relation) {
        if (m.second > 3) throw DomainError("unexpected t-degree in the Y-ring relation");
        if (m.second == 3) {
            (m.first == 0 ? l0 : l1) = c;
        } else {
            rest[m] = c;
        }
    }
    // (l0 + l1 P)(g + d P) = (l0 g - l1 d) + (l1 g + (l0 + 2 l1) d) P using P^2 = 2P - 1
    const Rat det = (l0 + l1) * (l0 + l1);
    if (det.is_zero()) throw DomainError("leading coefficient of the t^3 relation is not a unit");
    const Rat g = (l0 + Rat(2) * l1) / det;
    const Rat d = -l1 / det;
    const BiPoly lead_inverse{{{0, 0}, g}, {{1, 0}, d}};
    BiPoly neg_rest;
    for (const auto& [m, c] : rest) neg_rest[m] = -c;
    return p_normal(mul(lead_inverse, neg_rest));
}

std::vector<std::vector<StructureTerm>> build_table(RingTag tag) {
    const int n = ring_rank(tag);
    std::vector<std::vector<StructureTerm>> table(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto [ai, bi] = basis_monomial(tag, i);
            const auto [aj, bj] = basis_monomial(tag, j);
            const auto coords = reduce(tag, BiPoly{{{ai + aj, bi + bj}, Rat(1)}});
            for (int k = 0; k < n; ++k) {
                if (!coords[static_cast<std::size_t>(k)].is_zero()) {
                    table[static_cast<std::size_t>(i * n + j)].push_back({k, coords[static_cast<std::size_t>(k)]});
                }
            }
        }
    }
    return table;
}

}  // namespace

const BiPoly& t_cubed_rule() {
    static const BiPoly rule = derive_t_cubed_rule();
    return rule;
}

std::vector<Rat> reduce(RingTag tag, const BiPoly& poly, RewriteStrategy strategy) {
    BiPoly work = poly;
    std::erase_if(work, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [m, c] : work) {
        if (m.first < 0 || m.second < 0) throw DomainError("negative exponent in a K-ring polynomial");
        if (tag == RingTag::X && m.second > 0) throw DomainError("t does not exist in the X ring");
    }
    while (true) {
        bool changed = false;
        if (strategy == RewriteStrategy::p_first) {
            changed = reduce_p(work) || (tag == RingTag::Y && reduce_t(work));
        } else {
            changed = (tag == RingTag::Y && reduce_t(work)) || reduce_p(work);
        }
        if (!changed) break;
    }
    std::vector<Rat> coords(static_cast<std::size_t>(ring_rank(tag)));
    for (const auto& [m, c] : work) coords[static_cast<std::size_t>(m.first + 2 * m.second)] += c;
    return coords;
}

const std::vector<std::vector<StructureTerm>>& multiplication_table(RingTag tag) {
    static const auto y_table = build_table(RingTag::Y);
    static const auto x_table = build_table(RingTag::X);
    return tag == RingTag::Y ? y_table : x_table;
}

bool cancellation_identity_check(int m_max, CancellationForm form) {
    if (m_max < 1) throw DomainError("cancellation_identity_check needs m_max >= 1");
    using E = KElem<Poly>;
    const E one = E::one(RingTag::Y);
    const E pt = E::monomial(RingTag::Y, 1, 1);
    const E sq = (one - pt) * (one - pt);
    for (int m = 1; m <= m_max; ++m) {
        const Poly qm = Poly::monomial(1, m);
        const E factor = one - E::monomial(RingTag::Y, form.p_exponent, form.t_exponent, qm);
        const E lhs = form.prefactor ? sq * factor : factor;
        const E rhs = sq * (one - E::monomial(RingTag::Y, 1, 0, qm));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace bps

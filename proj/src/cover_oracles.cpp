#include "bps/cover_oracles.hpp"

#include <mutex>
#include <vector>

#include "bps/errors.hpp"

namespace bps {

Rat bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli needs n >= 0");
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
        Rat acc;
        for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * cache[static_cast<std::size_t>(k)];
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[static_cast<std::size_t>(n)];
}

Rat conifold_gw(int g, int d) {
    if (d < 1) throw DomainError("conifold_gw needs d >= 1");
    if (g < 0) throw DomainError("conifold_gw needs g >= 0");
    if (g == 0) return Rat(1) / Rat(d).pow(3);
    if (g == 1) return Rat(1) / Rat(12 * d);
    return bernoulli(2 * g).abs() * Rat(d).pow(2 * g - 3) / (Rat(2 * g) * factorial(2 * g - 2));
}

InvariantTable conifold_gw_table(int g_max, int d_max) {
    if (g_max < 0 || d_max < 1) throw DomainError("conifold tables need g_max >= 0 and d_max >= 1");
    InvariantTable gw(TableKind::GW, 1, g_max, DegreeVector{d_max});
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) gw.set(g, DegreeVector{d}, conifold_gw(g, d));
    }
    return gw;
}

InvariantTable conifold_gv_table(int g_max, int d_max) { return gw_to_gv(conifold_gw_table(g_max, d_max)); }

bool is_conifold_delta(const InvariantTable& gv) {
    return gv.entries().size() == 1 && gv.at(0, DegreeVector{1}) == Rat(1);
}

}  // namespace bps

#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the series/transform code paths it is used to check: series are
// plain exponent -> coefficient maps and every routine is the most direct
// formula available.

#include <map>
#include <vector>

#include "bps/rat.hpp"

namespace oracle {

using bps::Rat;
using Terms = std::map<int, Rat>;

/// Term-by-term product, dropping every exponent >= cutoff.
inline Terms mul(const Terms& a, const Terms& b, int cutoff) {
    Terms out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            if (ea + eb < cutoff) out[ea + eb] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

/// Series inverse by Newton iteration b <- b(2 - a b), for a = x^m (a0 + ...).
/// Returns coefficients of exponents < cutoff.
inline Terms newton_inverse(const Terms& a, int cutoff) {
    const int m = a.begin()->first;
    Terms unit;  // a / x^m
    for (const auto& [e, c] : a) unit[e - m] = c;
    Terms b{{0, unit.at(0).inverse()}};
    const int need = cutoff + m;  // precision required on the unit part
    for (int prec = 1; prec < 2 * need + 2; prec *= 2) {
        Terms ab = mul(unit, b, 2 * prec);
        Terms two_minus;
        two_minus[0] = Rat(2);
        for (const auto& [e, c] : ab) two_minus[e] -= c;
        b = mul(b, two_minus, 2 * prec);
    }
    Terms out;
    for (const auto& [e, c] : b) {
        if (e - m < cutoff && !c.is_zero()) out[e - m] = c;
    }
    return out;
}

/// Coefficient of q^n in (1 - q)^-m.
inline Rat inverse_binomial_coeff(int m, int n) { return bps::binomial(n + m - 1, m - 1); }

/// (2 sin(kx/2))^2 = 2 - 2 cos(kx), straight from the cosine Taylor series.
inline Terms two_sin_half_squared(int k, int cutoff) {
    Terms out;
    for (int n = 1; 2 * n < cutoff; ++n) {
        Rat term = Rat(2) * Rat(k).pow(2 * n) / bps::factorial(2 * n);
        out[2 * n] = n % 2 == 1 ? term : -term;
    }
    return out;
}

/// Bernoulli numbers by the Akiyama–Tanigawa algorithm (yields B1 = +1/2;
/// only even indices are compared).
inline std::vector<Rat> akiyama_tanigawa(int n_max) {
    std::vector<Rat> out;
    std::vector<Rat> a(static_cast<std::size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) {
        a[static_cast<std::size_t>(m)] = Rat(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = Rat(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        }
        out.push_back(a[0]);
    }
    return out;
}

/// Möbius function by trial division over all divisors (slow on purpose).
inline int mobius_bruteforce(int n) {
    int primes = 0;
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
        if (!prime || n % p != 0) continue;
        if (n % (p * p) == 0) return 0;
        ++primes;
    }
    return primes % 2 == 0 ? 1 : -1;
}

}  // namespace oracle

namespace oracle {

/// (2 sin(kx/2))^{2g-2}, exponents below cutoff, via the cosine identity.
inline Terms sin_power(int k, int g, int cutoff) {
    const Terms sq = two_sin_half_squared(k, cutoff + 6);
    if (g == 0) return newton_inverse(sq, cutoff);
    Terms out{{0, Rat(1)}};
    for (int i = 1; i < g; ++i) out = mul(out, sq, cutoff);
    std::erase_if(out, [cutoff](const auto& kv) { return kv.first >= cutoff; });
    return out;
}

/// Rank-1 forward transform by expanding the full generating function:
/// returns GW[(g, d)] for g <= g_max, d <= d_max from GV[(g, d)].
inline std::map<std::pair<int, int>, Rat> forward_rank1(const std::map<std::pair<int, int>, Rat>& gv, int g_max, int d_max) {
    std::map<std::pair<int, int>, Rat> gw;
    for (const auto& [key, value] : gv) {
        const auto [g, d] = key;
        for (int k = 1; k * d <= d_max; ++k) {
            for (const auto& [e, c] : sin_power(k, g, 2 * g_max - 1)) {
                // λ^e with e = 2h - 2
                gw[{(e + 2) / 2, k * d}] += value * c / Rat(k);
            }
        }
    }
    std::erase_if(gw, [](const auto& kv) { return kv.second.is_zero(); });
    return gw;
}

}  // namespace oracle

#include "bps/gv_transform.hpp"

#include <algorithm>
#include <numeric>

#include "bps/errors.hpp"

namespace bps {

DegreeVector::DegreeVector(std::vector<int> components) : c_(std::move(components)) {
    for (int c : c_) {
        if (c < 0) throw DomainError("degree components must be nonnegative");
    }
}

int DegreeVector::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool DegreeVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int c) { return c == 0; });
}

bool DegreeVector::divisible_by(int k) const {
    return std::all_of(c_.begin(), c_.end(), [k](int c) { return c % k == 0; });
}

DegreeVector DegreeVector::divided_by(int k) const {
    std::vector<int> out;
    for (int c : c_) out.push_back(c / k);
    return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::scaled(int k) const {
    std::vector<int> out;
    for (int c : c_) out.push_back(c * k);
    return DegreeVector(std::move(out));
}

bool DegreeVector::within(const DegreeVector& bound) const {
    if (bound.rank() != rank()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] > bound.c_[i]) return false;
    }
    return true;
}

std::string DegreeVector::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c_[i]);
    }
    return out + "]";
}

std::vector<DegreeVector> degrees_within(const DegreeVector& bound) {
    std::vector<DegreeVector> out;
    std::vector<int> cur(static_cast<std::size_t>(bound.rank()), 0);
    const auto& b = bound.components();
    while (true) {
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == b[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
        out.emplace_back(cur);
    }
    std::sort(out.begin(), out.end(), [](const DegreeVector& x, const DegreeVector& y) {
        if (x.total() != y.total()) return x.total() < y.total();
        return x < y;
    });
    return out;
}

std::string to_string(TableKind k) { return k == TableKind::GW ? "GW" : "GV"; }

InvariantTable::InvariantTable(TableKind kind, int lattice_rank, int genus_max, DegreeVector degree_max)
    : kind_(kind), rank_(lattice_rank), genus_max_(genus_max), degree_max_(std::move(degree_max)) {
    if (rank_ < 1) throw DomainError("lattice rank must be positive");
    if (genus_max_ < 0) throw DomainError("genus_max must be nonnegative");
    if (degree_max_.rank() != rank_) {
        throw DomainError("degree_max has " + std::to_string(degree_max_.rank()) + " components, lattice rank is " +
                          std::to_string(rank_));
    }
}

bool InvariantTable::admits(int genus, const DegreeVector& degree) const {
    return genus >= 0 && genus <= genus_max_ && degree.rank() == rank_ && !degree.is_zero() && degree.within(degree_max_);
}

Rat InvariantTable::at(int genus, const DegreeVector& degree) const {
    auto it = entries_.find({genus, degree});
    return it == entries_.end() ? Rat() : it->second;
}

void InvariantTable::set(int genus, const DegreeVector& degree, const Rat& value) {
    if (!admits(genus, degree)) {
        throw DomainError("entry (genus " + std::to_string(genus) + ", degree " + degree.str() + ") outside table bounds (genus_max " +
                          std::to_string(genus_max_) + ", degree_max " + degree_max_.str() + ")");
    }
    if (value.is_zero()) {
        entries_.erase({genus, degree});
    } else {
        entries_[{genus, degree}] = value;
    }
}

LaurentSeries sin_power_series(int k, int g, int order) {
    if (k < 1) throw DomainError("sin_power_series needs k >= 1");
    if (g < 0) throw DomainError("sin_power_series needs g >= 0");
    if (order <= -2) throw DomainError("sin_power_series needs order > -2");
    if (g == 1) return LaurentSeries::monomial(Var::lambda, 1, 0, order);

    // 2 sin(kλ/2) = sum_n (-1)^n k^{2n+1} λ^{2n+1} / (4^n (2n+1)!)
    const int sine_trunc = std::max(order, 0) + 4;
    std::vector<Rat> sine(static_cast<std::size_t>(sine_trunc));
    for (int n = 0; 2 * n + 1 < sine_trunc; ++n) {
        Rat c = Rat(k).pow(2 * n + 1) / (Rat(4).pow(n) * factorial(2 * n + 1));
        sine[static_cast<std::size_t>(2 * n + 1)] = n % 2 == 0 ? c : -c;
    }
    // Start the stored range at λ^1 so the leading coefficient is the stored front.
    const LaurentSeries s(Var::lambda, 1, std::vector<Rat>(sine.begin() + 1, sine.end()), sine_trunc);
    const LaurentSeries sq = laurent_mul(s, s);
    if (g == 0) return laurent_invert(sq, order);
    return laurent_pow(sq, g - 1).truncated(order);
}

namespace {

void require_kind(const InvariantTable& t, TableKind kind) {
    if (t.kind() != kind) {
        throw DomainError("expected a " + to_string(kind) + " table, got " + to_string(t.kind()));
    }
}

/// coeff(k, g, h) = (1/k) [λ^{2h-2}] (2 sin(kλ/2))^{2g-2} for k <= k_max, g, h <= genus_max.
class CoverCoefficients {
public:
    CoverCoefficients(int k_max, int genus_max) : genus_max_(genus_max) {
        const int order = 2 * genus_max - 1;
        for (int k = 1; k <= k_max; ++k) {
            for (int g = 0; g <= genus_max; ++g) {
                const LaurentSeries s = sin_power_series(k, g, order);
                for (int h = 0; h <= genus_max; ++h) values_.push_back(s.coeff(2 * h - 2) / Rat(k));
            }
        }
    }

    [[nodiscard]] const Rat& operator()(int k, int g, int h) const {
        const auto n = static_cast<std::size_t>(genus_max_ + 1);
        return values_[(static_cast<std::size_t>(k - 1) * n + static_cast<std::size_t>(g)) * n + static_cast<std::size_t>(h)];
    }

private:
    int genus_max_;
    std::vector<Rat> values_;
};

int max_component(const DegreeVector& d) {
    const auto& c = d.components();
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

/// sum over k | degree, g <= h, (k, g) != (1, h) of coeff(k, g, h) GV_{g, degree/k}.
Rat off_diagonal(const InvariantTable& gv, const CoverCoefficients& coeff, int h, const DegreeVector& degree) {
    Rat acc;
    const int k_top = max_component(degree);
    for (int k = 1; k <= k_top; ++k) {
        if (!degree.divisible_by(k)) continue;
        const DegreeVector base = degree.divided_by(k);
        for (int g = 0; g <= h; ++g) {
            if (k == 1 && g == h) continue;
            const Rat v = gv.at(g, base);
            if (!v.is_zero()) acc += coeff(k, g, h) * v;
        }
    }
    return acc;
}

}  // namespace

InvariantTable gw_to_gv(const InvariantTable& gw, SolveOrder order) {
    require_kind(gw, TableKind::GW);
    InvariantTable gv(TableKind::GV, gw.lattice_rank(), gw.genus_max(), gw.degree_max());
    const CoverCoefficients coeff(std::max(1, max_component(gw.degree_max())), gw.genus_max());
    const auto degrees = degrees_within(gw.degree_max());
    // The diagonal coefficient (k = 1, g = h) is the leading term of
    // (2 sin(λ/2))^{2h-2}, i.e. 1, so each cell is solved by subtraction.
    auto solve = [&](int h, const DegreeVector& d) { gv.set(h, d, gw.at(h, d) - off_diagonal(gv, coeff, h, d)); };
    if (order == SolveOrder::degree_major) {
        for (const auto& d : degrees) {
            for (int h = 0; h <= gw.genus_max(); ++h) solve(h, d);
        }
    } else {
        for (int h = 0; h <= gw.genus_max(); ++h) {
            for (const auto& d : degrees) solve(h, d);
        }
    }
    return gv;
}

InvariantTable gv_to_gw(const InvariantTable& gv) {
    require_kind(gv, TableKind::GV);
    InvariantTable gw(TableKind::GW, gv.lattice_rank(), gv.genus_max(), gv.degree_max());
    const CoverCoefficients coeff(std::max(1, max_component(gv.degree_max())), gv.genus_max());
    for (const auto& d : degrees_within(gv.degree_max())) {
        for (int h = 0; h <= gv.genus_max(); ++h) gw.set(h, d, gv.at(h, d) + off_diagonal(gv, coeff, h, d));
    }
    return gw;
}

int mobius(long n) {
    if (n < 1) throw DomainError("mobius needs n >= 1");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

InvariantTable gw_to_gv_genus0_mobius(const InvariantTable& gw) {
    require_kind(gw, TableKind::GW);
    if (gw.lattice_rank() != 1) throw DomainError("the Möbius path needs a rank-1 table");
    if (gw.genus_max() != 0) throw DomainError("the Möbius path needs a genus-0 table (genus_max = 0)");
    InvariantTable gv(TableKind::GV, 1, 0, gw.degree_max());
    for (int d = 1; d <= gw.degree_max().components()[0]; ++d) {
        Rat acc;
        for (int e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            const int mu = mobius(e);
            if (mu != 0) acc += Rat(mu) / Rat(e).pow(3) * gw.at(0, DegreeVector{d / e});
        }
        gv.set(0, DegreeVector{d}, acc);
    }
    return gv;
}

IntegralityReport check_integrality(const InvariantTable& gv) {
    require_kind(gv, TableKind::GV);
    IntegralityReport report;
    for (const auto& [key, value] : gv.entries()) {
        if (!value.is_integer()) report.violations.push_back({key.first, key.second, value});
    }
    report.is_integral = report.violations.empty();
    return report;
}

}  // namespace bps

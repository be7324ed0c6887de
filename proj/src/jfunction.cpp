#include "bps/jfunction.hpp"

#include "bps/errors.hpp"

namespace bps {

namespace {

void require_r(int r) {
    if (r < 1) throw DomainError("cover degree r must be >= 1, got " + std::to_string(r));
}

QRationalFunction inverse_power_one_minus_qr(int r, int power) {
    return {Poly(1), Poly::one_minus(1, r).pow(power)};
}

QElem lift(const KElem<Rat>& e) { return convert<QRationalFunction>(e); }

QElem one_minus_pt_squared() {
    const auto one = KElem<Rat>::one(RingTag::Y);
    const auto pt = KElem<Rat>::monomial(RingTag::Y, 1, 1);
    return lift((one - pt) * (one - pt));
}

/// (2 - P) a + (1 - P) b in the given ring.
QElem cover_combination(RingTag tag, int r) {
    const QElem one = QElem::one(tag);
    const QElem p = QElem::P(tag);
    return (one + (one - p)) * a_series(r) + (one - p) * b_series(r);
}

}  // namespace

QRationalFunction a_series(int r) {
    require_r(r);
    return QRationalFunction(Rat(r - 1)) * inverse_power_one_minus_qr(r, 1) + inverse_power_one_minus_qr(r, 2);
}

QRationalFunction b_series(int r) {
    require_r(r);
    return QRationalFunction(Rat(r * r - 1)) * inverse_power_one_minus_qr(r, 1) +
           QRationalFunction(3) * inverse_power_one_minus_qr(r, 2) - QRationalFunction(2) * inverse_power_one_minus_qr(r, 3);
}

QElem i_coefficient(int r) {
    require_r(r);
    const RingTag y = RingTag::Y;
    const QElem one = QElem::one(y);
    QElem num = one_minus_pt_squared();
    QElem den = lift(KElem<Rat>::monomial(y, 1, 1).pow(2 * r)) * QRationalFunction(Poly::monomial(1, r * (r - 1)));
    for (int m = 1; m < r; ++m) {
        const QElem f = one - QElem::monomial(y, 1, 1, Poly::monomial(1, m));
        num = num * f * f;
    }
    for (int m = 1; m <= r; ++m) {
        const QElem f = one - QElem::monomial(y, 1, 0, Poly::monomial(1, m));
        den = den * f * f;
    }
    return num * den.inverse();
}

QElem i_coefficient_cancelled(int r) {
    require_r(r);
    const RingTag y = RingTag::Y;
    // (Pt)^{-1} is taken over the rationals, where the ring is finite dimensional.
    const QElem pt_inv = lift(KElem<Rat>::monomial(y, 1, 1).inverse());
    const QElem f = QElem::one(y) - QElem::monomial(y, 1, 0, Poly::monomial(1, r));
    const QElem f_inv = f.inverse();
    const QRationalFunction q_shift(Poly(1), Poly::monomial(1, r * (r - 1)));
    return one_minus_pt_squared() * pt_inv.pow(2 * r) * f_inv * f_inv * q_shift;
}

QElem j_y_coefficient(int r) {
    require_r(r);
    return one_minus_pt_squared() * cover_combination(RingTag::Y, r);
}

QElem j_x_coefficient(int r) {
    require_r(r);
    return cover_combination(RingTag::X, r);
}

NovikovExpansion novikov_expansion(JFunctionKind kind, int r_max) {
    if (r_max < 1) throw DomainError("r_max must be >= 1");
    NovikovExpansion out{kind == JFunctionKind::J_X ? RingTag::X : RingTag::Y, r_max, {}};
    for (int r = 1; r <= r_max; ++r) {
        switch (kind) {
            case JFunctionKind::I_Y: out.terms.emplace(r, i_coefficient(r)); break;
            case JFunctionKind::J_Y: out.terms.emplace(r, j_y_coefficient(r)); break;
            case JFunctionKind::J_X: out.terms.emplace(r, j_x_coefficient(r)); break;
        }
    }
    return out;
}

SplitCheckReport verify_kminus_split(int r_max, const JCoefficientFn& expected) {
    if (r_max < 1) throw DomainError("r_max must be >= 1");
    SplitCheckReport report;
    for (int r = 1; r <= r_max; ++r) {
        SplitCheckRow row;
        row.r = r;
        try {
            const QElem i = i_coefficient(r);
            const QElem j = expected(r);
            if (j.tag() != RingTag::Y) throw DomainError("expected coefficient is not a Y-ring element");
            row.pass = true;
            for (int k = 0; k < ring_rank(RingTag::Y); ++k) {
                const KSplit s = kplus_kminus_split(i.coord(k));
                row.kplus.push_back(s.plus);
                row.residuals.push_back(s.minus - j.coord(k));
                row.pass = row.pass && row.residuals.back().is_zero();
            }
        } catch (const DomainError& e) {
            row.pass = false;
            row.error = e.what();
        }
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

long DivisorPairing::pair(int j, const DegreeVector& d) const {
    const auto& v = vectors.at(static_cast<std::size_t>(j));
    if (static_cast<int>(v.size()) != d.rank()) throw DomainError("pairing vector length does not match the lattice rank");
    long acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += static_cast<long>(v[i]) * d.components()[i];
    return acc;
}

JmgsRhs jmgs_rhs(const InvariantTable& gv, const DivisorPairing& pairing, int r_max, int q_order) {
    if (gv.kind() != TableKind::GV) throw DomainError("jmgs needs a GV table");
    if (r_max < 1) throw DomainError("r_max must be >= 1");
    if (q_order < 0) throw DomainError("q_order must be >= 0");
    for (const auto& v : pairing.vectors) {
        if (static_cast<int>(v.size()) != gv.lattice_rank()) {
            throw DomainError("pairing vector of length " + std::to_string(v.size()) + " for lattice rank " +
                              std::to_string(gv.lattice_rank()));
        }
    }
    for (const auto& [key, value] : gv.entries()) {
        if (key.first != 0) {
            throw DomainError("jmgs takes genus-zero GV data; found genus " + std::to_string(key.first) + " at degree " +
                              key.second.str());
        }
    }

    JmgsRhs out;
    out.q_order = q_order;
    out.divisor_count = pairing.size();
    for (int r = 1; r <= r_max; ++r) {
        const QRationalFunction a = a_series(r);
        const QRationalFunction b = b_series(r);
        for (const auto& [key, value] : gv.entries()) {
            const DegreeVector& d = key.second;
            JmgsTerm& term = out.terms[d.scaled(r)];
            term.divisor_part.resize(static_cast<std::size_t>(pairing.size()));
            for (int j = 0; j < pairing.size(); ++j) {
                const Rat weight = Rat(pairing.pair(j, d)) * value;
                if (!weight.is_zero()) term.divisor_part[static_cast<std::size_t>(j)] += QRationalFunction(weight) * a;
            }
            term.structure_part += QRationalFunction(value) * b;
        }
    }
    for (auto& [n, term] : out.terms) {
        term.divisor_series.clear();
        for (const auto& f : term.divisor_part) term.divisor_series.push_back(qrf_expand(f, q_order));
        term.structure_series = qrf_expand(term.structure_part, q_order);
    }
    return out;
}

QElem conifold_dictionary(const JmgsTerm& term) {
    if (term.divisor_part.size() != 1) throw DomainError("the conifold dictionary needs exactly one divisor class");
    const QElem one = QElem::one(RingTag::X);
    const QElem p = QElem::P(RingTag::X);
    return (one + (one - p)) * term.divisor_part[0] + (one - p) * term.structure_part;
}

}  // namespace bps

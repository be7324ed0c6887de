#include "bps/qrf.hpp"

#include <ostream>

#include "bps/errors.hpp"
#include "bps/render.hpp"

namespace bps {

LaurentPoly::LaurentPoly(Poly poly, int shift) : poly_(std::move(poly)), shift_(shift) {
    if (poly_.is_zero()) {
        shift_ = 0;
        return;
    }
    const int v = poly_.valuation();
    poly_ = poly_.shift_down(v);
    shift_ += v;
}

std::string render(const LaurentPoly& p) {
    std::vector<std::pair<int, Rat>> terms;
    for (int e = p.min_exp(); !p.is_zero() && e <= p.max_exp(); ++e) {
        if (!p.coeff(e).is_zero()) terms.emplace_back(e, p.coeff(e));
    }
    return render_terms(terms, "q");
}

QRationalFunction::QRationalFunction(const LaurentPoly& p)
    : QRationalFunction(p.shift() >= 0 ? p.poly().shift_up(p.shift()) : p.poly(),
                        p.shift() >= 0 ? Poly(1) : Poly::monomial(1, -p.shift())) {}

QRationalFunction::QRationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rat lead = den_.leading();
    if (lead != Rat(1)) {
        const Rat inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rat QRationalFunction::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

QRationalFunction QRationalFunction::substitute_power(int r) const {
    return {num_.substitute_power(r), den_.substitute_power(r)};
}

QRationalFunction QRationalFunction::inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return {den_, num_};
}

QRationalFunction& QRationalFunction::operator+=(const QRationalFunction& o) {
    if (den_ == o.den_) return *this = QRationalFunction(num_ + o.num_, den_);
    return *this = QRationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRationalFunction& QRationalFunction::operator-=(const QRationalFunction& o) {
    if (den_ == o.den_) return *this = QRationalFunction(num_ - o.num_, den_);
    return *this = QRationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRationalFunction& QRationalFunction::operator*=(const QRationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = QRationalFunction();
    return *this = QRationalFunction(num_ * o.num_, den_ * o.den_);
}

QRationalFunction& QRationalFunction::operator/=(const QRationalFunction& o) { return *this *= o.inverse(); }

QRationalFunction operator-(const QRationalFunction& a) {
    QRationalFunction out = a;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const QRationalFunction& a, const QRationalFunction& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::ostream& operator<<(std::ostream& os, const QRationalFunction& f) { return os << render(f); }

std::string render(const QRationalFunction& f) {
    if (f.den() == Poly(1)) return render_poly(f.num());
    return "(" + render_poly(f.num()) + ")/(" + render_poly(f.den()) + ")";
}

QRationalFunction parse_qrf(const std::string& text) {
    auto poly_of = [](std::string_view s) {
        std::vector<Rat> c;
        for (auto& [e, v] : parse_terms(s, "q")) {
            if (e < 0) throw InputError("negative exponent inside a polynomial");
            if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
            c[static_cast<std::size_t>(e)] = v;
        }
        return Poly(std::move(c));
    };
    const auto mid = text.find(")/(");
    if (mid == std::string::npos) return poly_of(text);
    if (text.front() != '(' || text.back() != ')') throw InputError("malformed rational function \"" + text + "\"");
    const std::string_view all(text);
    return {poly_of(all.substr(1, mid - 1)), poly_of(all.substr(mid + 3, all.size() - mid - 4))};
}

QSeries qrf_expand(const QRationalFunction& f, int order) {
    if (!f.regular_at_zero()) throw DomainError("rational function has a pole at q = 0: " + render(f));
    const Poly& num = f.num();
    const Poly& den = f.den();
    const Rat inv0 = den.coeff(0).inverse();
    std::vector<Rat> s(static_cast<std::size_t>(std::max(order, 0)));
    for (int n = 0; n < order; ++n) {
        Rat acc = num.coeff(n);
        for (int i = 1; i <= std::min(n, den.degree()); ++i) acc -= den.coeff(i) * s[static_cast<std::size_t>(n - i)];
        s[static_cast<std::size_t>(n)] = acc * inv0;
    }
    return {std::move(s), std::max(order, 0)};
}

bool is_cyclotomic_product(const Poly& p) {
    if (p.is_zero() || p.coeff(0).is_zero()) return false;
    Poly rest = p.monic();
    // phi(m) <= deg forces m <= 2·deg^2 (phi(m) >= sqrt(m/2)).
    const int bound = 2 * rest.degree() * rest.degree() + 2;
    for (int m = 1; m <= bound && rest.degree() > 0; ++m) {
        if (euler_phi(m) > rest.degree()) continue;
        const Poly cyc = cyclotomic(m);
        while (rest.degree() >= cyc.degree()) {
            auto [quot, rem] = divmod(rest, cyc);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
        }
    }
    return rest.degree() == 0;
}

KSplit kplus_kminus_split(const QRationalFunction& f) {
    if (f.is_zero()) return {};
    const int k = f.den().valuation();
    const Poly d0 = f.den().shift_down(k);
    if (!is_cyclotomic_product(d0)) {
        throw DomainError("K+/K- split needs poles only at 0 and at roots of unity; denominator " + render_poly(f.den()));
    }
    // f = num / (q^k d0) = A / q^k + B / d0 with deg A < k, A = num/d0 mod q^k.
    Poly a;
    Poly b = f.num();
    if (k > 0) {
        a = Poly(qrf_expand(QRationalFunction(f.num(), d0), k).coeffs());
        b = (f.num() - a * d0).shift_down(k);
    }
    auto [poly_part, rem] = divmod(b, d0);
    KSplit out;
    out.plus = LaurentPoly(a + poly_part.shift_up(k), -k);
    out.minus = QRationalFunction(rem, d0);
    return out;
}

}  // namespace bps

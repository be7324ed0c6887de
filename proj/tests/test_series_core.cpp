#include <doctest.h>

#include <random>

#include "bps/errors.hpp"
#include "bps/laurent.hpp"
#include "bps/qrf.hpp"
#include "bps/rat.hpp"
#include "oracles.hpp"

using namespace bps;

namespace {

LaurentSeries lam(std::map<int, Rat> terms, int trunc) {
    const int lo = terms.empty() ? trunc : std::min(terms.begin()->first, trunc);
    std::vector<Rat> c(static_cast<std::size_t>(trunc - lo));
    for (auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return {Var::lambda, lo, c, trunc};
}

oracle::Terms terms_of(const LaurentSeries& s) {
    oracle::Terms t;
    for (int e = s.min_exp(); e < s.trunc_order(); ++e) {
        if (!s.coeff(e).is_zero()) t[e] = s.coeff(e);
    }
    return t;
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    return {num(rng), den(rng)};
}

LaurentSeries random_series(std::mt19937& rng, Var v) {
    std::uniform_int_distribution<int> lo(-3, 3);
    std::uniform_int_distribution<int> len(1, 6);
    const int m = lo(rng);
    std::vector<Rat> c;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) c.push_back(random_rat(rng));
    if (c[0].is_zero()) c[0] = Rat(1);
    return {v, m, c, m + n};
}

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rat> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(random_rat(rng));
    return Poly(c);
}

}  // namespace

TEST_CASE("rational parse and render") {
    CHECK(Rat::parse("4876875/8") == Rat(4876875, 8));
    CHECK(Rat::parse("-6/4").str() == "-3/2");
    CHECK(Rat::parse("15517926796875/64").str() == "15517926796875/64");
    CHECK(Rat::parse("12").is_integer());
    CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rat::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rat::parse(""), InputError);
    CHECK_THROWS_AS(Rat::parse("1/-2"), InputError);
    CHECK(Rat::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("laurent_mul examples") {
    SUBCASE("difference of squares") {
        auto a = LaurentSeries::from_poly(Var::q, Poly{1, 1}, 5);
        auto b = LaurentSeries::from_poly(Var::q, Poly{1, -1}, 5);
        CHECK(laurent_mul(a, b) == LaurentSeries::from_poly(Var::q, Poly{1, 0, -1}, 5));
    }
    SUBCASE("monomial shift") {
        auto a = lam({{-2, 1}, {0, Rat(1, 12)}}, 1);
        auto b = LaurentSeries::monomial(Var::lambda, 1, 2, 10);
        auto p = laurent_mul(a, b);
        CHECK(p.trunc_order() == 3);
        CHECK(p == lam({{0, 1}, {2, Rat(1, 12)}}, 3));
    }
    SUBCASE("square of the truncated sine against the term-by-term oracle") {
        auto s = lam({{1, 1}, {3, Rat(-1, 24)}, {5, Rat(1, 1920)}}, 7);
        auto sq = laurent_mul(s, s);
        CHECK(sq.trunc_order() == 8);
        const auto expected = oracle::mul(terms_of(s), terms_of(s), 8);
        CHECK(terms_of(sq) == expected);
        CHECK(sq == lam({{2, 1}, {4, Rat(-1, 12)}, {6, Rat(1, 360)}}, 8));
    }
    SUBCASE("variable mismatch") {
        auto a = LaurentSeries::monomial(Var::q, 1, 0, 3);
        auto b = LaurentSeries::monomial(Var::lambda, 1, 0, 3);
        CHECK_THROWS_AS(laurent_mul(a, b), DomainError);
    }
}

TEST_CASE("reading past truncation is an error") {
    auto a = lam({{0, 1}}, 3);
    CHECK(a.coeff(2) == Rat(0));
    CHECK_THROWS_AS((void)a.coeff(3), TruncationError);
    CHECK(a.coeff(-5) == Rat(0));
}

TEST_CASE("laurent_invert examples") {
    SUBCASE("geometric series") {
        auto a = LaurentSeries::from_poly(Var::q, Poly{1, -1}, 10);
        CHECK(laurent_invert(a, 4) == LaurentSeries::from_poly(Var::q, Poly{1, 1, 1, 1}, 4));
    }
    SUBCASE("monomial") {
        auto a = LaurentSeries::monomial(Var::lambda, 1, 2, 6);
        auto inv = laurent_invert(a, 2);
        CHECK(inv.min_exp() == -2);
        CHECK(inv == lam({{-2, 1}}, 2));
    }
    SUBCASE("inverse of the squared sine against Newton iteration") {
        auto a = lam({{2, 1}, {4, Rat(-1, 12)}, {6, Rat(1, 360)}}, 8);
        auto inv = laurent_invert(a, 4);
        CHECK(terms_of(inv) == oracle::newton_inverse(terms_of(a), 4));
        CHECK(inv == lam({{-2, 1}, {0, Rat(1, 12)}, {2, Rat(1, 240)}}, 4));
    }
    SUBCASE("errors") {
        auto z = lam({{0, 0}, {1, 1}}, 4);
        CHECK_THROWS_AS(laurent_invert(z, 2), DomainError);
        auto a = lam({{2, 1}, {4, Rat(-1, 12)}}, 6);
        CHECK_THROWS_AS(laurent_invert(a, 4), TruncationError);
    }
}

TEST_CASE("laurent_mul and laurent_invert properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_series(rng, Var::lambda);
        auto b = random_series(rng, Var::lambda);
        auto c = random_series(rng, Var::lambda);
        CHECK(laurent_mul(a, b) == laurent_mul(b, a));
        auto left = laurent_mul(laurent_mul(a, b), c);
        auto right = laurent_mul(a, laurent_mul(b, c));
        CHECK(left.trunc_order() == right.trunc_order());
        CHECK(left == right);
        CHECK(terms_of(laurent_mul(a, b)) == oracle::mul(terms_of(a), terms_of(b), laurent_mul(a, b).trunc_order()));

        const int order = a.trunc_order() - 2 * a.min_exp();
        auto inv = laurent_invert(a, order);
        auto one = laurent_mul(a, inv);
        for (int e = one.min_exp(); e < one.trunc_order(); ++e) CHECK(one.coeff(e) == Rat(e == 0 ? 1 : 0));
    }
}

TEST_CASE("series text round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Var v = trial % 2 == 0 ? Var::lambda : Var::q;
        auto s = random_series(rng, v);
        CHECK(parse_laurent(render(s), v) == s);
    }
    CHECK(render(lam({{-2, 1}, {0, Rat(1, 12)}, {2, Rat(1, 240)}}, 4)) == "λ^-2 + 1/12 + 1/240·λ^2 + O(λ^4)");
    CHECK(render(LaurentSeries::from_poly(Var::q, Poly{1, -2, 0, Rat(-1, 3)}, 5)) == "1 - 2·q - 1/3·q^3 + O(q^5)");
    CHECK(render(lam({}, 3)) == "O(λ^3)");
    CHECK_THROWS_AS(parse_laurent("1 + q", Var::q), InputError);
}

TEST_CASE("qrf normalization") {
    QRationalFunction f(Poly{2, -2}, Poly{4, -8, 4});  // 2(1-q) / 4(1-q)^2
    CHECK(f.den() == Poly{-1, 1});
    CHECK(f.num() == Poly{Rat(-1, 2)});
    CHECK(f == QRationalFunction(Poly{1}, Poly{2, -2}));
    CHECK_THROWS_AS(QRationalFunction(Poly(1), Poly()), DomainError);
    CHECK(parse_qrf(render(f)) == f);
}

TEST_CASE("qrf_expand examples") {
    const Poly one_minus_q({1, -1});
    SUBCASE("1/(1-q)^2 against the binomial series") {
        auto s = qrf_expand(QRationalFunction(1, one_minus_q.pow(2)), 4);
        for (int n = 0; n < 4; ++n) CHECK(s.coeff(n) == oracle::inverse_binomial_coeff(2, n));
        CHECK(s == QSeries({Rat(1), Rat(2), Rat(3), Rat(4)}, 4));
    }
    SUBCASE("zero numerator") {
        auto s = qrf_expand(QRationalFunction(Poly(Rat(1 - 1)), one_minus_q), 3);
        CHECK(s == QSeries({}, 3));
    }
    SUBCASE("geometric series in q^2") {
        auto s = qrf_expand(QRationalFunction(1, Poly::one_minus(1, 2)), 5);
        CHECK(s == QSeries({Rat(1), Rat(0), Rat(1), Rat(0), Rat(1)}, 5));
        CHECK_THROWS_AS((void)s.coeff(5), TruncationError);
    }
    SUBCASE("pole at zero") {
        CHECK_THROWS_AS(qrf_expand(QRationalFunction(1, Poly::monomial(1, 1)), 3), DomainError);
    }
}

TEST_CASE("qrf arithmetic agrees with expansion") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        Poly d1 = random_poly(rng, 3);
        Poly d2 = random_poly(rng, 3);
        if (d1.coeff(0).is_zero()) d1 += Poly(1);
        if (d2.coeff(0).is_zero()) d2 += Poly(1);
        QRationalFunction f(random_poly(rng, 4), d1);
        QRationalFunction g(random_poly(rng, 4), d2);
        const int order = 8;
        auto prod = qrf_expand(f * g, order).as_laurent();
        auto sum = qrf_expand(f + g, order).as_laurent();
        CHECK(prod == laurent_mul(qrf_expand(f, order).as_laurent(), qrf_expand(g, order).as_laurent()));
        CHECK(sum == laurent_add(qrf_expand(f, order).as_laurent(), qrf_expand(g, order).as_laurent()));
        CHECK((f - g) + g == f);
        if (!g.is_zero()) CHECK((f / g) * g == f);
    }
}

TEST_CASE("kplus_kminus_split examples") {
    const Poly one_minus_q({1, -1});
    SUBCASE("already proper and regular") {
        auto s = kplus_kminus_split(QRationalFunction(1, one_minus_q));
        CHECK(s.plus.is_zero());
        CHECK(s.minus == QRationalFunction(1, one_minus_q));
    }
    SUBCASE("additive split") {
        QRationalFunction inv_q(1, Poly::monomial(1, 1));
        QRationalFunction f = inv_q + QRationalFunction(1, one_minus_q.pow(2));
        auto s = kplus_kminus_split(f);
        CHECK(s.plus == LaurentPoly(Poly(1), -1));
        CHECK(s.minus == QRationalFunction(1, one_minus_q.pow(2)));
    }
    SUBCASE("q^3/(1-q) against long division") {
        QRationalFunction f(Poly::monomial(1, 3), one_minus_q);
        // q^3 = (-q^2 - q - 1)(1 - q) + 1, so q^3/(1-q) = -1 - q - q^2 + 1/(1-q).
        auto [quot, rem] = divmod(Poly::monomial(1, 3), one_minus_q);
        CHECK(quot == Poly{-1, -1, -1});
        CHECK(rem == Poly(1));
        auto s = kplus_kminus_split(f);
        CHECK(s.plus == LaurentPoly(Poly{-1, -1, -1}, 0));
        CHECK(s.minus == QRationalFunction(1, one_minus_q));
        CHECK(QRationalFunction(s.plus) + s.minus == f);
    }
    SUBCASE("disallowed pole") {
        CHECK_THROWS_AS(kplus_kminus_split(QRationalFunction(1, Poly{1, -2})), DomainError);
        CHECK_THROWS_AS(kplus_kminus_split(QRationalFunction(1, Poly{1, 0, 1}.pow(1) * Poly{2, 0, 1})), DomainError);
    }
}

TEST_CASE("kplus_kminus_split properties") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> rdist(1, 5);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> qpow(0, 4);
    for (int trial = 0; trial < 80; ++trial) {
        Poly den = Poly::monomial(1, qpow(rng));
        for (int i = 0, n = rdist(rng) % 3 + 1; i < n; ++i) den *= Poly::one_minus(1, rdist(rng)).pow(mult(rng));
        QRationalFunction f(random_poly(rng, 12), den);
        auto s = kplus_kminus_split(f);
        CHECK(QRationalFunction(s.plus) + s.minus == f);
        CHECK(s.minus.is_proper());
        CHECK(s.minus.regular_at_zero());

        LaurentPoly lp(random_poly(rng, 5), qpow(rng) - 3);
        auto s2 = kplus_kminus_split(QRationalFunction(lp));
        CHECK(s2.plus == lp);
        CHECK(s2.minus.is_zero());

        if (s.minus.is_zero()) continue;
        auto s3 = kplus_kminus_split(s.minus);
        CHECK(s3.plus.is_zero());
        CHECK(s3.minus == s.minus);
    }
}

TEST_CASE("cyclotomic products") {
    CHECK(cyclotomic(1) == Poly{-1, 1});
    CHECK(cyclotomic(6) == Poly{1, -1, 1});
    CHECK(cyclotomic(12) == Poly{1, 0, -1, 0, 1});
    CHECK(is_cyclotomic_product(Poly::one_minus(1, 6).pow(3) * Poly::one_minus(1, 4)));
    CHECK_FALSE(is_cyclotomic_product(Poly{1, 1, 1, 1, 1, 1, 1} * Poly{1, -3}));
}

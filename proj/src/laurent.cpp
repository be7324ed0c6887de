#include "bps/laurent.hpp"

#include <algorithm>
#include <ostream>

#include "bps/errors.hpp"
#include "bps/render.hpp"

namespace bps {

std::string_view var_symbol(Var v) { return v == Var::lambda ? "λ" : "q"; }

LaurentSeries::LaurentSeries(Var var, int min_exp, std::vector<Rat> coeffs, int trunc_order)
    : var_(var), min_exp_(min_exp), c_(std::move(coeffs)), trunc_(trunc_order) {
    if (min_exp_ > trunc_) throw DomainError("series min_exp exceeds its truncation order");
    // Stored range is exactly [min_exp, trunc): pad with zeros, drop the unknown tail.
    c_.resize(static_cast<std::size_t>(trunc_ - min_exp_));
}

LaurentSeries LaurentSeries::from_poly(Var var, const Poly& p, int trunc_order) {
    const int lo = std::min(0, trunc_order);
    std::vector<Rat> c;
    for (int e = lo; e < trunc_order; ++e) c.push_back(p.coeff(e));
    return {var, lo, std::move(c), trunc_order};
}

LaurentSeries LaurentSeries::monomial(Var var, const Rat& c, int e, int trunc_order) {
    const int lo = std::min(e, trunc_order);
    std::vector<Rat> v(static_cast<std::size_t>(trunc_order - lo));
    if (e < trunc_order) v[0] = c;
    return {var, lo, std::move(v), trunc_order};
}

Rat LaurentSeries::coeff(int e) const {
    if (e >= trunc_) {
        throw TruncationError("coefficient of " + std::string(var_symbol(var_)) + "^" + std::to_string(e) +
                              " read at or beyond truncation order " + std::to_string(trunc_));
    }
    if (e < min_exp_) return {};
    return c_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order > trunc_) throw TruncationError("cannot extend a series beyond its truncation order");
    const int lo = std::min(min_exp_, order);
    std::vector<Rat> v;
    for (int e = lo; e < order; ++e) v.push_back(coeff(e));
    return {var_, lo, std::move(v), order};
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_ || a.trunc_ != b.trunc_) return false;
    for (int e = std::min(a.min_exp_, b.min_exp_); e < a.trunc_; ++e) {
        if (a.coeff(e) != b.coeff(e)) return false;
    }
    return true;
}

namespace {

void require_same_var(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var() != b.var()) throw DomainError("series in different variables");
}

}  // namespace

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_var(a, b);
    const int lo = a.min_exp() + b.min_exp();
    const int trunc = std::min(a.trunc_order() + b.min_exp(), b.trunc_order() + a.min_exp());
    std::vector<Rat> out(static_cast<std::size_t>(trunc - lo));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) continue;
        for (std::size_t j = 0; j < bc.size() && i + j < out.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return {a.var(), lo, std::move(out), trunc};
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_var(a, b);
    const int trunc = std::min(a.trunc_order(), b.trunc_order());
    const int lo = std::min({a.min_exp(), b.min_exp(), trunc});
    std::vector<Rat> out;
    for (int e = lo; e < trunc; ++e) out.push_back(a.coeff(e) + b.coeff(e));
    return {a.var(), lo, std::move(out), trunc};
}

LaurentSeries laurent_scale(const LaurentSeries& a, const Rat& s) {
    std::vector<Rat> out = a.coeffs();
    for (auto& c : out) c *= s;
    return {a.var(), a.min_exp(), std::move(out), a.trunc_order()};
}

LaurentSeries laurent_invert(const LaurentSeries& a, int order) {
    const int m = a.min_exp();
    if (a.coeffs().empty() || a.coeffs().front().is_zero()) {
        throw DomainError("cannot invert a series whose lowest stored coefficient is zero");
    }
    const int max_order = a.trunc_order() - 2 * m;
    if (order > max_order) {
        throw TruncationError("inverse requested to order " + std::to_string(order) + " but the input only determines it below " +
                              std::to_string(max_order));
    }
    // a = x^m (a0 + a1 x + ...), b = x^-m (b0 + b1 x + ...), sum_{i<=j} a_i b_{j-i} = [j == 0].
    const auto& ac = a.coeffs();
    const int n = std::max(0, order + m);
    std::vector<Rat> b(static_cast<std::size_t>(n));
    const Rat inv0 = ac[0].inverse();
    for (int j = 0; j < n; ++j) {
        Rat acc = j == 0 ? Rat(1) : Rat(0);
        for (int i = 1; i <= j; ++i) acc -= ac[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
        b[static_cast<std::size_t>(j)] = acc * inv0;
    }
    const int lo = std::min(-m, order);
    return {a.var(), lo, std::move(b), order};
}

LaurentSeries laurent_pow(const LaurentSeries& a, int n) {
    if (n < 0) throw DomainError("laurent_pow needs a nonnegative exponent");
    LaurentSeries out = LaurentSeries::monomial(a.var(), 1, 0, a.trunc_order() - a.min_exp());
    for (int i = 0; i < n; ++i) out = laurent_mul(out, a);
    return out;
}

std::string render(const LaurentSeries& s) {
    std::vector<std::pair<int, Rat>> terms;
    for (int e = s.min_exp(); e < s.trunc_order(); ++e) {
        if (!s.coeff(e).is_zero()) terms.emplace_back(e, s.coeff(e));
    }
    const std::string big_o = "O(" + std::string(var_symbol(s.var())) + "^" + std::to_string(s.trunc_order()) + ")";
    if (terms.empty()) return big_o;
    return render_terms(terms, var_symbol(s.var())) + " + " + big_o;
}

LaurentSeries parse_laurent(std::string_view text, Var var) {
    const std::string open = "O(" + std::string(var_symbol(var)) + "^";
    const auto at = text.rfind(open);
    if (at == std::string_view::npos || text.back() != ')') {
        throw InputError("series text lacks a truncation term: \"" + std::string(text) + "\"");
    }
    const std::string order_text(text.substr(at + open.size(), text.size() - at - open.size() - 1));
    int trunc = 0;
    try {
        std::size_t used = 0;
        trunc = std::stoi(order_text, &used);
        if (used != order_text.size()) throw InputError("bad truncation order");
    } catch (const std::logic_error&) {
        throw InputError("malformed truncation order in \"" + std::string(text) + "\"");
    }
    std::vector<std::pair<int, Rat>> terms;
    if (at > 0) {
        constexpr std::string_view sep = " + ";
        if (at < sep.size() || text.substr(at - sep.size(), sep.size()) != sep) {
            throw InputError("malformed series text \"" + std::string(text) + "\"");
        }
        terms = parse_terms(text.substr(0, at - sep.size()), var_symbol(var));
    }
    int lo = trunc;
    for (const auto& [e, c] : terms) {
        if (e >= trunc) throw InputError("term at or beyond the truncation order in \"" + std::string(text) + "\"");
        lo = std::min(lo, e);
    }
    std::vector<Rat> v(static_cast<std::size_t>(trunc - lo));
    for (const auto& [e, c] : terms) v[static_cast<std::size_t>(e - lo)] = c;
    return {var, lo, std::move(v), trunc};
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << render(s); }

QSeries::QSeries(std::vector<Rat> coeffs, int trunc_order) : c_(std::move(coeffs)), trunc_(trunc_order) {
    if (trunc_ < 0) throw DomainError("q-series truncation order must be nonnegative");
    c_.resize(static_cast<std::size_t>(trunc_));
}

Rat QSeries::coeff(int e) const {
    if (e >= trunc_) {
        throw TruncationError("q-series coefficient " + std::to_string(e) + " read at or beyond truncation order " +
                              std::to_string(trunc_));
    }
    if (e < 0) return {};
    return c_[static_cast<std::size_t>(e)];
}

std::string render(const QSeries& s) { return render(s.as_laurent()); }

}  // namespace bps

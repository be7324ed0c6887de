#include "bps/render.hpp"

#include <charconv>
#include <map>

#include "bps/errors.hpp"

namespace bps {

namespace {

constexpr std::string_view kDot = "·";

std::string render_monomial(int e, const Rat& abs_coeff, std::string_view var) {
    if (e == 0) return abs_coeff.str();
    std::string out;
    if (abs_coeff != Rat(1)) {
        out += abs_coeff.str();
        out += kDot;
    }
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

int parse_exponent(std::string_view s, std::string_view whole) {
    int e = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, e);
    if (ec != std::errc() || ptr != end) {
        throw InputError("malformed exponent in \"" + std::string(whole) + "\"");
    }
    return e;
}

std::pair<int, Rat> parse_monomial(std::string_view tok, std::string_view var, std::string_view whole) {
    const auto at = tok.find(var);
    if (at == std::string_view::npos) return {0, Rat::parse(tok)};
    Rat c(1);
    if (at > 0) {
        std::string_view coeff = tok.substr(0, at);
        if (coeff.size() < kDot.size() || coeff.substr(coeff.size() - kDot.size()) != kDot) {
            throw InputError("missing '·' between coefficient and variable in \"" + std::string(whole) + "\"");
        }
        c = Rat::parse(coeff.substr(0, coeff.size() - kDot.size()));
    }
    std::string_view rest = tok.substr(at + var.size());
    if (rest.empty()) return {1, c};
    if (rest.front() != '^') throw InputError("malformed term \"" + std::string(tok) + "\"");
    return {parse_exponent(rest.substr(1), whole), c};
}

}  // namespace

std::string render_terms(const std::vector<std::pair<int, Rat>>& terms, std::string_view var) {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += render_monomial(e, c.abs(), var);
        first = false;
    }
    return first ? "0" : out;
}

std::vector<std::pair<int, Rat>> parse_terms(std::string_view text, std::string_view var) {
    if (text == "0") return {};
    std::map<int, Rat> acc;
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    while (true) {
        const auto plus = rest.find(" + ");
        const auto minus = rest.find(" - ");
        const auto cut = std::min(plus, minus);
        const std::string_view tok = rest.substr(0, cut);
        if (tok.empty()) throw InputError("empty term in \"" + std::string(text) + "\"");
        auto [e, c] = parse_monomial(tok, var, text);
        acc[e] += negative ? -c : c;
        if (cut == std::string_view::npos) break;
        negative = cut == minus;
        rest.remove_prefix(cut + 3);
    }
    std::vector<std::pair<int, Rat>> out;
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) out.emplace_back(e, c);
    }
    return out;
}

}  // namespace bps

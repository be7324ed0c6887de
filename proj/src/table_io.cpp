#include "bps/table_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bps/errors.hpp"

namespace bps::io {

namespace {

void check_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) throw InputError(where + ": expected a JSON object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!obj.contains(k)) throw InputError(where + ": missing field \"" + k + "\"");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [k, v] : obj.items()) {
        if (!allowed.contains(k)) throw InputError(where + ": unknown field \"" + k + "\"");
    }
}

int get_int(const Json& obj, const char* key, const std::string& where) {
    const Json& v = obj.at(key);
    if (!v.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
    const auto x = v.get<long long>();
    if (x < INT32_MIN || x > INT32_MAX) throw InputError(where + ": \"" + key + "\" out of range");
    return static_cast<int>(x);
}

std::vector<int> get_int_array(const Json& obj, const char* key, const std::string& where) {
    const Json& v = obj.at(key);
    if (!v.is_array()) throw InputError(where + ": \"" + key + "\" must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Rat get_rat(const Json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": rational values must be \"p/q\" strings");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

DegreeVector nonneg_degree(std::vector<int> c, const std::string& where) {
    for (int x : c) {
        if (x < 0) throw InputError(where + ": degree components must be nonnegative");
    }
    return DegreeVector(std::move(c));
}

Json rat_array(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::vector<Rat> rat_array_from(const Json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array of rationals");
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(get_rat(x, where));
    return out;
}

Json poly_coeffs(const Poly& p) {
    std::vector<Rat> c;
    for (int e = 0; e <= p.degree(); ++e) c.push_back(p.coeff(e));
    return rat_array(c);
}

}  // namespace

InvariantTable table_from_json(const Json& doc) {
    check_keys(doc, "table", {"kind", "lattice_rank", "genus_max", "degree_max", "entries"}, {"comment", "integrality"});
    const Json& kind_v = doc.at("kind");
    if (!kind_v.is_string() || (kind_v != "GW" && kind_v != "GV")) throw InputError("table: \"kind\" must be \"GW\" or \"GV\"");
    const TableKind kind = kind_v == "GW" ? TableKind::GW : TableKind::GV;
    if (doc.contains("comment") && !doc.at("comment").is_string()) throw InputError("table: \"comment\" must be a string");

    const int rank = get_int(doc, "lattice_rank", "table");
    const int genus_max = get_int(doc, "genus_max", "table");
    if (rank < 1) throw InputError("table: lattice_rank must be >= 1");
    if (genus_max < 0) throw InputError("table: genus_max must be >= 0");
    const DegreeVector degree_max = nonneg_degree(get_int_array(doc, "degree_max", "table"), "table.degree_max");
    if (degree_max.rank() != rank) {
        throw DomainError("table: degree_max has " + std::to_string(degree_max.rank()) + " components, lattice_rank is " +
                          std::to_string(rank));
    }

    InvariantTable table(kind, rank, genus_max, degree_max);
    const Json& entries = doc.at("entries");
    if (!entries.is_array()) throw InputError("table: \"entries\" must be an array");
    std::set<std::pair<int, DegreeVector>> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        const Json& e = entries[i];
        check_keys(e, where, {"genus", "degree", "value"});
        const int genus = get_int(e, "genus", where);
        if (genus < 0) throw InputError(where + ": genus must be >= 0, got " + std::to_string(genus));
        const DegreeVector degree = nonneg_degree(get_int_array(e, "degree", where), where);
        const Rat value = get_rat(e.at("value"), where);
        if (degree.rank() != rank) {
            throw DomainError(where + ": degree " + degree.str() + " has " + std::to_string(degree.rank()) +
                              " components, lattice_rank is " + std::to_string(rank));
        }
        if (degree.is_zero()) throw DomainError(where + ": degree 0 is not a curve class");
        if (!table.admits(genus, degree)) {
            throw DomainError(where + ": (genus " + std::to_string(genus) + ", degree " + degree.str() +
                              ") outside genus_max " + std::to_string(genus_max) + ", degree_max " + degree_max.str());
        }
        if (!seen.insert({genus, degree}).second) {
            throw InputError(where + ": duplicate entry for genus " + std::to_string(genus) + ", degree " + degree.str());
        }
        table.set(genus, degree, value);
    }
    return table;
}

Json table_to_json(const InvariantTable& table, const std::optional<std::string>& comment) {
    Json doc;
    if (comment) doc["comment"] = *comment;
    doc["kind"] = to_string(table.kind());
    doc["lattice_rank"] = table.lattice_rank();
    doc["genus_max"] = table.genus_max();
    doc["degree_max"] = table.degree_max().components();
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        entries.push_back(Json{{"genus", key.first}, {"degree", key.second.components()}, {"value", value.str()}});
    }
    doc["entries"] = std::move(entries);
    return doc;
}

Json integrality_to_json(const IntegralityReport& report) {
    Json v = Json::array();
    for (const auto& x : report.violations) {
        v.push_back(Json{{"genus", x.genus}, {"degree", x.degree.components()}, {"value", x.value.str()}});
    }
    return Json{{"is_integral", report.is_integral}, {"violations", std::move(v)}};
}

Json series_to_json(const LaurentSeries& s) {
    return Json{{"variable", std::string(var_symbol(s.var()))},
                {"min_exponent", s.min_exp()},
                {"truncation_order", s.trunc_order()},
                {"coefficients", rat_array(s.coeffs())},
                {"text", render(s)}};
}

LaurentSeries series_from_json(const Json& doc) {
    check_keys(doc, "series", {"variable", "min_exponent", "truncation_order", "coefficients"}, {"text"});
    const Json& v = doc.at("variable");
    Var var{};
    if (v == std::string(var_symbol(Var::lambda))) {
        var = Var::lambda;
    } else if (v == std::string(var_symbol(Var::q))) {
        var = Var::q;
    } else {
        throw InputError("series: unknown variable");
    }
    const int min_exp = get_int(doc, "min_exponent", "series");
    const int trunc = get_int(doc, "truncation_order", "series");
    std::vector<Rat> c = rat_array_from(doc.at("coefficients"), "series.coefficients");
    if (static_cast<long>(c.size()) != static_cast<long>(trunc) - min_exp) {
        throw InputError("series: coefficient count does not match min_exponent and truncation_order");
    }
    LaurentSeries s(var, min_exp, std::move(c), trunc);
    if (doc.contains("text") && !(parse_laurent(doc.at("text").get<std::string>(), var) == s)) {
        throw InputError("series: \"text\" disagrees with \"coefficients\"");
    }
    return s;
}

Json series_to_json(const QSeries& s) { return series_to_json(s.as_laurent()); }

QSeries qseries_from_json(const Json& doc) {
    const LaurentSeries s = series_from_json(doc);
    if (s.var() != Var::q || s.min_exp() != 0) throw InputError("series: expected a q power series from exponent 0");
    return {s.coeffs(), s.trunc_order()};
}

Json qrf_to_json(const QRationalFunction& f) {
    return Json{{"numerator", poly_coeffs(f.num())}, {"denominator", poly_coeffs(f.den())}, {"text", render(f)}};
}

QRationalFunction qrf_from_json(const Json& doc) {
    check_keys(doc, "rational function", {"numerator", "denominator"}, {"text"});
    const Poly num(rat_array_from(doc.at("numerator"), "numerator"));
    const Poly den(rat_array_from(doc.at("denominator"), "denominator"));
    if (den.is_zero()) throw InputError("rational function: zero denominator");
    QRationalFunction f(num, den);
    if (doc.contains("text") && !(parse_qrf(doc.at("text").get<std::string>()) == f)) {
        throw InputError("rational function: \"text\" disagrees with the coefficients");
    }
    return f;
}

Json kelem_to_json(const QElem& e, int q_order) {
    Json coords = Json::array();
    for (int i = 0; i < ring_rank(e.tag()); ++i) {
        Json c{{"basis", basis_label(e.tag(), i)}, {"exact", qrf_to_json(e.coord(i))}};
        if (q_order >= 0) c["series"] = series_to_json(qrf_expand(e.coord(i), q_order));
        coords.push_back(std::move(c));
    }
    return Json{{"ring", to_string(e.tag())}, {"coordinates", std::move(coords)}};
}

DivisorPairing pairing_from_json(const Json& doc) {
    check_keys(doc, "pairing", {"vectors"}, {"comment"});
    const Json& v = doc.at("vectors");
    if (!v.is_array() || v.empty()) throw InputError("pairing: \"vectors\" must be a non-empty array");
    DivisorPairing out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string where = "pairing.vectors[" + std::to_string(i) + "]";
        if (!v[i].is_array()) throw InputError(where + ": expected an array of integers");
        std::vector<int> row;
        for (const auto& x : v[i]) {
            if (!x.is_number_integer()) throw InputError(where + ": expected an array of integers");
            row.push_back(x.get<int>());
        }
        out.vectors.push_back(std::move(row));
    }
    return out;
}

Json jmgs_to_json(const JmgsRhs& rhs) {
    Json terms = Json::array();
    for (const auto& [degree, term] : rhs.terms) {
        Json divisor = Json::array();
        for (std::size_t j = 0; j < term.divisor_part.size(); ++j) {
            divisor.push_back(Json{{"class", "Φ^{1" + std::to_string(j + 1) + "}"},
                                   {"exact", qrf_to_json(term.divisor_part[j])},
                                   {"series", series_to_json(term.divisor_series[j])}});
        }
        terms.push_back(Json{{"degree", degree.components()},
                             {"divisor", std::move(divisor)},
                             {"structure", Json{{"class", "Φ^{01}"},
                                                {"exact", qrf_to_json(term.structure_part)},
                                                {"series", series_to_json(term.structure_series)}}}});
    }
    return Json{{"constant", rhs.constant.str()}, {"q_order", rhs.q_order}, {"terms", std::move(terms)}};
}

Json split_report_to_json(const SplitCheckReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r{{"r", row.r}, {"pass", row.pass}};
        if (!row.error.empty()) r["error"] = row.error;
        Json coords = Json::array();
        for (std::size_t k = 0; k < row.residuals.size(); ++k) {
            coords.push_back(Json{{"basis", basis_label(RingTag::Y, static_cast<int>(k))},
                                  {"kplus", render(row.kplus[k])},
                                  {"residual", render(row.residuals[k])}});
        }
        r["coordinates"] = std::move(coords);
        rows.push_back(std::move(r));
    }
    return Json{{"all_pass", report.all_pass}, {"rows", std::move(rows)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bps::io

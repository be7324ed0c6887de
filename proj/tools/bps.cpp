// bps: command-line front end for the GV/GW transform, conifold checks,
// series tools and the quantum-K J-function identities.
//
// Exit codes: 0 ok, 1 input error, 2 domain/bound error, 3 verification failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "bps/cover_oracles.hpp"
#include "bps/errors.hpp"
#include "bps/gv_transform.hpp"
#include "bps/jfunction.hpp"
#include "bps/table_io.hpp"

using namespace bps;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kDomain = 2;
constexpr int kVerify = 3;

struct Globals {
    bool json = false;
    std::string output;
};

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("bps");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("BPS_KIT_LOG")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to off; only honour it when asked for.
        if (level != spdlog::level::off || std::string(env) == "off") spdlog::set_level(level);
    }
}

void emit(const Globals& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw InputError("cannot write " + g.output);
    out << text;
    spdlog::info("wrote {}", g.output);
}

InvariantTable load_table(const std::string& path, TableKind expected) {
    const InvariantTable t = io::table_from_json(io::read_json_file(path));
    if (t.kind() != expected) throw InputError(path + ": expected a " + to_string(expected) + " table, got " + to_string(t.kind()));
    spdlog::info("read {} table from {}: rank {}, {} nonzero entries", to_string(t.kind()), path, t.lattice_rank(),
                 t.entries().size());
    return t;
}

std::string table_text(const InvariantTable& t) {
    std::ostringstream os;
    os << to_string(t.kind()) << " table (genus <= " << t.genus_max() << ", degree <= " << t.degree_max().str() << ")\n";
    for (const auto& [key, value] : t.entries()) {
        os << "  g=" << key.first << "  d=" << key.second.str() << "  " << value.str() << "\n";
    }
    if (t.entries().empty()) os << "  (all zero)\n";
    return os.str();
}

std::string integrality_text(const IntegralityReport& r) {
    std::ostringstream os;
    os << "integrality: " << (r.is_integral ? "pass" : "FAIL") << "\n";
    for (const auto& v : r.violations) {
        os << "  non-integer at g=" << v.genus << " d=" << v.degree.str() << ": " << v.value.str() << "\n";
    }
    return os.str();
}

std::string kelem_text(const QElem& e, int q_order) {
    std::size_t width = 0;
    for (int i = 0; i < ring_rank(e.tag()); ++i) width = std::max(width, basis_label(e.tag(), i).size());
    std::ostringstream os;
    for (int i = 0; i < ring_rank(e.tag()); ++i) {
        const std::string label = basis_label(e.tag(), i);
        os << "  " << label << std::string(width - label.size(), ' ') << " : " << render(e.coord(i)) << "\n";
        if (q_order >= 0) {
            os << "  " << std::string(width, ' ') << " = " << render(qrf_expand(e.coord(i), q_order)) << "\n";
        }
    }
    return os.str();
}

int cmd_gw2gv(const Globals& g, const std::string& input, bool mobius, bool integrality) {
    const InvariantTable gw = load_table(input, TableKind::GW);
    const InvariantTable gv = mobius ? gw_to_gv_genus0_mobius(gw) : gw_to_gv(gw);
    Json doc = io::table_to_json(gv);
    int code = kOk;
    if (integrality) {
        const IntegralityReport rep = check_integrality(gv);
        doc["integrality"] = io::integrality_to_json(rep);
        if (!rep.is_integral) {
            spdlog::warn("{} non-integral GV entries", rep.violations.size());
            code = kVerify;
        }
    }
    emit(g, io::dump(doc));
    return code;
}

int cmd_gv2gw(const Globals& g, const std::string& input) {
    emit(g, io::dump(io::table_to_json(gv_to_gw(load_table(input, TableKind::GV)))));
    return kOk;
}

int cmd_check_integrality(const Globals& g, const std::string& input) {
    InvariantTable t = io::table_from_json(io::read_json_file(input));
    if (t.kind() == TableKind::GW) t = gw_to_gv(t);
    const IntegralityReport rep = check_integrality(t);
    emit(g, g.json ? io::dump(io::integrality_to_json(rep)) : integrality_text(rep));
    return rep.is_integral ? kOk : kVerify;
}

int cmd_conifold(const Globals& g, int g_max, int d_max) {
    const InvariantTable gw = conifold_gw_table(g_max, d_max);
    const InvariantTable gv = gw_to_gv(gw);
    const bool delta = is_conifold_delta(gv);
    if (g.json) {
        emit(g, io::dump(Json{{"gw", io::table_to_json(gw)}, {"gv", io::table_to_json(gv)}, {"delta", delta}}));
    } else {
        emit(g, table_text(gw) + table_text(gv) + "delta at (0,1): " + (delta ? "yes" : "NO") + "\n");
    }
    return delta ? kOk : kVerify;
}

int cmd_sin_series(const Globals& g, int k, int genus, int order) {
    const LaurentSeries s = sin_power_series(k, genus, order);
    emit(g, g.json ? io::dump(io::series_to_json(s)) : render(s) + "\n");
    return kOk;
}

int cmd_ab_series(const Globals& g, int r, int order) {
    const QRationalFunction a = a_series(r);
    const QRationalFunction b = b_series(r);
    if (g.json) {
        emit(g, io::dump(Json{{"r", r},
                              {"a", Json{{"exact", io::qrf_to_json(a)}, {"series", io::series_to_json(qrf_expand(a, order))}}},
                              {"b", Json{{"exact", io::qrf_to_json(b)}, {"series", io::series_to_json(qrf_expand(b, order))}}}}));
    } else {
        std::ostringstream os;
        os << "a = " << render(a) << "\n  = " << render(qrf_expand(a, order)) << "\n";
        os << "b = " << render(b) << "\n  = " << render(qrf_expand(b, order)) << "\n";
        emit(g, os.str());
    }
    return kOk;
}

int cmd_expansion(const Globals& g, JFunctionKind kind, int r_max, int q_order) {
    const NovikovExpansion ex = novikov_expansion(kind, r_max);
    if (g.json) {
        Json terms = Json::array();
        for (const auto& [r, e] : ex.terms) terms.push_back(Json{{"r", r}, {"coefficient", io::kelem_to_json(e, q_order)}});
        emit(g, io::dump(Json{{"ring", to_string(ex.tag)}, {"terms", std::move(terms)}}));
    } else {
        std::ostringstream os;
        for (const auto& [r, e] : ex.terms) os << "Q^" << r << ":\n" << kelem_text(e, q_order);
        emit(g, os.str());
    }
    return kOk;
}

int cmd_split_check(const Globals& g, int r_max) {
    const SplitCheckReport rep = verify_kminus_split(r_max);
    if (g.json) {
        emit(g, io::dump(io::split_report_to_json(rep)));
    } else {
        std::ostringstream os;
        for (const auto& row : rep.rows) {
            os << "r=" << row.r << "  " << (row.pass ? "pass" : "FAIL");
            if (!row.error.empty()) os << "  (" << row.error << ")";
            os << "\n";
            if (!row.pass) {
                for (std::size_t k = 0; k < row.residuals.size(); ++k) {
                    os << "  residual[" << basis_label(RingTag::Y, static_cast<int>(k)) << "] = " << render(row.residuals[k]) << "\n";
                }
            }
        }
        os << "K- split: " << (rep.all_pass ? "pass" : "FAIL") << "\n";
        emit(g, os.str());
    }
    return rep.all_pass ? kOk : kVerify;
}

int cmd_jmgs(const Globals& g, const std::string& gv_path, const std::string& pairing_path, int r_max, int q_order,
             bool dictionary) {
    const InvariantTable gv = load_table(gv_path, TableKind::GV);
    const DivisorPairing pairing = io::pairing_from_json(io::read_json_file(pairing_path));
    const JmgsRhs rhs = jmgs_rhs(gv, pairing, r_max, q_order);
    if (g.json) {
        Json doc = io::jmgs_to_json(rhs);
        if (dictionary) {
            Json x = Json::array();
            for (const auto& [d, term] : rhs.terms) x.push_back(Json{{"degree", d.components()}, {"x_ring", io::kelem_to_json(conifold_dictionary(term))}});
            doc["dictionary"] = std::move(x);
        }
        emit(g, io::dump(doc));
        return kOk;
    }
    std::ostringstream os;
    os << "1\n";
    for (const auto& [d, term] : rhs.terms) {
        os << "Q^" << d.str() << ":\n";
        for (std::size_t j = 0; j < term.divisor_part.size(); ++j) {
            os << "  Φ^{1" << j + 1 << "} : " << render(term.divisor_part[j]) << "\n";
            os << "          = " << render(term.divisor_series[j]) << "\n";
        }
        os << "  Φ^{01} : " << render(term.structure_part) << "\n";
        os << "          = " << render(term.structure_series) << "\n";
        if (dictionary) os << "  in K(X):\n" << kelem_text(conifold_dictionary(term), -1);
    }
    emit(g, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Exact GV/GW transforms, conifold multiple covers and quantum-K J-function checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--output", g.output, "Write output to PATH instead of stdout");

    std::function<int()> run;

    std::string input;
    bool mobius = false;
    bool integrality = false;
    auto* gw2gv = app.add_subcommand("gw2gv", "GW table -> GV table");
    gw2gv->add_option("input", input, "GW table file")->required();
    gw2gv->add_flag("--genus0-mobius", mobius, "Use the genus-zero Möbius formula (rank 1, genus 0)");
    gw2gv->add_flag("--check-integrality", integrality, "Attach an integrality report; exit 3 if it fails");
    gw2gv->callback([&] { run = [&] { return cmd_gw2gv(g, input, mobius, integrality); }; });

    auto* gv2gw = app.add_subcommand("gv2gw", "GV table -> GW table");
    gv2gw->add_option("input", input, "GV table file")->required();
    gv2gw->callback([&] { run = [&] { return cmd_gv2gw(g, input); }; });

    auto* integ = app.add_subcommand("check-integrality", "Report non-integer GV invariants (GW input is transformed first)");
    integ->add_option("input", input, "GV or GW table file")->required();
    integ->callback([&] { run = [&] { return cmd_check_integrality(g, input); }; });

    int g_max = 0;
    int d_max = 0;
    auto* conifold = app.add_subcommand("conifold", "Multiple-cover GW of the resolved conifold and its GV table");
    conifold->add_option("--gmax", g_max, "Top genus")->required()->check(CLI::Range(0, 1000000));
    conifold->add_option("--dmax", d_max, "Top degree")->required()->check(CLI::Range(1, 1000000));
    conifold->callback([&] { run = [&] { return cmd_conifold(g, g_max, d_max); }; });

    int k = 1;
    int genus = 0;
    int order = 4;
    auto* sin = app.add_subcommand("sin-series", "λ-expansion of (2 sin(kλ/2))^(2g-2)");
    sin->add_option("--k", k)->required()->check(CLI::Range(1, 1000000));
    sin->add_option("--genus", genus)->required()->check(CLI::Range(0, 1000000));
    sin->add_option("--order", order, "Truncation order (exclusive)")->required()->check(CLI::Range(-1, 100000));
    sin->callback([&] { run = [&] { return cmd_sin_series(g, k, genus, order); }; });

    int r = 1;
    auto* ab = app.add_subcommand("ab-series", "Multiple-cover series a(r, q^r), b(r, q^r)");
    ab->add_option("--r", r)->required()->check(CLI::Range(1, 1000000));
    ab->add_option("--order", order, "q truncation order (exclusive)")->required()->check(CLI::Range(0, 1000000));
    ab->callback([&] { run = [&] { return cmd_ab_series(g, r, order); }; });

    int r_max = 1;
    auto* ifn = app.add_subcommand("ifunction", "Q^r coefficients of the small I-function of Y");
    ifn->add_option("--rmax", r_max)->required()->check(CLI::Range(1, 1000000));
    ifn->callback([&] { run = [&] { return cmd_expansion(g, JFunctionKind::I_Y, r_max, -1); }; });

    std::string which = "X";
    int q_order = 6;
    auto* jfn = app.add_subcommand("jfunction", "Q^r coefficients of the small J-function of X or Y");
    jfn->add_option("--which", which)->required()->check(CLI::IsMember({"X", "Y"}));
    jfn->add_option("--rmax", r_max)->required()->check(CLI::Range(1, 1000000));
    jfn->add_option("--qorder", q_order, "q truncation order (exclusive)")->check(CLI::Range(0, 1000000));
    jfn->callback([&] {
        run = [&] { return cmd_expansion(g, which == "X" ? JFunctionKind::J_X : JFunctionKind::J_Y, r_max, q_order); };
    });

    auto* split = app.add_subcommand("split-check", "Check that the K- part of I^Y is J^Y; exit 3 on mismatch");
    split->add_option("--rmax", r_max)->required()->check(CLI::Range(1, 1000000));
    split->callback([&] { run = [&] { return cmd_split_check(g, r_max); }; });

    std::string gv_path;
    std::string pairing_path;
    bool dictionary = false;
    auto* jmgs = app.add_subcommand("jmgs", "Right-hand side of the JMGS formula for genus-zero GV data");
    jmgs->add_option("--gv", gv_path, "GV table file")->required();
    jmgs->add_option("--pairing", pairing_path, "Divisor pairing file {\"vectors\": [[...]]}")->required();
    jmgs->add_option("--rmax", r_max)->required()->check(CLI::Range(1, 1000000));
    jmgs->add_option("--qorder", q_order, "q truncation order (exclusive)")->check(CLI::Range(0, 1000000));
    jmgs->add_flag("--conifold-dictionary", dictionary, "Also read each term in K(X) of the conifold");
    jmgs->callback([&] { run = [&] { return cmd_jmgs(g, gv_path, pairing_path, r_max, q_order, dictionary); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        return run();
    } catch (const InputError& e) {
        spdlog::error("{}", e.what());
        return kInput;
    } catch (const DomainError& e) {
        spdlog::error("{}", e.what());
        return kDomain;
    } catch (const TruncationError& e) {
        spdlog::error("{}", e.what());
        return kDomain;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kInput;
    }
}

// verlinde-ade: exact modular data, ADET module classification and modular
// invariants for the level-k sl2 fusion ring.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vade/algebra.hpp"
#include "vade/fusion.hpp"
#include "vade/modinv.hpp"
#include "vade/nimrep.hpp"
#include "vade/repcat.hpp"
#include "vade/selftest.hpp"

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

std::string v_sum(const std::vector<int64_t>& mult) {
    std::string out;
    for (size_t n = 0; n < mult.size(); ++n) {
        if (mult[n] == 0) continue;
        if (!out.empty()) out += "+";
        if (mult[n] > 1) out += std::to_string(mult[n]);
        out += "V_" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
}

std::string label_sum(const std::vector<int64_t>& mult, const std::vector<std::string>& labels) {
    std::string out;
    for (size_t c = 0; c < mult.size(); ++c) {
        if (mult[c] == 0) continue;
        if (!out.empty()) out += "+";
        if (mult[c] > 1) out += std::to_string(mult[c]);
        out += labels[c];
    }
    return out.empty() ? "0" : out;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

vade::DiagramType parse_diagram(const std::string& tag) {
    static const std::map<std::string, vade::DiagramType> tags{
        {"A", vade::DiagramType::A},   {"D", vade::DiagramType::D},
        {"T", vade::DiagramType::T},   {"E6", vade::DiagramType::E6},
        {"E7", vade::DiagramType::E7}, {"E8", vade::DiagramType::E8},
    };
    return tags.at(tag);
}

// ---- fusion ----

std::string run_fusion(int level, const std::string& format) {
    const vade::FusionCoeffs fc = vade::fusion_coefficients(level);
    std::string out;
    if (format == "json") {
        nlohmann::json j;
        j["k"] = level;
        j["table"] = fc.table;
        return j.dump() + "\n";
    }
    if (format == "text") out += "# fusion table, level " + std::to_string(level) + "\n";
    for (int i = 0; i <= level; ++i)
        for (int j = 0; j <= level; ++j) {
            const auto& mult = fc.at(i, j);
            if (format == "tsv")
                out += "V_" + std::to_string(i) + "\tV_" + std::to_string(j) + "\t" +
                       v_sum(mult) + "\n";
            else
                out += "V_" + std::to_string(i) + " x V_" + std::to_string(j) + " = " +
                       v_sum(mult) + "\n";
        }
    return out;
}

// ---- modular ----

std::string run_modular(int level, const std::string& format) {
    const vade::ModularData md = vade::modular_data(level);
    if (format == "json") return vade::json_string(md) + "\n";
    std::string out = "k = " + std::to_string(level) + " (l = " + std::to_string(md.coxeter) + ")\n";
    out += "D = " + fmt_double(md.D) + "\n";
    out += "zeta = " + fmt_complex(md.zeta) + "\n";
    out += "dims:";
    for (const auto& d : md.dims) out += " " + fmt_double(d.embed().real());
    out += "\ntwists:";
    const int64_t den = 4 * (int64_t)md.coxeter;
    for (int n = 0; n <= level; ++n)
        out += " " + std::to_string((int64_t)n * (n + 2) % den) + "/" + std::to_string(den);
    out += "\ns_tilde:\n";
    for (const auto& row : md.s_tilde) {
        for (size_t j = 0; j < row.size(); ++j)
            out += (j ? " " : "") + fmt_double(row[j].embed().real());
        out += "\n";
    }
    return out;
}

// ---- classify ----

std::string run_classify(int level, const std::string& format) {
    const auto mods = vade::classify_modules(level);
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& m : mods) arr.push_back(nlohmann::json::parse(vade::json_string(m)));
        return arr.dump() + "\n";
    }
    if (format == "dot") {
        std::string out;
        for (const auto& m : mods) out += vade::dot_string(m, vade::unit_vertices(m).front());
        return out;
    }
    std::string out =
        "k = " + std::to_string(level) + " (l = " + std::to_string(level + 2) + ")\n";
    for (const auto& m : mods)
        out += m.name() + ": certified, rank " + std::to_string(m.rank) + ", pf " +
               fmt_double(m.pf_value) + "\n";
    return out;
}

// ---- algebras ----

std::string run_algebras(int level, const std::string& format) {
    const auto mods = vade::classify_modules(level);
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& m : mods)
            arr.push_back(nlohmann::json::parse(vade::json_string(vade::analyze(m))));
        return arr.dump() + "\n";
    }
    std::string out =
        "k = " + std::to_string(level) + " (l = " + std::to_string(level + 2) + ")\n";
    for (const auto& m : mods) {
        const auto c = vade::analyze(m);
        out += m.name() + ": ";
        if (c.accepted()) {
            out += "accepted";
            if (!c.note.empty()) out += " (" + c.note + ")";
        } else {
            out += "rejected (" + *c.excluded_reason + ")";
        }
        out += ", A = " + v_sum(c.multiplicities) +
               ", dim A = " + fmt_double(c.dim_a.embed().real()) + "\n";
    }
    return out;
}

// ---- repcat / invariant helpers ----

int find_rep(int level, const std::string& diagram, vade::RepData& out, std::string& err) {
    vade::DiagramType want;
    try {
        want = parse_diagram(diagram);
    } catch (const std::out_of_range&) {
        err = "unknown diagram tag: " + diagram;
        return 2;
    }
    for (const auto& m : vade::classify_modules(level)) {
        if (m.type != want) continue;
        const auto c = vade::analyze(m);
        if (!c.accepted()) {
            err = m.name() + " at level " + std::to_string(level) +
                  " is not an accepted algebra: " + *c.excluded_reason;
            return 2;
        }
        out = vade::rep_data(c);
        return 0;
    }
    err = "no " + diagram + " module with Coxeter number " + std::to_string(level + 2);
    return 2;
}

std::string run_repcat(const vade::RepData& r, const std::string& format) {
    const int k = r.level();
    if (format == "json") return vade::json_string(r) + "\n";
    const bool is_d = r.type() == vade::DiagramType::D;
    if (format == "tsv") {
        if (r.type() == vade::DiagramType::A) {
            std::string out;
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j)
                    out += r.simple_names[i] + "\t" + r.simple_names[j] + "\t" +
                           label_sum(vade::fuse(i, j, k), r.simple_names) + "\n";
            return out;
        }
        if (is_d) return vade::tsv_string(vade::deven_fusion(k));
        throw std::invalid_argument("tsv fusion table only available for diagrams A and D");
    }
    std::string out = "diagram " + r.algebra.source.name() + ", k = " + std::to_string(k) +
                      ", unit vertex " + std::to_string(r.unit_vertex()) + "\n";
    out += "A = " + v_sum(r.algebra.multiplicities) + ", dim A = " +
           fmt_double(r.algebra.dim_a.embed().real()) + "\n";
    out += "simples (* = Rep0):\n";
    for (int pi = 0; pi < r.rank(); ++pi) {
        std::vector<int64_t> col(k + 1);
        for (int i = 0; i <= k; ++i) col[i] = r.branching[i][pi];
        out += "  " + r.simple_names[pi] + (r.rep0[pi] ? "*" : " ") + " = " + v_sum(col) +
               "  [dim_A " + fmt_double(r.dims_a[pi]) + "]\n";
    }
    out += "gen_fusion (action of F(V_1)):\n";
    for (const auto& row : r.gen_fusion) {
        out += " ";
        for (int64_t v : row) out += " " + std::to_string(v);
        out += "\n";
    }
    if (is_d) {
        const auto f = vade::deven_fusion(k);
        out += "fusion table:\n";
        for (size_t a = 0; a < f.table.size(); ++a)
            for (size_t b = 0; b < f.table.size(); ++b)
                out += "  " + f.labels[a] + " x " + f.labels[b] + " = " +
                       label_sum(f.table[a][b], f.labels) + "\n";
    }
    return out;
}

std::string run_invariant(const vade::RepData& r, const std::string& format) {
    const auto inv = vade::invariant(r);
    if (format == "json") return vade::json_string(inv) + "\n";
    if (format == "tsv") return vade::tsv_string(inv);
    std::string out = "diagram " + r.algebra.source.name() + ", k = " +
                      std::to_string(r.level()) + "\n";
    out += "Z = " + vade::character_polynomial(r) + "\n";
    out += "Z[0][0] = " + std::to_string(inv.z00) + "\n";
    out += std::string("commutes with s: ") + (inv.commutes_s ? "yes" : "no") + "\n";
    out += std::string("commutes with t: ") + (inv.commutes_t ? "yes" : "no") + "\n";
    out += "matrix:\n";
    for (const auto& row : inv.z) {
        out += " ";
        for (int64_t v : row) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

int run_selftest_cmd(const std::string& out_path) {
    std::string out;
    bool all = true;
    for (const auto& r : vade::run_selftest()) {
        out += std::string("[") + (r.pass ? "PASS" : "FAIL") + "] " + std::to_string(r.id) +
               ". " + r.name;
        if (!r.pass) out += " -- " + r.detail;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
        out += buf;
        out += "\n";
        all = all && r.pass;
    }
    out += all ? "all criteria passed\n" : "FAILURES present\n";
    const int rc = emit(out, out_path);
    if (rc != 0) return rc;
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "verlinde-ade: exact modular data of the level-k sl2 fusion ring, ADET\n"
        "module classification, algebra-object analysis and modular invariants"};
    app.require_subcommand(1);

    int level = -1;
    std::string diagram;
    std::string format = "text";
    std::string out_path;

    const std::map<std::string, std::vector<std::string>> formats{
        {"fusion", {"text", "tsv", "json"}},  {"modular", {"text", "json"}},
        {"classify", {"text", "dot", "json"}}, {"algebras", {"text", "json"}},
        {"repcat", {"text", "tsv", "json"}},  {"invariant", {"text", "tsv", "json"}},
        {"selftest", {"text"}},
    };
    const std::map<std::string, std::string> descriptions{
        {"fusion", "print the fusion multiplicities N_ij^m"},
        {"modular", "print dims, twists, s-tilde, D and zeta"},
        {"classify", "list the certified module diagrams at the level"},
        {"algebras", "print the algebra-object verdicts per diagram"},
        {"repcat", "print Rep A data for an accepted diagram"},
        {"invariant", "print the modular invariant Z for an accepted diagram"},
        {"selftest", "run the verification suite over all levels"},
    };

    for (const auto& [name, fmts] : formats) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        if (name != "selftest")
            sub->add_option("--level", level, "level k")->required();
        if (name == "repcat" || name == "invariant")
            sub->add_option("--diagram", diagram, "diagram tag (A|D|E6|E7|E8|T)")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(fmts));
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "selftest") return run_selftest_cmd(out_path);

        const int cap = (cmd == "fusion" || cmd == "modular") ? 1000 : 64;
        if (level < 0 || level > cap) {
            std::cerr << "error: --level must be in 0.." << cap << " for " << cmd << "\n";
            return 2;
        }

        if (cmd == "fusion") return emit(run_fusion(level, format), out_path);
        if (cmd == "modular") return emit(run_modular(level, format), out_path);
        if (cmd == "classify") return emit(run_classify(level, format), out_path);
        if (cmd == "algebras") return emit(run_algebras(level, format), out_path);

        vade::RepData r;
        std::string err;
        if (find_rep(level, diagram, r, err) != 0) {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
        if (cmd == "repcat") return emit(run_repcat(r, format), out_path);
        return emit(run_invariant(r, format), out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "khi/cli.hpp"

#include "khi/acceptance.hpp"
#include "khi/invariants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace khi {

namespace {

using nlohmann::json;

struct Cell {
    int free = 0;
    std::map<int, int> torsion;  // k -> multiplicity
    bool empty() const { return free == 0 && torsion.empty(); }
};

std::string cell_str(const Cell& c, Ring ring, bool latex) {
    if (c.empty()) return latex ? "$\\cdot$" : ".";
    std::string F = latex ? "\\mathbb{F}" : "F";
    std::string tower = ring == Ring::F2H_hH ? F + "[H]" : F;
    std::vector<std::string> parts;
    auto powered = [&](const std::string& base, int mult) {
        if (mult == 1) return base;
        return latex ? base + "^{" + std::to_string(mult) + "}"
                     : base + "^" + std::to_string(mult);
    };
    if (c.free > 0) parts.push_back(powered(tower, c.free));
    for (auto& [k, mult] : c.torsion) {
        std::string base =
            k == 1 ? F
                   : (latex ? F + "[H]/H^{" + std::to_string(k) + "}"
                            : F + "[H]/H^" + std::to_string(k));
        parts.push_back(powered(k == 1 ? base : "(" + base + ")", mult));
    }
    std::string sep = latex ? " \\oplus " : " + ";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return latex ? "$" + out + "$" : out;
}

json module_json(const GradedModule& M) {
    json j;
    j["free"] = json::array();
    j["torsion"] = json::array();
    for (auto& t : M.free_part) j["free"].push_back({t.i, t.q});
    for (auto& t : M.torsion) j["torsion"].push_back({t.i, t.q, t.k});
    return j;
}

}  // namespace

std::string render_table(const GradedModule& M, OutFormat format, Ring ring) {
    if (format == OutFormat::json) return module_json(M).dump();

    bool latex = format == OutFormat::latex;
    if (!M.graded) {
        // one row of total dimensions per homological degree
        std::map<int, int> dim;
        for (auto& t : M.free_part) dim[t.i]++;
        std::ostringstream os;
        if (dim.empty()) return latex ? "$\\cdot$\n" : ".\n";
        for (auto& [i, d] : dim) os << "i=" << i << ": " << d << "\n";
        return os.str();
    }

    std::set<int> is;
    std::set<int, std::greater<int>> qs;
    std::map<std::pair<int, int>, Cell> cells;
    for (auto& t : M.free_part) {
        cells[{t.i, t.q}].free++;
        is.insert(t.i);
        qs.insert(t.q);
    }
    for (auto& t : M.torsion) {
        cells[{t.i, t.q}].torsion[t.k]++;
        is.insert(t.i);
        qs.insert(t.q);
    }
    std::ostringstream os;
    if (cells.empty()) return latex ? "$\\cdot$\n" : ".\n";

    std::vector<int> cols(is.begin(), is.end());
    // column texts, first column is the quantum grading
    std::vector<std::vector<std::string>> grid;
    {
        std::vector<std::string> head{latex ? "$j \\backslash i$" : "j\\i"};
        for (int i : cols) head.push_back(std::to_string(i));
        grid.push_back(head);
    }
    for (int q : qs) {
        std::vector<std::string> row{std::to_string(q)};
        for (int i : cols) {
            auto it = cells.find({i, q});
            row.push_back(cell_str(it == cells.end() ? Cell{} : it->second, ring, latex));
        }
        grid.push_back(row);
    }
    if (latex) {
        os << "\\begin{tabular}{r|" << std::string(cols.size(), 'c') << "}\n";
        for (size_t r = 0; r < grid.size(); ++r) {
            for (size_t c = 0; c < grid[r].size(); ++c)
                os << (c ? " & " : "") << grid[r][c];
            os << " \\\\\n";
            if (r == 0) os << "\\hline\n";
        }
        os << "\\end{tabular}\n";
    } else {
        std::vector<size_t> width(grid[0].size(), 0);
        for (auto& row : grid)
            for (size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        for (auto& row : grid) {
            for (size_t c = 0; c < row.size(); ++c) {
                os << (c ? "  " : "");
                os << row[c] << std::string(width[c] - row[c].size(), ' ');
            }
            os << "\n";
        }
    }
    return os.str();
}

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string theory = "bn";
    bool involutive = false;
    std::string mode = "tau";
    std::string variant = "unreduced";
    std::string format = "text";
    int cap = default_crossing_cap;
};

Theory parse_theory(const std::string& s) {
    if (s == "kh") return Theory::kh;
    if (s == "bn") return Theory::bn;
    return Theory::bn1;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    OutFormat fmt = cfg.format == "json"    ? OutFormat::json
                    : cfg.format == "latex" ? OutFormat::latex
                                            : OutFormat::text;
    if (cfg.command == "corpus") return run_acceptance(out) ? 0 : 2;

    std::ifstream f(cfg.input);
    if (!f) {
        err << "cannot open input file: " << cfg.input << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    Diagram D;
    try {
        D = parse_diagram(buf.str());
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    auto viols = validate(D);
    if (cfg.command == "validate") {
        for (auto& v : viols) out << v.what << "\n";
        if (viols.empty()) out << "valid\n";
        return viols.empty() ? 0 : 1;
    }
    if (!viols.empty()) {
        for (auto& v : viols) err << v.what << "\n";
        return 1;
    }

    Variant variant = cfg.variant == "reduced"     ? Variant::reduced
                      : cfg.variant == "coreduced" ? Variant::coreduced
                                                   : Variant::unreduced;
    ConeMode mode = cfg.mode == "sigma-tau" ? ConeMode::sigma_tau : ConeMode::tau;
    if (variant != Variant::unreduced && D.basepoint == -1) {
        err << "reduced and coreduced variants require a basepoint\n";
        return 1;
    }
    if (mode == ConeMode::sigma_tau && variant == Variant::reduced) {
        err << "sigma-tau mode supports only the unreduced variant\n";
        return 1;
    }

    try {
        if (cfg.command == "homology") {
            Ring ring = theory_ring(parse_theory(cfg.theory));
            Complex C = cfg.involutive
                            ? build_involutive(D, ring, mode, variant, cfg.cap)
                            : build_ckh(D, ring, variant, cfg.cap);
            verify_complex(C);
            HomologySolver H(C);
            if (fmt == OutFormat::json) {
                json j = module_json(H.module());
                j["schema"] = 1;
                j["command"] = "homology";
                j["theory"] = cfg.theory;
                j["involutive"] = cfg.involutive;
                j["mode"] = cfg.mode;
                j["variant"] = cfg.variant;
                j["graded"] = H.module().graded;
                out << j.dump(2) << "\n";
            } else {
                out << render_table(H.module(), fmt, C.ring);
            }
            return 0;
        }
        if (cfg.command == "s") {
            SPair p = cross_validate(D, mode, cfg.cap);
            int sc = s_classic(D, cfg.cap);
            LeeData L = lee_labels(D);
            if (fmt == OutFormat::json) {
                json j;
                j["schema"] = 1;
                j["command"] = "s";
                j["invariants"] = {{"s_lower", p.s_lower}, {"s_upper", p.s_upper},
                                   {"s_classic", sc},      {"w", L.w},
                                   {"r", L.r},             {"d_lower", p.d_lower},
                                   {"d_upper", p.d_upper}};
                out << j.dump(2) << "\n";
            } else if (fmt == OutFormat::latex) {
                out << "$\\underline{s} = " << p.s_lower << ",\\ \\overline{s} = "
                    << p.s_upper << ",\\ s = " << sc << "$\n";
            } else {
                out << "s_lower=" << p.s_lower << " s_upper=" << p.s_upper
                    << " s_classic=" << sc << " w=" << L.w << " r=" << L.r
                    << " d_lower=" << p.d_lower << " d_upper=" << p.d_upper << "\n";
            }
            return 0;
        }
        // pair: chain-level duality pairing of the Lee cycle with itself
        Complex C = build_ckh(D, Ring::F2H_hH, Variant::unreduced, cfg.cap);
        LeeData L = lee_labels(D);
        Column z = lee_cycle(C, D, L, 0, false);
        Poly pu = pairing_value(C, z, z, false);
        Poly pr = D.basepoint != -1 ? pairing_value(C, z, z, true) : Poly::zero();
        if (fmt == OutFormat::json) {
            json j;
            j["schema"] = 1;
            j["command"] = "pair";
            j["invariants"] = {{"pairing_unreduced", pu.str()},
                               {"pairing_reduced", pr.str()},
                               {"r", L.r}};
            out << j.dump(2) << "\n";
        } else {
            out << "pairing_unreduced=" << pu.str()
                << " pairing_reduced=" << pr.str() << " r=" << L.r << "\n";
        }
        bool ok = pu == Poly::monomial(L.r);
        if (D.basepoint != -1) ok = ok && (L.r == 0 || pr == Poly::monomial(L.r - 1));
        if (!ok) {
            err << "pairing does not equal the expected power of H\n";
            return 2;
        }
        return 0;
    } catch (const ResourceCap& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"involutive Khovanov and Bar-Natan homology"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", cfg.input, "diagram file (.sik)");
        if (needs_input) in->required();
        sub->add_option("--theory", cfg.theory, "coefficient theory")
            ->check(CLI::IsMember({"kh", "bn", "bn1"}));
        sub->add_flag("--involutive", cfg.involutive, "use the involutive cone");
        sub->add_option("--mode", cfg.mode, "cone involution")
            ->check(CLI::IsMember({"tau", "sigma-tau"}));
        sub->add_option("--variant", cfg.variant, "complex variant")
            ->check(CLI::IsMember({"unreduced", "reduced", "coreduced"}));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--cap", cfg.cap, "crossing cap");
    };
    add_common(app.add_subcommand("validate", "check a diagram file"), true);
    add_common(app.add_subcommand("homology", "compute a homology table"), true);
    add_common(app.add_subcommand("s", "compute the s-type invariants"), true);
    add_common(app.add_subcommand("pair", "evaluate the Lee pairing"), true);
    add_common(app.add_subcommand("corpus", "run the acceptance corpus"), false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg, out, err);
}

}  // namespace khi

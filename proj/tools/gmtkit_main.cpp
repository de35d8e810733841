// Command-line front end: every computation with machine-readable output.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmtkit/errors.hpp"
#include "gmtkit/gmt.hpp"
#include "gmtkit/mirror.hpp"
#include "gmtkit/partitions.hpp"
#include "gmtkit/quasimap.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gmtkit;

namespace {

struct Options {
    bool as_json = false;
    bool as_csv = false;
    bool timing = false;
    std::string cache_dir;
    std::string correlators;  // explicit correlator file
};

struct OutputBundle {
    json record;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::string text;
    int exit_code = 0;
};

// Implicit correlator table: $GMTKIT_CACHE_DIR/correlators.json (or the
// per-user cache dir), used only when it exists.
std::optional<fs::path> correlator_file(const Options& opt) {
    fs::path dir;
    if (!opt.cache_dir.empty()) {
        dir = opt.cache_dir;
    } else if (const char* env = std::getenv("GMTKIT_CACHE_DIR"); env && *env) {
        dir = env;
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        dir = fs::path(home) / ".cache" / "gmtkit";
    } else {
        return std::nullopt;
    }
    fs::path file = dir / "correlators.json";
    if (fs::exists(file)) return file;
    return std::nullopt;
}

CorrelatorTable load_user_table(const Options& opt, json& params) {
    if (!opt.correlators.empty()) {
        params["correlators"] = opt.correlators;
        return CorrelatorTable::load(opt.correlators);
    }
    if (auto file = correlator_file(opt)) {
        params["correlators"] = file->string();
        return CorrelatorTable::load(*file);
    }
    params["correlators"] = "";
    return {};
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ",";
        line += cells[i];
    }
    return line;
}

void print_bundle(const Options& opt, OutputBundle& bundle, double elapsed_ms) {
    if (opt.timing) bundle.record["timing_ms"] = elapsed_ms;
    if (opt.as_json) {
        std::cout << bundle.record.dump() << "\n";
    } else if (opt.as_csv) {
        std::cout << join_csv(bundle.csv_header) << "\n";
        for (const auto& row : bundle.csv_rows) std::cout << join_csv(row) << "\n";
    } else {
        std::cout << bundle.text;
        if (opt.timing) std::cout << "time: " << elapsed_ms << " ms\n";
    }
}

OutputBundle run_w(const Options&, int N, int k, int d, std::optional<int> a, std::optional<int> b,
                   bool all_pairs) {
    OutputBundle out;
    out.record["command"] = "w";
    json params{{"N", N}, {"k", k}, {"d", d}, {"all_pairs", all_pairs}};
    std::vector<std::pair<int, int>> pairs;
    if (all_pairs) {
        int line = N - 3 + (N - k) * d;
        for (int aa = std::max(0, line - (N - 1)); aa <= std::min(line, N - 1); ++aa)
            pairs.emplace_back(aa, line - aa);
    } else {
        if (!a || !b) throw std::invalid_argument("w: --a and --b are required without --all-pairs");
        params["a"] = *a;
        params["b"] = *b;
        pairs.emplace_back(*a, *b);
    }
    out.record["params"] = params;
    json results = json::array();
    std::ostringstream text;
    text << "w(O_{h^a} O_{h^b})_{0," << d << "} for N=" << N << " k=" << k << "\n";
    out.csv_header = {"N", "k", "d", "a", "b", "value"};
    for (auto [aa, bb] : pairs) {
        Rational v = w_two_point(N, k, d, aa, bb);
        results.push_back(json{{"a", aa}, {"b", bb}, {"value", v.str()}});
        out.csv_rows.push_back({std::to_string(N), std::to_string(k), std::to_string(d),
                                std::to_string(aa), std::to_string(bb), v.str()});
        text << "  a=" << aa << " b=" << bb << "  " << v.str() << "\n";
    }
    out.record["results"] = std::move(results);
    out.text = text.str();
    return out;
}

OutputBundle run_gw(const Options& opt, int N, int k, int d, bool explain) {
    OutputBundle out;
    out.record["command"] = "gw";
    json params{{"N", N}, {"k", k}, {"d", d}, {"explain", explain}};
    CorrelatorTable user = load_user_table(opt, params);
    out.record["params"] = params;
    GmtEngine engine(N, k, std::move(user));
    const auto& table = engine.two_point(d);
    json results = json::array();
    std::ostringstream text;
    text << "<O_{h^a} O_{h^b}>_{0," << d << "} for degree-" << k << " hypersurface in CP^" << (N - 1)
         << "  (a+b = " << engine.selection_sum(d) << ")\n";
    out.csv_header = {"N", "k", "d", "a", "b", "value"};
    for (const auto& [ab, v] : table) {
        json row{{"a", ab.first}, {"b", ab.second}, {"value", v.str()}};
        out.csv_rows.push_back({std::to_string(N), std::to_string(k), std::to_string(d),
                                std::to_string(ab.first), std::to_string(ab.second), v.str()});
        text << "  a=" << ab.first << " b=" << ab.second << "  " << v.str() << "\n";
        if (explain) {
            TransformationTerms t = engine.transformation_terms(d, ab.first, ab.second);
            text << "    w = " << t.w_ab.str() << ", subtracted w-term = " << t.w_sub.str() << "\n";
            json terms = json::array();
            for (const CorrectionTerm& term : t.corrections) {
                json jt{{"sigma", term.sigma.parts},
                        {"S", term.symmetry.str()},
                        {"rule", correlator_rule_name(term.correlator.rule)},
                        {"correlator", term.correlator.value.str()},
                        {"value", term.value.str()}};
                terms.push_back(std::move(jt));
                text << "    g=" << term.g << " sigma=" << term.sigma.str() << "  S="
                     << term.symmetry.str() << "  correlator["
                     << correlator_rule_name(term.correlator.rule) << "]="
                     << term.correlator.value.str() << "  term=" << term.value.str() << "\n";
            }
            row["w"] = t.w_ab.str();
            row["w_subtracted"] = t.w_sub.str();
            row["corrections"] = std::move(terms);
        }
        results.push_back(std::move(row));
    }
    if (table.empty()) text << "  (no admissible insertion pairs)\n";
    out.record["results"] = std::move(results);
    out.text = text.str();
    return out;
}

OutputBundle run_vsc(const Options&, int N, int k, int d, int n) {
    OutputBundle out;
    Rational v = vsc(N, k, d, n);
    out.record["command"] = "vsc";
    out.record["params"] = json{{"N", N}, {"k", k}, {"d", d}, {"n", n}};
    out.record["results"] = json::array({json{{"n", n}, {"value", v.str()}}});
    out.csv_header = {"N", "k", "d", "n", "value"};
    out.csv_rows.push_back({std::to_string(N), std::to_string(k), std::to_string(d),
                            std::to_string(n), v.str()});
    out.text = "L~_" + std::to_string(n) + "^{" + std::to_string(N) + "," + std::to_string(k) + "," +
               std::to_string(d) + "} = " + v.str() + "\n";
    return out;
}

OutputBundle run_mirror_map(const Options&, int k, int order) {
    OutputBundle out;
    MirrorData md = mirror_map_series(k, order);
    out.record["command"] = "mirror-map";
    out.record["params"] = json{{"k", k}, {"order", order}};
    json w0 = json::array(), w1 = json::array(), t = json::array();
    out.csv_header = {"k", "order", "series", "d", "coefficient"};
    size_t col0 = 2, col1 = 2;
    for (int d = 0; d <= order; ++d) {
        col0 = std::max(col0, md.w0.at(d).str().size());
        col1 = std::max(col1, md.w1.at(d).str().size());
    }
    std::ostringstream text;
    text << "mirror map data for k=" << k << " through q^" << order << "\n";
    text << "  " << std::left << std::setw(4) << "d" << " " << std::setw(static_cast<int>(col0))
         << "w0" << " " << std::setw(static_cast<int>(col1)) << "w1" << " t\n";
    for (int d = 0; d <= order; ++d) {
        w0.push_back(md.w0.at(d).str());
        w1.push_back(md.w1.at(d).str());
        t.push_back(md.tmap.at(d).str());
        for (const char* name : {"w0", "w1", "t"}) {
            const QSeries& s = name[0] == 't' ? md.tmap : (name[1] == '0' ? md.w0 : md.w1);
            out.csv_rows.push_back({std::to_string(k), std::to_string(order), name,
                                    std::to_string(d), s.at(d).str()});
        }
        text << "  " << std::left << std::setw(4) << d << " " << std::setw(static_cast<int>(col0))
             << md.w0.at(d).str() << " " << std::setw(static_cast<int>(col1)) << md.w1.at(d).str()
             << " " << md.tmap.at(d).str() << "\n";
    }
    out.record["results"] = json{{"w0", std::move(w0)}, {"w1", std::move(w1)}, {"t", std::move(t)}};
    out.text = text.str();
    return out;
}

OutputBundle run_instanton(const Options&, int dmax) {
    OutputBundle out;
    GmtEngine engine(5, 5);
    auto n = instanton_numbers(dmax, engine);
    out.record["command"] = "instanton";
    out.record["params"] = json{{"N", 5}, {"k", 5}, {"dmax", dmax}};
    json results = json::array();
    out.csv_header = {"d", "gw", "n"};
    std::ostringstream text;
    text << "quintic instanton numbers (N = k = 5)\n";
    for (int d = 1; d <= dmax; ++d) {
        Rational gw = engine.gw(d, 1, 1);
        results.push_back(json{{"d", d}, {"gw", gw.str()}, {"n", n.at(d).str()}});
        out.csv_rows.push_back({std::to_string(d), gw.str(), n.at(d).str()});
        text << "  d=" << d << "  <O_h O_h> = " << gw.str() << "  n_" << d << " = " << n.at(d).str()
             << "\n";
    }
    out.record["results"] = std::move(results);
    out.text = text.str();
    return out;
}

OutputBundle run_verify(const Options& opt, int N, int k, int d) {
    OutputBundle out;
    out.record["command"] = "verify";
    json params{{"N", N}, {"k", k}, {"d", d}};
    CorrelatorTable user = load_user_table(opt, params);
    out.record["params"] = params;

    GmtEngine engine(N, k, user);
    GwTable table;
    for (int dd = 1; dd <= d; ++dd) table[dd] = engine.two_point(dd);
    bool ok = true;
    json identity = json::array();
    std::ostringstream text;
    out.csv_header = {"check", "detail", "value", "ok"};
    text << "mirror transformation residuals, N=" << N << " k=" << k << " d=" << d << "\n";
    for (int dd = 1; dd <= d; ++dd) {
        GmtResidualReport rep = verify_gmt_identity(N, k, dd, table, user);
        for (const auto& row : rep.rows) {
            identity.push_back(json{{"d", dd}, {"a", row.a}, {"b", row.b},
                                    {"residual", row.residual.str()}, {"ok", row.ok}});
            out.csv_rows.push_back({"identity",
                                    "d=" + std::to_string(dd) + " a=" + std::to_string(row.a) +
                                        " b=" + std::to_string(row.b),
                                    row.residual.str(), row.ok ? "1" : "0"});
            text << "  d=" << dd << " a=" << row.a << " b=" << row.b << "  residual "
                 << row.residual.str() << (row.ok ? "  ok" : "  FAIL") << "\n";
            ok = ok && row.ok;
        }
    }
    json results{{"identity", std::move(identity)}};
    if (N == k && N >= 3) {
        MirrorIdentityReport rep = check_w_mirror_identity(k, d);
        json mirror = json::array();
        for (const auto& row : rep.rows) {
            mirror.push_back(json{{"d", row.d}, {"ring", row.ring_value.str()},
                                  {"series", row.series_value.str()}, {"ok", row.ok}});
            out.csv_rows.push_back({"mirror", "d=" + std::to_string(row.d), row.ring_value.str(),
                                    row.ok ? "1" : "0"});
            text << "  mirror d=" << row.d << "  ring " << row.ring_value.str() << " vs series "
                 << row.series_value.str() << (row.ok ? "  ok" : "  FAIL") << "\n";
            ok = ok && row.ok;
        }
        results["mirror"] = std::move(mirror);
    }
    results["ok"] = ok;
    out.record["results"] = std::move(results);
    text << (ok ? "all checks passed\n" : "CONSISTENCY FAILURE\n");
    out.text = text.str();
    out.exit_code = ok ? 0 : 4;
    return out;
}

OutputBundle run_partitions(const Options&, int g) {
    OutputBundle out;
    auto parts = enumerate_partitions(g);
    out.record["command"] = "partitions";
    out.record["params"] = json{{"g", g}};
    json results = json::array();
    out.csv_header = {"parts", "multiplicities", "S"};
    std::ostringstream text;
    text << "partitions of " << g << " (" << parts.size() << " total)\n";
    for (const Partition& sigma : parts) {
        json mults = json::object();
        std::string mult_text;
        for (int i = 1; i <= g; ++i) {
            int m = multiplicity(i, sigma);
            if (m == 0) continue;
            mults[std::to_string(i)] = m;
            if (!mult_text.empty()) mult_text += " ";
            mult_text += "mul[" + std::to_string(i) + "]=" + std::to_string(m);
        }
        Rational s = symmetry_factor(sigma);
        results.push_back(json{{"parts", sigma.parts}, {"multiplicities", std::move(mults)},
                               {"S", s.str()}});
        out.csv_rows.push_back({sigma.str(), mult_text, s.str()});
        text << "  " << sigma.str() << "  " << mult_text << "  S = " << s.str() << "\n";
    }
    out.record["results"] = std::move(results);
    out.text = text.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasimap intersection numbers, the generalized mirror transformation, "
                 "and genus-0 Gromov-Witten invariants of projective hypersurfaces"};
    app.set_config("--config", "", "config file with 'key = value' lines");
    app.set_version_flag("--version", "gmtkit 0.1.0");
    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON record on stdout");
    app.add_flag("--csv", opt.as_csv, "emit CSV on stdout");
    app.add_flag("--timing", opt.timing, "include timing metadata in the output");
    app.add_option("--cache-dir", opt.cache_dir,
                   "cache directory (default: $GMTKIT_CACHE_DIR, else ~/.cache/gmtkit)");
    app.require_subcommand(1);

    int N = 5, k = 5, d = 1, n = 1, order = 5, dmax = 3, g = 1;
    std::optional<int> a, b;
    bool all_pairs = false;
    bool explain = false;

    CLI::App* cmd_w = app.add_subcommand("w", "two-point quasimap intersection number");
    cmd_w->add_option("--N", N, "ambient CP^{N-1}")->required()->check(CLI::Range(2, 1000));
    cmd_w->add_option("--k", k, "hypersurface degree")->required()->check(CLI::Range(1, 1000));
    cmd_w->add_option("--d", d, "map degree")->required()->check(CLI::Range(1, 64));
    cmd_w->add_option("--a", a, "first insertion exponent");
    cmd_w->add_option("--b", b, "second insertion exponent");
    cmd_w->add_flag("--all-pairs", all_pairs, "sweep all (a, b) on the selection line");

    CLI::App* cmd_gw = app.add_subcommand("gw", "two-point Gromov-Witten invariants");
    cmd_gw->add_option("--N", N)->required()->check(CLI::Range(2, 1000));
    cmd_gw->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    cmd_gw->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    cmd_gw->add_option("--correlators", opt.correlators, "correlator table (JSON)");
    cmd_gw->add_flag("--explain", explain, "show the correction-term breakdown");

    CLI::App* cmd_vsc = app.add_subcommand("vsc", "virtual structure constant");
    cmd_vsc->add_option("--N", N)->required()->check(CLI::Range(2, 1000));
    cmd_vsc->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    cmd_vsc->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    cmd_vsc->add_option("--n", n)->required();

    CLI::App* cmd_mirror = app.add_subcommand("mirror-map", "hypergeometric series and mirror map");
    cmd_mirror->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    cmd_mirror->add_option("--order", order)->required()->check(CLI::Range(0, 128));

    CLI::App* cmd_inst = app.add_subcommand("instanton", "quintic instanton numbers");
    cmd_inst->add_option("--dmax", dmax)->required()->check(CLI::Range(1, 16));

    CLI::App* cmd_verify = app.add_subcommand("verify", "consistency checks of the transformation");
    cmd_verify->add_option("--N", N)->required()->check(CLI::Range(2, 1000));
    cmd_verify->add_option("--k", k)->required()->check(CLI::Range(1, 1000));
    cmd_verify->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    cmd_verify->add_option("--correlators", opt.correlators, "correlator table (JSON)");

    CLI::App* cmd_parts = app.add_subcommand("partitions", "integer partitions with S(sigma)");
    cmd_parts->add_option("g", g, "the integer to partition")->required()->check(CLI::Range(1, 64));

    for (CLI::App* sub : {cmd_w, cmd_gw, cmd_vsc, cmd_mirror, cmd_inst, cmd_verify, cmd_parts})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        OutputBundle bundle;
        if (cmd_w->parsed()) bundle = run_w(opt, N, k, d, a, b, all_pairs);
        else if (cmd_gw->parsed()) bundle = run_gw(opt, N, k, d, explain);
        else if (cmd_vsc->parsed()) bundle = run_vsc(opt, N, k, d, n);
        else if (cmd_mirror->parsed()) bundle = run_mirror_map(opt, k, order);
        else if (cmd_inst->parsed()) bundle = run_instanton(opt, dmax);
        else if (cmd_verify->parsed()) bundle = run_verify(opt, N, k, d);
        else if (cmd_parts->parsed()) bundle = run_partitions(opt, g);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        print_bundle(opt, bundle, ms);
        return bundle.exit_code;
    } catch (const NeedsCorrelator& e) {
        std::cerr << "error: missing correlator input: " << e.key.str() << "\n"
                  << "supply it with --correlators FILE (schema gmt-correlators/1)\n";
        return 3;
    } catch (const CorrelatorParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CorrelatorConflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

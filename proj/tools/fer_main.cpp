// Command-line front end: exact positivity, Seshadri constants, negative
// class enumeration and linear-system scans on blown-up Hirzebruch surfaces.
// All numeric output is exact; identical invocations produce byte-identical
// output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fer/json_io.hpp"

namespace fs = std::filesystem;
using fer::json;

namespace {

enum ExitCode {
    kOk = 0,
    kInputError = 1,
    kUnsupportedRange = 2,
    kBoundsIncomplete = 3,
    kInvariantFailure = 4,
    kGoldenMismatch = 5,
};

std::vector<long long> parse_csv_ll(const std::string& text) {
    std::vector<long long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw fer::ArgumentError("malformed integer list: '" + text + "'");
        }
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw fer::ArgumentError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// No partial files: write to a sibling temp file, then rename over.
void write_file_atomic(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw fer::ArgumentError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, p);
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw fer::ArgumentError("malformed JSON in " + origin + " at line " +
                                 std::to_string(line) + " column " + std::to_string(col) +
                                 ": " + e.what());
    }
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct SurfaceFlags {
    long long e = 0;
    int r = 0;
    bool with_x = false;
    std::string on_ce;
    std::string fibers;

    void attach(CLI::App* cmd, bool allow_x = true) {
        cmd->add_option("--e", e, "Hirzebruch invariant e (>= 0)")->required();
        cmd->add_option("--r", r, "number of blown-up points")->required();
        if (allow_x) cmd->add_flag("--with-x", with_x, "blow up the extra point x");
        cmd->add_option("--on-ce", on_ce,
                        "comma list of 0/1 flags: which points lie on C_e (configured points)");
        cmd->add_option("--fibers", fibers,
                        "comma list of fiber ids per point (configured points)");
    }

    fer::SurfaceModel build() const {
        if (on_ce.empty() && fibers.empty())
            return fer::SurfaceModel(e, r, with_x);
        std::vector<long long> ce = parse_csv_ll(on_ce.empty() ? std::string(r, '0') : on_ce);
        std::vector<long long> fib = parse_csv_ll(fibers);
        if (fibers.empty())
            for (int i = 0; i < r; ++i) fib.push_back(i + 1);
        if (static_cast<int>(ce.size()) != r || static_cast<int>(fib.size()) != r)
            throw fer::ArgumentError("--on-ce/--fibers must list exactly r entries");
        std::vector<bool> ceb;
        for (long long v : ce) ceb.push_back(v != 0);
        std::vector<int> fibi(fib.begin(), fib.end());
        return fer::SurfaceModel(e, r, with_x,
                                 fer::PointConfig::configured(ceb, fibi));
    }
};

fer::EnumBounds parse_bounds(const std::string& text) {
    if (text.empty() || text == "auto") return fer::EnumBounds::automatic();
    std::vector<long long> v = parse_csv_ll(text);
    if (v.size() != 3)
        throw fer::ArgumentError("--bounds wants 'auto' or 'a_max,b_max,m_max'");
    return fer::EnumBounds::manual(v[0], v[1], v[2]);
}

fer::XPosition parse_x_position(const std::string& text) {
    auto split = [&](const std::string& prefix) -> int {
        std::string rest = text.substr(prefix.size());
        try {
            return std::stoi(rest) - 1;  // user-facing indices are 1-based
        } catch (const std::exception&) {
            throw fer::ArgumentError("malformed --x-position '" + text + "'");
        }
    };
    if (text.empty() || text == "generic") return fer::XPosition::generic();
    if (text == "on-ce") return fer::XPosition::on_ce();
    if (text.rfind("on-ce-fiber:", 0) == 0)
        return fer::XPosition::on_ce_and_fiber(split("on-ce-fiber:"));
    if (text.rfind("on-fiber-exc:", 0) == 0)
        return fer::XPosition::on_fiber_and_exc(split("on-fiber-exc:"));
    if (text.rfind("on-fiber:", 0) == 0)
        return fer::XPosition::on_fiber(split("on-fiber:"));
    if (text.rfind("on-exc:", 0) == 0) return fer::XPosition::on_exc(split("on-exc:"));
    throw fer::ArgumentError(
        "unknown --x-position (use generic, on-ce, on-fiber:i, on-ce-fiber:i, "
        "on-fiber-exc:i, on-exc:i)");
}

// ---------------------------------------------------------------------------
// golden files

std::map<std::string, std::string> generate_golden() {
    std::map<std::string, std::string> files;

    fer::SurfaceModel f36x(3, 6, true);
    auto bounds = fer::EnumBounds::automatic();
    auto cands = fer::through_x_candidates(f36x, bounds);
    json arr = json::array();
    for (const auto& nc : cands) arr.push_back(fer::negclass_to_json(nc));
    files["candidates_f36.json"] = dump(arr);
    files["families_f36.csv"] = fer::families_to_csv(fer::group_families(cands));

    fer::SurfaceModel f36(3, 6);
    fer::DivClass L36(6, 19, {4, 4, 4, 4, 4, 4});
    files["seshadri_f36.json"] =
        dump(fer::seshadri_to_json(fer::seshadri_enumerative(L36, f36)));

    fer::SurfaceModel f13(1, 3);
    fer::DivClass L13(3, 5, {2, 2, 2});
    files["seshadri_f13.json"] =
        dump(fer::seshadri_to_json(fer::seshadri_enumerative(L13, f13)));

    fer::LinSysSpec spec(3, 3, 9, {2, 2, 2, 2, 2, 2});
    files["linsys_3_9_2x6.json"] =
        dump(fer::linsys_report_to_json(fer::analyze_linsys(spec, {1, 2, 3})));

    fer::ScanGrid grid;
    grid.e = {2, 2};
    grid.r = {1, 3};
    grid.a = {0, 2};
    grid.b = {0, 5};
    grid.m = {0, 2};
    grid.seeds = {1, 2};
    fer::ScanReport rep = fer::conjecture_scan(grid);
    files["scan_e2.json"] = dump(fer::scan_report_to_json(rep));
    files["scan_e2.csv"] = fer::scan_report_to_csv(rep);
    return files;
}

int run_golden(const std::string& dir, bool regen, bool force) {
    auto files = generate_golden();
    fs::path root(dir);
    if (regen) {
        for (const auto& [name, content] : files) {
            fs::path p = root / name;
            if (fs::exists(p) && !force)
                throw fer::ArgumentError("refusing to overwrite " + p.string() +
                                         " without --force");
            write_file_atomic(p, content);
            std::cout << "wrote " << p.string() << "\n";
        }
        return kOk;
    }
    bool ok = true;
    for (const auto& [name, content] : files) {
        fs::path p = root / name;
        if (!fs::exists(p)) {
            std::cout << "MISSING " << p.string() << "\n";
            ok = false;
            continue;
        }
        if (read_file(p) != content) {
            std::cout << "DIFF    " << p.string() << "\n";
            ok = false;
        } else {
            std::cout << "OK      " << p.string() << "\n";
        }
    }
    return ok ? kOk : kGoldenMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positivity and Seshadri constants on blown-up Hirzebruch surfaces"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate (-1)/(-2) lattice classes");
    SurfaceFlags enum_surface;
    enum_surface.attach(cmd_enum);
    std::string enum_bounds = "auto";
    std::string enum_filter = "all";
    std::string enum_out, enum_csv;
    cmd_enum->add_option("--bounds", enum_bounds, "'auto' or manual a_max,b_max,m_max");
    cmd_enum->add_option("--filter", enum_filter,
                         "all | candidates (through x) | effective (curve candidates)");
    cmd_enum->add_option("--out", enum_out, "write the JSON array here instead of stdout");
    cmd_enum->add_option("--csv", enum_csv, "also write a family summary CSV");

    // nef / ample
    auto* cmd_nef = app.add_subcommand("nef", "test nefness against the cone generators");
    SurfaceFlags nef_surface;
    nef_surface.attach(cmd_nef);
    std::string nef_class, nef_bounds = "auto", nef_out;
    cmd_nef->add_option("--D", nef_class, "class a,b,m1..mr[,mx]")->required();
    cmd_nef->add_option("--bounds", nef_bounds, "'auto' or a_max,b_max,m_max");
    cmd_nef->add_option("--out", nef_out, "output path (default stdout)");

    auto* cmd_ample = app.add_subcommand("ample", "test ampleness (Nakai against generators)");
    SurfaceFlags ample_surface;
    ample_surface.attach(cmd_ample);
    std::string ample_class, ample_bounds = "auto", ample_out;
    cmd_ample->add_option("--L", ample_class, "class a,b,m1..mr[,mx]")->required();
    cmd_ample->add_option("--bounds", ample_bounds, "'auto' or a_max,b_max,m_max");
    cmd_ample->add_option("--out", ample_out, "output path (default stdout)");

    // seshadri
    auto* cmd_ses = app.add_subcommand("seshadri", "Seshadri constant of an ample class");
    SurfaceFlags ses_surface;
    ses_surface.attach(cmd_ses, /*allow_x=*/false);
    std::string ses_class, ses_bounds = "auto", ses_xpos = "generic";
    std::string ses_method = "auto", ses_out, ses_format = "json";
    std::string ses_config = "very-general";
    cmd_ses->add_option("--L", ses_class, "ample class a,b,m1..mr")->required();
    cmd_ses->add_option("--x-position", ses_xpos,
                        "generic | on-ce | on-fiber:i | on-ce-fiber:i | on-fiber-exc:i | on-exc:i");
    cmd_ses->add_option("--config", ses_config,
                        "very-general, or a JSON file with {\"on_ce\": [...], \"fiber\": [...]}");
    cmd_ses->add_option("--method", ses_method, "auto | fe | small-r | r-e | enumerative");
    cmd_ses->add_option("--bounds", ses_bounds, "'auto' or a_max,b_max,m_max");
    cmd_ses->add_option("--format", ses_format, "json | table");
    cmd_ses->add_option("--out", ses_out, "output path (default stdout)");

    // linsys
    auto* cmd_lin = app.add_subcommand("linsys", "analyze one linear system");
    long long lin_e = 0, lin_a = 0, lin_b = 0;
    std::string lin_m, lin_seeds = "1,2,3", lin_out;
    cmd_lin->add_option("--e", lin_e, "Hirzebruch invariant")->required();
    cmd_lin->add_option("--a", lin_a, "degree on C_e")->required();
    cmd_lin->add_option("--b", lin_b, "degree on the fiber")->required();
    cmd_lin->add_option("--m", lin_m, "multiplicities m1,m2,... (empty for no points)");
    cmd_lin->add_option("--seeds", lin_seeds, "interpolation seeds (default 1,2,3)");
    cmd_lin->add_option("--out", lin_out, "output path (default stdout)");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "conjecture evidence scan over a grid");
    std::string scan_grid_path, scan_json, scan_csv;
    cmd_scan->add_option("--grid", scan_grid_path, "grid config JSON file")->required();
    cmd_scan->add_option("--out-json", scan_json, "JSON report path (default stdout)");
    cmd_scan->add_option("--out-csv", scan_csv, "CSV report path");

    // golden
    auto* cmd_gold = app.add_subcommand("golden", "check or regenerate golden outputs");
    std::string gold_dir = "golden/v1";
    bool gold_regen = false, gold_force = false, gold_check = false;
    cmd_gold->add_option("--dir", gold_dir, "golden directory (default golden/v1)");
    cmd_gold->add_flag("--check", gold_check, "byte-compare against the stored files (default)");
    cmd_gold->add_flag("--regen", gold_regen, "regenerate instead of checking");
    cmd_gold->add_flag("--force", gold_force, "allow --regen to overwrite existing files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (cmd_enum->parsed()) {
            fer::SurfaceModel S = enum_surface.build();
            fer::EnumBounds bounds = parse_bounds(enum_bounds);
            std::vector<fer::NegCurveClass> classes;
            if (enum_filter == "all") {
                classes = fer::enumerate_neg_classes(S, bounds);
            } else if (enum_filter == "candidates" || enum_filter == "effective") {
                classes = fer::through_x_candidates(S, bounds);
                if (enum_filter == "effective") {
                    std::erase_if(classes, [](const fer::NegCurveClass& nc) {
                        return !nc.passes_irreducibility || !nc.passes_effectivity;
                    });
                }
            } else {
                throw fer::ArgumentError("unknown --filter '" + enum_filter + "'");
            }
            json arr = json::array();
            for (const auto& nc : classes) arr.push_back(fer::negclass_to_json(nc));
            emit(dump(arr), enum_out);
            if (!enum_csv.empty())
                write_file_atomic(enum_csv,
                                  fer::families_to_csv(fer::group_families(classes)));
        } else if (cmd_nef->parsed() || cmd_ample->parsed()) {
            bool ample_mode = cmd_ample->parsed();
            fer::SurfaceModel S = (ample_mode ? ample_surface : nef_surface).build();
            fer::DivClass D =
                fer::parse_class_string(ample_mode ? ample_class : nef_class, S);
            fer::ConeGenerators G = fer::build_cone_generators(
                S, parse_bounds(ample_mode ? ample_bounds : nef_bounds));
            json j;
            if (ample_mode) {
                fer::PositivityVerdict v = fer::nakai_verdict(D, S, G);
                j["ample"] = v.verdict;
                j["self_intersection"] = v.self_int;
                j["min_pairing"] = v.min_pairing;
                j["witness"] = v.witness.str();
                try {
                    j["closed_form"] = fer::is_ample_closed_form(D, S);
                } catch (const fer::UnsupportedRangeError&) {
                    j["closed_form"] = nullptr;
                }
            } else {
                fer::PositivityVerdict v = fer::is_nef_verdict(D, S, G);
                j["nef"] = v.verdict;
                j["min_pairing"] = v.min_pairing;
                j["witness"] = v.witness.str();
            }
            j["bounds"] = {{"a_max", G.bounds_used.a_max},
                           {"b_max", G.bounds_used.b_max},
                           {"m_max", G.bounds_used.m_max}};
            emit(dump(j), ample_mode ? ample_out : nef_out);
        } else if (cmd_ses->parsed()) {
            fer::SurfaceModel S = ses_surface.build();
            if (ses_config != "very-general") {
                json jc = parse_json_text(read_file(ses_config), ses_config);
                S = fer::SurfaceModel(
                    S.e, S.r, S.with_x,
                    fer::PointConfig::configured(
                        jc.at("on_ce").get<std::vector<bool>>(),
                        jc.at("fiber").get<std::vector<int>>()));
            }
            fer::DivClass L = fer::parse_class_string(ses_class, S);
            fer::XPosition x = parse_x_position(ses_xpos);
            fer::EnumBounds bounds = parse_bounds(ses_bounds);

            std::string method = ses_method;
            if (method == "auto") {
                bool generic_x = x.kind == fer::XPosition::Kind::Generic;
                if (S.r == 0 && S.config.is_very_general())
                    method = "fe";
                else if (S.r <= S.e - 1)
                    method = "small-r";
                else if ((S.r == S.e || S.r == S.e + 1) && generic_x &&
                         S.config.is_very_general())
                    method = "r-e";
                else if (generic_x && S.config.is_very_general())
                    method = "enumerative";
                else
                    throw fer::UnsupportedRangeError(
                        "no method covers this surface and x position");
            }

            fer::SeshadriResult res;
            if (method == "fe") {
                res = fer::seshadri_fe(L.a, L.b, S.e,
                                       x.kind == fer::XPosition::Kind::OnCe);
            } else if (method == "small-r") {
                fer::SurfaceModel Sc = S;
                if (S.config.is_very_general() && S.r > 0) {
                    // The closed form wants pinned points; use the generic pin.
                    std::vector<int> fib;
                    for (int i = 0; i < S.r; ++i) fib.push_back(i + 1);
                    Sc = fer::SurfaceModel(
                        S.e, S.r, false,
                        fer::PointConfig::configured(std::vector<bool>(S.r, false), fib));
                }
                res = fer::seshadri_small_r(L, Sc, x);
            } else if (method == "r-e") {
                res = fer::seshadri_r_e(L, S);
            } else if (method == "enumerative") {
                res = fer::seshadri_enumerative(L, S, bounds);
            } else {
                throw fer::ArgumentError("unknown --method '" + method + "'");
            }

            if (ses_format == "table") {
                std::ostringstream out;
                out << "epsilon   = " << fer::rational_str(res.value) << "  ("
                    << fer::rational_approx_str(res.value) << ")\n"
                    << "witness   = " << res.witness.str() << "\n"
                    << "mult_x    = " << res.witness_mult << "\n"
                    << "method    = " << fer::seshadri_method_name(res.method) << "\n"
                    << "certified = " << (res.certified ? "yes" : "no") << "\n";
                emit(out.str(), ses_out);
            } else {
                emit(dump(fer::seshadri_to_json(res)), ses_out);
            }
        } else if (cmd_lin->parsed()) {
            std::vector<long long> mults = parse_csv_ll(lin_m);
            fer::LinSysSpec spec(lin_e, lin_a, lin_b, mults);
            std::vector<long long> seeds_ll = parse_csv_ll(lin_seeds);
            if (seeds_ll.empty()) throw fer::ArgumentError("--seeds must be non-empty");
            std::vector<unsigned long long> seeds(seeds_ll.begin(), seeds_ll.end());
            emit(dump(fer::linsys_report_to_json(fer::analyze_linsys(spec, seeds))),
                 lin_out);
        } else if (cmd_scan->parsed()) {
            json jgrid = parse_json_text(read_file(scan_grid_path), scan_grid_path);
            fer::ScanReport rep = fer::conjecture_scan(fer::scan_grid_from_json(jgrid));
            emit(dump(fer::scan_report_to_json(rep)), scan_json);
            if (!scan_csv.empty()) write_file_atomic(scan_csv, fer::scan_report_to_csv(rep));
        } else if (cmd_gold->parsed()) {
            return run_golden(gold_dir, gold_regen, gold_force);
        }
    } catch (const fer::UnsupportedRangeError& e) {
        std::cerr << "error (unsupported range): " << e.what() << "\n";
        return kUnsupportedRange;
    } catch (const fer::BoundsError& e) {
        std::cerr << "error (bounds): " << e.what() << "\n";
        return kBoundsIncomplete;
    } catch (const fer::ArgumentError& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kInputError;
    } catch (const fer::Error& e) {
        std::cerr << "error (internal invariant): " << e.what() << "\n";
        return kInvariantFailure;
    }
    return kOk;
}

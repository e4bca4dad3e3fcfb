#include "gallery/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gallery/harness.hpp"
#include "gallery/polygon_io.hpp"
#include "gallery/svg.hpp"

namespace gallery {

namespace {

constexpr int kOk = 0;
constexpr int kClaimFails = 2;
constexpr int kInputError = 3;
constexpr int kUsageError = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GALLERY_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw SyntaxError("GALLERY_SEED must be an unsigned integer");
        return v;
    }
    return 1729;
}

SimplePolygon load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polygon(buf.str());
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw SyntaxError("cannot write " + path);
    out << content;
}

nlohmann::json coord_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return static_cast<long long>(r.get_num().get_si());
    return rational_to_string(r);
}

nlohmann::json point_json(const Point& p) {
    return nlohmann::json::array({coord_json(p.x), coord_json(p.y)});
}

nlohmann::json placement_json(const GuardPlacement& p) {
    nlohmann::json j;
    j["guards"] = p.guards;
    switch (p.kind) {
        case StrategyKind::EveryThird: {
            j["strategy"] = "every-third";
            j["interpretation"] =
                p.interpretation == Interpretation::Strict ? "strict" : "generous";
            nlohmann::json origins = nlohmann::json::array();
            for (const EveryThirdOrigin& o : p.origins) {
                origins.push_back({{"start", o.start},
                                   {"direction", o.dir == Direction::CW ? "cw" : "ccw"}});
            }
            j["origins"] = origins;
            break;
        }
        case StrategyKind::Fisk:
            j["strategy"] = "fisk";
            j["color"] = p.fisk_color == Color::R ? "R" : (p.fisk_color == Color::G ? "G" : "B");
            break;
        case StrategyKind::Explicit:
            j["strategy"] = "explicit";
            break;
    }
    return j;
}

nlohmann::json report_json(const CoverageReport& rep) {
    nlohmann::json j;
    j["covered"] = rep.covered;
    j["blindspot_area"] = rational_to_string(rep.blindspot_area);
    j["blindspot_cells"] = rep.blindspot_cells.size();
    nlohmann::json wit = nlohmann::json::array();
    for (const Point& w : rep.witnesses) wit.push_back(point_json(w));
    j["witnesses"] = wit;
    return j;
}

std::string guards_text(const std::vector<int>& guards) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < guards.size(); ++i) out << (i ? "," : "") << guards[i];
    out << "}";
    return out.str();
}

Interpretation parse_interp(const std::string& s) {
    return s == "strict" ? Interpretation::Strict : Interpretation::Generous;
}

int run_check_strategy(const SimplePolygon& poly, Interpretation interp, bool machine) {
    std::vector<StrategyVerdict> verdicts = evaluate_strategy(poly, interp);
    bool any_covers = false;
    for (const StrategyVerdict& v : verdicts) any_covers = any_covers || v.report.covered;
    if (machine) {
        nlohmann::json j;
        j["command"] = "check";
        j["interpretation"] = interp == Interpretation::Strict ? "strict" : "generous";
        nlohmann::json arr = nlohmann::json::array();
        for (const StrategyVerdict& v : verdicts) {
            nlohmann::json entry = placement_json(v.placement);
            entry["report"] = report_json(v.report);
            arr.push_back(entry);
        }
        j["placements"] = arr;
        j["some_placement_covers"] = any_covers;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "every-third (" << (interp == Interpretation::Strict ? "strict" : "generous")
                  << "), " << verdicts.size() << " distinct placements:\n";
        for (const StrategyVerdict& v : verdicts) {
            std::cout << "  " << guards_text(v.placement.guards);
            if (v.report.covered)
                std::cout << "  covers\n";
            else
                std::cout << "  fails (blindspot area "
                          << rational_to_string(v.report.blindspot_area) << ", "
                          << v.report.blindspot_cells.size() << " cells)\n";
        }
        std::cout << (any_covers ? "some placement covers the polygon"
                                 : "every placement fails to cover the polygon")
                  << "\n";
    }
    return any_covers ? kOk : kClaimFails;
}

int run_check_guards(const SimplePolygon& poly, const std::vector<int>& guards, bool machine) {
    CoverageReport rep = coverage(poly, guards);
    if (machine) {
        nlohmann::json j;
        j["command"] = "check";
        j["guards"] = guards;
        j["report"] = report_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "guards " << guards_text(guards) << ": "
                  << (rep.covered ? "polygon covered" : "NOT covered") << "\n";
        if (!rep.covered) {
            std::cout << "  blindspot area " << rational_to_string(rep.blindspot_area) << " in "
                      << rep.blindspot_cells.size() << " cells\n";
            for (const Point& w : rep.witnesses)
                std::cout << "  witness (" << rational_to_string(w.x) << ", "
                          << rational_to_string(w.y) << ")\n";
        }
    }
    return rep.covered ? kOk : kClaimFails;
}

int run_verify(const VerifyConfig& cfg, bool machine) {
    VerifyReport report = verify_claims(cfg);
    if (machine) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ClaimCheck& c : report.checks)
            arr.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"details", c.details},
                           {"seconds", c.seconds}});
        nlohmann::json j;
        j["command"] = "verify-paper";
        j["claims"] = arr;
        j["all_pass"] = report.all_pass();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const ClaimCheck& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(30)
                      << c.name << " " << c.details << "  [" << std::fixed
                      << std::setprecision(1) << c.seconds << "s]\n";
        }
        std::cout << (report.all_pass() ? "all claims hold" : "SOME CLAIMS FAILED") << "\n";
    }
    return report.all_pass() ? kOk : kClaimFails;
}

}  // namespace

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args);
}

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"Exact-arithmetic toolkit for polygon guard placement"};
    app.require_subcommand(1);

    const std::vector<std::string> interps{"strict", "generous"};
    std::string polygon_path, interp_str = "generous", out_path, strategy_str, coloring_str;
    std::string format_str = "text";
    std::vector<int> guards;
    bool want_triangulation = false, want_blindspots = false, comb5 = false;
    int max_k = 0, n = 8, trials = 500, grid_res = 200, teeth = 1, canvas = 640;
    std::uint64_t seed_opt = 0;
    bool seed_given = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "Output format: text or machine (JSON)")
            ->check(CLI::IsMember({"text", "machine"}));
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed_opt, "RNG seed (default: GALLERY_SEED or 1729)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    CLI::App* check = app.add_subcommand("check", "Coverage verdicts for a strategy or guard set");
    check->add_option("--polygon", polygon_path, "Polygon file")->required();
    check->add_option("--strategy", strategy_str, "Strategy to evaluate (every-third)")
        ->check(CLI::IsMember({"every-third"}));
    check->add_option("--interp", interp_str, "Interpretation: strict or generous")
        ->check(CLI::IsMember(interps));
    check->add_option("--guards", guards, "Explicit guard vertex indices")->delimiter(',');
    add_format(check);

    CLI::App* fisk = app.add_subcommand("fisk", "Guard placement from the 3-coloring argument");
    fisk->add_option("--polygon", polygon_path, "Polygon file")->required();
    add_format(fisk);

    CLI::App* minguards = app.add_subcommand("min-guards", "Exhaustive minimum vertex guards");
    minguards->add_option("--polygon", polygon_path, "Polygon file")->required();
    minguards->add_option("--max-k", max_k, "Largest subset size to try (default floor(n/3))");
    add_format(minguards);

    CLI::App* tricmd = app.add_subcommand("triangulate", "Ear-clipping triangulation and dual");
    tricmd->add_option("--polygon", polygon_path, "Polygon file")->required();
    add_format(tricmd);

    CLI::App* ears = app.add_subcommand("ears", "Ear test for every vertex");
    ears->add_option("--polygon", polygon_path, "Polygon file")->required();
    add_format(ears);

    CLI::App* search = app.add_subcommand("search", "Random search for a strategy counterexample");
    search->add_option("--n", n, "Vertex count")->required();
    search->add_option("--interp", interp_str, "Interpretation")->check(CLI::IsMember(interps));
    search->add_option("--trials", trials, "Trial budget");
    add_seed(search);
    search->add_option("--out", out_path, "Write the found polygon here");
    add_format(search);

    CLI::App* verify = app.add_subcommand("verify-paper", "Run the built-in claim checklist");
    verify->add_option("--trials", trials, "Polygons per statistical claim (default 500)");
    int two_ears_trials = 1000, agreement_pairs = 100;
    verify->add_option("--two-ears-trials", two_ears_trials, "Trials for the two-ears claim");
    verify->add_option("--agreement-pairs", agreement_pairs, "Pairs for the oracle agreement claim");
    verify->add_option("--grid-res", grid_res, "Grid oracle resolution (default 200)");
    verify->add_flag("--comb5", comb5, "Extend the comb bound check to 5 teeth");
    add_seed(verify);
    add_format(verify);

    CLI::App* render = app.add_subcommand("render", "Render a polygon figure as SVG");
    render->add_option("--polygon", polygon_path, "Polygon file")->required();
    render->add_flag("--triangulation", want_triangulation, "Draw triangulation diagonals");
    render->add_option("--coloring", coloring_str, "Vertex coloring: fisk or cyclic")
        ->check(CLI::IsMember({"fisk", "cyclic"}));
    render->add_option("--guards", guards, "Guard vertex indices")->delimiter(',');
    render->add_flag("--blindspots", want_blindspots, "Shade blindspots (needs --guards)");
    render->add_option("--canvas", canvas, "Canvas size in pixels (default 640)");
    render->add_option("--out,-o", out_path, "Output SVG path (- for stdout)")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate polygon fixtures");
    gen->require_subcommand(1);
    CLI::App* gen_comb = gen->add_subcommand("comb", "Comb with k teeth (3k vertices)");
    gen_comb->add_option("--teeth", teeth, "Number of teeth")->required();
    gen_comb->add_option("--out,-o", out_path, "Output path (- for stdout)");
    CLI::App* gen_random = gen->add_subcommand("random", "Seeded random simple polygon");
    gen_random->add_option("--n", n, "Vertex count")->required();
    add_seed(gen_random);
    gen_random->add_option("--out,-o", out_path, "Output path (- for stdout)");
    CLI::App* gen_nonagon = gen->add_subcommand("nonagon", "The bundled nine-vertex counterexample");
    gen_nonagon->add_option("--out,-o", out_path, "Output path (- for stdout)");
    CLI::App* gen_octagon = gen->add_subcommand("octagon", "The bundled strict-counterexample octagon");
    gen_octagon->add_option("--out,-o", out_path, "Output path (- for stdout)");

    try {
        std::vector<std::string> mutable_args(args.rbegin(), args.rend());
        app.parse(mutable_args);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }

    try {
        std::uint64_t seed = seed_given ? seed_opt : default_seed();
        const bool machine = format_str == "machine";

        if (app.got_subcommand(check)) {
            SimplePolygon poly = load_polygon(polygon_path);
            if (!guards.empty() && strategy_str.empty())
                return run_check_guards(poly, guards, machine);
            if (!strategy_str.empty() && guards.empty())
                return run_check_strategy(poly, parse_interp(interp_str), machine);
            std::cerr << "check needs exactly one of --strategy or --guards\n";
            return kUsageError;
        }

        if (app.got_subcommand(fisk)) {
            SimplePolygon poly = load_polygon(polygon_path);
            GuardPlacement p = fisk_placement(poly);
            CoverageReport rep = coverage(poly, p.guards);
            if (machine) {
                nlohmann::json j;
                j["command"] = "fisk";
                j["placement"] = placement_json(p);
                j["report"] = report_json(rep);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "fisk guards " << guards_text(p.guards) << " (color "
                          << (p.fisk_color == Color::R ? "R" : p.fisk_color == Color::G ? "G" : "B")
                          << "): " << (rep.covered ? "covers" : "DOES NOT COVER") << "\n";
            }
            return rep.covered ? kOk : kClaimFails;
        }

        if (app.got_subcommand(minguards)) {
            SimplePolygon poly = load_polygon(polygon_path);
            int limit = max_k > 0 ? max_k : std::max(1, poly.size() / 3);
            auto r = min_vertex_guards(poly, limit);
            if (machine) {
                nlohmann::json j;
                j["command"] = "min-guards";
                j["max_k"] = limit;
                if (r) {
                    j["k"] = r->first;
                    j["placement"] = placement_json(r->second);
                }
                std::cout << j.dump(2) << "\n";
            } else if (r) {
                std::cout << "minimum vertex guards: " << r->first << ", e.g. "
                          << guards_text(r->second.guards) << "\n";
            } else {
                std::cout << "no subset of size <= " << limit << " covers the polygon\n";
            }
            return r ? kOk : kClaimFails;
        }

        if (app.got_subcommand(tricmd)) {
            SimplePolygon poly = load_polygon(polygon_path);
            Triangulation t = triangulate(poly);
            std::vector<int> tips = dual_leaves(t);
            if (machine) {
                nlohmann::json j;
                j["command"] = "triangulate";
                j["triangles"] = t.triangles;
                j["diagonals"] = t.diagonals;
                j["dual_leaves"] = tips;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << t.triangles.size() << " triangles, " << t.diagonals.size()
                          << " diagonals\n";
                for (const auto& tri : t.triangles)
                    std::cout << "  (" << tri[0] << "," << tri[1] << "," << tri[2] << ")\n";
                std::cout << "dual leaves (ear tips): " << guards_text(tips) << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(ears)) {
            SimplePolygon poly = load_polygon(polygon_path);
            std::vector<int> ear_list;
            for (int i = 0; i < poly.size(); ++i)
                if (is_ear(poly, i)) ear_list.push_back(i);
            if (machine) {
                nlohmann::json j;
                j["command"] = "ears";
                j["ears"] = ear_list;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "ears: " << guards_text(ear_list) << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(search)) {
            SearchResult sr =
                search_counterexample(n, parse_interp(interp_str), trials, RngSeed{seed});
            if (machine) {
                nlohmann::json j;
                j["command"] = "search";
                j["n"] = n;
                j["trials_run"] = sr.trials_run;
                j["found"] = sr.found.has_value();
                if (sr.found) {
                    nlohmann::json verts = nlohmann::json::array();
                    for (const Point& p : sr.found->vertices()) verts.push_back(point_json(p));
                    j["vertices"] = verts;
                }
                std::cout << j.dump(2) << "\n";
            } else if (sr.found) {
                std::cout << "counterexample found at trial " << sr.trials_run << ":\n"
                          << emit_polygon(*sr.found);
            } else {
                std::cout << "no counterexample in " << sr.trials_run << " trials\n";
            }
            if (sr.found && !out_path.empty()) write_output(out_path, emit_polygon(*sr.found));
            return sr.found ? kOk : kClaimFails;
        }

        if (app.got_subcommand(verify)) {
            VerifyConfig cfg;
            cfg.trials = trials;
            cfg.two_ears_trials = two_ears_trials;
            cfg.agreement_pairs = agreement_pairs;
            cfg.grid_resolution = grid_res;
            cfg.seed = seed;
            cfg.include_comb5 = comb5;
            return run_verify(cfg, machine);
        }

        if (app.got_subcommand(render)) {
            SimplePolygon poly = load_polygon(polygon_path);
            RenderSpec spec{poly, std::nullopt, std::nullopt, {}, {}, canvas};
            std::optional<Triangulation> tri;
            if (want_triangulation || coloring_str == "fisk") tri = triangulate(poly);
            if (want_triangulation) spec.triangulation = tri;
            if (coloring_str == "fisk") spec.coloring = fisk_coloring(*tri);
            if (coloring_str == "cyclic") spec.coloring = cyclic_coloring(poly);
            spec.guards = guards;
            if (want_blindspots) {
                if (guards.empty()) {
                    std::cerr << "--blindspots needs --guards\n";
                    return kUsageError;
                }
                spec.blindspots = coverage(poly, guards).blindspot_cells;
            }
            write_output(out_path, render_svg(spec));
            return kOk;
        }

        if (app.got_subcommand(gen)) {
            SimplePolygon poly = [&] {
                if (gen->got_subcommand(gen_comb)) return comb(teeth);
                if (gen->got_subcommand(gen_random)) return random_polygon(n, RngSeed{seed});
                if (gen->got_subcommand(gen_nonagon)) return counterexample_nonagon();
                return counterexample_octagon();
            }();
            write_output(out_path, emit_polygon(poly));
            return kOk;
        }

        std::cerr << "no subcommand\n";
        return kUsageError;
    } catch (const SyntaxError& e) {
        std::cerr << "input error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << "\n";
        return kInputError;
    } catch (const ValidationError& e) {
        std::cerr << "invalid polygon: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const GenerationFailed& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace gallery

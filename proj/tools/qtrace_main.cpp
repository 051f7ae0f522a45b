// Command-line entry point: verification suites, specialization at a point,
// trace evaluation, and surface information, all over exact arithmetic.
//
// Exit codes: 0 all hard checks pass, 1 at least one hard check failed,
// 2 fixture or input error.

#include <qtrace/expr.hpp>
#include <qtrace/io.hpp>
#include <qtrace/report.hpp>
#include <qtrace/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qtrace;

void print_records(const Report& report) {
    for (const CheckRecord& rec : report.checks()) {
        const char* tag = rec.exploratory ? "EXPL" : (rec.passed ? "PASS" : "FAIL");
        std::cout << "[" << tag << "] " << rec.name << " (" << rec.elapsed_ms << " ms)\n";
        if (!rec.passed && !rec.exploratory)
            std::cout << "       statement: " << rec.statement << "\n       witness: "
                      << rec.witness.dump() << "\n";
        if (rec.exploratory) std::cout << "       " << rec.witness.dump() << "\n";
    }
    std::cout << report.hard_total() - report.hard_failures() << "/" << report.hard_total()
              << " hard checks passed\n";
}

void write_report_file(const Report& report, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw FixtureInvalid("cannot write report file: " + path);
    out << report.to_string();
}

int finish(const Report& report, const std::string& report_path) {
    print_records(report);
    write_report_file(report, report_path);
    return report.exit_code();
}

void require_valid_n(unsigned n) {
    if (n < 3 || n % 2 == 0)
        throw FixtureInvalid("N must be an odd integer >= 3, got " + std::to_string(n));
}

std::optional<TorusFixture> load_torus_fixture(const std::string& path) {
    if (path.empty()) return std::nullopt;
    Json j = load_json_file(path);
    TorusFixture fix{skew_form_from_json(j), punctures_from_json(j), "form"};
    // derive a short tag from the file name
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    if (!stem.empty()) fix.tag = stem;
    return fix;
}

int run_verify(const std::string& which, const SuiteConfig& cfg, const std::string& form_path,
               const std::string& report_path) {
    if (which == "all") {
        Report report("all", 3, cfg.seed);
        report.extend(run_acceptance_suite(cfg.seed, cfg.fixture_dir, cfg.exploratory));
        return finish(report, report_path);
    }
    Report report(which, cfg.n, cfg.seed);
    if (which == "bigon") {
        report.extend(run_bigon_suite(cfg));
    } else if (which == "torus") {
        report.extend(run_torus_suite(cfg, load_torus_fixture(form_path)));
    } else {
        report.extend(run_surface_suite(cfg));
    }
    return finish(report, report_path);
}

int run_specialize(const std::string& rho_path, const SuiteConfig& cfg,
                   const std::string& report_path) {
    Json j = load_json_file(rho_path);
    auto root = RootData::make(cfg.n);
    SLPoint rho = sl_point_from_json(j, root);
    if (rho.inside_w() && !cfg.exploratory)
        throw FixtureInvalid(
            "both diagonal entries of the point vanish; the trace theory leaves such points "
            "open - rerun with --exploratory to build the d-side table anyway");
    std::string tag = rho_path;
    if (auto slash = tag.find_last_of("/\\"); slash != std::string::npos)
        tag = tag.substr(slash + 1);
    if (auto dot = tag.find_last_of('.'); dot != std::string::npos) tag = tag.substr(0, dot);
    Report report("specialize", cfg.n, cfg.seed);
    report.add(check_specialization_fixture(rho, expect_nondegenerate_from_json(j), tag, cfg.n,
                                            cfg.seed, cfg.exploratory));
    return finish(report, report_path);
}

int run_trace(const std::string& element, const std::string& over, const SuiteConfig& cfg,
              const std::string& form_path, const std::string& report_path) {
    auto root = RootData::make(cfg.n);
    Json out;
    if (!form_path.empty()) {
        Json j = load_json_file(form_path);
        SkewForm form = skew_form_from_json(j);
        auto alg = TorusAlgebra::make(root, form, punctures_from_json(j));
        TorusElement t = parse_torus_element(alg, element);
        TorusElement tr = over == "frobenius" ? trace_over_frobenius(t)
                                              : trace_over_center(t, central_lattice(*alg));
        out = Json{{"element", element},
                   {"over", over},
                   {"generators", form.names()},
                   {"trace", torus_element_to_json(tr)}};
    } else {
        auto ctx = OqContext::make(root);
        auto torus = dbc_torus(root);
        OqElement x = parse_oq_element(ctx, element);
        TorusElement tr = over == "frobenius" ? trace_over_frobenius_fraction(x, torus)
                                              : trace_over_center_fraction(x, torus);
        out = Json{{"element", element},
                   {"over", over},
                   {"generators", Json::array({"d", "b", "c"})},
                   {"trace", torus_element_to_json(tr)}};
    }
    std::cout << out.dump(2) << "\n";
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw FixtureInvalid("cannot write report file: " + report_path);
        f << out.dump(2) << "\n";
    }
    return 0;
}

int run_surface_info(const std::string& fixture_path, const SuiteConfig& cfg,
                     const std::string& report_path) {
    Json j = load_json_file(fixture_path);
    const bool combined = j.is_object() && j.contains("surface");
    PbSurface s = combined ? surface_from_json(j.at("surface")) : surface_from_json(j);
    Json out{{"genus", s.genus()},
             {"boundary", s.boundary_punctures()},
             {"interior", s.interior_punctures()},
             {"r", s.r_invariant()},
             {"arcs", s.tau_bar_size()},
             {"lambda_circles", s.lambda_circles().size()},
             {"n", cfg.n}};
    ExpectedDims dims = expected_dims(s, cfg.n);
    out["dim_over_subalgebra"] = dims.over_frobenius.get_str();
    out["dim_over_center"] = dims.over_center.get_str();
    if (combined) {
        SurfaceFormFixture fix = surface_form_from_json(j, cfg.n);
        BSpec spec{fix.layout, cfg.n};
        out["form"] = Json{{"rank", fix.form.rank()},
                           {"pattern_subgroup_index", b_generators(spec).index().get_str()},
                           {"central_lattice_index",
                            central_lattice(fix.form, cfg.n).index().get_str()}};
    }
    std::cout << out.dump(2) << "\n";
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw FixtureInvalid("cannot write report file: " + report_path);
        f << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for quantum-torus and SL_2 coordinate-algebra trace maps"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string report_path;
    std::string form_path;
    std::string rho_path;
    std::string element;
    std::string over = "frobenius";
    std::string fixture_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "odd root order N (>= 3)")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->add_option("--report", report_path, "write a JSON report to this path");
        sub->add_flag("--exploratory", cfg.exploratory,
                      "include exploratory checks (reported, never fatal)");
        sub->add_option("--fixture-dir", cfg.fixture_dir, "directory holding fixture files")
            ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    CLI::App* v_bigon = verify->add_subcommand("bigon", "coordinate-algebra checks");
    CLI::App* v_torus =
        verify->add_subcommand("torus", "quantum torus checks (optionally over --form)");
    CLI::App* v_surface = verify->add_subcommand("surface", "surface and pattern-subgroup checks");
    CLI::App* v_all = verify->add_subcommand(
        "all", "the full acceptance suite at its fixed parameters (ignores --n)");
    for (CLI::App* sub : {v_bigon, v_torus, v_surface, v_all}) add_common(sub);
    v_torus->add_option("--form", form_path, "skew form fixture (JSON)");

    CLI::App* specialize_cmd =
        app.add_subcommand("specialize", "specialize the coordinate algebra at a point");
    specialize_cmd->add_option("--rho", rho_path, "SL_2 point fixture (JSON)")->required();
    add_common(specialize_cmd);

    CLI::App* trace_cmd = app.add_subcommand("trace", "evaluate a trace of one element");
    trace_cmd->add_option("--element", element, "element expression")->required();
    trace_cmd->add_option("--over", over, "frobenius | center")
        ->check(CLI::IsMember({"frobenius", "center"}));
    trace_cmd->add_option("--form", form_path,
                          "skew form fixture; torus expression grammar when given");
    add_common(trace_cmd);

    CLI::App* surface_cmd = app.add_subcommand("surface", "surface utilities");
    CLI::App* s_info = surface_cmd->add_subcommand("info", "invariants of a surface fixture");
    s_info->add_option("--fixture", fixture_path, "surface fixture (JSON)")->required();
    add_common(s_info);

    CLI11_PARSE(app, argc, argv);

    try {
        require_valid_n(cfg.n);
        if (verify->parsed()) {
            std::string which = v_bigon->parsed()     ? "bigon"
                                : v_torus->parsed()   ? "torus"
                                : v_surface->parsed() ? "surface"
                                                      : "all";
            return run_verify(which, cfg, form_path, report_path);
        }
        if (specialize_cmd->parsed()) return run_specialize(rho_path, cfg, report_path);
        if (trace_cmd->parsed()) return run_trace(element, over, cfg, form_path, report_path);
        if (surface_cmd->parsed()) return run_surface_info(fixture_path, cfg, report_path);
    } catch (const FixtureInvalid& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 2;
    } catch (const ExprError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

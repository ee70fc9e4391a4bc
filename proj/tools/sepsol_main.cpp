// Command-line front end: list the flux/equation catalogs, sample solutions
// to CSV, run verification sweeps to JSON, and run the counterexample
// demonstrations.
//
// Exit codes: 0 success, 2 configuration error, 3 domain error,
// 4 tolerance failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepsol/sepsol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitTolerance = 4;

struct Options {
    std::string flux = "cubic";
    std::string flux1, flux2;
    std::string equation = "wrong_msa";
    std::string grid_spec;
    std::string out;
    double c = 1.0;
    double tol = -1.0; // <0: pick the default for the derivative source
    bool fd = false;
    std::uint64_t seed = 0;
    double exclude_axes = -1.0;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits round-trip doubles exactly; zeros are normalized so
// -0 never leaks into output.
std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

sepsol::Grid parse_grid(const std::string& spec, double margin) {
    sepsol::Grid grid{-10.0, 10.0, -10.0, 10.0, 201, 201, {}};
    if (!spec.empty()) {
        std::istringstream in(spec);
        std::vector<double> vals;
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                vals.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("bad --grid component: " + item);
            }
        }
        if (vals.size() != 6) {
            throw ConfigError("--grid wants xmin,xmax,ymin,ymax,nx,ny");
        }
        grid = {vals[0], vals[1], vals[2], vals[3], static_cast<int>(vals[4]),
                static_cast<int>(vals[5]), {}};
    }
    if (grid.nx < 2 || grid.ny < 2 || !(grid.x_min < grid.x_max) ||
        !(grid.y_min < grid.y_max)) {
        throw ConfigError("--grid wants xmin<xmax, ymin<ymax and nx,ny >= 2");
    }
    if (margin >= 0.0) grid.exclusion = sepsol::axis_exclusion(margin);
    return grid;
}

const sepsol::FluxPair& require_flux(const std::string& name) {
    const auto* pair = sepsol::find_flux(name);
    if (!pair) throw ConfigError("unknown flux pair: " + name);
    return *pair;
}

sepsol::EntireSolution build_solution(const Options& opt) {
    const auto& p1 = require_flux(opt.flux1.empty() ? opt.flux : opt.flux1);
    const auto& p2 = require_flux(opt.flux2.empty() ? opt.flux : opt.flux2);
    return sepsol::construct(p1, p2, opt.c);
}

sepsol::QuasilinearEquation build_equation(const Options& opt,
                                           const sepsol::EntireSolution& sol) {
    static const auto catalog = sepsol::equation_catalog();
    if (const auto* eq = sepsol::find_equation(catalog, opt.equation)) return *eq;

    const auto f1 = sol.pair1().f;
    const auto f2 = sol.pair2().f;
    if (opt.equation == "theorem_form") {
        sepsol::CoeffFn bound = [f1, f2](const sepsol::DerivativeBundle& b) {
            return std::sqrt(f1(b.ux) * f2(b.uy));
        };
        return sepsol::theorem_form(sol.pair1(), sol.pair2(),
                                    sepsol::random_B_provider(opt.seed, bound));
    }
    if (opt.equation == "corollary_form") {
        sepsol::CoeffFn bound = [f1, f2](const sepsol::DerivativeBundle& b) {
            return 1.0 / std::sqrt(f1(b.ux) * f2(b.uy));
        };
        return sepsol::corollary_form(sol.pair1(), sol.pair2(),
                                      sepsol::random_B_provider(opt.seed, bound));
    }
    if (opt.equation == "example3_dual_B") {
        sepsol::CoeffFn bound = [](const sepsol::DerivativeBundle& b) {
            return std::pow((1.0 + b.uy * b.uy) * (1.0 + b.ux * b.ux), 0.25);
        };
        return sepsol::example3_dual_with_B(sepsol::random_B_provider(opt.seed, bound));
    }
    throw ConfigError("unknown equation: " + opt.equation);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << text;
}

int cmd_list() {
    std::ostringstream out;
    out << "flux pairs:\n";
    for (const auto& pair : sepsol::builtin_catalog()) {
        out << "  " << pair.name << "  range_of_F=(" << fmt17(pair.range_of_F.lo) << ", "
            << fmt17(pair.range_of_F.hi) << ")";
        if (!pair.range_of_F.is_entire_line()) out << " [range-restricted]";
        out << (pair.positivity == sepsol::Positivity::strictly_positive
                    ? "  f > 0"
                    : "  f >= 0 [f-vanishing]");
        if (pair.analytic_inverse) out << "  analytic inverse";
        out << "\n";
    }
    out << "equations:\n";
    for (const auto& eq : sepsol::equation_catalog()) {
        out << "  " << eq.name << "\n";
    }
    out << "  theorem_form        (A=f1(ux), C=f2(uy), seeded random B)\n";
    out << "  corollary_form      (A=1/f2(uy), C=1/f1(ux), seeded random B)\n";
    out << "  example3_dual_B     (sqrt coefficients, seeded random B)\n";
    std::cout << out.str();
    return kExitOk;
}

int cmd_sample(const Options& opt) {
    const auto sol = build_solution(opt);
    const auto grid = parse_grid(opt.grid_spec, opt.exclude_axes);

    std::ostringstream out;
    out << "x,y,u,ux,uy,uxx,uxy,uyy\n";
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.node_y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.node_x(i);
            if (grid.excluded(x, y)) continue;
            const auto b = sol.eval(x, y);
            out << fmt17(b.x) << ',' << fmt17(b.y) << ',' << fmt17(b.u) << ','
                << fmt17(b.ux) << ',' << fmt17(b.uy) << ',' << fmt17(b.uxx) << ','
                << fmt17(b.uxy) << ',' << fmt17(b.uyy) << '\n';
        }
    }
    write_output(opt.out, out.str());
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const auto sol = build_solution(opt);
    const auto eq = build_equation(opt, sol);
    const auto grid = parse_grid(opt.grid_spec, opt.exclude_axes);
    const double tol = opt.tol > 0.0 ? opt.tol : (opt.fd ? 1e-5 : 1e-10);

    const auto report = sepsol::verify_solution(sol, eq, grid, opt.fd);

    sepsol::Grid probe = grid;
    probe.nx = 5;
    probe.ny = 5;
    const bool affine = sepsol::is_affine(sol, probe);

    const bool pass = report.max_abs_residual <= tol && (opt.c == 0.0 || !affine);
    nlohmann::json doc = sepsol::to_json(report);
    doc["affine"] = affine;
    doc["tolerance"] = tol;
    doc["pass"] = pass;
    write_output(opt.out, doc.dump(2) + "\n");
    return pass ? kExitOk : kExitTolerance;
}

int cmd_counterexample(const std::string& name, const Options& opt) {
    nlohmann::json doc;
    if (name == "arctan") {
        const auto sol = sepsol::arctan_solution();
        static const auto catalog = sepsol::equation_catalog();
        const auto& msa = *sepsol::find_equation(catalog, "minimal_surface");
        sepsol::Grid grid{-1.5, 1.5, -1.5, 1.5, 101, 101, {}};
        const auto report = sepsol::verify_solution(sol, msa, grid, false);

        const std::vector<double> params = {0.0, 0.5, 1.0, 1.4, 1.55, 1.5707};
        const auto probe = sepsol::blowup_probe(sol, sepsol::Ray{0.0, 0.0, 1.0, 0.0}, params);
        nlohmann::json blowup = nlohmann::json::array();
        for (const auto& [t, u] : probe) blowup.push_back({{"x", t}, {"u", u}});

        doc = {
            {"name", "arctan"},
            {"domain",
             {{"x_min", sol.domain().x_lo},
              {"x_max", sol.domain().x_hi},
              {"y_min", sol.domain().y_lo},
              {"y_max", sol.domain().y_hi}}},
            {"equation", msa.name},
            {"interior_max_residual", report.max_abs_residual},
            {"blowup", blowup},
        };
    } else if (name == "aronsson") {
        const auto sol = sepsol::aronsson_solution();
        static const auto catalog = sepsol::equation_catalog();
        const auto& eq = *sepsol::find_equation(catalog, "aronsson");
        sepsol::Grid grid{-2.0, 2.0, -2.0, 2.0, 101, 101, sepsol::axis_exclusion(0.1)};
        const auto report = sepsol::verify_solution(sol, eq, grid, false);

        const std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        const double exponent = sepsol::holder_exponent(sol, sepsol::Axis::x, radii);

        doc = {
            {"name", "aronsson"},
            {"off_axis_max_residual", report.max_abs_residual},
            {"holder_exponent", exponent},
            {"min_ellipticity_margin", report.min_ellipticity_margin},
            {"degenerate_ellipticity",
             sepsol::classify_ellipticity(report.min_ellipticity_margin) ==
                 sepsol::Ellipticity::degenerate},
        };
    } else {
        throw ConfigError("unknown counterexample: " + name +
                          " (expected arctan or aronsson)");
    }
    write_output(opt.out, doc.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify separated entire solutions of "
                 "quasilinear second-order PDEs"};
    app.require_subcommand(1);

    Options opt;
    std::string counterexample_name;

    app.add_subcommand("list", "print the flux-pair and equation catalogs");

    auto add_common = [&opt](CLI::App* cmd, bool with_equation) {
        cmd->add_option("--flux", opt.flux, "flux pair for both coordinates");
        cmd->add_option("--flux1", opt.flux1, "flux pair for the x coordinate");
        cmd->add_option("--flux2", opt.flux2, "flux pair for the y coordinate");
        cmd->add_option("--c", opt.c, "separation constant");
        cmd->add_option("--grid", opt.grid_spec, "xmin,xmax,ymin,ymax,nx,ny");
        cmd->add_option("--exclude-axes", opt.exclude_axes,
                        "skip nodes within this margin of either axis");
        cmd->add_option("--out", opt.out, "output file (default: stdout)");
        if (with_equation) {
            cmd->add_option("--equation", opt.equation, "equation name");
            cmd->add_option("--tol", opt.tol, "residual tolerance");
            cmd->add_flag("--fd", opt.fd, "use finite-difference bundles");
            cmd->add_option("--seed", opt.seed, "seed for random B coefficients");
        }
    };

    auto* sample = app.add_subcommand("sample", "evaluate a solution grid to CSV");
    add_common(sample, false);

    auto* verify = app.add_subcommand("verify", "residual sweep to a JSON report");
    add_common(verify, true);

    auto* counter =
        app.add_subcommand("counterexample", "run a counterexample demonstration");
    counter->add_option("name", counterexample_name, "arctan or aronsson")->required();
    counter->add_option("--out", opt.out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("sample")) return cmd_sample(opt);
        if (app.got_subcommand("verify")) return cmd_verify(opt);
        return cmd_counterexample(counterexample_name, opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sepsol::OutOfDomain& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const sepsol::OutOfRange& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const sepsol::SingularPoint& e) {
        std::cerr << "domain error: " << e.what()
                  << " (hint: --exclude-axes <margin>)\n";
        return kExitDomain;
    } catch (const sepsol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

// knotwave: build orthogonal piecewise-polynomial bases and wavelets on
// irregular knot windows, verify their structural invariants, and emit
// samples and coefficient tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knotwave/io.hpp"
#include "knotwave/mra.hpp"
#include "knotwave/poly_family.hpp"

namespace kw = knotwave;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitVerification = 4;

struct JobConfig {
    std::string family;
    int degree = 2;
    double theta = 0.5;
    std::string theta_file;
    std::string knots_arg;
    std::string knots_file;
    std::string knots1_arg;  // explicit fine level for quad wavelet pairs
    double theta1 = 0.5;
    bool theta1_set = false;
    int level = 0;
    int count = 12;
    std::string output = ".";
    std::string format = "csv";
    int sample_points = 201;
    double perturb = 0.0;
};

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::stringstream ts(token);
        double v;
        while (ts >> v) out.push_back(v);
    }
    return out;
}

kw::KnotWindow window_from_config(const JobConfig& cfg) {
    std::vector<double> ks;
    if (!cfg.knots_file.empty()) {
        std::ifstream f(cfg.knots_file);
        if (!f) throw CLI::ValidationError("--knots-file", "cannot read " + cfg.knots_file);
        std::stringstream buf;
        buf << f.rdbuf();
        ks = parse_numbers(buf.str());
    } else if (!cfg.knots_arg.empty()) {
        ks = parse_numbers(cfg.knots_arg);
    } else {
        throw CLI::ValidationError("--knots", "a knot list is required for this family");
    }
    if (ks.size() < 3) throw CLI::ValidationError("--knots", "need at least three knots");
    return kw::make_window(std::move(ks), kw::Role::endpoint, kw::Role::endpoint);
}

kw::ThetaSequence thetas_from_config(const JobConfig& cfg, std::size_t knot_count) {
    if (!cfg.theta_file.empty()) {
        std::ifstream f(cfg.theta_file);
        if (!f) throw CLI::ValidationError("--theta-file", "cannot read " + cfg.theta_file);
        std::stringstream buf;
        buf << f.rdbuf();
        auto vals = parse_numbers(buf.str());
        if (vals.size() != knot_count - 1)
            throw CLI::ValidationError("--theta-file", "need one theta per interval");
        kw::ThetaSequence seq;
        for (std::size_t i = 0; i < vals.size(); ++i) seq.by_index[i] = vals[i];
        return seq;
    }
    return kw::ThetaSequence::constant(cfg.theta, knot_count);
}

void apply_perturbation(kw::CenteredBasis& basis, double eps) {
    if (eps == 0.0) return;
    for (auto& fs : basis.breve)
        if (!fs.empty()) {
            fs[0] = fs[0].scaled(1.0 + eps);
            return;
        }
}

struct BuiltBasis {
    kw::CenteredBasis phi0;
    kw::CenteredBasis phi1;  // next level, regrouped on the coarse window
    std::optional<kw::TauWindow> tau_win;
};

BuiltBasis build_pair(const JobConfig& cfg) {
    BuiltBasis out;
    if (cfg.family == "poly") {
        if (cfg.degree < 1) throw CLI::ValidationError("--degree", "need degree >= 1");
        auto w = window_from_config(cfg);
        out.phi0 = kw::omega_basis(kw::build_family(cfg.degree), w, true);
        out.phi1 = kw::omega_basis(kw::build_family(cfg.degree + 3), w, true);
    } else if (cfg.family == "quad") {
        auto w = window_from_config(cfg);
        auto thetas = thetas_from_config(cfg, w.size());
        for (const auto& [i, th] : thetas.by_index)
            if (!(th > 0.0 && th < 1.0))
                throw CLI::ValidationError("--theta", "theta must lie in (0,1)");
        out.phi0 = kw::omega(w, thetas, true);
        std::vector<double> fine;
        if (!cfg.knots1_arg.empty()) {
            fine = parse_numbers(cfg.knots1_arg);
        } else {
            // default refinement: split every interval at its own breakpoint
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                fine.push_back(w.knots[i]);
                fine.push_back((1.0 - thetas.at(i)) * w.knots[i] +
                               thetas.at(i) * w.knots[i + 1]);
            }
            fine.push_back(w.knots.back());
        }
        auto w1 = kw::make_window(fine, w.left_role, w.right_role);
        double th1 = cfg.theta1_set ? cfg.theta1 : cfg.theta;
        auto thetas1 = kw::ThetaSequence::constant(th1, w1.size());
        if (!kw::nesting_hypothesis(w, thetas, w1, thetas1))
            throw kw::NestingError(
                "refinement incompatibility: every subdivided interval must place its "
                "interior breakpoint on a fine knot, and every untouched interval must "
                "keep the same interior breakpoint at the fine level");
        out.phi1 = kw::recenter(kw::omega(w1, thetas1, true), w);
    } else if (cfg.family == "tau-haar") {
        auto lvl = kw::haar_level(cfg.level, cfg.count);
        out.tau_win = lvl.window;
        out.phi0 = lvl.basis;
        out.phi1 = kw::recenter(kw::haar_basis(kw::refine(lvl.window)), out.phi0.window);
    } else if (cfg.family == "tau-quad") {
        auto lvl = kw::quad_tau_level(cfg.level, cfg.count);
        out.tau_win = lvl.window;
        out.phi0 = lvl.basis;
        out.phi1 = kw::recenter(kw::quad_tau_basis(kw::refine(lvl.window)), out.phi0.window);
    } else {
        throw CLI::ValidationError("--family", "unknown family " + cfg.family);
    }
    return out;
}

void write_basis_outputs(const JobConfig& cfg, const kw::CenteredBasis& basis,
                         const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output);
    auto names = kw::basis_function_names(basis);
    auto fns = basis.all();
    double lo = basis.window.knots.front(), hi = basis.window.knots.back();
    if (cfg.format == "json") {
        kw::Json samples = kw::Json::array();
        for (int i = 0; i < cfg.sample_points; ++i) {
            double x = lo + (hi - lo) * i / (cfg.sample_points - 1);
            kw::Json row;
            row["x"] = x;
            kw::Json vals = kw::Json::array();
            for (const auto& f : fns) vals.push_back(f.eval(x));
            row["values"] = std::move(vals);
            samples.push_back(std::move(row));
        }
        kw::Json doc;
        doc["names"] = names;
        doc["samples"] = std::move(samples);
        kw::write_file((fs::path(cfg.output) / (stem + ".json")).string(),
                       doc.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        kw::write_file((fs::path(cfg.output) / (stem + ".csv")).string(),
                       kw::sample_csv(fns, names, lo, hi, cfg.sample_points));
    } else {
        throw CLI::ValidationError("--format", "expected csv or json");
    }
    kw::Json manifest = kw::basis_manifest(basis);
    manifest["family"] = cfg.family;
    if (cfg.family == "poly") manifest["degree"] = cfg.degree;
    if (cfg.family == "quad") manifest["theta"] = cfg.theta;
    if (cfg.family == "quad" || cfg.family == "tau-quad") manifest["c_root_branch"] = "+";
    if (cfg.family == "tau-haar" || cfg.family == "tau-quad") {
        manifest["level"] = cfg.level;
        manifest["count"] = cfg.count;
    }
    kw::write_file((fs::path(cfg.output) / (stem + "_manifest.json")).string(),
                   manifest.dump(2) + "\n");
}

int cmd_build(const JobConfig& cfg) {
    auto pair = build_pair(cfg);
    write_basis_outputs(cfg, pair.phi0, "basis");
    std::cout << "wrote basis.csv and basis_manifest.json to " << cfg.output << "\n";
    return 0;
}

int cmd_wavelets(const JobConfig& cfg) {
    namespace fs = std::filesystem;
    auto pair = build_pair(cfg);
    auto scaffold = kw::build_scaffold(pair.phi0, pair.phi1);
    auto psi = kw::build_wavelets(scaffold);
    write_basis_outputs(cfg, psi, "wavelets");
    kw::write_file((fs::path(cfg.output) / "dimension_report.json").string(),
                   kw::dimension_report_to_json(scaffold.dims).dump(2) + "\n");
    if (cfg.family == "tau-quad") {
        auto tables = kw::emit_cd_tables(*pair.tau_win);
        kw::write_file((fs::path(cfg.output) / "cd_tables.json").string(),
                       kw::cd_tables_to_json(tables).dump(2) + "\n");
        kw::write_file((fs::path(cfg.output) / "cd_tables.csv").string(),
                       kw::cd_tables_csv(tables));
    }
    std::cout << "wrote wavelets.csv, dimension_report.json to " << cfg.output << "\n";
    return 0;
}

struct Check {
    std::string name;
    double value;
    double tol;
    bool pass;
};

int cmd_verify(const JobConfig& cfg) {
    double tol = kw::verify_tol();
    std::vector<Check> checks;
    auto record = [&](const std::string& name, double value, double bound) {
        checks.push_back({name, value, bound, value < bound});
    };

    auto pair = build_pair(cfg);
    apply_perturbation(pair.phi0, cfg.perturb);

    auto G = kw::gram(pair.phi0.all());
    record("basis gram identity",
           kw::max_abs(G - kw::Matrix::Identity(G.rows(), G.cols())), tol);
    record("centered conditions", kw::verify_centered(pair.phi0).pass ? 0.0 : 1.0, 0.5);
    record("orthogonality criterion", kw::verify_orth_condition(pair.phi0, tol).worst, tol);

    if (cfg.family == "poly") {
        int n = cfg.degree;
        if (n >= 2) {
            auto ph = kw::phi_tilde(n);
            record("norm identity",
                   std::abs(kw::inner_product(ph, ph) / kw::phi_tilde_norm2(n) - 1.0), 1e-12);
            record("ramp pairing identity",
                   std::abs(kw::inner_product(kw::ramp_r(), ph) / kw::r_phi_inner(n) - 1.0),
                   1e-12);
        }
        double a = kw::alpha_coefficient(n);
        double quad = a * a + (2.0 * (n + 1) / (2 * n + 5)) * a +
                      static_cast<double>(n + 2) * (n + 1) * (n * n - 5 * n - 30) /
                          ((2.0 * n + 7) * (2.0 * n + 5) * (2.0 * n + 5) * (2.0 * n + 3));
        record("alpha quadratic residual", std::abs(quad), 1e-12);
    } else if (cfg.family == "quad") {
        auto eq = kw::quad_equation(cfg.theta);
        auto [cp, cm] = kw::c_roots(cfg.theta);
        record("root residual",
               std::abs(eq.c2 * cp * cp + eq.c1 * cp + eq.c0) /
                   std::max(1.0, std::abs(eq.c0)),
               1e-11);
        double d = 4.0 - 15.0 * std::pow((1.0 - cfg.theta) * cfg.theta, 2.0);
        record("discriminant identity",
               std::abs(eq.discriminant() - 80.0 * d * d) / std::abs(80.0 * d * d), 1e-10);
        record("unused root residual",
               std::abs(eq.c2 * cm * cm + eq.c1 * cm + eq.c0) /
                   std::max(1.0, std::abs(eq.c0)),
               1e-11);
    }

    // wavelet stage for every family
    try {
        auto scaffold = kw::build_scaffold(pair.phi0, pair.phi1);
        auto psi = kw::build_wavelets(scaffold);
        auto [lo, hi] = pair.phi0.validated_range();
        kw::FunctionList interior;
        for (std::size_t i = lo; i <= hi && i < psi.knot_count(); ++i) {
            auto fs = psi.knot_functions(i);
            interior.insert(interior.end(), fs.begin(), fs.end());
        }
        auto Gp = kw::gram(interior);
        record("wavelet gram identity",
               kw::max_abs(Gp - kw::Matrix::Identity(Gp.rows(), Gp.cols())), 1e-8);
        record("wavelets orthogonal to scaling functions",
               kw::max_abs(kw::gram(interior, pair.phi0.all())), 1e-8);
        record("dimension identities", scaffold.dims.pass ? 0.0 : 1.0, 0.5);
    } catch (const kw::ConsistencyError& e) {
        checks.push_back({std::string("wavelet construction: ") + e.what(), 1.0, 0.5, false});
    }

    bool all = true;
    kw::Json jchecks = kw::Json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        std::printf("%-45s %s  (%.3e < %.0e)\n", c.name.c_str(), c.pass ? "pass" : "FAIL",
                    c.value, c.tol);
        jchecks.push_back(kw::Json{
            {"name", c.name}, {"value", c.value}, {"tol", c.tol}, {"pass", c.pass}});
    }
    kw::Json report;
    report["family"] = cfg.family;
    report["pass"] = all;
    report["checks"] = std::move(jchecks);
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output);
    kw::write_file((fs::path(cfg.output) / "verify_report.json").string(),
                   report.dump(2) + "\n");
    std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
    return all ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal piecewise-polynomial bases and wavelets on irregular knots"};
    app.require_subcommand(1);

    JobConfig cfg;
    auto add_common = [&](CLI::App* sub, bool wants_theta) {
        sub->add_option("--family", cfg.family, "poly | quad | tau-haar | tau-quad")
            ->required();
        sub->add_option("--degree", cfg.degree, "polynomial reproduction degree (poly)");
        if (wants_theta) {
            sub->add_option("--theta", cfg.theta, "interior breakpoint parameter (quad)");
            sub->add_option("--theta-file", cfg.theta_file, "per-interval theta values");
        }
        sub->add_option("--knots", cfg.knots_arg, "comma separated knot list");
        sub->add_option("--knots-file", cfg.knots_file, "file with knot values");
        sub->add_option("--level", cfg.level, "tau lattice level k");
        sub->add_option("--count", cfg.count, "number of tau lattice knots");
        sub->add_option("--output", cfg.output, "output directory");
        sub->add_option("--format", cfg.format, "csv | json");
        sub->add_option("--sample-points", cfg.sample_points, "CSV sample grid size")
            ->check(CLI::Range(2, 1000000));
    };

    auto* build = app.add_subcommand("build", "construct a basis and emit samples");
    add_common(build, true);
    auto* wavelets = app.add_subcommand("wavelets", "construct wavelets and coefficient tables");
    add_common(wavelets, true);
    wavelets->add_option("--knots1", cfg.knots1_arg, "fine-level knot list (quad pairs)");
    wavelets->add_option("--theta1", cfg.theta1, "fine-level theta (quad pairs)")
        ->each([&](const std::string&) { cfg.theta1_set = true; });
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, true);
    verify->add_option("--perturb", cfg.perturb, "inject a relative error (test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(cfg);
        if (wavelets->parsed()) return cmd_wavelets(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const kw::ConsistencyError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
    return kExitUsage;
}

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] is the path to the CLI binary (needed by the determinism check).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotwave/io.hpp"
#include "knotwave/poly_family.hpp"

namespace kw = knotwave;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    bool pass = true;
    std::string detail;
    double seconds = 0.0;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

kw::FunctionList interior_functions(const kw::CenteredBasis& b) {
    auto [lo, hi] = b.validated_range();
    kw::FunctionList out;
    for (std::size_t i = lo; i <= hi && i < b.knot_count(); ++i) {
        auto fs = b.knot_functions(i);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

// ---------------------------------------------------------------- 1
Criterion closed_form_identities() {
    Criterion c{1};
    auto r = kw::ramp_r();
    auto l = kw::ramp_l();
    for (int n = 2; n <= 8; ++n) {
        auto ph = kw::phi_tilde(n);
        c.require(rel_err(kw::inner_product(ph, ph), kw::phi_tilde_norm2(n)) < 1e-12,
                  "norm identity n=" + std::to_string(n));
        c.require(rel_err(kw::inner_product(r, ph), kw::r_phi_inner(n)) < 1e-12,
                  "right ramp pairing n=" + std::to_string(n));
        double want_l = (n % 2 == 0 ? 1.0 : -1.0) * kw::r_phi_inner(n);
        c.require(rel_err(kw::inner_product(l, ph), want_l) < 1e-12,
                  "left ramp pairing n=" + std::to_string(n));

        kw::PiecewisePoly rn = r, ln = l;
        for (int i = 2; i <= n; ++i) {
            auto phi = kw::phi_tilde(i);
            rn = kw::subtract(rn, phi.scaled(kw::inner_product(r, phi) / kw::phi_tilde_norm2(i)));
            ln = kw::subtract(ln, phi.scaled(kw::inner_product(l, phi) / kw::phi_tilde_norm2(i)));
        }
        c.require(rel_err(kw::inner_product(rn, ln), kw::rn_ln_inner(n)) < 1e-12,
                  "ramp product identity n=" + std::to_string(n));

        double a = kw::alpha_coefficient(n);
        double quad = a * a + (2.0 * (n + 1) / (2 * n + 5)) * a +
                      static_cast<double>(n + 2) * (n + 1) * (n * n - 5 * n - 30) /
                          ((2.0 * n + 7) * (2.0 * n + 5) * (2.0 * n + 5) * (2.0 * n + 3));
        c.require(std::abs(quad) < 1e-12, "alpha quadratic n=" + std::to_string(n));

        auto fam = kw::build_family(n);
        auto z = fam.z;
        double decouple = kw::inner_product(rn, ln) -
                          kw::inner_product(rn, z) * kw::inner_product(ln, z) /
                              kw::inner_product(z, z);
        c.require(std::abs(decouple) < 1e-12, "decoupling residual n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- 2
Criterion quadratic_family() {
    Criterion c{2};
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> dist(0.02, 0.98);
    for (int rep = 0; rep < 50; ++rep) {
        double theta = dist(rng);
        auto eq = kw::quad_equation(theta);
        auto [cp, cm] = kw::c_roots(theta);
        c.require(std::abs(eq.c2 * cp * cp + eq.c1 * cp + eq.c0) < 1e-11, "root residual");
        double d = 4.0 - 15.0 * (1.0 - theta) * (1.0 - theta) * theta * theta;
        c.require(rel_err(eq.discriminant(), 80.0 * d * d) < 1e-10, "discriminant identity");
        auto loc = kw::quad_local(theta);
        kw::FunctionList sys{loc.r_theta, loc.l_theta, loc.q, loc.z};
        kw::Matrix G = kw::gram(sys);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < i; ++j)
                c.require(std::abs(G(i, j)) < 1e-10, "local system off-diagonal");
    }
    auto [cp, cm] = kw::c_roots(0.5);
    c.require(std::abs(cp - std::sqrt(5.0) / 8.0) < 1e-12, "theta=1/2 plus root");
    c.require(std::abs(cm + std::sqrt(5.0) / 8.0) < 1e-12, "theta=1/2 minus root");
    return c;
}

// ---------------------------------------------------------------- 3
Criterion centered_contracts() {
    Criterion c{3};
    auto w = kw::make_window({0.0, 1.0, 2.5, 3.0, 4.2, 5.0}, kw::Role::endpoint,
                             kw::Role::endpoint);
    for (int n = 2; n <= 6; ++n) {
        auto basis = kw::omega_basis(kw::build_family(n), w, true);
        c.require(kw::verify_centered(basis).pass, "poly centered n=" + std::to_string(n));
        c.require(kw::verify_orth_condition(basis).pass,
                  "poly orthogonality criterion n=" + std::to_string(n));
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> gap(0.3, 1.7);
    std::uniform_real_distribution<double> th(0.15, 0.85);
    for (int rep = 0; rep < 4; ++rep) {
        std::vector<double> ks{0.0};
        for (int i = 0; i < 5; ++i) ks.push_back(ks.back() + gap(rng));
        auto wq = kw::make_window(ks, kw::Role::endpoint, kw::Role::endpoint);
        kw::ThetaSequence ts;
        for (std::size_t i = 0; i + 1 < wq.size(); ++i) ts.by_index[i] = th(rng);
        auto basis = kw::omega(wq, ts, true);
        c.require(kw::verify_centered(basis).pass, "quad centered");
        c.require(kw::verify_orth_condition(basis).pass, "quad orthogonality criterion");
    }
    for (int k = 0; k <= 2; ++k) {
        auto lvl = kw::quad_tau_level(k, 12);
        c.require(kw::verify_centered(lvl.basis).pass, "tau centered k=" + std::to_string(k));
        c.require(kw::verify_orth_condition(lvl.basis).pass,
                  "tau orthogonality criterion k=" + std::to_string(k));
    }
    // engineered counterexamples
    auto bad = kw::omega(w, kw::ThetaSequence::constant(0.5, w.size()), true);
    bad.breve[1].push_back(bad.bar[1][0]);
    c.require(!kw::verify_centered(bad).pass, "duplication counterexample not caught");
    auto hats = kw::spline_basis(2, kw::make_window({0.0, 1.0, 2.5, 3.0}, kw::Role::endpoint,
                                                    kw::Role::endpoint));
    c.require(kw::verify_centered(hats).pass, "hat basis is centered");
    c.require(!kw::verify_orth_condition(hats).pass, "hat counterexample not caught");
    return c;
}

// ---------------------------------------------------------------- 4
struct Pair {
    std::string name;
    kw::CenteredBasis phi0, phi1;
};

std::vector<Pair> nested_pairs() {
    std::vector<Pair> pairs;
    auto w = kw::make_window({0.0, 1.0, 2.5, 3.0, 4.2, 5.0, 6.5}, kw::Role::endpoint,
                             kw::Role::endpoint);
    for (int n : {2, 3}) {
        Pair p;
        p.name = "poly n=" + std::to_string(n);
        p.phi0 = kw::omega_basis(kw::build_family(n), w, true);
        p.phi1 = kw::omega_basis(kw::build_family(n + 3), w, true);
        pairs.push_back(std::move(p));
    }
    {
        std::vector<double> coarse{0.0, 1.0, 2.0, 3.3, 4.0, 5.5};
        std::vector<double> fine;
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
            fine.push_back(coarse[i]);
            fine.push_back(0.5 * (coarse[i] + coarse[i + 1]));
        }
        fine.push_back(coarse.back());
        auto w0 = kw::make_window(coarse, kw::Role::endpoint, kw::Role::endpoint);
        auto w1 = kw::make_window(fine, kw::Role::endpoint, kw::Role::endpoint);
        auto t0 = kw::ThetaSequence::constant(0.5, w0.size());
        auto t1 = kw::ThetaSequence::constant(0.5, w1.size());
        if (!kw::nesting_hypothesis(w0, t0, w1, t1))
            throw std::runtime_error("midpoint refinement should be compatible");
        Pair p;
        p.name = "quad midpoint";
        p.phi0 = kw::omega(w0, t0, true);
        p.phi1 = kw::recenter(kw::omega(w1, t1, true), w0);
        pairs.push_back(std::move(p));
    }
    {
        auto lvl = kw::haar_level(0, 12);
        Pair p;
        p.name = "tau-haar";
        p.phi0 = lvl.basis;
        p.phi1 = kw::recenter(kw::haar_basis(kw::refine(lvl.window)), lvl.basis.window);
        pairs.push_back(std::move(p));
    }
    {
        auto lvl = kw::quad_tau_level(0, 13);
        Pair p;
        p.name = "tau-quad";
        p.phi0 = lvl.basis;
        p.phi1 = kw::recenter(kw::quad_tau_basis(kw::refine(lvl.window)), lvl.basis.window);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

Criterion wavelet_theorem() {
    Criterion c{4};
    for (auto& p : nested_pairs()) {
        kw::WaveletScaffold sc;
        try {
            sc = kw::build_scaffold(p.phi0, p.phi1);
        } catch (const std::exception& e) {
            c.require(false, p.name + ": " + e.what());
            continue;
        }
        c.require(sc.dims.pass, p.name + ": dimension identities");
        auto psi = kw::build_wavelets(sc);
        auto interior = interior_functions(psi);
        kw::Matrix G = kw::gram(interior);
        c.require(kw::max_abs(G - kw::Matrix::Identity(G.rows(), G.cols())) < 1e-8,
                  p.name + ": wavelet gram");
        c.require(kw::max_abs(kw::gram(interior, p.phi0.all())) < 1e-8,
                  p.name + ": wavelets vs coarse");
        kw::FunctionList joint = p.phi0.all();
        auto ps = psi.all();
        joint.insert(joint.end(), ps.begin(), ps.end());
        auto onb = kw::orthonormalize(joint);
        c.require(kw::worst_reconstruction(interior_functions(p.phi1), onb) < 1e-8,
                  p.name + ": fine reconstruction");
    }
    return c;
}

// ---------------------------------------------------------------- 5
Criterion matrix_calculus() {
    Criterion c{5};
    for (auto& p : nested_pairs()) {
        auto sc = kw::build_scaffold(p.phi0, p.phi1);
        auto psi = kw::build_wavelets(sc);
        auto [lo, hi] = p.phi0.validated_range();
        std::size_t m = p.phi0.knot_count();
        for (std::size_t ia = 0; ia + 2 < m; ++ia) {
            for (std::size_t ib = ia + 2; ib < m && ib - ia <= 7; ++ib) {
                kw::Matrix M = kw::assemble_M(p.phi0, p.phi1, psi, ia, ib);
                c.require(M.rows() == M.cols(), p.name + ": M not square");
                c.require(kw::max_abs(M * M.transpose() -
                                      kw::Matrix::Identity(M.rows(), M.rows())) < 1e-8,
                          p.name + ": M orthogonality");
            }
        }
        for (std::size_t a = std::max<std::size_t>(lo, 1); a <= hi && a + 1 < m; ++a) {
            // block sparsity of the displayed pattern
            for (const auto& blk : kw::c_blocks(p.phi0, p.phi1, a)) {
                bool should_vanish =
                    (blk.to_knot + 1 == a &&
                     !(blk.row_flavor == kw::Flavor::bar &&
                       blk.col_flavor == kw::Flavor::breve)) ||
                    (blk.to_knot == a && blk.row_flavor == kw::Flavor::breve &&
                     blk.col_flavor == kw::Flavor::bar);
                if (should_vanish)
                    c.require(kw::max_abs(blk.values) < 1e-10, p.name + ": c block sparsity");
            }
            auto psi_blocks = kw::d_blocks(psi, p.phi1, a);
            for (const auto& blk : psi_blocks) {
                bool should_vanish =
                    (blk.to_knot + 1 == a &&
                     !(blk.row_flavor == kw::Flavor::bar &&
                       blk.col_flavor == kw::Flavor::breve)) ||
                    (blk.to_knot == a && blk.row_flavor == kw::Flavor::breve &&
                     blk.col_flavor == kw::Flavor::bar);
                if (should_vanish)
                    c.require(kw::max_abs(blk.values) < 1e-10, p.name + ": d block sparsity");
            }
            // ghat/gtilde spans against the scaffold spaces
            if (!p.phi0.bar[a].empty() && !p.phi1.bar[a].empty()) {
                auto gg = kw::ghat_gtilde(p.phi0, p.phi1, a);
                auto hat_fns = kw::orthonormalize(kw::rows_to_functions(gg.ghat, p.phi1, a));
                c.require(kw::worst_reconstruction(hat_fns, sc.spaces[a].w_hat) < 1e-8 &&
                              kw::worst_reconstruction(sc.spaces[a].w_hat, hat_fns) < 1e-8,
                          p.name + ": ghat span");
                auto tilde_fns =
                    kw::orthonormalize(kw::rows_to_functions(gg.gtilde, p.phi1, a));
                c.require(kw::worst_reconstruction(tilde_fns, sc.spaces[a].w_tilde) < 1e-8 &&
                              kw::worst_reconstruction(sc.spaces[a].w_tilde, tilde_fns) < 1e-8,
                          p.name + ": gtilde span");
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------- 6
Criterion closed_form_wavelets() {
    Criterion c{6};
    auto w = kw::make_window({0.0, 1.0, 2.5, 3.0, 4.2, 5.0}, kw::Role::endpoint,
                             kw::Role::endpoint);
    auto phi0 = kw::omega_basis(kw::build_family(2), w, true);
    auto phi1 = kw::omega_basis(kw::build_family(5), w, true);
    auto sc = kw::build_scaffold(phi0, phi1);
    auto generic = kw::build_wavelets(sc);
    auto closed = kw::poly_wavelets(2, w);
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        auto gap_bar = std::max(kw::worst_reconstruction(closed.bar[i], generic.bar[i]),
                                kw::worst_reconstruction(generic.bar[i], closed.bar[i]));
        c.require(gap_bar < 1e-8, "straddling wavelet span at knot " + std::to_string(i));
        if (i + 2 < w.size()) {
            auto gap_breve =
                std::max(kw::worst_reconstruction(closed.breve[i], generic.breve[i]),
                         kw::worst_reconstruction(generic.breve[i], closed.breve[i]));
            c.require(gap_breve < 1e-8,
                      "single-interval wavelet span at knot " + std::to_string(i));
        }
        // the sign stated in the closed form is the one orthogonal to the
        // coarse space
        for (const auto& f : closed.bar[i])
            c.require(kw::max_abs(kw::gram({f}, phi0.all())) < 1e-9,
                      "closed-form wavelet not orthogonal to coarse space");
    }
    return c;
}

// ---------------------------------------------------------------- 7
Criterion tau_lattice() {
    Criterion c{7};
    auto zs = kw::tau_integers(6);
    kw::TauNumber tau{0, 1}, tau2{1, 1}, tau3{1, 2};
    c.require(zs[0] == kw::TauNumber{0, 0} && zs[1] == kw::TauNumber{1, 0} && zs[2] == tau &&
                  zs[3] == tau2 && zs[4] == tau2 + kw::TauNumber{1, 0} && zs[5] == tau3,
              "first six lattice points");
    c.require(kw::fibonacci_word(21) == "LSLLSLSLLSLLSLSLLSLSL", "gap word");

    auto w = kw::tau_window(0, 10);
    for (int k = 0; k < 4; ++k) {
        auto fine = kw::refine(w);
        for (const auto& u : w.scaled) {
            bool found = false;
            for (const auto& v : fine.scaled) found |= (v == kw::TauNumber{0, 1} * u);
            c.require(found, "refinement containment level " + std::to_string(k));
        }
        w = fine;
    }

    // Haar wavelets match the closed form at every long knot
    auto lvl = kw::haar_level(0, 12);
    auto hphi1 = kw::recenter(kw::haar_basis(kw::refine(lvl.window)), lvl.basis.window);
    auto hsc = kw::build_scaffold(lvl.basis, hphi1);
    auto hpsi = kw::build_wavelets(hsc);
    auto closed = kw::haar_wavelets(lvl.window);
    auto [hlo, hhi] = lvl.basis.validated_range();
    for (std::size_t i = hlo; i <= hhi; ++i) {
        if (closed.breve[i].empty()) {
            c.require(hpsi.breve[i].empty(), "haar wavelet at a short interval");
            continue;
        }
        double dev = std::min(kw::norm(kw::subtract(hpsi.breve[i][0], closed.breve[i][0])),
                              kw::norm(kw::add(hpsi.breve[i][0], closed.breve[i][0])));
        c.require(dev < 1e-12, "haar wavelet closed form deviation");
    }

    // quadratic tau wavelet dimensions
    auto qlvl = kw::quad_tau_level(0, 13);
    auto qphi1 = kw::recenter(kw::quad_tau_basis(kw::refine(qlvl.window)), qlvl.basis.window);
    auto qsc = kw::build_scaffold(qlvl.basis, qphi1);
    auto [qlo, qhi] = qlvl.basis.validated_range();
    for (std::size_t i = std::max<std::size_t>(qlo, 1); i <= qhi; ++i) {
        auto cls = kw::classify(qlvl.window.scaled[i]);
        int bar_expect = cls == kw::GapClass::LL ? 2 : 1;
        int breve_expect = cls == kw::GapClass::LS ? 0 : 1;
        c.require(qsc.dims.rows[i].dim_w_bar() == bar_expect, "tau-quad straddling dims");
        c.require(qsc.dims.rows[i].dim_w_breve == breve_expect, "tau-quad interval dims");
    }
    c.require(qsc.dims.rows[0].dim_w_breve == 2, "tau-quad boundary dim");

    // translation covariance of scaling functions and wavelets
    auto psi = kw::quad_tau_wavelets(qlvl.window);
    const auto& ks = qlvl.basis.window.knots;
    for (std::size_t i = 1; i + 1 < qlvl.basis.knot_count(); ++i) {
        auto cls = kw::classify(qlvl.window.scaled[i]);
        std::size_t p = cls == kw::GapClass::LS ? 1 : (cls == kw::GapClass::SL ? 2 : 3);
        if (p == i) continue;
        double shift = ks[i] - ks[p];
        auto fs = qlvl.basis.knot_functions(i);
        auto protos = qlvl.basis.knot_functions(p);
        for (std::size_t k = 0; k < fs.size(); ++k)
            c.require(kw::norm(kw::subtract(fs[k], protos[k].translated(shift))) < 1e-10,
                      "scaling translation covariance");
        auto wf = psi.knot_functions(i);
        auto wp = psi.knot_functions(p);
        if (wf.size() == wp.size())
            for (std::size_t k = 0; k < wf.size(); ++k)
                c.require(kw::norm(kw::subtract(wf[k], wp[k].translated(shift))) < 1e-10,
                          "wavelet translation covariance");
    }

    // scale covariance between levels 0 and 1
    auto w0 = kw::tau_window(0, 12);
    auto b0 = kw::quad_tau_basis(w0);
    auto w1 = kw::refine(w0);
    auto b1 = kw::quad_tau_basis(w1);
    double rt = std::sqrt(kw::tau_value());
    for (std::size_t i = 0; i + 1 < w0.size(); ++i) {
        std::size_t j = w1.size();
        for (std::size_t k = 0; k < w1.size(); ++k)
            if (w1.scaled[k] == w0.scaled[i]) j = k;
        if (j + 1 >= w1.size()) continue;
        auto fine = b1.knot_functions(j);
        auto coarse = b0.knot_functions(i);
        for (std::size_t k = 0; k < fine.size(); ++k)
            c.require(kw::norm(kw::subtract(
                          fine[k], coarse[k].dilated(kw::tau_value()).scaled(rt))) < 1e-10,
                      "scale covariance");
    }

    // C/D tables: the stacked per-knot rows are orthonormal
    auto tables = kw::emit_cd_tables(qlvl.window);
    kw::TauNumber reps[3] = {{1, 0}, {0, 1}, {1, 1}};
    for (const auto& a : reps) {
        std::vector<const kw::CDBlock*> cs, ds;
        for (const auto& b : tables.blocks)
            if (b.coarse == a) (b.kind == 'C' ? cs : ds).push_back(&b);
        Eigen::Index width = 0;
        for (auto* b : cs) width += b->values.cols();
        Eigen::Index crows = cs.front()->values.rows();
        Eigen::Index drows = ds.front()->values.rows();
        kw::Matrix stacked(crows + drows, width);
        Eigen::Index col = 0;
        for (auto* b : cs) {
            stacked.block(0, col, crows, b->values.cols()) = b->values;
            col += b->values.cols();
        }
        col = 0;
        for (auto* b : ds) {
            stacked.block(crows, col, drows, b->values.cols()) = b->values;
            col += b->values.cols();
        }
        kw::Matrix GG = stacked * stacked.transpose();
        c.require(kw::max_abs(GG - kw::Matrix::Identity(GG.rows(), GG.cols())) < 1e-8,
                  "C/D table orthonormal rows");
    }
    return c;
}

// ---------------------------------------------------------------- 8
std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Criterion determinism(const std::string& cli) {
    Criterion c{8};
    if (cli.empty()) {
        c.require(false, "CLI path not provided");
        return c;
    }
    fs::path base = fs::temp_directory_path() / "knotwave_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    auto run = [&](const std::string& args, const fs::path& out) {
        std::string cmd = cli + " " + args + " --output " + out.string() + " > " +
                          (out.string() + ".log") + " 2>&1";
        return std::system(cmd.c_str());
    };
    for (const std::string& args :
         {std::string("verify --family tau-quad --level 0 --count 12"),
          std::string("wavelets --family tau-quad --level 0 --count 12"),
          std::string("verify --family poly --degree 3 --knots 0,1,2.5,3,4.2"),
          std::string("wavelets --family tau-haar --level 0 --count 12")}) {
        fs::path a = base / "a", b = base / "b";
        fs::create_directories(a);
        fs::create_directories(b);
        int ra = run(args, a);
        int rb = run(args, b);
        c.require(ra == 0 && rb == 0, "CLI run failed: " + args);
        for (const auto& entry : fs::directory_iterator(a)) {
            auto other = b / entry.path().filename();
            c.require(fs::exists(other), "missing output " + entry.path().filename().string());
            if (fs::exists(other))
                c.require(slurp(entry.path()) == slurp(other),
                          "outputs differ for " + entry.path().filename().string());
        }
        fs::remove_all(a);
        fs::remove_all(b);
    }
    fs::remove_all(base);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<Criterion (*)()> plain{closed_form_identities, quadratic_family,
                                       centered_contracts,     wavelet_theorem,
                                       matrix_calculus,        closed_form_wavelets,
                                       tau_lattice};
    std::vector<double> limits{5.0, 10.0, 20.0, 60.0, 120.0, 60.0, 120.0};
    bool all = true;
    int idx = 0;
    for (auto* fn : plain) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c = fn();
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.seconds > limits[static_cast<std::size_t>(idx)]) {
            c.pass = false;
            c.detail = "runtime limit exceeded";
        }
        std::printf("criterion %d: %s (%.2fs)%s%s\n", c.number, c.pass ? "PASS" : "FAIL",
                    c.seconds, c.pass ? "" : " - ", c.detail.c_str());
        all = all && c.pass;
        ++idx;
    }
    auto t0 = std::chrono::steady_clock::now();
    Criterion c8 = determinism(cli);
    c8.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion 8: %s (%.2fs)%s%s\n", c8.pass ? "PASS" : "FAIL", c8.seconds,
                c8.pass ? "" : " - ", c8.detail.c_str());
    all = all && c8.pass;
    return all ? 0 : 1;
}

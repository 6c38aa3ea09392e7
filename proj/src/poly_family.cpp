#include "knotwave/poly_family.hpp"

#include <cmath>
#include <stdexcept>

namespace knotwave {

PiecewisePoly ramp_r() { return PiecewisePoly::on_unit(Polynomial{{0.0, 1.0}}); }
PiecewisePoly ramp_l() { return PiecewisePoly::on_unit(Polynomial{{1.0, -1.0}}); }
PiecewisePoly bump_q() { return PiecewisePoly::on_unit(Polynomial{{0.0, 4.0, -4.0}}); }

Polynomial ultraspherical_monic(int i) {
    if (i < 0) throw std::invalid_argument("ultraspherical_monic: need i >= 0");
    Polynomial pm1;  // p_{-1} = 0
    Polynomial p = Polynomial::constant(1.0);
    Polynomial x = Polynomial{{0.0, 1.0}};
    for (int k = 0; k < i; ++k) {
        double b = k == 0 ? 0.0
                          : static_cast<double>(k) * (k + 4) /
                                (static_cast<double>(2 * k + 5) * (2 * k + 3));
        Polynomial next = x * p - pm1.scaled(b);
        pm1 = p;
        p = next;
    }
    return p;
}

PiecewisePoly phi_tilde(int i) {
    if (i < 2) throw std::invalid_argument("phi_tilde: need i >= 2");
    // Built on a subdivided grid, running the recurrence directly in each
    // piece's local coordinate. A single monomial piece on [0,1] carries
    // coefficients ~2^i against function values ~||phi~^i||, which destroys
    // the small pairing integrals past degree ~8; local pieces keep the
    // coefficients at function scale.
    int pieces = i <= 3 ? 1 : (i <= 6 ? 4 : 8);
    double h = 1.0 / pieces;
    std::vector<double> breaks;
    for (int k = 0; k <= pieces; ++k) breaks.push_back(h * k);
    std::vector<Polynomial> local;
    for (int k = 0; k < pieces; ++k) {
        double u = h * k;
        Polynomial w{{2.0 * u - 1.0, 2.0 * h}};  // 2x-1 at x = u + h t
        Polynomial pm1;
        Polynomial p = Polynomial::constant(1.0);
        for (int j = 0; j < i - 2; ++j) {
            double b = j == 0 ? 0.0
                              : static_cast<double>(j) * (j + 4) /
                                    (static_cast<double>(2 * j + 5) * (2 * j + 3));
            Polynomial next = w * p - pm1.scaled(b);
            pm1 = p;
            p = next;
        }
        Polynomial weight{{u * (1.0 - u), h * (1.0 - 2.0 * u), -h * h}};  // x(1-x) locally
        local.push_back(weight * p);
    }
    return PiecewisePoly{std::move(breaks), std::move(local)};
}

namespace {

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace

double phi_tilde_norm2(int n) {
    return factorial(n - 2) * factorial(n + 2) /
           (16.0 * double_factorial(2 * n - 1) * double_factorial(2 * n + 1));
}

double r_phi_inner(int n) { return factorial(n - 2) / (4.0 * double_factorial(2 * n - 1)); }

double rn_ln_inner(int n) {
    double v = 1.0 / (static_cast<double>(n) * (n + 1) * (n + 2));
    return (n % 2 == 0) ? -v : v;
}

double alpha_coefficient(int n) {
    double nn = n;
    return -(nn + 1) / (2 * nn + 5) +
           (nn + 3) / (2 * nn + 5) *
               std::sqrt(3.0 * (nn + 1) * (nn + 3) / ((2 * nn + 7) * (2 * nn + 3)));
}

PolyFamily build_family(int n) {
    if (n < 1) throw std::invalid_argument("build_family: need n >= 1");
    PolyFamily fam;
    fam.n = n;
    for (int i = 2; i <= n; ++i) fam.phi_tilde.push_back(phi_tilde(i));
    fam.alpha = alpha_coefficient(n);
    fam.z = add(phi_tilde(n + 1).scaled(fam.alpha), phi_tilde(n + 3));

    auto drop_phi = [&](const PiecewisePoly& f) {
        PiecewisePoly out = f;
        for (int i = 2; i <= n; ++i) {
            auto ph = phi_tilde(i);
            out = subtract(out, ph.scaled(inner_product(f, ph) / phi_tilde_norm2(i)));
        }
        return out;
    };
    PiecewisePoly r_mid = drop_phi(ramp_r());  // r_n
    PiecewisePoly l_mid = drop_phi(ramp_l());  // l_n
    double z2 = inner_product(fam.z, fam.z);
    fam.r_proj = subtract(r_mid, fam.z.scaled(inner_product(r_mid, fam.z) / z2));
    fam.l_proj = subtract(l_mid, fam.z.scaled(inner_product(l_mid, fam.z) / z2));
    fam.r_proj.normalize();
    fam.l_proj.normalize();

    // alpha was chosen exactly so the projected ramps decouple
    if (std::abs(inner_product(fam.r_proj, fam.l_proj)) > 1e-10)
        throw ConsistencyError("build_family: projected ramps are not orthogonal");
    if (std::abs(inner_product(r_mid, l_mid) - rn_ln_inner(n)) > 1e-10)
        throw ConsistencyError("build_family: ramp pairing does not match the closed form");
    return fam;
}

CenteredBasis omega_basis(const PolyFamily& fam, const KnotWindow& w, bool normalized) {
    const auto& ks = w.knots;
    std::size_t m = ks.size();
    CenteredBasis basis;
    basis.window = w;
    basis.breve.assign(m, {});
    basis.bar.assign(m, {});
    for (std::size_t i = 0; i + 1 < m; ++i) {
        FunctionList fs;
        if (i == 0 && w.left_role == Role::endpoint)
            fs.push_back(compose_affine(fam.l_proj, ks[i], ks[i + 1]));
        if (i + 2 == m && w.right_role == Role::endpoint)
            fs.push_back(compose_affine(fam.r_proj, ks[i], ks[i + 1]));
        fs.push_back(compose_affine(fam.z, ks[i], ks[i + 1]));
        for (const auto& ph : fam.phi_tilde) fs.push_back(compose_affine(ph, ks[i], ks[i + 1]));
        basis.breve[i] = std::move(fs);
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        basis.bar[i] = {add(compose_affine(fam.r_proj, ks[i - 1], ks[i]),
                            compose_affine(fam.l_proj, ks[i], ks[i + 1]))};
    }
    return normalized ? normalized_copy(basis) : basis;
}

CenteredBasis poly_wavelets(int n, const KnotWindow& w) {
    PolyFamily coarse = build_family(n);
    PolyFamily fine = build_family(n + 3);
    const auto& ks = w.knots;
    std::size_t m = ks.size();

    double gamma = inner_product(fine.r_proj, fine.r_proj) /
                   inner_product(coarse.r_proj, coarse.r_proj);
    PiecewisePoly hat_right = subtract(fine.r_proj, coarse.r_proj.scaled(gamma));
    PiecewisePoly hat_left = subtract(fine.l_proj, coarse.l_proj.scaled(gamma));
    PiecewisePoly diff_r = subtract(coarse.r_proj, fine.r_proj);
    PiecewisePoly diff_l = subtract(coarse.l_proj, fine.l_proj);

    PiecewisePoly phi_mid = phi_tilde(n + 2);
    PiecewisePoly z_fine = fine.z;
    PiecewisePoly r = ramp_r();
    PiecewisePoly breve_proto = subtract(phi_mid.scaled(inner_product(z_fine, r)),
                                         z_fine.scaled(inner_product(phi_mid, r)));

    CenteredBasis psi;
    psi.window = w;
    psi.breve.assign(m, {});
    psi.bar.assign(m, {});
    psi.normalized = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        auto f = compose_affine(breve_proto, ks[i], ks[i + 1]);
        f = f.scaled(1.0 / norm(f));
        fix_sign(f);
        psi.breve[i] = {std::move(f)};
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        auto what = add(compose_affine(hat_right, ks[i - 1], ks[i]),
                        compose_affine(hat_left, ks[i], ks[i + 1]));
        double ca = (ks[i] - ks[i - 1]) / (ks[i + 1] - ks[i]);
        auto wtilde = subtract(compose_affine(diff_r, ks[i - 1], ks[i]),
                               compose_affine(diff_l, ks[i], ks[i + 1]).scaled(ca));
        what = what.scaled(1.0 / norm(what));
        wtilde = wtilde.scaled(1.0 / norm(wtilde));
        fix_sign(what);
        fix_sign(wtilde);
        psi.bar[i] = {std::move(what), std::move(wtilde)};
    }
    return psi;
}

}  // namespace knotwave

#pragma once

#include "knotwave/centered.hpp"

namespace knotwave {

/// Building blocks of the arbitrary-degree construction: an orthogonal
/// family on [0,1) made of the weighted ultraspherical bumps, the degree
/// n+3 "z" function that decouples the two boundary ramps, and the ramps
/// with everything else projected out.
struct PolyFamily {
    int n = 2;
    std::vector<PiecewisePoly> phi_tilde;  ///< phi~^2 .. phi~^n on [0,1)
    double alpha = 0.0;
    PiecewisePoly z;       ///< z^n = alpha * phi~^{n+1} + phi~^{n+3}
    PiecewisePoly r_proj;  ///< r^n: the ramp x with span{phi~, z} removed
    PiecewisePoly l_proj;  ///< l^n
};

/// r = x, l = 1-x, q = 4x(1-x), all on [0,1).
PiecewisePoly ramp_r();
PiecewisePoly ramp_l();
PiecewisePoly bump_q();

/// Monic polynomial of degree i orthogonal on [-1,1] under the weight
/// (1-x^2)^2. Three-term recurrence p_{k+1} = x p_k - b_k p_{k-1} with
/// b_k = k(k+4) / ((2k+5)(2k+3)), fixed against a brute-force weighted
/// Gram-Schmidt oracle in the tests.
Polynomial ultraspherical_monic(int i);

/// phi~^i(x) = x(1-x) p_{i-2}(2x-1) on [0,1), i >= 2.
PiecewisePoly phi_tilde(int i);

/// Closed forms used as internal checks:
/// ||phi~^n||^2 = (n-2)!(n+2)! / (16 (2n-1)!! (2n+1)!!)
double phi_tilde_norm2(int n);
/// <r, phi~^n> = (n-2)! / (4 (2n-1)!!);  <l, phi~^n> = (-1)^n <r, phi~^n>
double r_phi_inner(int n);
/// <r_n, l_n> = (-1)^{n+1} / (n(n+1)(n+2))
double rn_ln_inner(int n);

/// Positive-root solution of the quadratic
///   a^2 + (2(n+1)/(2n+5)) a + (n+2)(n+1)(n^2-5n-30)/((2n+7)(2n+5)^2(2n+3)) = 0.
double alpha_coefficient(int n);

/// Builds the family for n >= 1 (n = 1 has no phi~ members; its z is still
/// alpha_1 phi~^2 + phi~^4). Verifies the decoupling identity and the ramp
/// pairing closed form to 1e-10 and throws ConsistencyError on failure.
PolyFamily build_family(int n);

/// The centered orthogonal basis on a window: per knot an interval set
/// {z, phi~^2..phi~^n} (boundary knots gain the inward ramp) and a single
/// straddling function r^n o sigma_{a-} + l^n o sigma_a.
CenteredBasis omega_basis(const PolyFamily& fam, const KnotWindow& w, bool normalized);

/// Closed-form wavelets between degree n and degree n+3: two straddling
/// wavelets per interior knot and one single-interval wavelet per knot with
/// a successor, all unit norm.
CenteredBasis poly_wavelets(int n, const KnotWindow& w);

}  // namespace knotwave

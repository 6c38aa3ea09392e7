#pragma once

#include <map>

#include "knotwave/centered.hpp"

namespace knotwave {

/// The continuous piecewise-quadratic local system on [0,1] with internal
/// breakpoint theta: the bump q, the added function z^theta orthogonal to q,
/// and the two ramps with span{q, z^theta} projected out. Pairwise orthogonal
/// by construction.
struct QuadLocal {
    double theta = 0.5;
    char c_root_branch = '+';  ///< which root of the quadratic in c was taken
    double c_root = 0.0;
    PiecewisePoly q;
    PiecewisePoly z;        ///< unit norm
    PiecewisePoly r_theta;  ///< (I - P_{q,z}) r
    PiecewisePoly l_theta;
};

/// Coefficients (c2, c1, c0) of the quadratic  c2 c^2 + c1 c + c0 = 0 whose
/// root fixes the mixture z = c u0 + u1.
struct QuadEquation {
    double c2, c1, c0;
    double discriminant() const { return c1 * c1 - 4.0 * c2 * c0; }
};
QuadEquation quad_equation(double theta);

/// Both roots, '+' branch first.
std::pair<double, double> c_roots(double theta);

/// The two spanning functions of the orthogonal complement of q inside
/// span{q0, q1, h} (the halved bumps and the hat peaked at theta).
std::pair<PiecewisePoly, PiecewisePoly> u_pair(double theta);

/// Builds the local system; theta must lie in [1e-6, 1 - 1e-6] (conditioning
/// degenerates at the ends). Throws std::domain_error outside,
/// ConsistencyError if the orthogonality invariants fail.
QuadLocal quad_local(double theta, char branch = '+');

/// theta value per knot with a successor.
struct ThetaSequence {
    std::map<std::size_t, double> by_index;  ///< knot index -> theta
    static ThetaSequence constant(double theta, std::size_t knot_count);
    double at(std::size_t i) const;
};

/// The centered orthogonal quadratic basis on a window: interior knots carry
/// {q, z} on their interval plus one straddling function; boundary-role knots
/// gain the inward ramp.
CenteredBasis omega(const KnotWindow& w, const ThetaSequence& thetas, bool normalized);

/// The refinement-compatibility predicate for two (window, theta) pairs:
/// for every coarse knot a, the interior breakpoint b_a must be a fine knot
/// when (a, a+) was subdivided, and a fine interior breakpoint otherwise.
/// Requires w0 to be a subset of w1.
bool nesting_hypothesis(const KnotWindow& w0, const ThetaSequence& t0, const KnotWindow& w1,
                        const ThetaSequence& t1);

}  // namespace knotwave

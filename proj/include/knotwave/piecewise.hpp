#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace knotwave {

/// Univariate polynomial, coefficients in the monomial basis, lowest degree
/// first. Canonical form strips trailing zeros; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double v);
    static Polynomial monomial(int degree, double coeff = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    double eval(double x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(double s) const;
    /// p(c0 + c1*t) expanded in t.
    Polynomial compose_linear(double c0, double c1) const;

    /// Integral over [0,1].
    double integral01() const;
    double max_abs_coeff() const;

private:
    std::vector<double> coeffs_;
};

/// Compactly supported piecewise polynomial: strictly increasing breakpoints
/// b_0 < ... < b_m and one polynomial per interval [b_i, b_{i+1}]. The
/// function is identically zero outside [b_0, b_m].
///
/// Each piece's polynomial is stored in the local coordinate
/// t = (x - b_i)/(b_{i+1} - b_i) of its interval. Affine changes of variable
/// (compose_affine, translated, dilated) then touch only the breakpoints and
/// are exact in floating point, and integration never sees large-magnitude
/// monomial cancellation regardless of where the support sits.
class PiecewisePoly {
public:
    PiecewisePoly() = default;  // the zero function
    PiecewisePoly(std::vector<double> breakpoints, std::vector<Polynomial> local_pieces);

    /// Single piece on [0,1] given in local (= global) coordinates.
    static PiecewisePoly on_unit(Polynomial p);
    /// value * characteristic function of [u,v].
    static PiecewisePoly indicator(double u, double v, double value = 1.0);
    /// Pieces given as global-coordinate polynomials (converted on entry).
    static PiecewisePoly from_global(std::vector<double> breakpoints,
                                     const std::vector<Polynomial>& global_pieces);

    bool is_zero() const { return pieces_.empty(); }
    std::size_t piece_count() const { return pieces_.size(); }
    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }

    double support_left() const;
    double support_right() const;

    /// Piecewise value; pieces are half-open [b_i, b_{i+1}) except the last
    /// breakpoint, which evaluates to the left limit. 0 outside the support.
    double eval(double x) const;

    /// Canonical form: numerically dead pieces are zeroed (relative to the
    /// largest coefficient), zero edge pieces dropped, equal neighbours merged.
    PiecewisePoly& normalize(double rel_tol = 1e-12);

    /// f composed with the affine map sending [a, a_plus] onto [0,1]; the
    /// support [s,e] of f lands on [a + s*(a_plus-a), a + e*(a_plus-a)].
    /// Requires a < a_plus.
    PiecewisePoly composed_affine(double a, double a_plus) const;
    PiecewisePoly restricted(double u, double v) const;
    PiecewisePoly translated(double shift) const;
    /// x -> f(s*x) for s > 0.
    PiecewisePoly dilated(double s) const;
    PiecewisePoly scaled(double factor) const;

    /// The piece polynomial re-expanded in local coordinates of [u,v];
    /// requires [u,v] to lie inside a single piece (or outside the support,
    /// giving zero). Used by union-refinement loops.
    Polynomial local_on(double u, double v) const;

    double max_abs_coeff() const;

private:
    std::vector<double> breaks_;
    std::vector<Polynomial> pieces_;
};

PiecewisePoly add(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly subtract(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly scale(const PiecewisePoly& f, double s);
PiecewisePoly linear_combination(std::span<const double> coeffs,
                                 std::span<const PiecewisePoly> fs);

/// Exact L2 pairing: closed-form integration of the product over the
/// union-refined breakpoint grid. Breakpoints closer than 1e-12*scale are
/// merged (floating-point images of exact lattice values).
double inner_product(const PiecewisePoly& f, const PiecewisePoly& g);
double norm(const PiecewisePoly& f);

/// eval(f, (x-a)/(a_plus-a)) as a function of x; alias of composed_affine
/// with precondition checking. Throws std::invalid_argument if a >= a_plus.
PiecewisePoly compose_affine(const PiecewisePoly& f, double a, double a_plus);
PiecewisePoly restrict_to(const PiecewisePoly& f, double u, double v);

}  // namespace knotwave

#pragma once

#include "knotwave/centered.hpp"
#include "knotwave/coeff.hpp"
#include "knotwave/quad_family.hpp"

namespace knotwave {

enum class TauFamily { haar, quad };

/// A level of the tau-lattice multiresolution: the orthonormal centered
/// basis on a window of tau^{-k} Z_tau+.
struct TauBasisLevel {
    TauWindow window;
    CenteredBasis basis;
    TauFamily family = TauFamily::quad;
};

/// tau as a double.
double tau_value();

/// Piecewise-constant orthonormal basis: one normalized indicator per
/// interval.
TauBasisLevel haar_level(int k, int count);
CenteredBasis haar_basis(const TauWindow& w);

/// The step wavelet on [0,1]: tau^{-1/2} on [0,1/tau], -tau^{1/2} on
/// [1/tau,1].
PiecewisePoly haar_mother();

/// Haar wavelets at level k: scaled translates of the mother at the knots
/// opening long intervals.
CenteredBasis haar_wavelets(const TauWindow& w);

/// Continuous piecewise-quadratic level with the constant parameter 1/tau,
/// normalized. Verifies the refinement-compatibility predicate against the
/// refined window.
TauBasisLevel quad_tau_level(int k, int count);
CenteredBasis quad_tau_basis(const TauWindow& w);

/// Closed-form quadratic tau-wavelets on the level of `w`: per knot class
/// one straddling wavelet (plus a second at double-long knots) and the
/// single-interval wavelets, extended across the window by lattice
/// translation. Window must reach tau^3 plus guard knots.
CenteredBasis quad_tau_wavelets(const TauWindow& w);

/// Labeled inner-product table between one knot's scaling (or wavelet)
/// functions and the next level's functions at one fine lattice point.
struct CDBlock {
    char kind = 'C';          // 'C' scaling, 'D' wavelet
    TauNumber coarse{0, 0};   // knot a (level-0 lattice value)
    TauNumber fine{0, 0};     // fine lattice point a' (value of tau * knot)
    std::string knot_class;   // "0", "LS", "SL", "LL"
    Matrix values;
    std::vector<std::string> row_labels, col_labels;
};

struct CDTables {
    std::vector<CDBlock> blocks;
};

/// The stationary coefficient tables C_{a,a'} and D_{a,a'} for the
/// quadratic tau-construction over the representative knots 0, 1, tau,
/// tau^2.
CDTables emit_cd_tables(const TauWindow& w);

}  // namespace knotwave

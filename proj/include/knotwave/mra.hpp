#pragma once

#include "knotwave/centered.hpp"

namespace knotwave {

/// The coarse space is not contained in the fine space.
class NestingError : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

/// Per-knot spaces of the wavelet construction, all stored as orthonormal
/// function lists. a_minus/a_plus are the projections of the coarse
/// straddling functions onto the fine single-interval spaces on either side;
/// w_hat, w_tilde, w_breve are the three constructive wavelet pieces.
struct KnotSpaces {
    FunctionList a_minus, a_plus;
    FunctionList w_hat, w_tilde, w_breve;
    FunctionList t_space, t_minus, t_plus, u_space, s_space;
};

struct DimensionRow {
    // basic cardinalities at the knot (0 = coarse, 1 = fine)
    int k0 = 0, k1 = 0;
    int kbar0 = 0, kbar1 = 0;
    int kbreve0 = 0, kbreve1 = 0;
    // intersection dimensions of the straddling spaces and their halves
    int m = 0, m_minus = 0, m_plus = 0;
    int dim_a_minus = 0, dim_a_plus = 0;
    int dim_w_hat = 0, dim_w_tilde = 0, dim_w_breve = 0;
    int dim_t = 0, dim_t_minus = 0, dim_t_plus = 0, dim_u = 0, dim_s = 0;
    int dim_w_bar() const { return dim_w_hat + dim_w_tilde; }
    bool validated = false;
    bool formulas_ok = true;
    std::string failures;
};

struct DimensionReport {
    std::vector<DimensionRow> rows;
    bool pass = true;
    /// functional cross-checks over the validated zone (max residuals)
    double worst_perp = 0.0;         ///< mutual orthogonality of breve0/A+/A-
    double worst_sum_split = 0.0;    ///< span(A- u A+) vs span(S u T)
    double worst_equalspace = 0.0;   ///< span(bar0 u What) vs span(T u bar1)
    double worst_bar_alt = 0.0;      ///< What u Wtilde vs the complement route
};

struct WaveletScaffold {
    CenteredBasis phi0, phi1;
    std::vector<KnotSpaces> spaces;
    DimensionReport dims;
};

/// Builds every per-knot space from two orthonormal centered bases on a
/// common window with S(phi0) inside S(phi1). Throws NestingError if a
/// coarse function fails to reconstruct locally from the fine basis, and
/// ConsistencyError if a dimension identity fails on a validated knot.
WaveletScaffold build_scaffold(const CenteredBasis& phi0, const CenteredBasis& phi1);

/// Assembles the orthonormal wavelet basis: per knot the straddling wavelets
/// w_hat u w_tilde and the single-interval wavelets w_breve.
CenteredBasis build_wavelets(const WaveletScaffold& scaffold);

/// Largest residual of reconstructing each f in `targets` from the
/// orthonormal list `onb` (relative to ||f||).
double worst_reconstruction(const FunctionList& targets, const FunctionList& onb);

/// Continuous degree-n spline generators on a window: per-interval bumps
/// x(1-x) x^j and per-knot hats. Used to exercise the spline-space contracts.
CenteredBasis spline_basis(int degree, const KnotWindow& w);

}  // namespace knotwave

#pragma once

#include <string>
#include <vector>

#include "knotwave/centered.hpp"

namespace knotwave {

enum class Flavor { bar, breve };

/// One labeled inner-product block between a coarse (or wavelet) group and a
/// fine group: entry (i,j) = <row function i at from_knot, column function j
/// at to_knot>.
struct CoeffBlock {
    std::string kind;  // c, d, b, e, f, ghat, gtilde
    Flavor row_flavor = Flavor::bar;
    Flavor col_flavor = Flavor::breve;
    std::size_t from_knot = 0;
    std::size_t to_knot = 0;
    Matrix values;
    std::vector<std::string> row_labels, col_labels;
};

/// The nonzero coefficient blocks expressing the group of `rows` at knot i
/// over phi1's groups at knots i-1 and i. kind is "c" when rows is the
/// coarse basis and "d" for a wavelet basis.
std::vector<CoeffBlock> coeff_blocks(const CenteredBasis& rows, const CenteredBasis& phi1,
                                     std::size_t knot, const std::string& kind);

std::vector<CoeffBlock> c_blocks(const CenteredBasis& phi0, const CenteredBasis& phi1,
                                 std::size_t knot);
std::vector<CoeffBlock> d_blocks(const CenteredBasis& psi, const CenteredBasis& phi1,
                                 std::size_t knot);

/// Factorization c = e * b with b having orthonormal rows spanning the row
/// space of c. Empty factors for a zero block.
struct BEFactor {
    Matrix e;
    Matrix b;
};
BEFactor be_factor(const Matrix& c_block);

/// The orthogonal matrix over the knot range [ia, ib] (at least 3 knots):
/// rows alpha_a^+ | coarse groups | wavelet groups | alpha_b^-, columns the
/// fine functions of [ia, ib].
Matrix assemble_M(const CenteredBasis& phi0, const CenteredBasis& phi1, const CenteredBasis& psi,
                  std::size_t ia, std::size_t ib);

/// Coefficient rows for the two straddling wavelet pieces at a knot, over
/// the stacked fine groups [breve_{a-}; bar_a; breve_a]: ghat spans the
/// residual of the fine straddler, gtilde the flipped-projection space.
struct GhatGtilde {
    Matrix ghat;
    Matrix gtilde;
    std::vector<std::string> col_labels;
};
GhatGtilde ghat_gtilde(const CenteredBasis& phi0, const CenteredBasis& phi1, std::size_t knot);

/// Functions induced by coefficient rows against the stacked fine groups of
/// knot i: [breve1_{i-1}; bar1_i; breve1_i].
FunctionList rows_to_functions(const Matrix& rows, const CenteredBasis& phi1, std::size_t knot);

}  // namespace knotwave

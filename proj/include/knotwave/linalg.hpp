#pragma once

#include <Eigen/Dense>
#include <vector>

#include "knotwave/piecewise.hpp"

namespace knotwave {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using FunctionList = std::vector<PiecewisePoly>;

/// Relative rank tolerance (against the largest singular value).
inline constexpr double kRankTol = 1e-9;

/// Matrix of pairwise inner products, entry (i,j) = <F_i, G_j>.
Matrix gram(const FunctionList& F, const FunctionList& G);
Matrix gram(const FunctionList& F);

/// Orthogonal projection of f onto span(F) via normal equations on the Gram
/// matrix. F must be linearly independent at the rank tolerance; throws
/// std::invalid_argument otherwise.
PiecewisePoly project(const PiecewisePoly& f, const FunctionList& F, double tol = kRankTol);
PiecewisePoly residual(const PiecewisePoly& f, const FunctionList& F, double tol = kRankTol);

/// Fast path when E is already orthonormal: sum <f,e> e.
PiecewisePoly project_orthonormal(const PiecewisePoly& f, const FunctionList& E);
PiecewisePoly residual_orthonormal(const PiecewisePoly& f, const FunctionList& E);

/// Sign convention used everywhere a basis element's sign is free: the
/// highest-degree significant coefficient of the leading piece is made
/// positive. Keeps emitted tables reproducible run to run.
void fix_sign(PiecewisePoly& f);

/// Modified Gram-Schmidt with re-orthogonalization. Vectors whose residual
/// norm falls below tol * (input norm) are dropped; survivors are unit norm
/// with the deterministic sign convention, and the output Gram is the
/// identity to working accuracy.
FunctionList orthonormalize(const FunctionList& F, double tol = kRankTol);

/// Residual of f against a (possibly dependent) spanning set: the set is
/// orthonormalized first.
PiecewisePoly residual_span(const PiecewisePoly& f, const FunctionList& spanning);

/// Augments a matrix with orthonormal rows to a square n x n orthogonal
/// matrix. Added rows come from Gram-Schmidt on the canonical basis vectors
/// in index order, skipping dependent ones; deterministic given M. Throws if
/// the rows of M are not orthonormal.
Matrix complete_to_orthogonal(const Matrix& M, Eigen::Index n);

/// Matrix with orthonormal rows spanning the row space of M (Gram-Schmidt on
/// the rows in order, dropping dependents, deterministic signs).
Matrix orthonormal_row_basis(const Matrix& M, double tol = kRankTol);

/// Numerical rank of the symmetric PSD Gram matrix of a set (singular values
/// of the set are the square roots of the Gram eigenvalues).
Eigen::Index gram_rank(const Matrix& G, double tol = kRankTol);

/// Dimension of span(U) intersect span(W) for orthonormal lists U, W, read
/// off the principal angles: singular values of <U,W> exceeding 1 - 1e-9.
Eigen::Index intersection_dim(const FunctionList& U, const FunctionList& W);

/// Max |entry|, 0 for empty.
double max_abs(const Matrix& M);

}  // namespace knotwave

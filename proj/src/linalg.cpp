#include "knotwave/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace knotwave {

Matrix gram(const FunctionList& F, const FunctionList& G) {
    Matrix M(static_cast<Eigen::Index>(F.size()), static_cast<Eigen::Index>(G.size()));
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j)
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                inner_product(F[i], G[j]);
    return M;
}

Matrix gram(const FunctionList& F) {
    auto n = static_cast<Eigen::Index>(F.size());
    Matrix M(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            double v = inner_product(F[static_cast<std::size_t>(i)],
                                     F[static_cast<std::size_t>(j)]);
            M(i, j) = v;
            M(j, i) = v;
        }
    }
    return M;
}

Eigen::Index gram_rank(const Matrix& G, double tol) {
    if (G.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(G, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().cwiseMax(0.0).maxCoeff();
    if (lmax <= 0.0) return 0;
    double cut = tol * tol * lmax;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > cut) ++r;
    return r;
}

PiecewisePoly project(const PiecewisePoly& f, const FunctionList& F, double tol) {
    if (F.empty()) return {};
    Matrix G = gram(F);
    if (gram_rank(G, tol) != G.rows())
        throw std::invalid_argument("project: set is linearly dependent at tolerance");
    Vector b(G.rows());
    for (Eigen::Index i = 0; i < b.size(); ++i)
        b(i) = inner_product(F[static_cast<std::size_t>(i)], f);
    Vector c = G.ldlt().solve(b);
    std::vector<double> cv(c.data(), c.data() + c.size());
    return linear_combination(cv, F);
}

PiecewisePoly residual(const PiecewisePoly& f, const FunctionList& F, double tol) {
    if (F.empty()) return f;
    PiecewisePoly r = subtract(f, project(f, F, tol));
    r.normalize();
    return r;
}

PiecewisePoly project_orthonormal(const PiecewisePoly& f, const FunctionList& E) {
    PiecewisePoly acc;
    for (const auto& e : E) {
        double c = inner_product(f, e);
        if (c != 0.0) acc = add(acc, e.scaled(c));
    }
    return acc;
}

PiecewisePoly residual_orthonormal(const PiecewisePoly& f, const FunctionList& E) {
    PiecewisePoly r = f;
    for (const auto& e : E) r = subtract(r, e.scaled(inner_product(r, e)));
    return r;
}

void fix_sign(PiecewisePoly& f) {
    double scale = f.max_abs_coeff();
    if (scale == 0.0) return;
    for (const auto& piece : f.pieces()) {
        if (piece.max_abs_coeff() <= 1e-9 * scale) continue;
        const auto& cs = piece.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) {
            if (std::abs(cs[i]) > 1e-9 * scale) {
                if (cs[i] < 0.0) f = f.scaled(-1.0);
                return;
            }
        }
    }
}

FunctionList orthonormalize(const FunctionList& F, double tol) {
    FunctionList out;
    for (const auto& f : F) {
        double n0 = norm(f);
        if (n0 == 0.0) continue;
        PiecewisePoly v = residual_orthonormal(f, out);
        v = residual_orthonormal(v, out);  // second pass
        double n = norm(v);
        if (n < tol * n0) continue;
        v = v.scaled(1.0 / n);
        v.normalize();
        fix_sign(v);
        out.push_back(std::move(v));
    }
    return out;
}

PiecewisePoly residual_span(const PiecewisePoly& f, const FunctionList& spanning) {
    FunctionList ortho = orthonormalize(spanning);
    PiecewisePoly r = residual_orthonormal(f, ortho);
    r.normalize();
    return r;
}

namespace {

void fix_row_sign(Eigen::RowVectorXd& r) {
    double scale = r.cwiseAbs().maxCoeff();
    if (scale == 0.0) return;
    for (Eigen::Index j = 0; j < r.size(); ++j) {
        if (std::abs(r(j)) > 1e-9 * scale) {
            if (r(j) < 0.0) r = -r;
            return;
        }
    }
}

}  // namespace

Matrix complete_to_orthogonal(const Matrix& M, Eigen::Index n) {
    if (M.rows() > n || M.cols() != n)
        throw std::invalid_argument("complete_to_orthogonal: shape mismatch");
    if (M.rows() > 0) {
        Matrix g = M * M.transpose();
        if (max_abs(g - Matrix::Identity(M.rows(), M.rows())) > 1e-9)
            throw std::invalid_argument("complete_to_orthogonal: rows not orthonormal");
    }
    Matrix out(n, n);
    out.topRows(M.rows()) = M;
    Eigen::Index filled = M.rows();
    for (Eigen::Index j = 0; j < n && filled < n; ++j) {
        Eigen::RowVectorXd v = Eigen::RowVectorXd::Zero(n);
        v(j) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < filled; ++i)
                v -= (v * out.row(i).transpose()) * out.row(i);
        double nv = v.norm();
        if (nv < 1e-8) continue;
        v /= nv;
        fix_row_sign(v);
        out.row(filled++) = v;
    }
    if (filled < n) throw std::logic_error("complete_to_orthogonal: could not fill all rows");
    return out;
}

Matrix orthonormal_row_basis(const Matrix& M, double tol) {
    std::vector<Eigen::RowVectorXd> rows;
    // rank cut relative to the largest row norm (within sqrt(m) of the
    // largest singular value); a per-row cut would renormalize noise rows
    double scale = 0.0;
    for (Eigen::Index i = 0; i < M.rows(); ++i) scale = std::max(scale, M.row(i).norm());
    if (scale == 0.0) return Matrix(0, M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Eigen::RowVectorXd v = M.row(i);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& r : rows) v -= (v * r.transpose()) * r;
        double n = v.norm();
        if (n < tol * scale) continue;
        v /= n;
        fix_row_sign(v);
        rows.push_back(std::move(v));
    }
    Matrix out(static_cast<Eigen::Index>(rows.size()), M.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i];
    return out;
}

Eigen::Index intersection_dim(const FunctionList& U, const FunctionList& W) {
    if (U.empty() || W.empty()) return 0;
    Matrix C = gram(U, W);
    Eigen::JacobiSVD<Matrix> svd(C);
    Eigen::Index d = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1.0 - 1e-9) ++d;
    return d;
}

double max_abs(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    return M.cwiseAbs().maxCoeff();
}

}  // namespace knotwave

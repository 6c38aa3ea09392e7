#include "knotwave/mra.hpp"

#include <cmath>

#include "knotwave/poly_family.hpp"

namespace knotwave {

namespace {

FunctionList concat(const FunctionList& a, const FunctionList& b) {
    FunctionList out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Residuals or projections that are numerically zero relative to their unit
// parent must be discarded before orthonormalization, or they would be
// renormalized into noise directions and inflate space dimensions.
constexpr double kSpaceDrop = 1e-8;

// Orthonormal residuals of `raw` after projecting out the orthonormal list
// `off` (two-pass for stability).
FunctionList residual_space(const FunctionList& raw, const FunctionList& off) {
    FunctionList res;
    for (const auto& f : raw) {
        auto r = residual_orthonormal(residual_orthonormal(f, off), off);
        r.normalize();
        if (norm(r) < kSpaceDrop * std::max(1.0, norm(f))) continue;
        res.push_back(std::move(r));
    }
    return orthonormalize(res);
}

FunctionList project_space(const FunctionList& raw, const FunctionList& onto) {
    FunctionList ps;
    for (const auto& f : raw) {
        auto p = project_orthonormal(f, onto);
        p.normalize();
        if (norm(p) < kSpaceDrop * std::max(1.0, norm(f))) continue;
        ps.push_back(std::move(p));
    }
    return orthonormalize(ps);
}

// Splits the orthonormal list T into (left-supported, right-supported,
// neither) over the intervals [lo, mid] and [mid, hi].
struct TSplit {
    FunctionList t_minus, t_plus, u;
};

TSplit split_t(const FunctionList& T, double lo, double mid, double hi) {
    TSplit out;
    if (T.empty()) return out;
    auto n = static_cast<Eigen::Index>(T.size());
    FunctionList right, left;
    for (const auto& t : T) {
        right.push_back(t.restricted(mid, hi));
        left.push_back(t.restricted(lo, mid));
    }
    Matrix Gr = gram(right), Gl = gram(left);
    auto null_coords = [&](const Matrix& G) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(G);
        std::vector<Vector> vs;
        for (Eigen::Index i = 0; i < n; ++i)
            if (es.eigenvalues()(i) <= 1e-10) vs.push_back(es.eigenvectors().col(i));
        return vs;
    };
    auto combine = [&](const Vector& v) {
        std::vector<double> cs(v.data(), v.data() + v.size());
        auto f = linear_combination(cs, T);
        f.normalize();
        return f;
    };
    auto minus_coords = null_coords(Gr);  // vanish on the right: supported left
    auto plus_coords = null_coords(Gl);
    Matrix fixed(static_cast<Eigen::Index>(minus_coords.size() + plus_coords.size()), n);
    Eigen::Index row = 0;
    for (const auto& v : minus_coords) {
        out.t_minus.push_back(combine(v));
        fixed.row(row++) = v.transpose();
    }
    for (const auto& v : plus_coords) {
        out.t_plus.push_back(combine(v));
        fixed.row(row++) = v.transpose();
    }
    Matrix fixed_on = orthonormal_row_basis(fixed);
    Matrix full = complete_to_orthogonal(fixed_on, n);
    for (Eigen::Index i = fixed_on.rows(); i < n; ++i)
        out.u.push_back(combine(full.row(i).transpose()));
    return out;
}

double span_mismatch(const FunctionList& A, const FunctionList& B) {
    FunctionList a = orthonormalize(A), b = orthonormalize(B);
    return std::max(worst_reconstruction(a, b), worst_reconstruction(b, a));
}

}  // namespace

double worst_reconstruction(const FunctionList& targets, const FunctionList& onb) {
    double worst = 0.0;
    for (const auto& f : targets) {
        double nf = norm(f);
        if (nf == 0.0) continue;
        auto r = residual_orthonormal(f, onb);
        worst = std::max(worst, norm(r) / nf);
    }
    return worst;
}

WaveletScaffold build_scaffold(const CenteredBasis& phi0, const CenteredBasis& phi1) {
    if (!phi0.normalized || !phi1.normalized)
        throw std::invalid_argument("build_scaffold: inputs must be orthonormal bases");
    const auto& ks = phi0.window.knots;
    std::size_t m = ks.size();
    if (phi1.window.knots.size() != m)
        throw std::invalid_argument("build_scaffold: windows differ");
    for (std::size_t i = 0; i < m; ++i)
        if (std::abs(phi1.window.knots[i] - ks[i]) > 1e-9 * std::max(1.0, std::abs(ks[i])))
            throw std::invalid_argument("build_scaffold: windows differ");
    if (phi0.bar.size() != m || phi0.breve.size() != m || phi1.bar.size() != m ||
        phi1.breve.size() != m || !phi0.bar[0].empty() || !phi1.bar[0].empty())
        throw std::invalid_argument("build_scaffold: malformed per-knot grouping");

    WaveletScaffold sc;
    sc.phi0 = phi0;
    sc.phi1 = phi1;
    sc.spaces.resize(m);
    sc.dims.rows.resize(m);

    // containment: every coarse function must reconstruct from the fine
    // functions of its own neighbourhood
    for (std::size_t i = 0; i < m; ++i) {
        FunctionList local = phi1.breve[i];
        if (i > 0) local = concat(local, concat(phi1.breve[i - 1], phi1.bar[i]));
        double worst = worst_reconstruction(phi0.breve[i], phi1.breve[i]);
        if (i > 0) worst = std::max(worst, worst_reconstruction(phi0.bar[i], local));
        if (worst > 1e-8)
            throw NestingError("build_scaffold: coarse space not contained in fine space");
    }

    // first pass: A spaces
    for (std::size_t i = 0; i < m; ++i) {
        auto& sp = sc.spaces[i];
        sp.a_plus = project_space(phi0.bar[i], phi1.breve[i]);
        if (i > 0) sp.a_minus = project_space(phi0.bar[i], phi1.breve[i - 1]);
    }

    // second pass: wavelet pieces and the T decomposition
    for (std::size_t i = 0; i < m; ++i) {
        auto& sp = sc.spaces[i];
        sp.w_hat = residual_space(phi1.bar[i], phi0.bar[i]);
        sp.t_space = residual_space(phi0.bar[i], phi1.bar[i]);
        if (!sp.t_space.empty()) {
            auto split = split_t(sp.t_space, ks[i - 1], ks[i], ks[i + 1]);
            sp.t_minus = std::move(split.t_minus);
            sp.t_plus = std::move(split.t_plus);
            sp.u_space = std::move(split.u);
            for (const auto& u : sp.u_space) {
                auto s = subtract(u.restricted(ks[i], ks[i + 1]), u.restricted(ks[i - 1], ks[i]));
                s.normalize();
                sp.s_space.push_back(std::move(s));
            }
        }
        sp.w_tilde = residual_space(sp.s_space, concat(phi0.bar[i], sp.w_hat));
        FunctionList a_next = (i + 1 < m) ? sc.spaces[i + 1].a_minus : FunctionList{};
        sp.w_breve =
            residual_space(phi1.breve[i], concat(phi0.breve[i], concat(sp.a_plus, a_next)));
    }

    // dimensions and identities
    auto [vlo, vhi] = phi0.validated_range();
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = sc.dims.rows[i];
        const auto& sp = sc.spaces[i];
        row.kbar0 = static_cast<int>(phi0.bar[i].size());
        row.kbar1 = static_cast<int>(phi1.bar[i].size());
        row.kbreve0 = static_cast<int>(phi0.breve[i].size());
        row.kbreve1 = static_cast<int>(phi1.breve[i].size());
        int prev0 = i > 0 ? static_cast<int>(phi0.breve[i - 1].size()) : 0;
        int prev1 = i > 0 ? static_cast<int>(phi1.breve[i - 1].size()) : 0;
        row.k0 = prev0 + row.kbar0 + row.kbreve0;
        row.k1 = prev1 + row.kbar1 + row.kbreve1;
        row.m = static_cast<int>(intersection_dim(phi0.bar[i], phi1.bar[i]));
        auto restricted_onb = [&](const FunctionList& fs, double lo, double hi) {
            FunctionList out;
            for (const auto& f : fs) out.push_back(f.restricted(lo, hi));
            return orthonormalize(out);
        };
        if (i > 0 && !phi0.bar[i].empty()) {
            row.m_minus = static_cast<int>(
                intersection_dim(restricted_onb(phi0.bar[i], ks[i - 1], ks[i]),
                                 restricted_onb(phi1.bar[i], ks[i - 1], ks[i])));
        }
        if (i + 1 < m && !phi0.bar[i].empty()) {
            row.m_plus = static_cast<int>(
                intersection_dim(restricted_onb(phi0.bar[i], ks[i], ks[i + 1]),
                                 restricted_onb(phi1.bar[i], ks[i], ks[i + 1])));
        }
        row.dim_a_minus = static_cast<int>(sp.a_minus.size());
        row.dim_a_plus = static_cast<int>(sp.a_plus.size());
        row.dim_w_hat = static_cast<int>(sp.w_hat.size());
        row.dim_w_tilde = static_cast<int>(sp.w_tilde.size());
        row.dim_w_breve = static_cast<int>(sp.w_breve.size());
        row.dim_t = static_cast<int>(sp.t_space.size());
        row.dim_t_minus = static_cast<int>(sp.t_minus.size());
        row.dim_t_plus = static_cast<int>(sp.t_plus.size());
        row.dim_u = static_cast<int>(sp.u_space.size());
        row.dim_s = static_cast<int>(sp.s_space.size());
        row.validated = i >= vlo && i <= vhi;
    }
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = sc.dims.rows[i];
        if (!row.validated) continue;
        auto expect = [&](bool ok, const char* what) {
            if (!ok) {
                row.formulas_ok = false;
                row.failures += what;
                row.failures += "; ";
            }
        };
        expect(row.dim_a_plus == row.kbar0 - row.m_plus, "dim A+ = kbar0 - m+");
        expect(row.dim_a_minus == row.kbar0 - row.m_minus, "dim A- = kbar0 - m-");
        expect(row.dim_t == row.kbar0 - row.m, "dim T = kbar0 - m");
        expect(row.dim_t_minus == row.m_plus - row.m, "dim T- = m+ - m");
        expect(row.dim_t_plus == row.m_minus - row.m, "dim T+ = m- - m");
        expect(row.dim_u == row.kbar0 + row.m - row.m_minus - row.m_plus, "dim U");
        expect(row.dim_s == row.dim_u, "dim S = dim U");
        expect(row.dim_w_hat == row.kbar1 - row.m, "dim What = kbar1 - m");
        expect(row.dim_w_tilde == row.kbar0 + row.m - row.m_minus - row.m_plus, "dim Wtilde");
        expect(row.dim_w_bar() == row.kbar1 + row.kbar0 - row.m_plus - row.m_minus, "dim Wbar");
        if (i + 1 < m) {
            const auto& next = sc.dims.rows[i + 1];
            expect(row.dim_w_breve ==
                       (row.kbreve1 - row.kbreve0) - row.dim_a_plus - next.dim_a_minus,
                   "dim Wbreve via A dims");
            expect(row.dim_w_breve == row.kbreve1 - row.kbreve0 - row.kbar0 - next.kbar0 +
                                          row.m_plus + next.m_minus,
                   "dim Wbreve via m");
            expect(row.kbreve1 ==
                       row.kbreve0 + row.dim_a_plus + next.dim_a_minus + row.dim_w_breve,
                   "breve splitting");
        }
        if (i > 0 && i + 1 < m && sc.dims.rows[i - 1].validated &&
            sc.dims.rows[i + 1].validated) {
            const auto& prev = sc.dims.rows[i - 1];
            const auto& next = sc.dims.rows[i + 1];
            int lhs =
                static_cast<int>(sc.spaces[i - 1].w_breve.size() + sc.spaces[i].w_breve.size());
            int rhs = (prev.m_plus - prev.kbar0) +
                      (row.k1 - row.k0 - row.kbar1 - row.kbar0 + row.m_minus + row.m_plus) +
                      (next.m_minus - next.kbar0);
            expect(lhs == rhs, "dim(Wbreve_{a-} + Wbreve_a)");
        }
        sc.dims.pass = sc.dims.pass && row.formulas_ok;
    }
    if (!sc.dims.pass) {
        std::string msg = "build_scaffold: dimension identities failed:";
        for (std::size_t i = 0; i < m; ++i)
            if (!sc.dims.rows[i].failures.empty())
                msg += " [knot " + std::to_string(i) + "] " + sc.dims.rows[i].failures;
        throw ConsistencyError(msg);
    }

    // functional cross-checks on validated knots
    for (std::size_t i = vlo; i <= vhi && i < m; ++i) {
        const auto& sp = sc.spaces[i];
        FunctionList a_next = (i + 1 < m) ? sc.spaces[i + 1].a_minus : FunctionList{};
        FunctionList trio = concat(phi0.breve[i], concat(sp.a_plus, a_next));
        if (!trio.empty()) {
            Matrix G = gram(trio);
            sc.dims.worst_perp =
                std::max(sc.dims.worst_perp, max_abs(G - Matrix::Identity(G.rows(), G.cols())));
        }
        if (!sp.a_minus.empty() || !sp.a_plus.empty()) {
            sc.dims.worst_sum_split = std::max(
                sc.dims.worst_sum_split,
                span_mismatch(concat(sp.a_minus, sp.a_plus), concat(sp.s_space, sp.t_space)));
        }
        if (!phi1.bar[i].empty()) {
            sc.dims.worst_equalspace = std::max(
                sc.dims.worst_equalspace,
                span_mismatch(concat(phi0.bar[i], sp.w_hat), concat(sp.t_space, phi1.bar[i])));
            // alternative route to the straddling wavelets:
            // (A- u bar1 u A+) with the coarse straddler projected out
            FunctionList big = concat(sp.a_minus, concat(phi1.bar[i], sp.a_plus));
            FunctionList alt = residual_space(big, phi0.bar[i]);
            sc.dims.worst_bar_alt =
                std::max(sc.dims.worst_bar_alt, span_mismatch(alt, concat(sp.w_hat, sp.w_tilde)));
        }
    }
    return sc;
}

CenteredBasis build_wavelets(const WaveletScaffold& scaffold) {
    const auto& ks = scaffold.phi0.window.knots;
    std::size_t m = ks.size();
    CenteredBasis psi;
    psi.window = scaffold.phi0.window;
    psi.breve.assign(m, {});
    psi.bar.assign(m, {});
    psi.normalized = true;
    for (std::size_t i = 0; i < m; ++i) {
        psi.bar[i] = scaffold.spaces[i].w_hat;
        psi.bar[i].insert(psi.bar[i].end(), scaffold.spaces[i].w_tilde.begin(),
                          scaffold.spaces[i].w_tilde.end());
        psi.breve[i] = scaffold.spaces[i].w_breve;
    }
    return psi;
}

CenteredBasis spline_basis(int degree, const KnotWindow& w) {
    if (degree < 1) throw std::invalid_argument("spline_basis: need degree >= 1");
    const auto& ks = w.knots;
    std::size_t m = ks.size();
    CenteredBasis basis;
    basis.window = w;
    basis.breve.assign(m, {});
    basis.bar.assign(m, {});
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (int j = 0; j + 2 <= degree; ++j) {
            Polynomial bump = Polynomial{{0.0, 1.0, -1.0}} * Polynomial::monomial(j, 1.0);
            basis.breve[i].push_back(
                compose_affine(PiecewisePoly::on_unit(bump), ks[i], ks[i + 1]));
        }
        if (i == 0 && w.left_role == Role::endpoint)
            basis.breve[i].push_back(compose_affine(ramp_l(), ks[i], ks[i + 1]));
        if (i + 2 == m && w.right_role == Role::endpoint)
            basis.breve[i].push_back(compose_affine(ramp_r(), ks[i], ks[i + 1]));
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        basis.bar[i] = {add(compose_affine(ramp_r(), ks[i - 1], ks[i]),
                            compose_affine(ramp_l(), ks[i], ks[i + 1]))};
    }
    return basis;
}

}  // namespace knotwave

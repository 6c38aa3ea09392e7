#include "knotwave/centered.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace knotwave {

FunctionList CenteredBasis::knot_functions(std::size_t i) const {
    FunctionList out = bar[i];
    out.insert(out.end(), breve[i].begin(), breve[i].end());
    return out;
}

FunctionList CenteredBasis::all() const {
    FunctionList out;
    for (std::size_t i = 0; i < knot_count(); ++i) {
        auto fs = knot_functions(i);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

std::size_t CenteredBasis::total_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < knot_count(); ++i) n += bar[i].size() + breve[i].size();
    return n;
}

std::pair<std::size_t, std::size_t> CenteredBasis::validated_range() const {
    auto n = static_cast<std::ptrdiff_t>(knot_count());
    std::ptrdiff_t lo = window.left_role == Role::endpoint ? 0 : 2;
    std::ptrdiff_t hi = window.right_role == Role::endpoint ? n - 1 : n - 4;
    if (hi < lo) return {1, 0};  // empty
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

CenteredBasis normalized_copy(const CenteredBasis& basis) {
    CenteredBasis out = basis;
    for (auto& fs : out.breve)
        for (auto& f : fs) {
            double nf = norm(f);
            if (nf > 0) f = f.scaled(1.0 / nf);
        }
    for (auto& fs : out.bar)
        for (auto& f : fs) {
            double nf = norm(f);
            if (nf > 0) f = f.scaled(1.0 / nf);
        }
    out.normalized = true;
    return out;
}

namespace {

double window_scale(const KnotWindow& w) {
    double s = 1.0;
    for (double k : w.knots) s = std::max(s, std::abs(k));
    return s;
}

bool contained(const PiecewisePoly& f, double lo, double hi, double eps) {
    return f.support_left() >= lo - eps && f.support_right() <= hi + eps;
}

}  // namespace

CenteredReport verify_centered(const CenteredBasis& basis) {
    const auto& ks = basis.window.knots;
    std::size_t n = ks.size();
    double eps = 1e-9 * window_scale(basis.window);
    CenteredReport rep;
    rep.per_knot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& chk = rep.per_knot[i];
        for (const auto& f : basis.breve[i]) {
            if (i + 1 >= n || !contained(f, ks[i], ks[i + 1], eps) || f.is_zero()) {
                chk.supports_ok = false;
                chk.message += "breve support violation; ";
            }
        }
        for (const auto& f : basis.bar[i]) {
            bool in_hull = i > 0 && i + 1 < n && contained(f, ks[i - 1], ks[i + 1], eps);
            bool straddles = f.support_left() < ks[i] - eps && f.support_right() > ks[i] + eps;
            if (!in_hull || !straddles) {
                chk.supports_ok = false;
                chk.message += "bar support violation; ";
            }
        }
        if (i + 1 < n) {
            FunctionList local;
            auto push_restricted = [&](const FunctionList& fs) {
                for (const auto& f : fs) local.push_back(f.restricted(ks[i], ks[i + 1]));
            };
            push_restricted(basis.bar[i]);
            push_restricted(basis.breve[i]);
            push_restricted(basis.bar[i + 1]);
            if (!local.empty()) {
                Matrix G = gram(local);
                if (gram_rank(G) != G.rows()) {
                    chk.independent = false;
                    chk.message += "locally dependent; ";
                }
            }
        }
        rep.pass = rep.pass && chk.pass();
    }
    return rep;
}

OrthConditionReport verify_orth_condition(const CenteredBasis& basis, double tol) {
    const auto& ks = basis.window.knots;
    std::size_t n = ks.size();
    OrthConditionReport rep;
    rep.per_knot.resize(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        FunctionList va;  // basis of V_a: breve_{a-} u bar_a u breve_a
        if (i > 0) va.insert(va.end(), basis.breve[i - 1].begin(), basis.breve[i - 1].end());
        va.insert(va.end(), basis.bar[i].begin(), basis.bar[i].end());
        va.insert(va.end(), basis.breve[i].begin(), basis.breve[i].end());
        FunctionList vnext;  // basis of V_{a+}
        vnext.insert(vnext.end(), basis.breve[i].begin(), basis.breve[i].end());
        vnext.insert(vnext.end(), basis.bar[i + 1].begin(), basis.bar[i + 1].end());
        if (i + 2 < n)
            vnext.insert(vnext.end(), basis.breve[i + 1].begin(), basis.breve[i + 1].end());
        FunctionList short_space = orthonormalize(basis.breve[i]);
        FunctionList residuals;
        for (const auto& f : va) {
            auto r = residual_orthonormal(f, short_space);
            r.normalize();
            double nr = norm(r);
            if (nr > 1e-13) residuals.push_back(r.scaled(1.0 / nr));
        }
        double worst = 0.0;
        if (!residuals.empty() && !vnext.empty()) {
            FunctionList vn;
            for (const auto& g : vnext) {
                double ng = norm(g);
                if (ng > 0) vn.push_back(g.scaled(1.0 / ng));
            }
            worst = max_abs(gram(residuals, vn));
        }
        rep.per_knot[i].max_coupling = worst;
        rep.per_knot[i].pass = worst < tol;
        rep.worst = std::max(rep.worst, worst);
        rep.pass = rep.pass && rep.per_knot[i].pass;
    }
    return rep;
}

CenteredBasis recenter(const CenteredBasis& fine, const KnotWindow& coarse) {
    const auto& ks = coarse.knots;
    std::size_t n = ks.size();
    double eps = 1e-9 * window_scale(coarse);
    CenteredBasis out;
    out.window = coarse;
    out.breve.assign(n, {});
    out.bar.assign(n, {});
    out.normalized = fine.normalized;
    for (const auto& f : fine.all()) {
        double lo = f.support_left(), hi = f.support_right();
        bool placed = false;
        for (std::size_t i = 0; i + 1 < n && !placed; ++i) {
            if (lo >= ks[i] - eps && hi <= ks[i + 1] + eps) {
                out.breve[i].push_back(f);
                placed = true;
            }
        }
        for (std::size_t i = 1; i + 1 < n && !placed; ++i) {
            if (lo >= ks[i - 1] - eps && hi <= ks[i + 1] + eps && lo < ks[i] - eps &&
                hi > ks[i] + eps) {
                out.bar[i].push_back(f);
                placed = true;
            }
        }
        if (!placed)
            throw std::invalid_argument("recenter: function does not fit the coarse window");
    }
    return out;
}

double verify_tol() {
    static double tol = [] {
        const char* env = std::getenv("KNOTWAVE_TOL");
        if (!env) return 1e-9;
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || !(v > 0.0)) return 1e-9;
        return std::clamp(v, 1e-14, 1e-4);
    }();
    return tol;
}

}  // namespace knotwave

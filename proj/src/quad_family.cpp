#include "knotwave/quad_family.hpp"

#include <cmath>
#include <stdexcept>

#include "knotwave/poly_family.hpp"

namespace knotwave {

QuadEquation quad_equation(double theta) {
    double t = theta, s = 1.0 - theta;
    return QuadEquation{
        4.0 * (1.0 + 45.0 * s * t),
        -20.0 * (2.0 + t * (9.0 + 13.0 * t * (-3.0 + 2.0 * t))),
        5.0 * (4.0 - 5.0 * s * s * t * t * (15.0 + s * t)),
    };
}

std::pair<double, double> c_roots(double theta) {
    double t = theta, s = 1.0 - theta;
    double num = 20.0 * (2.0 + t * (9.0 + 13.0 * t * (2.0 * t - 3.0)));
    double root = 4.0 * std::sqrt(5.0) * (4.0 - 15.0 * s * s * t * t);
    double den = 8.0 * (1.0 + 45.0 * s * t);
    return {(num + root) / den, (num - root) / den};
}

std::pair<PiecewisePoly, PiecewisePoly> u_pair(double theta) {
    double t = theta, s = 1.0 - theta;
    PiecewisePoly q0 = compose_affine(bump_q(), 0.0, theta);
    PiecewisePoly q1 = compose_affine(bump_q(), theta, 1.0);
    PiecewisePoly hat = add(compose_affine(ramp_r(), 0.0, theta),
                            compose_affine(ramp_l(), theta, 1.0));
    PiecewisePoly u0 = add(q0.scaled(s * s * (2.0 + 3.0 * t)), q1.scaled(t * t * (3.0 * t - 5.0)));
    PiecewisePoly u1 = add(add(q0.scaled(-2.0 + 3.0 * (t - 1.0) * t * t * t),
                               q1.scaled(-2.0 + 3.0 * (t - 1.0) * (t - 1.0) * (t - 1.0) * t)),
                           hat.scaled(16.0 / 5.0 - 12.0 * s * s * t * t));
    return {u0, u1};
}

QuadLocal quad_local(double theta, char branch) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::domain_error("quad_local: theta outside (0,1)");
    if (theta < 1e-6 || theta > 1.0 - 1e-6)
        throw std::domain_error("quad_local: theta too close to 0 or 1");
    if (branch != '+' && branch != '-') throw std::invalid_argument("quad_local: branch");

    QuadLocal loc;
    loc.theta = theta;
    loc.c_root_branch = branch;
    auto roots = c_roots(theta);
    loc.c_root = branch == '+' ? roots.first : roots.second;

    // The mixture is z = u0 + c * u1: solving the decoupling condition from
    // the inner products directly reproduces the displayed roots only under
    // this convention.
    auto [u0, u1] = u_pair(theta);
    PiecewisePoly z = add(u0, u1.scaled(loc.c_root));
    z = z.scaled(1.0 / norm(z));
    fix_sign(z);

    loc.q = bump_q();
    loc.z = z;
    double q2 = inner_product(loc.q, loc.q);
    auto drop_qz = [&](const PiecewisePoly& f) {
        PiecewisePoly out = subtract(f, loc.q.scaled(inner_product(f, loc.q) / q2));
        out = subtract(out, loc.z.scaled(inner_product(out, loc.z)));
        out.normalize();
        return out;
    };
    loc.r_theta = drop_qz(ramp_r());
    loc.l_theta = drop_qz(ramp_l());

    double worst = std::abs(inner_product(loc.z, loc.q));
    worst = std::max(worst, std::abs(inner_product(loc.r_theta, loc.l_theta)));
    worst = std::max(worst, std::abs(inner_product(loc.r_theta, loc.q)));
    worst = std::max(worst, std::abs(inner_product(loc.r_theta, loc.z)));
    worst = std::max(worst, std::abs(inner_product(loc.l_theta, loc.q)));
    worst = std::max(worst, std::abs(inner_product(loc.l_theta, loc.z)));
    if (worst > 1e-10)
        throw ConsistencyError("quad_local: {r,l,q,z} failed pairwise orthogonality");
    return loc;
}

ThetaSequence ThetaSequence::constant(double theta, std::size_t knot_count) {
    ThetaSequence out;
    for (std::size_t i = 0; i + 1 < knot_count; ++i) out.by_index[i] = theta;
    return out;
}

double ThetaSequence::at(std::size_t i) const {
    auto it = by_index.find(i);
    if (it == by_index.end())
        throw std::invalid_argument("ThetaSequence: no theta for knot index");
    return it->second;
}

CenteredBasis omega(const KnotWindow& w, const ThetaSequence& thetas, bool normalized) {
    const auto& ks = w.knots;
    std::size_t m = ks.size();
    std::vector<QuadLocal> locs(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) locs[i] = quad_local(thetas.at(i));

    CenteredBasis basis;
    basis.window = w;
    basis.breve.assign(m, {});
    basis.bar.assign(m, {});
    for (std::size_t i = 0; i + 1 < m; ++i) {
        FunctionList fs;
        if (i == 0 && w.left_role == Role::endpoint)
            fs.push_back(compose_affine(locs[i].l_theta, ks[i], ks[i + 1]));
        if (i + 2 == m && w.right_role == Role::endpoint)
            fs.push_back(compose_affine(locs[i].r_theta, ks[i], ks[i + 1]));
        fs.push_back(compose_affine(locs[i].q, ks[i], ks[i + 1]));
        fs.push_back(compose_affine(locs[i].z, ks[i], ks[i + 1]));
        basis.breve[i] = std::move(fs);
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        basis.bar[i] = {add(compose_affine(locs[i - 1].r_theta, ks[i - 1], ks[i]),
                            compose_affine(locs[i].l_theta, ks[i], ks[i + 1]))};
    }
    return normalized ? normalized_copy(basis) : basis;
}

bool nesting_hypothesis(const KnotWindow& w0, const ThetaSequence& t0, const KnotWindow& w1,
                        const ThetaSequence& t1) {
    double scale = 1.0;
    for (double k : w1.knots) scale = std::max(scale, std::abs(k));
    double eps = 1e-12 * scale;

    auto in_list = [&](const std::vector<double>& xs, double v) {
        for (double x : xs)
            if (std::abs(x - v) <= eps) return true;
        return false;
    };
    for (double k : w0.knots)
        if (!in_list(w1.knots, k))
            throw std::invalid_argument("nesting_hypothesis: w0 is not a subset of w1");

    std::vector<double> fine_b;
    for (std::size_t j = 0; j + 1 < w1.knots.size(); ++j)
        fine_b.push_back((1.0 - t1.at(j)) * w1.knots[j] + t1.at(j) * w1.knots[j + 1]);

    for (std::size_t i = 0; i + 1 < w0.knots.size(); ++i) {
        double a = w0.knots[i], ap = w0.knots[i + 1];
        double b = (1.0 - t0.at(i)) * a + t0.at(i) * ap;
        bool subdivided = false;
        for (double k : w1.knots) subdivided |= (k > a + eps && k < ap - eps);
        if (subdivided ? !in_list(w1.knots, b) : !in_list(fine_b, b)) return false;
    }
    return true;
}

}  // namespace knotwave

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "knotwave/poly_family.hpp"
#include "knotwave/quad_family.hpp"
#include "oracles.hpp"

using namespace knotwave;

TEST_CASE("roots at theta = 1/2") {
    // frozen from the quadratic-formula oracle on the displayed coefficients
    auto eq = quad_equation(0.5);
    double disc = eq.discriminant();
    double oracle_plus = (-eq.c1 + std::sqrt(disc)) / (2.0 * eq.c2);
    double oracle_minus = (-eq.c1 - std::sqrt(disc)) / (2.0 * eq.c2);
    auto [cp, cm] = c_roots(0.5);
    double expected = std::sqrt(5.0) / 8.0;
    CHECK(cp == doctest::Approx(expected).epsilon(1e-12));
    CHECK(cm == doctest::Approx(-expected).epsilon(1e-12));
    CHECK(cp == doctest::Approx(oracle_plus).epsilon(1e-12));
    CHECK(cm == doctest::Approx(oracle_minus).epsilon(1e-12));
}

TEST_CASE("discriminant closed form and root residuals over theta") {
    for (int i = 1; i <= 9; ++i) {
        double theta = 0.1 * i;
        auto eq = quad_equation(theta);
        double d = 4.0 - 15.0 * (1.0 - theta) * (1.0 - theta) * theta * theta;
        CHECK(eq.discriminant() == doctest::Approx(80.0 * d * d).epsilon(1e-10));
        auto [cp, cm] = c_roots(theta);
        for (double c : {cp, cm})
            CHECK(std::abs(eq.c2 * c * c + eq.c1 * c + eq.c0) < 1e-11 * std::abs(eq.c0 + 1.0));
    }
}

TEST_CASE("u pair spans the complement of q") {
    for (double theta : {0.2, 0.5, 1.0 / 1.6180339887498949}) {
        auto [u0, u1] = u_pair(theta);
        auto q = bump_q();
        CHECK(std::abs(inner_product(u0, q)) < 1e-12);
        CHECK(std::abs(inner_product(u1, q)) < 1e-12);
        // q itself lies in span{q0, q1, h}
        auto q0 = compose_affine(bump_q(), 0.0, theta);
        auto q1 = compose_affine(bump_q(), theta, 1.0);
        auto hat = add(compose_affine(ramp_r(), 0.0, theta), compose_affine(ramp_l(), theta, 1.0));
        auto onb = orthonormalize({q0, q1, hat});
        CHECK(norm(residual_orthonormal(q, onb)) < 1e-10);
        // and {q, u0, u1} spans the same 3-dimensional space
        auto onb2 = orthonormalize({q, u0, u1});
        REQUIRE(onb2.size() == 3);
        for (const auto& f : onb)
            CHECK(norm(residual_orthonormal(f, onb2)) < 1e-10);
    }
}

TEST_CASE("quad_local invariants") {
    const double invtau = 2.0 / (1.0 + std::sqrt(5.0));
    auto loc = quad_local(invtau);
    // decoupled ramps == the projection identity from the defining equation
    CHECK(std::abs(inner_product(loc.r_theta, loc.l_theta)) < 1e-12);
    CHECK(norm(loc.z) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(quad_local(0.0), std::domain_error);
    CHECK_THROWS_AS(quad_local(1.0), std::domain_error);
    CHECK_THROWS_AS(quad_local(1e-9), std::domain_error);

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> th(0.02, 0.98);
    for (int i = 0; i < 50; ++i) {
        auto l = quad_local(th(rng));
        CHECK(std::abs(inner_product(l.r_theta, l.l_theta)) < 1e-10);
        Matrix G = gram(FunctionList{l.r_theta, l.l_theta, l.q, l.z});
        for (Eigen::Index a = 0; a < 4; ++a)
            for (Eigen::Index b = 0; b < a; ++b) CHECK(std::abs(G(a, b)) < 1e-10);
    }
}

TEST_CASE("omega structure and Gram") {
    auto w = make_window({0.0, 0.8, 2.0, 2.4, 3.7, 5.0}, Role::endpoint, Role::endpoint);
    auto thetas = ThetaSequence::constant(0.4, w.size());
    auto basis = omega(w, thetas, true);
    CHECK(basis.breve[1].size() == 2);
    CHECK(basis.bar[1].size() == 1);
    CHECK(basis.breve[0].size() == 3);
    CHECK(basis.breve[4].size() == 3);
    Matrix G = gram(basis.all());
    CHECK(max_abs(G - Matrix::Identity(G.rows(), G.cols())) < 1e-9);
    // every element is a continuous piecewise quadratic with breakpoints in
    // the knots plus the interior theta points
    for (const auto& f : basis.all()) {
        for (const auto& p : f.pieces()) CHECK(p.degree() <= 2);
        for (double b : f.breakpoints()) {
            bool known = false;
            for (std::size_t i = 0; i < w.size(); ++i)
                known |= std::abs(b - w.knots[i]) < 1e-9;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                known |= std::abs(b - (0.6 * w.knots[i] + 0.4 * w.knots[i + 1])) < 1e-9;
            CHECK(known);
        }
        // continuity at the breakpoints
        for (std::size_t bi = 1; bi + 1 < f.breakpoints().size(); ++bi) {
            double x = f.breakpoints()[bi];
            double left = f.pieces()[bi - 1].eval(1.0);
            double right = f.pieces()[bi].eval(0.0);
            CHECK(left == doctest::Approx(right).epsilon(1e-10));
        }
    }
}

TEST_CASE("S02 is inside the constructed space") {
    auto w = make_window({0.0, 1.0, 2.5, 3.0, 4.2}, Role::endpoint, Role::endpoint);
    auto thetas = ThetaSequence::constant(0.37, w.size());
    auto basis = omega(w, thetas, true);
    auto onb = orthonormalize(basis.all());
    auto hat = add(compose_affine(ramp_r(), 1.0, 2.5), compose_affine(ramp_l(), 2.5, 3.0));
    CHECK(norm(residual_orthonormal(hat, onb)) < 1e-9);
    auto bump = compose_affine(bump_q(), 2.5, 3.0);
    CHECK(norm(residual_orthonormal(bump, onb)) < 1e-9);
}

TEST_CASE("nesting hypothesis") {
    // midpoint refinement with theta = 1/2 everywhere satisfies both clauses
    auto w0 = make_window({0.0, 1.0, 2.0, 3.0, 4.0}, Role::endpoint, Role::endpoint);
    auto w1 = make_window({0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}, Role::endpoint,
                          Role::endpoint);
    auto half0 = ThetaSequence::constant(0.5, w0.size());
    auto half1 = ThetaSequence::constant(0.5, w1.size());
    CHECK(nesting_hypothesis(w0, half0, w1, half1));
    // theta 0.3 breaks it: b_a hits neither the fine knots nor the fine b's
    auto t03 = ThetaSequence::constant(0.3, w0.size());
    CHECK_FALSE(nesting_hypothesis(w0, t03, w1, half1));
    CHECK_THROWS_AS(nesting_hypothesis(w1, half1, w0, half0), std::invalid_argument);
    // and the containment conclusion: S(Omega0) inside S(Omega1)
    auto b0 = omega(w0, half0, true);
    auto b1 = omega(w1, half1, true);
    auto onb1 = orthonormalize(b1.all());
    for (const auto& f : b0.all()) CHECK(norm(residual_orthonormal(f, onb1)) < 1e-8);
}

TEST_CASE("unsubdivided intervals require matching b points") {
    // w0 = w1 on part of the range: clause two forces theta agreement there
    auto w0 = make_window({0.0, 1.0, 2.0}, Role::endpoint, Role::endpoint);
    auto w1 = make_window({0.0, 0.5, 1.0, 2.0}, Role::endpoint, Role::endpoint);
    ThetaSequence t0 = ThetaSequence::constant(0.5, w0.size());
    ThetaSequence t1 = ThetaSequence::constant(0.5, w1.size());
    CHECK(nesting_hypothesis(w0, t0, w1, t1));  // [1,2] untouched, thetas agree
    t1.by_index[2] = 0.25;                      // theta on [1,2] changes
    CHECK_FALSE(nesting_hypothesis(w0, t0, w1, t1));
}

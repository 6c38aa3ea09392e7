#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotwave/mra.hpp"
#include "knotwave/poly_family.hpp"
#include "knotwave/quad_family.hpp"
#include "knotwave/tau.hpp"

using namespace knotwave;

TEST_CASE("verify_centered passes for constructed bases") {
    auto w = make_window({0.0, 1.0, 2.5, 3.0, 4.0}, Role::endpoint, Role::endpoint);
    auto quad = omega(w, ThetaSequence::constant(0.5, w.size()), true);
    CHECK(verify_centered(quad).pass);

    // hat-and-bump spline generators are a centered basis too
    auto hats = spline_basis(2, w);
    CHECK(verify_centered(hats).pass);

    auto fam = build_family(4);
    CHECK(verify_centered(omega_basis(fam, w, true)).pass);
}

TEST_CASE("verify_centered flags duplicated functions") {
    auto w = make_window({0.0, 1.0, 2.5, 3.0, 4.0}, Role::endpoint, Role::endpoint);
    auto basis = omega(w, ThetaSequence::constant(0.5, w.size()), true);
    // duplicating a straddling function into its own knot's interval slot
    // breaks local linear independence
    basis.breve[1].push_back(basis.bar[1][0]);
    auto rep = verify_centered(basis);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.per_knot[1].independent);
}

TEST_CASE("orthogonality criterion separates spline hats from built bases") {
    auto w = make_window({0.0, 1.0, 2.5, 3.0}, Role::endpoint, Role::endpoint);
    auto quad = omega(w, ThetaSequence::constant(0.5, w.size()), true);
    CHECK(verify_orth_condition(quad).pass);

    // plain continuous quadratics on generic knots fail: the straddling hat
    // residual couples to the next neighbourhood
    auto hats = spline_basis(2, w);
    auto rep = verify_orth_condition(hats);
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst > 1e-6);

    // unnormalized but orthogonal bases pass as well
    auto fam = build_family(2);
    CHECK(verify_orth_condition(omega_basis(fam, w, false)).pass);
}

TEST_CASE("recenter groups fine functions by coarse support") {
    auto w0 = tau_window(0, 8);
    auto w1 = refine(w0);
    auto fine = quad_tau_basis(w1);
    auto coarse_window = w0.to_window();
    auto regrouped = recenter(fine, coarse_window);
    CHECK(regrouped.total_count() == fine.total_count());
    CHECK(verify_centered(regrouped).pass);
    // long coarse intervals hold 5 single-interval functions after
    // refinement, short ones keep their 2; each interior coarse knot keeps
    // exactly one straddler
    const auto& ks = w0.scaled;
    for (std::size_t i = 1; i + 1 < w0.size(); ++i) {
        CHECK(regrouped.bar[i].size() == 1);
        TauNumber gap = ks[i + 1] - ks[i];
        std::size_t expect = (gap == TauNumber{1, 0}) ? 5 : 2;
        CHECK(regrouped.breve[i].size() == expect);
    }
    CHECK(regrouped.breve[0].size() == 6);  // endpoint interval: 3+2+1
}

TEST_CASE("validated range respects roles") {
    auto w = make_window({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, Role::endpoint, Role::cut);
    CenteredBasis b;
    b.window = w;
    b.breve.assign(7, {});
    b.bar.assign(7, {});
    auto [lo, hi] = b.validated_range();
    CHECK(lo == 0);
    CHECK(hi == 3);
    b.window.left_role = Role::cut;
    b.window.right_role = Role::endpoint;
    auto [lo2, hi2] = b.validated_range();
    CHECK(lo2 == 2);
    CHECK(hi2 == 6);
}

TEST_CASE("verify tolerance env override") {
    // verify_tol is latched once per process; just confirm the default here
    CHECK(verify_tol() == doctest::Approx(1e-9));
}

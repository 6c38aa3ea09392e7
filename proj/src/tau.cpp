#include "knotwave/tau.hpp"

#include <cmath>
#include <stdexcept>

namespace knotwave {

namespace {

constexpr double kTau = 1.6180339887498948482;
const TauNumber kOne{1, 0};
const TauNumber kInvTau{-1, 1};

double inv_tau() { return 1.0 / kTau; }

std::vector<std::string> component_labels(const CenteredBasis& b, std::size_t i) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < b.bar[i].size(); ++k) out.push_back("bar");
    if (b.breve[i].size() == 3) {
        out.push_back("l");
        out.push_back("q");
        out.push_back("z");
    } else if (b.breve[i].size() == 2) {
        out.push_back("q");
        out.push_back("z");
    } else {
        for (std::size_t k = 0; k < b.breve[i].size(); ++k) out.push_back("breve");
    }
    return out;
}

}  // namespace

double tau_value() { return kTau; }

CenteredBasis haar_basis(const TauWindow& w) {
    KnotWindow kw = w.to_window();
    std::size_t m = kw.size();
    CenteredBasis basis;
    basis.window = kw;
    basis.breve.assign(m, {});
    basis.bar.assign(m, {});
    basis.normalized = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        double len = kw.knots[i + 1] - kw.knots[i];
        basis.breve[i] = {
            PiecewisePoly::indicator(kw.knots[i], kw.knots[i + 1], 1.0 / std::sqrt(len))};
    }
    return basis;
}

TauBasisLevel haar_level(int k, int count) {
    TauBasisLevel lvl;
    lvl.window = tau_window(k, count);
    lvl.basis = haar_basis(lvl.window);
    lvl.family = TauFamily::haar;
    return lvl;
}

PiecewisePoly haar_mother() {
    double it = inv_tau();
    return PiecewisePoly{{0.0, it, 1.0},
                         {Polynomial::constant(1.0 / std::sqrt(kTau)),
                          Polynomial::constant(-std::sqrt(kTau))}};
}

CenteredBasis haar_wavelets(const TauWindow& w) {
    KnotWindow kw = w.to_window();
    std::size_t m = kw.size();
    double levelf = std::pow(kTau, -w.level);
    CenteredBasis psi;
    psi.window = kw;
    psi.breve.assign(m, {});
    psi.bar.assign(m, {});
    psi.normalized = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        TauNumber gap = w.scaled[i + 1] - w.scaled[i];
        if (!(gap == kOne)) continue;  // short intervals carry no wavelet
        // split point of the next refinement, exact in the lattice
        double split = (kInvTau * w.scaled[i] + w.scaled[i + 1]).to_real() * levelf / kTau;
        double amp = std::pow(kTau, 0.5 * w.level);
        psi.breve[i] = {PiecewisePoly{
            {kw.knots[i], split, kw.knots[i + 1]},
            {Polynomial::constant(amp / std::sqrt(kTau)),
             Polynomial::constant(-amp * std::sqrt(kTau))}}};
    }
    return psi;
}

CenteredBasis quad_tau_basis(const TauWindow& w) {
    KnotWindow kw = w.to_window();
    return omega(kw, ThetaSequence::constant(inv_tau(), kw.size()), true);
}

TauBasisLevel quad_tau_level(int k, int count) {
    TauBasisLevel lvl;
    lvl.window = tau_window(k, count);
    lvl.basis = quad_tau_basis(lvl.window);
    lvl.family = TauFamily::quad;
    TauWindow fine = refine(lvl.window);
    if (!nesting_hypothesis(lvl.basis.window, ThetaSequence::constant(inv_tau(), count),
                            fine.to_window(),
                            ThetaSequence::constant(inv_tau(), fine.size())))
        throw ConsistencyError("quad_tau_level: refinement compatibility failed");
    return lvl;
}

CenteredBasis quad_tau_wavelets(const TauWindow& w) {
    if (w.scaled.size() < 7 || !(w.scaled[0] == TauNumber{0, 0}))
        throw std::invalid_argument("quad_tau_wavelets: window must start at 0 and reach tau^3");
    CenteredBasis phi0 = quad_tau_basis(w);
    TauWindow fine_w = refine(w);
    CenteredBasis phi1 = recenter(quad_tau_basis(fine_w), phi0.window);
    const auto& ks = phi0.window.knots;
    std::size_t m = ks.size();

    // knot order is 0, 1, tau, tau^2, 1+tau^2, tau^3, ...
    const std::size_t i1 = 1, itau = 2, itau2 = 3, i1tau2 = 4;

    auto bar0 = [&](std::size_t i) { return phi0.bar[i][0]; };
    auto bar1 = [&](std::size_t i) { return phi1.bar[i][0]; };

    auto make_hat = [&](std::size_t i) {
        auto f1 = bar1(i);
        auto f0 = bar0(i);
        auto v = subtract(f1, f0.scaled(inner_product(f1, f0)));
        v = v.scaled(1.0 / norm(v));
        v.normalize();
        fix_sign(v);
        return v;
    };
    PiecewisePoly what_1 = make_hat(i1);
    PiecewisePoly what_tau = make_hat(itau);
    PiecewisePoly what_tau2 = make_hat(itau2);

    // the flipped-projection wavelet at the double-long knot
    PiecewisePoly t2 = subtract(bar0(itau2),
                                bar1(itau2).scaled(inner_product(bar0(itau2), bar1(itau2))));
    PiecewisePoly s2 = subtract(t2.restricted(ks[itau2], ks[itau2 + 1]),
                                t2.restricted(ks[itau2 - 1], ks[itau2]));
    PiecewisePoly wtilde_tau2 = subtract(
        subtract(s2, bar0(itau2).scaled(inner_product(s2, bar0(itau2)))),
        what_tau2.scaled(inner_product(s2, what_tau2)));
    wtilde_tau2 = wtilde_tau2.scaled(1.0 / norm(wtilde_tau2));
    wtilde_tau2.normalize();
    fix_sign(wtilde_tau2);

    auto residual_piece = [&](std::size_t i) {
        return subtract(bar0(i), bar1(i).scaled(inner_product(bar0(i), bar1(i))));
    };
    auto f_plus = [&](std::size_t i) {
        auto g = residual_piece(i).restricted(ks[i], ks[i + 1]);
        return g.scaled(1.0 / norm(g));
    };
    auto f_minus = [&](std::size_t i) {
        auto g = residual_piece(i).restricted(ks[i - 1], ks[i]);
        return g.scaled(1.0 / norm(g));
    };

    // single-interval wavelet on [tau, tau^2]
    PiecewisePoly target = bar0(i1tau2).dilated(kTau);
    FunctionList blockers{f_plus(itau), phi0.breve[itau][0], phi0.breve[itau][1],
                          f_minus(itau2)};
    PiecewisePoly wbreve_tau = residual_span(target, blockers);
    wbreve_tau = wbreve_tau.scaled(1.0 / norm(wbreve_tau));
    wbreve_tau.normalize();
    fix_sign(wbreve_tau);

    // the two boundary wavelets on [0,1]
    PiecewisePoly wbreve_01 = wbreve_tau.translated(ks[0] - ks[itau]);
    FunctionList block0 = phi0.breve[0];
    block0.push_back(f_minus(i1));
    block0.push_back(wbreve_01);
    FunctionList w02 = orthonormalize([&] {
        FunctionList res;
        for (const auto& f : phi1.breve[0]) {
            auto r = residual_span(f, block0);
            if (norm(r) >= 1e-8) res.push_back(std::move(r));
        }
        return res;
    }());
    if (w02.size() != 1)
        throw ConsistencyError("quad_tau_wavelets: boundary wavelet space is not 1-dimensional");
    PiecewisePoly wbreve_02 = w02[0];

    CenteredBasis psi;
    psi.window = phi0.window;
    psi.breve.assign(m, {});
    psi.bar.assign(m, {});
    psi.normalized = true;
    psi.breve[0] = {wbreve_01, wbreve_02};
    for (std::size_t i = 1; i < m; ++i) {
        GapClass cls = classify(w.scaled[i]);
        std::size_t proto = cls == GapClass::LS ? i1 : (cls == GapClass::SL ? itau : itau2);
        double shift = ks[i] - ks[proto];
        bool has_bar = i + 1 < m;
        bool has_breve = i + 1 < m;
        if (has_bar) {
            const PiecewisePoly& hat =
                cls == GapClass::LS ? what_1 : (cls == GapClass::SL ? what_tau : what_tau2);
            psi.bar[i].push_back(shift == 0.0 ? hat : hat.translated(shift));
            if (cls == GapClass::LL)
                psi.bar[i].push_back(shift == 0.0 ? wtilde_tau2 : wtilde_tau2.translated(shift));
        }
        if (has_breve && cls != GapClass::LS) {
            double bshift = ks[i] - ks[cls == GapClass::SL ? itau : itau2];
            PiecewisePoly base = cls == GapClass::SL ? wbreve_tau : wbreve_tau.translated(
                                                                        ks[itau2] - ks[itau]);
            psi.breve[i] = {bshift == 0.0 ? base : base.translated(bshift)};
        }
    }
    return psi;
}

CDTables emit_cd_tables(const TauWindow& w) {
    CenteredBasis phi0 = quad_tau_basis(w);
    TauWindow fine_w = refine(w);
    CenteredBasis fine = quad_tau_basis(fine_w);
    CenteredBasis psi = quad_tau_wavelets(w);

    auto coarse_index = [&](TauNumber a) {
        for (std::size_t i = 0; i < w.scaled.size(); ++i)
            if (w.scaled[i] == a) return i;
        throw std::invalid_argument("emit_cd_tables: knot not in window");
    };
    auto fine_index = [&](TauNumber a) {
        for (std::size_t i = 0; i < fine_w.scaled.size(); ++i)
            if (fine_w.scaled[i] == a) return i;
        throw std::invalid_argument("emit_cd_tables: fine point not in window");
    };

    TauNumber zero{0, 0}, one{1, 0}, tau{0, 1}, tau2{1, 1}, tau3{1, 2};
    TauNumber onetau2 = one + tau2, onetau3 = one + tau3;
    struct Pair {
        TauNumber a, a1;
        const char* cls;
    };
    std::vector<Pair> pairs{
        {zero, zero, "0"},    {zero, one, "0"},      {one, zero, "LS"},
        {one, one, "LS"},     {one, tau, "LS"},      {tau, tau2, "SL"},
        {tau, onetau2, "SL"}, {tau2, tau2, "LL"},    {tau2, onetau2, "LL"},
        {tau2, tau3, "LL"},   {tau2, onetau3, "LL"},
    };

    CDTables tables;
    auto psi_labels = [&](std::size_t i) {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < psi.bar[i].size(); ++k)
            out.push_back(k == 0 ? "what" : "wtilde");
        for (std::size_t k = 0; k < psi.breve[i].size(); ++k)
            out.push_back(psi.breve[i].size() == 2 ? ("wbreve" + std::to_string(k + 1))
                                                   : "wbreve");
        return out;
    };
    for (const auto& p : pairs) {
        std::size_t ci = coarse_index(p.a);
        std::size_t fi = fine_index(p.a1);
        FunctionList cols = fine.knot_functions(fi);
        for (char kind : {'C', 'D'}) {
            const CenteredBasis& rows_basis = kind == 'C' ? phi0 : psi;
            FunctionList rows = rows_basis.knot_functions(ci);
            if (rows.empty() || cols.empty()) continue;
            CDBlock blk;
            blk.kind = kind;
            blk.coarse = p.a;
            blk.fine = p.a1;
            blk.knot_class = p.cls;
            blk.values = gram(rows, cols);
            blk.row_labels =
                kind == 'C' ? component_labels(phi0, ci) : psi_labels(ci);
            blk.col_labels = component_labels(fine, fi);
            tables.blocks.push_back(std::move(blk));
        }
    }
    return tables;
}

}  // namespace knotwave

#include "knotwave/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace knotwave {

namespace {

void strip_trailing_zeros(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double break_merge_eps(double scale) { return 1e-12 * std::max(1.0, scale); }

// Compensated (double-double) accumulation. The term-wise monomial
// antiderivative sum of a product of two higher-degree polynomials cancels
// by many orders of magnitude; plain double summation would lose the
// orthogonality identities past degree ~10.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double lo = a.lo + b.lo + s.lo;
    DD t = two_sum(s.hi, lo);
    return t;
}

inline DD dd_scale(DD a, double f) {
    DD p = two_prod(a.hi, f);
    p.lo += a.lo * f;
    return dd_add({p.hi, 0.0}, {0.0, p.lo});
}

inline DD dd_div(DD a, double d) {
    double q1 = a.hi / d;
    DD p = two_prod(q1, d);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    return two_sum(q1, r / d);
}

// integral over [0,1] of p*q via sum p_i q_j / (i+j+1), compensated
DD integral01_product(const Polynomial& p, const Polynomial& q) {
    DD acc;
    const auto& pc = p.coeffs();
    const auto& qc = q.coeffs();
    for (std::size_t i = 0; i < pc.size(); ++i)
        for (std::size_t j = 0; j < qc.size(); ++j) {
            DD t = two_prod(pc[i], qc[j]);
            t = dd_div(t, static_cast<double>(i + j + 1));
            acc = dd_add(acc, t);
        }
    return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(double v) {
    return v == 0.0 ? Polynomial{} : Polynomial{{v}};
}

Polynomial Polynomial::monomial(int degree, double coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0.0) return {};
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coeff;
    return Polynomial{std::move(c)};
}

double Polynomial::eval(double x) const {
    double r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial{std::move(c)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial{std::move(c)};
}

Polynomial Polynomial::scaled(double s) const {
    std::vector<double> c = coeffs_;
    for (double& x : c) x *= s;
    return Polynomial{std::move(c)};
}

Polynomial Polynomial::compose_linear(double c0, double c1) const {
    // Horner in the argument polynomial (c0 + c1 t).
    Polynomial lin{{c0, c1}};
    Polynomial r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * lin + Polynomial::constant(*it);
    return r;
}

double Polynomial::integral01() const {
    double s = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) s += coeffs_[i] / static_cast<double>(i + 1);
    return s;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

PiecewisePoly::PiecewisePoly(std::vector<double> breakpoints, std::vector<Polynomial> local_pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(local_pieces)) {
    if (breaks_.empty() && pieces_.empty()) return;
    if (breaks_.size() != pieces_.size() + 1)
        throw std::invalid_argument("PiecewisePoly: need one piece per breakpoint pair");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must increase strictly");
}

PiecewisePoly PiecewisePoly::on_unit(Polynomial p) {
    return PiecewisePoly{{0.0, 1.0}, {std::move(p)}};
}

PiecewisePoly PiecewisePoly::indicator(double u, double v, double value) {
    if (!(u < v)) throw std::invalid_argument("indicator: need u < v");
    return PiecewisePoly{{u, v}, {Polynomial::constant(value)}};
}

PiecewisePoly PiecewisePoly::from_global(std::vector<double> breakpoints,
                                         const std::vector<Polynomial>& global_pieces) {
    if (breakpoints.size() != global_pieces.size() + 1)
        throw std::invalid_argument("from_global: need one piece per breakpoint pair");
    std::vector<Polynomial> local;
    local.reserve(global_pieces.size());
    for (std::size_t i = 0; i < global_pieces.size(); ++i) {
        double u = breakpoints[i], v = breakpoints[i + 1];
        local.push_back(global_pieces[i].compose_linear(u, v - u));
    }
    return PiecewisePoly{std::move(breakpoints), std::move(local)};
}

double PiecewisePoly::support_left() const { return breaks_.empty() ? 0.0 : breaks_.front(); }
double PiecewisePoly::support_right() const { return breaks_.empty() ? 0.0 : breaks_.back(); }

double PiecewisePoly::eval(double x) const {
    if (pieces_.empty() || x < breaks_.front() || x > breaks_.back()) return 0.0;
    if (x == breaks_.back()) return pieces_.back().eval(1.0);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    double t = (x - breaks_[i]) / (breaks_[i + 1] - breaks_[i]);
    return pieces_[i].eval(t);
}

PiecewisePoly& PiecewisePoly::normalize(double rel_tol) {
    if (pieces_.empty()) return *this;
    double global = max_abs_coeff();
    double tol = rel_tol * global;
    for (auto& p : pieces_)
        if (p.max_abs_coeff() <= tol) p = Polynomial{};
    std::size_t lo = 0, hi = pieces_.size();
    while (lo < hi && pieces_[lo].is_zero()) ++lo;
    while (hi > lo && pieces_[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        breaks_.clear();
        pieces_.clear();
        return *this;
    }
    std::vector<double> nb(breaks_.begin() + static_cast<std::ptrdiff_t>(lo),
                           breaks_.begin() + static_cast<std::ptrdiff_t>(hi + 1));
    std::vector<Polynomial> np(pieces_.begin() + static_cast<std::ptrdiff_t>(lo),
                               pieces_.begin() + static_cast<std::ptrdiff_t>(hi));
    // Merge adjacent constant pieces of equal value. Higher degrees are left
    // split: re-expanding onto a wider interval would trade away the local
    // coordinate conditioning.
    std::vector<double> mb{nb.front()};
    std::vector<Polynomial> mp;
    for (std::size_t i = 0; i < np.size(); ++i) {
        if (!mp.empty() && mp.back().degree() <= 0 && np[i].degree() <= 0 &&
            std::abs(mp.back().coeff(0) - np[i].coeff(0)) <= 1e-14 * std::max(1.0, global)) {
            mb.back() = nb[i + 1];
            continue;
        }
        mp.push_back(np[i]);
        mb.push_back(nb[i + 1]);
    }
    breaks_ = std::move(mb);
    pieces_ = std::move(mp);
    return *this;
}

PiecewisePoly PiecewisePoly::composed_affine(double a, double a_plus) const {
    if (!(a < a_plus)) throw std::invalid_argument("composed_affine: need a < a_plus");
    std::vector<double> nb(breaks_.size());
    double h = a_plus - a;
    for (std::size_t i = 0; i < breaks_.size(); ++i) nb[i] = a + breaks_[i] * h;
    return PiecewisePoly{std::move(nb), pieces_};
}

PiecewisePoly PiecewisePoly::restricted(double u, double v) const {
    if (!(u < v)) throw std::invalid_argument("restricted: need u < v");
    if (pieces_.empty()) return {};
    double lo = std::max(u, breaks_.front());
    double hi = std::min(v, breaks_.back());
    double eps =
        break_merge_eps(std::max(std::abs(breaks_.front()), std::abs(breaks_.back())));
    if (hi - lo <= eps) return {};
    std::vector<double> nb;
    for (double b : breaks_)
        if (b > lo + eps && b < hi - eps) nb.push_back(b);
    nb.insert(nb.begin(), lo);
    nb.push_back(hi);
    std::vector<Polynomial> np;
    for (std::size_t i = 0; i + 1 < nb.size(); ++i) np.push_back(local_on(nb[i], nb[i + 1]));
    PiecewisePoly r{std::move(nb), std::move(np)};
    r.normalize();
    return r;
}

PiecewisePoly PiecewisePoly::translated(double shift) const {
    std::vector<double> nb(breaks_.size());
    for (std::size_t i = 0; i < breaks_.size(); ++i) nb[i] = breaks_[i] + shift;
    return PiecewisePoly{std::move(nb), pieces_};
}

PiecewisePoly PiecewisePoly::dilated(double s) const {
    if (!(s > 0.0)) throw std::invalid_argument("dilated: need s > 0");
    std::vector<double> nb(breaks_.size());
    for (std::size_t i = 0; i < breaks_.size(); ++i) nb[i] = breaks_[i] / s;
    return PiecewisePoly{std::move(nb), pieces_};
}

PiecewisePoly PiecewisePoly::scaled(double factor) const {
    std::vector<Polynomial> np;
    np.reserve(pieces_.size());
    for (const auto& p : pieces_) np.push_back(p.scaled(factor));
    PiecewisePoly r{breaks_, std::move(np)};
    return r;
}

Polynomial PiecewisePoly::local_on(double u, double v) const {
    if (pieces_.empty()) return {};
    double mid = 0.5 * (u + v);
    if (mid <= breaks_.front() || mid >= breaks_.back()) return {};
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), mid);
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    double pl = breaks_[i], pr = breaks_[i + 1];
    double alpha = (u - pl) / (pr - pl);
    double beta = (v - u) / (pr - pl);
    return pieces_[i].compose_linear(alpha, beta);
}

double PiecewisePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& p : pieces_) m = std::max(m, p.max_abs_coeff());
    return m;
}

namespace {

// Union-refined breakpoints of f and g inside [lo, hi].
std::vector<double> refined_breaks(const PiecewisePoly& f, const PiecewisePoly& g, double lo,
                                   double hi) {
    std::vector<double> bs;
    bs.push_back(lo);
    bs.push_back(hi);
    for (double b : f.breakpoints())
        if (b > lo && b < hi) bs.push_back(b);
    for (double b : g.breakpoints())
        if (b > lo && b < hi) bs.push_back(b);
    std::sort(bs.begin(), bs.end());
    double eps = break_merge_eps(std::max(std::abs(lo), std::abs(hi)));
    std::vector<double> out;
    for (double b : bs)
        if (out.empty() || b - out.back() > eps) out.push_back(b);
    if (out.size() >= 2 && hi - out.back() <= eps) out.back() = hi;
    return out;
}

}  // namespace

double inner_product(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (f.is_zero() || g.is_zero()) return 0.0;
    double lo = std::max(f.support_left(), g.support_left());
    double hi = std::min(f.support_right(), g.support_right());
    if (!(lo < hi)) return 0.0;
    std::vector<double> bs = refined_breaks(f, g, lo, hi);
    DD s;
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        double u = bs[i], v = bs[i + 1];
        Polynomial pf = f.local_on(u, v);
        if (pf.is_zero()) continue;
        Polynomial pg = g.local_on(u, v);
        if (pg.is_zero()) continue;
        s = dd_add(s, dd_scale(integral01_product(pf, pg), v - u));
    }
    return s.hi + s.lo;
}

double norm(const PiecewisePoly& f) {
    double s = inner_product(f, f);
    return s > 0.0 ? std::sqrt(s) : 0.0;
}

PiecewisePoly add(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    double lo = std::min(f.support_left(), g.support_left());
    double hi = std::max(f.support_right(), g.support_right());
    std::vector<double> bs = refined_breaks(f, g, lo, hi);
    std::vector<Polynomial> ps;
    ps.reserve(bs.size() - 1);
    for (std::size_t i = 0; i + 1 < bs.size(); ++i)
        ps.push_back(f.local_on(bs[i], bs[i + 1]) + g.local_on(bs[i], bs[i + 1]));
    PiecewisePoly r{std::move(bs), std::move(ps)};
    r.normalize();
    return r;
}

PiecewisePoly subtract(const PiecewisePoly& f, const PiecewisePoly& g) {
    return add(f, g.scaled(-1.0));
}

PiecewisePoly scale(const PiecewisePoly& f, double s) { return f.scaled(s); }

PiecewisePoly linear_combination(std::span<const double> coeffs,
                                 std::span<const PiecewisePoly> fs) {
    if (coeffs.size() != fs.size())
        throw std::invalid_argument("linear_combination: size mismatch");
    PiecewisePoly acc;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        acc = add(acc, fs[i].scaled(coeffs[i]));
    }
    return acc;
}

PiecewisePoly compose_affine(const PiecewisePoly& f, double a, double a_plus) {
    return f.composed_affine(a, a_plus);
}

PiecewisePoly restrict_to(const PiecewisePoly& f, double u, double v) {
    return f.restricted(u, v);
}

}  // namespace knotwave

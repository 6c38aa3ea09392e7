#include "knotwave/knots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace knotwave {

namespace {

constexpr double kTauReal = 1.6180339887498948482;  // (1+sqrt(5))/2

const TauNumber kOne{1, 0};
const TauNumber kTau{0, 1};
const TauNumber kInvTau{-1, 1};  // 1/tau = tau - 1

}  // namespace

bool operator<(TauNumber a, TauNumber b) {
    // sign of (a-b) = dp + dq*tau = ((2dp+dq) + dq*sqrt(5)) / 2
    std::int64_t dp = a.p - b.p, dq = a.q - b.q;
    std::int64_t A = 2 * dp + dq, B = dq;
    if (A >= 0 && B >= 0) return false;
    if (A <= 0 && B <= 0) return true;
    // Opposite signs: compare A^2 with 5 B^2 (wide to survive large inputs).
    __int128 lhs = static_cast<__int128>(A) * A;
    __int128 rhs = static_cast<__int128>(5) * B * B;
    return A < 0 ? lhs > rhs : lhs < rhs;
}

double TauNumber::to_real() const { return static_cast<double>(p) + static_cast<double>(q) * kTauReal; }

std::string TauNumber::str() const {
    return std::to_string(p) + (q >= 0 ? "+" : "") + std::to_string(q) + "t";
}

TauNumber tau_pow(int k) {
    TauNumber base = k >= 0 ? kTau : kInvTau;
    int n = std::abs(k);
    TauNumber r = kOne;
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

std::string fibonacci_word(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci_word: need n >= 1");
    std::string w = "L";
    while (static_cast<int>(w.size()) < n) {
        std::string next;
        next.reserve(2 * w.size());
        for (char c : w) next += (c == 'L') ? "LS" : "L";
        w = std::move(next);
    }
    return w.substr(0, static_cast<std::size_t>(n));
}

std::vector<TauNumber> tau_integers(int count) {
    if (count < 1) throw std::invalid_argument("tau_integers: need count >= 1");
    std::vector<TauNumber> out;
    out.reserve(static_cast<std::size_t>(count));
    out.push_back({0, 0});
    if (count == 1) return out;
    std::string word = fibonacci_word(count - 1);
    for (int i = 0; i + 1 < count; ++i) {
        TauNumber gap = word[static_cast<std::size_t>(i)] == 'L' ? kOne : kInvTau;
        out.push_back(out.back() + gap);
    }
    return out;
}

bool is_tau_integer(TauNumber v) {
    TauNumber zero{0, 0};
    if (v < zero) return false;
    if (v == zero) return true;
    // Greedy expansion; tau-integers are exactly the values whose expansion
    // uses non-negative powers only (golden mean has the finiteness property).
    int k = 0;
    while (tau_pow(k + 1) <= v) ++k;
    for (int guard = 0; guard < 128 && !(v == zero); ++guard) {
        while (k >= -45 && v < tau_pow(k)) --k;
        if (k < 0) return false;
        v = v - tau_pow(k);
        --k;  // canonical form forbids consecutive powers
    }
    return v == zero;
}

std::vector<int> tau_digits(TauNumber v) {
    TauNumber zero{0, 0};
    if (v < zero || !is_tau_integer(v)) throw std::domain_error("tau_digits: not a tau-integer");
    if (v == zero) return {};
    int k = 0;
    while (tau_pow(k + 1) <= v) ++k;
    std::vector<int> digits(static_cast<std::size_t>(k) + 1, 0);
    while (!(v == zero)) {
        while (v < tau_pow(k)) --k;
        digits[static_cast<std::size_t>(k)] = 1;
        v = v - tau_pow(k);
        --k;
    }
    return digits;
}

namespace {

// a in base + scale*Z_tau+ ?
bool in_coset(TauNumber a, TauNumber base, TauNumber scale_inv) {
    TauNumber d = a - base;
    if (d < TauNumber{0, 0}) return false;
    return is_tau_integer(d * scale_inv);
}

const TauNumber kInvTau2{2, -1};   // tau^-2
const TauNumber kInvTau3{-3, 2};   // tau^-3

}  // namespace

GapClass classify(TauNumber a) {
    if (!(TauNumber{0, 0} < a) || !is_tau_integer(a))
        throw std::domain_error("classify: need a positive tau-integer");
    if (in_coset(a, kOne, kInvTau2)) return GapClass::LS;
    if (in_coset(a, kTau, kInvTau2)) return GapClass::SL;
    if (in_coset(a, kTau * kTau, kInvTau3)) return GapClass::LL;
    throw std::logic_error("classify: partition property violated");
}

BetaMu beta_mu(TauNumber a) {
    switch (classify(a)) {
        case GapClass::LS: return {kOne, a - kOne};
        case GapClass::SL: return {kTau, a - kTau};
        case GapClass::LL: return {kTau * kTau, a - kTau * kTau};
    }
    throw std::logic_error("beta_mu: unreachable");
}

std::optional<std::size_t> KnotWindow::find(double x) const {
    double scale = 1.0;
    for (double k : knots) scale = std::max(scale, std::abs(k));
    for (std::size_t i = 0; i < knots.size(); ++i)
        if (std::abs(knots[i] - x) <= 1e-12 * scale) return i;
    return std::nullopt;
}

double KnotWindow::successor(double x) const {
    auto i = find(x);
    if (!i) throw std::invalid_argument("successor: knot not in window");
    if (*i + 1 < knots.size()) return knots[*i + 1];
    if (right_role == Role::endpoint) return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("successor: beyond the window cut");
}

double KnotWindow::predecessor(double x) const {
    auto i = find(x);
    if (!i) throw std::invalid_argument("predecessor: knot not in window");
    if (*i > 0) return knots[*i - 1];
    if (left_role == Role::endpoint) return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("predecessor: beyond the window cut");
}

KnotWindow make_window(std::vector<double> knots, Role left, Role right) {
    if (knots.size() < 3) throw std::invalid_argument("make_window: need at least three knots");
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        if (!(knots[i] < knots[i + 1]))
            throw std::invalid_argument("make_window: knots must increase strictly");
    return KnotWindow{std::move(knots), left, right};
}

KnotWindow TauWindow::to_window() const {
    std::vector<double> ks(scaled.size());
    double f = std::pow(kTauReal, -level);
    for (std::size_t i = 0; i < scaled.size(); ++i) ks[i] = scaled[i].to_real() * f;
    Role left = (!scaled.empty() && scaled.front() == TauNumber{0, 0}) ? Role::endpoint : Role::cut;
    return make_window(std::move(ks), left, Role::cut);
}

double TauWindow::knot(std::size_t i) const {
    return scaled[i].to_real() * std::pow(kTauReal, -level);
}

TauWindow tau_window(int level, int count) { return TauWindow{level, tau_integers(count)}; }

TauWindow refine(const TauWindow& w) {
    TauWindow out;
    out.level = w.level + 1;
    out.scaled.reserve(2 * w.scaled.size());
    for (std::size_t i = 0; i < w.scaled.size(); ++i) {
        out.scaled.push_back(kTau * w.scaled[i]);
        if (i + 1 < w.scaled.size()) {
            TauNumber gap = w.scaled[i + 1] - w.scaled[i];
            if (gap == kOne) {
                // long at level k: split at (1-1/tau) a + (1/tau) a_plus,
                // which is (tau-1) u + u_plus in level-(k+1) scaled units
                out.scaled.push_back(kInvTau * w.scaled[i] + w.scaled[i + 1]);
            } else if (!(gap == kInvTau)) {
                throw std::logic_error("refine: gap is neither 1 nor 1/tau");
            }
        }
    }
    return out;
}

}  // namespace knotwave

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotwave {

/// Element p + q*tau of Z[tau], tau = (1+sqrt(5))/2, as an exact integer
/// pair. Closed under +,-,* via tau^2 = 1 + tau; ordering is decided exactly
/// in integer arithmetic.
struct TauNumber {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend TauNumber operator+(TauNumber a, TauNumber b) { return {a.p + b.p, a.q + b.q}; }
    friend TauNumber operator-(TauNumber a, TauNumber b) { return {a.p - b.p, a.q - b.q}; }
    friend TauNumber operator*(TauNumber a, TauNumber b) {
        // (p+q tau)(r+s tau) = pr + (ps+qr) tau + qs (1+tau)
        return {a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p + a.q * b.q};
    }
    friend bool operator==(TauNumber a, TauNumber b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(TauNumber a, TauNumber b) { return !(a == b); }
    friend bool operator<(TauNumber a, TauNumber b);
    friend bool operator<=(TauNumber a, TauNumber b) { return a < b || a == b; }
    friend bool operator>(TauNumber a, TauNumber b) { return b < a; }
    friend bool operator>=(TauNumber a, TauNumber b) { return b <= a; }

    double to_real() const;
    std::string str() const;
};

TauNumber tau_pow(int k);  ///< tau^k for any integer k (negative allowed).

/// First `count` non-negative tau-integers in increasing order, generated by
/// the gap recursion of the Fibonacci word (long gap 1, short gap 1/tau).
std::vector<TauNumber> tau_integers(int count);

/// Exact membership test for the non-negative tau-integers.
bool is_tau_integer(TauNumber v);

/// Canonical digits eps_k of v = sum eps_k tau^k, eps_k eps_{k+1} = 0,
/// lowest power first. Empty for v = 0. Throws if v is not a tau-integer.
std::vector<int> tau_digits(TauNumber v);

/// First n letters of the gap word of the tau-integers (the Fibonacci word),
/// fixed point of L -> LS, S -> L.
std::string fibonacci_word(int n);

/// Gap pattern (predecessor gap, successor gap) of a positive tau-integer:
/// LS = (1, 1/tau), SL = (1/tau, 1), LL = (1, 1).
enum class GapClass { LS, SL, LL };

GapClass classify(TauNumber a);

/// Decomposition a = beta + mu with beta in {1, tau, tau^2} by class and
/// mu in tau^2 Z_tau+ (beta = 1 or tau) or tau^3 Z_tau+ (beta = tau^2).
struct BetaMu {
    TauNumber beta;
    TauNumber mu;
};
BetaMu beta_mu(TauNumber a);

enum class Role { endpoint, cut };

/// Finite strictly increasing knot list. The roles flag whether the first /
/// last knot is a true domain endpoint (inf J / sup J) or merely where the
/// window was cut out of a longer sequence.
struct KnotWindow {
    std::vector<double> knots;
    Role left_role = Role::cut;
    Role right_role = Role::cut;

    std::size_t size() const { return knots.size(); }
    double operator[](std::size_t i) const { return knots[i]; }
    /// Index of a knot matching x within 1e-12*scale, if any.
    std::optional<std::size_t> find(double x) const;
    /// Next knot after the one at value x; +infinity when x is the last knot
    /// and the right edge is a true endpoint. Throws if x is not a knot or
    /// the answer lies beyond a cut.
    double successor(double x) const;
    double predecessor(double x) const;
};

KnotWindow make_window(std::vector<double> knots, Role left = Role::cut, Role right = Role::cut);

/// Window of the lattice a^k = tau^{-k} Z_tau+: exact scaled knots u = tau^k x
/// (tau-integers) plus the level. Level 0 starting at 0 has a genuine left
/// endpoint (inf of R+).
struct TauWindow {
    int level = 0;
    std::vector<TauNumber> scaled;  ///< tau^level * knot values, in Z_tau+

    KnotWindow to_window() const;
    double knot(std::size_t i) const;
    std::size_t size() const { return scaled.size(); }
};

/// First `count` knots of a^level starting at 0.
TauWindow tau_window(int level, int count);

/// One tau refinement step: every long interval (length tau^{-k}) splits at
/// (1 - 1/tau) a + (1/tau) a_plus, short intervals pass through. The output
/// contains the input.
TauWindow refine(const TauWindow& w);

}  // namespace knotwave

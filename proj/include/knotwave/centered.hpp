#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "knotwave/knots.hpp"
#include "knotwave/linalg.hpp"

namespace knotwave {

/// Construction produced something violating its own contract.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis centered on a knot window. Functions are grouped per knot index i:
/// breve[i] holds the functions supported in the single interval
/// [k_i, k_{i+1}], bar[i] those supported in [k_{i-1}, k_{i+1}] that straddle
/// k_i. The last knot has no breve set; bar sets are empty at a true left
/// endpoint and wherever the neighbourhood is cut off by the window.
struct CenteredBasis {
    KnotWindow window;
    std::vector<FunctionList> breve;
    std::vector<FunctionList> bar;
    bool normalized = false;

    std::size_t knot_count() const { return window.knots.size(); }

    /// Functions attached to knot i, bar first (the component that does not
    /// vanish at the knot), then breve.
    FunctionList knot_functions(std::size_t i) const;
    FunctionList all() const;
    std::size_t total_count() const;

    /// Index range [lo, hi] of knots whose per-knot neighbourhood is fully
    /// represented: knots within distance 2 of a window cut are quarantined,
    /// true endpoints are not.
    std::pair<std::size_t, std::size_t> validated_range() const;
};

CenteredBasis normalized_copy(const CenteredBasis& basis);

struct KnotCheck {
    bool supports_ok = true;
    bool independent = true;
    std::string message;
    bool pass() const { return supports_ok && independent; }
};

struct CenteredReport {
    std::vector<KnotCheck> per_knot;
    bool pass = true;
};

/// Checks the centered-basis conditions: per-knot support containment (breve
/// inside one interval, bar straddling its knot) and local linear
/// independence of (bar_i, breve_i, bar_{i+1}) restricted to [k_i, k_{i+1}].
CenteredReport verify_centered(const CenteredBasis& basis);

struct OrthKnotCheck {
    double max_coupling = 0.0;
    bool pass = true;
};

struct OrthConditionReport {
    std::vector<OrthKnotCheck> per_knot;
    bool pass = true;
    double worst = 0.0;
};

/// The orthogonality criterion: for each knot, the part of V_a orthogonal to
/// the single-interval space must be orthogonal to V_{a+}. Fails on spline
/// spaces without the added per-interval functions; passes for every basis
/// this library constructs.
OrthConditionReport verify_orth_condition(const CenteredBasis& basis, double tol = 1e-9);

/// Regroups a basis built on a refinement of `coarse` as a basis centered on
/// `coarse` (every function lands in a coarse breve or bar slot by support).
CenteredBasis recenter(const CenteredBasis& fine, const KnotWindow& coarse);

/// Verification tolerance: KNOTWAVE_TOL env var when set (clamped to
/// [1e-14, 1e-4]), else 1e-9.
double verify_tol();

}  // namespace knotwave

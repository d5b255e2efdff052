#pragma once

#include <vector>

#include "fracwave/errors.hpp"

namespace fracwave::caputo {

// Real samples f(t0 + i*dt) on a uniform grid. Uniform spacing is
// definitional: every operation in this module assumes it.
struct SampledSignal {
    double t0;
    double dt;
    std::vector<double> values;
};

// Fractional order mu in (0, 2] with the derived integer n, the smallest
// integer >= mu (so n-1 < mu <= n with n in {1, 2}). mu exactly 1 or 2
// selects the classical finite-difference bypasses; the library's
// verification path needs those limits to hold exactly.
struct CaputoOrder {
    double mu;
    int n;
    explicit CaputoOrder(double mu_in);
};

// Caputo endpoint stencils near the grid origin have no accuracy guarantee:
// the first kUnreliablePrefix nodes of whole-grid results are best-effort
// values that callers must exclude from norms and convergence measurements.
inline constexpr int kUnreliablePrefix = 2;

// Caputo derivative at t = t0 + t_index*dt by direct product integration:
// the n-th finite-difference derivative of f is interpolated linearly per
// cell and integrated exactly against the kernel (t - tau)^{n-mu-1}.
// Requires t_index >= 2. Error O(dt^2) away from the origin for smooth f.
double caputo_quadrature(const SampledSignal& f, const CaputoOrder& order, int t_index);

// Caputo derivative on the whole grid with the L1 scheme (piecewise-linear
// f between nodes, exact kernel moments). Orders in (1, 2) are computed as
// order mu-1 applied to the finite-difference first derivative of f, which
// reuses the well-conditioned (0, 1) kernel. Independent of
// caputo_quadrature by construction: the two discretizations validate each
// other under refinement.
SampledSignal caputo_l1(const SampledSignal& f, const CaputoOrder& order);

// Closed-form Caputo derivative of t^p: Gamma(p+1)/Gamma(p+1-mu) t^{p-mu}.
// Integer p <= n-1 is annihilated (the n-th classical derivative of t^p is
// zero there), so those cases return exactly 0.
double power_rule_reference(double p, double mu, double t);

}  // namespace fracwave::caputo

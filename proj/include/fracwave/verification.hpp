#pragma once

#include <vector>

#include "fracwave/wave_models.hpp"

namespace fracwave::verification {

// Convergence bookkeeping for one fractional order: residual infinity norms
// of the governing equation across a grid refinement sequence, plus the
// least-squares slope of log(residual) against log(dt).
struct ResidualReport {
    double gamma_or_delta = 0.0;
    std::vector<int> grid_sizes;
    std::vector<double> residual_inf_norms;
    double empirical_order = 0.0;
};

enum class Mode { time, space };

// Samples u(t) on n_grid+1 uniform nodes of [0, t_max], applies the numerical
// Caputo operator of order 2*gamma, and returns max |D^{2 gamma} u + omega^2 u|
// over the reliable window. The window starts at a fixed fraction of t_max
// (never earlier than the flagged endpoint nodes): the memory kernel is
// singular at t = 0, so a refinement-stable norm must hold the physical
// window fixed rather than the node count.
// Requires n_grid >= 64 and t_max > 0.
double time_ode_residual(const waves::TimeFractionalWave& w, double t_max, int n_grid);

// Mirror of time_ode_residual for |D^{2 delta} u + k_tilde^2 u| in x.
double space_ode_residual(const waves::SpaceFractionalWave& w, double x_max, int n_grid);

// One report per order over the given refinement sequence (strictly
// increasing, at least 3 entries), using the coupled-mode wave with unit
// omega0 (time) or unit k (space) on [0, 5]. An order whose evaluation fails
// mid-sequence yields a partial report: completed grids kept, slope NaN when
// fewer than two residuals exist.
std::vector<ResidualReport> convergence_study(const std::vector<waves::FractionalOrder>& orders,
                                              const std::vector<int>& grids, Mode mode);

}  // namespace fracwave::verification

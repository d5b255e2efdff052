#pragma once

#include "fracwave/errors.hpp"

namespace fracwave::special {

// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
// alpha is restricted to (0, 2]: every consumer in this library evaluates
// E_{2*order} with order in (0, 1]. beta defaults to the one-parameter case.
struct MLParams {
    double alpha;
    double beta = 1.0;
};

enum class Strategy { series, asymptotic, contour };

// Every Mittag-Leffler evaluation reports how it was computed and a running
// estimate of its absolute error. est_abs_error is an estimate, not a hard
// interval bound, but it is built from per-term rounding models plus
// quadrature error indicators and is deliberately pessimistic.
struct EvalReport {
    double value;
    double est_abs_error;
    Strategy strategy;
    int terms_or_nodes;
};

// Gamma function on the positive half line. Throws std::domain_error for
// x <= 0; overflows to +inf for x > 171.62 like the underlying libm call.
double gamma(double x);

// Reciprocal gamma 1/Gamma(x), entire in x: well defined for all reals,
// returning 0 at the poles x = 0, -1, -2, ... Used by the series code and by
// the Caputo power rule, where Gamma hits poles at integer-order edge cases.
double rgamma(double x);

// E_{alpha,beta}(z) for real z. Strategy selection, accuracy model and the
// error contract are documented in the implementation. For |z| <= 50 the
// result is certified to 1e-10 (absolute for z <= 0, relative for z > 0);
// if that certification fails an accuracy_error is thrown instead of
// returning a silently bad value. Invalid parameters throw
// std::invalid_argument.
EvalReport mittag_leffler(const MLParams& params, double z);

// Plain truncated power series with compensated summation. Intentionally
// naive: serves as an independent oracle for mittag_leffler in tests, never
// as a production path. Throws divergence_error when the term magnitudes are
// still growing at the truncation point.
double ml_series_oracle(const MLParams& params, double z, int n_terms);

}  // namespace fracwave::special

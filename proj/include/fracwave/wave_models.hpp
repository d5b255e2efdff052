#pragma once

#include <complex>

#include "fracwave/errors.hpp"

namespace fracwave::waves {

// Order of a fractional time or space derivative, restricted to (0, 1];
// the governing equations carry twice this order.
struct FractionalOrder {
    double value;
    explicit FractionalOrder(double v);
};

// Dimensionless relative permittivity/permeability plus the vacuum light
// speed; fixes the wave speed in the medium.
struct MediumParams {
    double epsilon;
    double mu;
    double c;
    MediumParams(double epsilon_in, double mu_in, double c_in);
    double wave_speed() const;  // c / sqrt(epsilon mu)
};

// Time-fractional plane wave z(x,t) = z0 e^{-ikx} u(t). Conventions used
// throughout: omega0 = 1/T0 and k = 1/lambda (no 2 pi factors), which is the
// normalization under which the coupled-mode relation gamma = sigma^2
// omega0^2 is dimensionless. sigma carries time units and is confined to
// (0, T0].
struct TimeFractionalWave {
    FractionalOrder gamma;
    double omega0;
    double sigma;
    double k;
    std::complex<double> z0;

    TimeFractionalWave(FractionalOrder gamma_in, double omega0_in, double sigma_in,
                       double k_in = 1.0, std::complex<double> z0_in = 1.0);
    // coupled mode: sigma = sqrt(gamma)/omega0, making gamma = sigma^2 omega0^2
    static TimeFractionalWave coupled(FractionalOrder gamma_in, double omega0_in,
                                      double k_in = 1.0, std::complex<double> z0_in = 1.0);
    // effective squared rate omega^2 = omega0^2 sigma^{2(1-gamma)}; carries
    // units time^{-2 gamma}, which no plain unit system can express, so it is
    // documented rather than enforced
    double omega_sq() const;
};

// Space-fractional plane wave z(x,t) = z0 e^{i omega t} u(x); exact mirror
// of the time-fractional bundle with k, sigma_x and lambda = 1/k.
struct SpaceFractionalWave {
    FractionalOrder delta;
    double k;
    double sigma_x;
    double omega;
    std::complex<double> z0;

    SpaceFractionalWave(FractionalOrder delta_in, double k_in, double sigma_x_in,
                        double omega_in = 1.0, std::complex<double> z0_in = 1.0);
    static SpaceFractionalWave coupled(FractionalOrder delta_in, double k_in,
                                       double omega_in = 1.0,
                                       std::complex<double> z0_in = 1.0);
    double k_tilde_sq() const;  // k^2 sigma_x^{2(1-delta)}
};

// sigma resolving the coupled-mode constraint gamma = sigma^2 omega0^2;
// always lands in (0, T0] because gamma <= 1
double couple_sigma(const FractionalOrder& gamma, double omega0);
double couple_sigma_x(const FractionalOrder& delta, double k);

// u(t) = E_{2 gamma}(-omega^2 t^{2 gamma}); cos(omega0 t) at gamma = 1 and
// e^{-omega^2 t} at gamma = 1/2
double time_solution_u(const TimeFractionalWave& w, double t);
std::complex<double> time_solution_field(const TimeFractionalWave& w, double x, double t);
// coupled-mode universal curve u = E_{2 gamma}(-gamma^{1-gamma} s^{2 gamma}),
// s = t/T0
double time_solution_dimensionless(const FractionalOrder& gamma, double t_tilde);
// e-folding time 1/(omega0^2 sigma) of the gamma = 1/2 solution; throws
// std::domain_error for any other order
double decay_time(const TimeFractionalWave& w);

double space_solution_u(const SpaceFractionalWave& w, double x);
std::complex<double> space_solution_field(const SpaceFractionalWave& w, double x, double t);
double space_solution_dimensionless(const FractionalOrder& delta, double x_tilde);
double decay_length(const SpaceFractionalWave& w);

}  // namespace fracwave::waves

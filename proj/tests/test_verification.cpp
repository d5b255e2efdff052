#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fracwave/verification.hpp"
#include "fracwave/wave_models.hpp"

using namespace fracwave;
using verification::convergence_study;
using verification::Mode;
using verification::ResidualReport;
using verification::space_ode_residual;
using verification::time_ode_residual;

TEST_CASE("classical limits satisfy their equations on a single grid") {
    // gamma = 1: D^2 cos + cos = 0 up to the central-difference error
    waves::TimeFractionalWave w1 = waves::TimeFractionalWave::coupled(waves::FractionalOrder(1.0), 1.0);
    CHECK(time_ode_residual(w1, 5.0, 1024) <= 1e-4);

    // gamma = 1/2: D^1 e^{-w t} + w e^{-w t} = 0 up to dt^2
    waves::TimeFractionalWave wh = waves::TimeFractionalWave::coupled(waves::FractionalOrder(0.5), 1.0);
    CHECK(time_ode_residual(wh, 5.0, 1024) <= 1e-5);

    waves::SpaceFractionalWave s1 = waves::SpaceFractionalWave::coupled(waves::FractionalOrder(1.0), 1.0);
    CHECK(space_ode_residual(s1, 5.0, 1024) <= 1e-4);
    waves::SpaceFractionalWave sh = waves::SpaceFractionalWave::coupled(waves::FractionalOrder(0.5), 1.0);
    CHECK(space_ode_residual(sh, 5.0, 1024) <= 1e-5);
}

TEST_CASE("fractional orders refine strictly") {
    waves::TimeFractionalWave w = waves::TimeFractionalWave::coupled(waves::FractionalOrder(0.75), 1.0);
    double r128 = time_ode_residual(w, 5.0, 128);
    double r256 = time_ode_residual(w, 5.0, 256);
    double r512 = time_ode_residual(w, 5.0, 512);
    CHECK(r256 < r128);
    CHECK(r512 < r256);

    waves::SpaceFractionalWave ws = waves::SpaceFractionalWave::coupled(waves::FractionalOrder(0.6), 1.0);
    double s128 = space_ode_residual(ws, 5.0, 128);
    double s256 = space_ode_residual(ws, 5.0, 256);
    double s512 = space_ode_residual(ws, 5.0, 512);
    CHECK(s256 < s128);
    CHECK(s512 < s256);
}

TEST_CASE("finest-grid residual sits below the relative equation scale") {
    waves::TimeFractionalWave w = waves::TimeFractionalWave::coupled(waves::FractionalOrder(0.25), 1.0);
    // max |u| = u(0) = 1 for the monotone quarter-order solution
    CHECK(time_ode_residual(w, 5.0, 4096) <= 1e-3 * w.omega_sq());
}

TEST_CASE("matched time and space studies coincide") {
    // omega_sq and k_tilde_sq are the same expression of the same inputs and
    // the residual path is shared, so matched parameters give matched reports
    for (double o : {0.5, 0.7, 1.0}) {
        waves::TimeFractionalWave wt = waves::TimeFractionalWave::coupled(waves::FractionalOrder(o), 1.0);
        waves::SpaceFractionalWave wx = waves::SpaceFractionalWave::coupled(waves::FractionalOrder(o), 1.0);
        double rt = time_ode_residual(wt, 5.0, 256);
        double rx = space_ode_residual(wx, 5.0, 256);
        CHECK(rt == doctest::Approx(rx).epsilon(1e-12));
    }
}

TEST_CASE("convergence_study slopes") {
    std::vector<int> grids = {128, 256, 512};

    auto classical = convergence_study({waves::FractionalOrder(1.0)}, grids, Mode::time);
    REQUIRE(classical.size() == 1);
    REQUIRE(classical[0].residual_inf_norms.size() == 3);
    CHECK(classical[0].gamma_or_delta == 1.0);
    CHECK(classical[0].empirical_order >= 1.7);
    CHECK(classical[0].empirical_order <= 2.3);

    auto halves = convergence_study({waves::FractionalOrder(0.5)}, grids, Mode::time);
    REQUIRE(halves.size() == 1);
    CHECK(halves[0].empirical_order >= 1.0);

    auto both = convergence_study({waves::FractionalOrder(0.75), waves::FractionalOrder(1.0)},
                                  grids, Mode::space);
    REQUIRE(both.size() == 2);
    CHECK(both[0].gamma_or_delta == 0.75);
    for (const auto& rep : both) {
        REQUIRE(rep.residual_inf_norms.size() == 3);
        CHECK(rep.residual_inf_norms[1] < rep.residual_inf_norms[0]);
        CHECK(rep.residual_inf_norms[2] < rep.residual_inf_norms[1]);
    }
}

TEST_CASE("study input validation and partial reports") {
    CHECK(convergence_study({}, {128, 256, 512}, Mode::time).empty());

    CHECK_THROWS_AS(convergence_study({waves::FractionalOrder(0.5)}, {128, 256}, Mode::time),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        convergence_study({waves::FractionalOrder(0.5)}, {128, 128, 256}, Mode::time),
        std::invalid_argument);
    CHECK_THROWS_AS(
        convergence_study({waves::FractionalOrder(0.5)}, {256, 128, 512}, Mode::time),
        std::invalid_argument);

    // a grid below the operator's floor fails that order; the report keeps
    // whatever completed and marks the slope unavailable
    auto partial = convergence_study({waves::FractionalOrder(0.5)}, {16, 32, 128}, Mode::time);
    REQUIRE(partial.size() == 1);
    CHECK(partial[0].residual_inf_norms.empty());
    CHECK(std::isnan(partial[0].empirical_order));
}

TEST_CASE("residual entry point validation") {
    waves::TimeFractionalWave w = waves::TimeFractionalWave::coupled(waves::FractionalOrder(0.5), 1.0);
    CHECK_THROWS_AS(time_ode_residual(w, 5.0, 32), std::invalid_argument);
    CHECK_THROWS_AS(time_ode_residual(w, 0.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(time_ode_residual(w, -1.0, 128), std::invalid_argument);
}

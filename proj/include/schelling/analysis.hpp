#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "schelling/rational.hpp"

namespace schelling {

struct Thresholds {
    double kappa0{0};
    double lambda0{0};
    double tol{0};
    double kappa0_residual{0};
    double lambda0_residual{0};
};

enum class Regime : uint8_t { CompleteSegregation, Static, Unclassified };

struct RegimeReport {
    Regime regime{Regime::Unclassified};
    std::string matched_condition;
    double g_value{std::numeric_limits<double>::quiet_NaN()};
    Thresholds thresholds;
};

enum class HappinessRegime : uint8_t { Balanced, Unbalanced, NotApplicable };

struct InitialExpectation {
    double mixing_expectation{0};
    HappinessRegime regime{HappinessRegime::NotApplicable};
};

/// Roots of the two threshold equations on [0, 0.5), by bisection after a
/// monotonicity check on the bracket. kappa0 solves
/// (1-x)^(1-x) = (0.5-x)^(0.5-x); lambda0 additionally carries sqrt(2x).
Thresholds solve_thresholds(double tol);

/// Log-space residuals of the two defining equations (zero at the root).
double kappa_equation_residual(double x);
double lambda_equation_residual(double x);

/// g(tau,rho) = 0.5*((1-tau)^(1-tau)/(0.5-tau)^(0.5-tau))^2 - rho,
/// evaluated in log space. Requires 0 < tau < 0.5.
double g_func(double tau, double rho);

/// Theorem-style regime classification for rho <= 0.5 (throws otherwise).
RegimeReport classify_regime(const Rational& tau, const Rational& rho, double tol = 1e-10);

/// ln P(B(t,p) >= ceil(k)), via log-gamma term summation with log-sum-exp.
/// Counts meeting the threshold exactly are included. Returns 0 for k <= 0
/// and -infinity for an empty event.
double log_binomial_tail(long long t, const Rational& p, double k);

/// (ln P_stab, ln P_unhap lower bound): the stable-interval tail from
/// B(w, 1-rho) at (2w+1)tau and the unhappy-node tail from B(2w, rho)
/// at 2w(1-tau).
std::pair<double, double> rare_event_probs(int w, const Rational& tau, const Rational& rho);

/// Expected initial mixing index 2nw*rho*(1-rho) and the Table-3 style
/// happiness regime for the given tau.
InitialExpectation expected_initial(long long n, int w, const Rational& tau, const Rational& rho);

/// Ruin probability bound e^(-2 r delta^2 / t0) / (1 - e^(-2 delta^2))
/// for the dominated biased walk. delta must be positive.
double ruin_bound(double r, double t0, double delta);

const char* regime_name(Regime r);
const char* happiness_regime_name(HappinessRegime r);

} // namespace schelling

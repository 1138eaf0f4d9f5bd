#include "schelling/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace schelling {

namespace {

double xlnx(double x) { return x <= 0 ? 0.0 : x * std::log(x); }

double bisect(double lo, double hi, double tol, double (*f)(double)) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("solve_thresholds: no sign change in bracket");
    // The residuals are continuous and strictly monotone here; probe a grid
    // before trusting the bracket.
    double prev = flo;
    for (int i = 1; i <= 16; ++i) {
        double x = lo + (hi - lo) * i / 17.0;
        double fx = f(x);
        if (flo > 0 ? fx > prev : fx < prev)
            throw std::runtime_error("solve_thresholds: residual not monotone on bracket");
        prev = fx;
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double kappa_equation_residual(double x) { return xlnx(1 - x) - xlnx(0.5 - x); }

double lambda_equation_residual(double x) {
    return xlnx(1 - x) - xlnx(0.5 - x) - 0.5 * std::log(2 * x);
}

Thresholds solve_thresholds(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("solve_thresholds: tol must be positive");
    Thresholds t;
    t.tol = tol;
    t.kappa0 = bisect(0.25, 0.45, tol, &kappa_equation_residual);
    t.lambda0 = bisect(0.25, 0.45, tol, &lambda_equation_residual);
    t.kappa0_residual = kappa_equation_residual(t.kappa0);
    t.lambda0_residual = lambda_equation_residual(t.lambda0);
    return t;
}

double g_func(double tau, double rho) {
    if (!(tau > 0 && tau < 0.5)) throw std::domain_error("g_func: tau must be in (0, 0.5)");
    return 0.5 * std::exp(2.0 * (xlnx(1 - tau) - xlnx(0.5 - tau))) - rho;
}

RegimeReport classify_regime(const Rational& tau, const Rational& rho, double tol) {
    if (rho > Rational(1, 2))
        throw std::invalid_argument("classify_regime: mirror types so that rho <= 0.5");
    RegimeReport report;
    report.thresholds = solve_thresholds(tol);
    const double td = tau.to_double();
    const double rd = rho.to_double();
    if (td > 0 && td < 0.5) report.g_value = g_func(td, rd);

    const Rational half(1, 2);
    const Rational one(1);
    if (tau > half && rho < half && tau + rho != one) {
        report.regime = Regime::CompleteSegregation;
        report.matched_condition = "tau>0.5 & rho<0.5 & tau+rho!=1";
        return report;
    }
    const double k0 = report.thresholds.kappa0;
    const double l0 = report.thresholds.lambda0;
    if (td <= l0 && rd <= l0) {
        report.regime = Regime::Static;
        report.matched_condition = "tau<=lambda0 & rho<=lambda0";
    } else if (td <= k0 && rho < half) {
        report.regime = Regime::Static;
        report.matched_condition = "tau<=kappa0 & rho<0.5";
    } else if (tau <= half && rho <= Rational(1, 4)) {
        report.regime = Regime::Static;
        report.matched_condition = "tau<=0.5 & rho<=0.25";
    } else if (2 * rd * (1 - 2 * k0) + td + k0 < 1) {
        report.regime = Regime::Static;
        report.matched_condition = "2rho(1-2kappa0)+tau+kappa0<1";
    } else {
        report.regime = Regime::Unclassified;
        report.matched_condition = "none";
    }
    return report;
}

double log_binomial_tail(long long t, const Rational& p, double k) {
    if (!(Rational(0) < p && p < Rational(1)))
        throw std::invalid_argument("log_binomial_tail: p must be in (0,1)");
    if (t < 0) throw std::invalid_argument("log_binomial_tail: t must be non-negative");
    long long m = static_cast<long long>(std::ceil(k));
    if (m <= 0) return 0.0;
    if (m > t) return -std::numeric_limits<double>::infinity();
    const double lp = std::log(static_cast<double>(p.num)) - std::log(static_cast<double>(p.den));
    const double lq =
        std::log(static_cast<double>(p.den - p.num)) - std::log(static_cast<double>(p.den));
    const double lgt = std::lgamma(static_cast<double>(t) + 1);
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(t - m + 1));
    for (long long j = m; j <= t; ++j) {
        double lt = lgt - std::lgamma(static_cast<double>(j) + 1) -
                    std::lgamma(static_cast<double>(t - j) + 1) + j * lp + (t - j) * lq;
        terms.push_back(lt);
        max_term = std::max(max_term, lt);
    }
    double sum = 0;
    for (double lt : terms) sum += std::exp(lt - max_term);
    return max_term + std::log(sum);
}

std::pair<double, double> rare_event_probs(int w, const Rational& tau, const Rational& rho) {
    const Rational one(1);
    const double stab_threshold = tau.to_double() * (2.0 * w + 1.0);
    const double unhap_threshold = 2.0 * w * (1.0 - tau.to_double());
    double log_p_stab = log_binomial_tail(w, one - rho, stab_threshold);
    double log_p_unhap = log_binomial_tail(2LL * w, rho, unhap_threshold);
    return {log_p_stab, log_p_unhap};
}

InitialExpectation expected_initial(long long n, int w, const Rational& tau,
                                    const Rational& rho) {
    InitialExpectation e;
    const double r = rho.to_double();
    e.mixing_expectation = 2.0 * static_cast<double>(n) * w * r * (1 - r);
    const Rational one(1);
    const Rational half(1, 2);
    if (tau > half && tau + rho > one) e.regime = HappinessRegime::Balanced;
    else if (tau > half && tau + rho < one) e.regime = HappinessRegime::Unbalanced;
    else e.regime = HappinessRegime::NotApplicable;
    return e;
}

double ruin_bound(double r, double t0, double delta) {
    if (!(r > 0) || !(t0 > 0)) throw std::invalid_argument("ruin_bound: r, t0 must be positive");
    if (!(delta > 0)) throw std::domain_error("ruin_bound: delta must be positive");
    return std::exp(-2.0 * r * delta * delta / t0) / (1.0 - std::exp(-2.0 * delta * delta));
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::CompleteSegregation: return "CompleteSegregation";
        case Regime::Static: return "Static";
        default: return "Unclassified";
    }
}

const char* happiness_regime_name(HappinessRegime r) {
    switch (r) {
        case HappinessRegime::Balanced: return "Balanced";
        case HappinessRegime::Unbalanced: return "Unbalanced";
        default: return "NotApplicable";
    }
}

} // namespace schelling

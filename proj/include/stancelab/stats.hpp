#pragma once
// Basic statistics: means, population/sample deviation, Welch's two-sample
// t-test with a continued-fraction incomplete beta for the p-value.

#include <span>

namespace stancelab {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);
double population_stddev(std::span<const double> xs);
double sample_stddev(std::span<const double> xs);

// Regularized incomplete beta I_x(a, b), accurate to ~1e-12 via the Lentz
// continued fraction.
double incomplete_beta(double a, double b, double x);

// Two-sided Student-t tail probability for |t| with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
    double mean_a = 0.0, mean_b = 0.0;
    double sd_a = 0.0, sd_b = 0.0;  // sample standard deviations
    bool significant = false;       // p < 0.05
};

// Welch unequal-variance form; throws DomainError when either sample has
// fewer than two values or both have zero variance.
TTestResult welch_ttest(std::span<const double> a, std::span<const double> b);

}  // namespace stancelab

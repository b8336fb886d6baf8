#pragma once

namespace meridian {

/// Audit of the published closed-form g for the constant-curvature (circle)
/// family: g = 2 (sin(au + a c1) - 1) sqrt(1 + sin(au + a c1)) / cos(au + a c1).
/// Its derivative is measured by a brute-force finite difference and tested
/// against the unit-speed constraint f'^2 + g'^2 = 1.
struct PrintedCircleAudit {
    double a = 0.0, c1 = 0.0, u = 0.0;
    double printed_g = 0.0;
    double printed_gprime = 0.0;       // finite difference of the formula
    double fprime = 0.0;               // -sin(a u + a c1)
    double constraint_residual = 0.0;  // |f'^2 + printed_g'^2 - 1|
    double predicted_residual = 0.0;   // algebraic value of the same quantity
    bool satisfies_constraint = false;
};

PrintedCircleAudit audit_printed_circle_g(double a, double c1, double u);

/// Audit of the published closed-form g for the cosh family,
/// g = 1/2 sqrt((4 b^2 E2 + a E2^2 - 2 a E2 + a) / (b^2 E2)) with
/// E2 = e^{2(u+c)/b} and a = -A^2. The radical is compared both against the
/// slope g' = sqrt(1 - f'^2) and against g itself (anchored g(u0) = 0) on a
/// closed grid over [u0, u1].
struct PrintedCoshAudit {
    double A = 0.0, b = 0.0, c = 0.0, u0 = 0.0, u1 = 0.0;
    double max_radical_vs_gprime = 0.0;
    double max_radical_vs_g = 0.0;
    double u_sample = 0.0;
    double radical_at_sample = 0.0;
    double gprime_at_sample = 0.0;
    double g_at_sample = 0.0;
    bool matches_gprime = false;  // within 1e-6 everywhere
    bool matches_g = false;       // within 0.1 everywhere
};

PrintedCoshAudit audit_printed_cosh_g(double A, double b, double c,
                                      double u0, double u1, double u_sample = 0.4);

}  // namespace meridian

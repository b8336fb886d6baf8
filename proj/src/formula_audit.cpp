#include "meridian/formula_audit.hpp"

#include <algorithm>
#include <cmath>

#include "meridian/numerics.hpp"
#include "meridian/profile.hpp"

namespace meridian {

PrintedCircleAudit audit_printed_circle_g(double a, double c1, double u) {
    PrintedCircleAudit out;
    out.a = a;
    out.c1 = c1;
    out.u = u;

    auto printed = [a, c1](double x) {
        const double s = std::sin(a * x + a * c1);
        const double co = std::cos(a * x + a * c1);
        return 2.0 * (s - 1.0) * std::sqrt(1.0 + s) / co;
    };

    out.printed_g = printed(u);
    out.printed_gprime = fd_derivative(printed, u, 1, u - 1e-3, u + 1e-3);
    out.fprime = -std::sin(a * u + a * c1);
    out.constraint_residual =
        std::fabs(out.fprime * out.fprime + out.printed_gprime * out.printed_gprime - 1.0);

    // The formula's derivative simplifies to a sqrt(1 + sin), so the residual
    // should measure |sin^2 + a^2 (1 + sin) - 1|.
    const double s = std::sin(a * u + a * c1);
    out.predicted_residual = std::fabs(s * s + a * a * (1.0 + s) - 1.0);
    out.satisfies_constraint = out.constraint_residual <= 1e-8;
    return out;
}

PrintedCoshAudit audit_printed_cosh_g(double A, double b, double c,
                                      double u0, double u1, double u_sample) {
    PrintedCoshAudit out;
    out.A = A;
    out.b = b;
    out.c = c;
    out.u0 = u0;
    out.u1 = u1;
    out.u_sample = u_sample;

    const double ap = -A * A;
    auto radical = [&](double u) {
        const double E2 = std::exp(2.0 * (u + c) / b);
        return 0.5 * std::sqrt((4.0 * b * b * E2 + ap * E2 * E2 - 2.0 * ap * E2 + ap) /
                               (b * b * E2));
    };

    const Profile prof = Profile::cosh_family(A, b, c, u0, u1);
    for (double u : linspace_closed(u0, u1, 101)) {
        const ProfileSample s = prof.sample(u);
        out.max_radical_vs_gprime =
            std::max(out.max_radical_vs_gprime, std::fabs(radical(u) - s.g1));
        out.max_radical_vs_g = std::max(out.max_radical_vs_g, std::fabs(radical(u) - s.g));
    }

    const ProfileSample s = prof.sample(u_sample);
    out.radical_at_sample = radical(u_sample);
    out.gprime_at_sample = s.g1;
    out.g_at_sample = s.g;
    out.matches_gprime = out.max_radical_vs_gprime <= 1e-6;
    out.matches_g = out.max_radical_vs_g <= 0.1;
    return out;
}

}  // namespace meridian

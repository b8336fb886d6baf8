#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "meridian/meridian_surface.hpp"
#include "meridian/profile.hpp"

namespace meridian {

/// Interior evaluation grid: nu x nv points strictly inside the surface
/// rectangle (endpoints excluded so centered stencils never clamp).
struct GridSpec {
    int nu = 41;
    int nv = 41;
};

/// Weingarten residual Phi = K_u H_v - K_v H_u sampled over a grid, computed
/// through the analytic factorization and, independently, through
/// finite-difference partials of the closed-form K and H fields.
struct ResidualGrid {
    std::vector<double> us, vs;
    std::vector<double> phi;     // analytic values, row-major (u outer)
    std::vector<double> phi_fd;  // finite-difference Jacobian values
    double max_abs_phi = 0.0;
    double argmax_u = 0.0, argmax_v = 0.0;
    double max_path_disagreement = 0.0;          // max |phi - phi_fd|
    std::vector<std::size_t> minimal_points;     // indices where H ~ 0

    double at(std::size_t i, std::size_t j) const { return phi[i * vs.size() + j]; }
};

enum class CaseTag {
    PlanarCaseI,
    RuledE3_IIa,
    CircleFamily_IIb,
    RuledE4_IIIa,
    CoshFamily_IIIb,
    NotWeingarten,
    Indeterminate,
};

std::string to_string(CaseTag tag);

struct Tolerances {
    double tol_kappa = 1e-6;  // curvature zero/constancy, absolute
    double tol_alpha = 1e-6;  // kappa_alpha zero/constancy, absolute
    double tol_ode = 1e-7;    // |f f''' - f' f''| bound
    double evidence = 1e-4;   // residual magnitude that counts as evidence
};

/// The statistics the decision procedure consumed.
struct Evidence {
    double max_kappa = 0.0;
    double std_kappa = 0.0;
    double max_kappa_alpha = 0.0;
    double std_kappa_alpha = 0.0;
    double max_f2 = 0.0;
    double max_ode = 0.0;      // max |f f''' - f' f''|
    double max_residual = 0.0; // max |Phi| (analytic path)
};

struct WeingartenVerdict {
    CaseTag tag = CaseTag::Indeterminate;
    Evidence evidence;
    Tolerances tolerances;
    GridSpec grid;
};

ResidualGrid residual(const MeridianSurface& m, const GridSpec& grid);

/// Evidence-based classification into the five positive cases, NotWeingarten,
/// or Indeterminate. Each threshold comparison on the decision path is
/// decisive only when the measured value sits at least a factor 10 away from
/// the tolerance; otherwise the verdict is Indeterminate.
WeingartenVerdict classify(const MeridianSurface& m, const GridSpec& grid,
                           const Tolerances& tol = Tolerances{});

/// Parameters of the explicit solution families (a, c1, c2 for the circle
/// family; A, b, c for the cosh family).
struct FamilyParams {
    double a = 1.0, c1 = 0.0, c2 = 0.0;
    double A = 0.5, b = 2.0, c = 0.0;
};

struct FamilyCheck {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct FamilyReport {
    CaseTag tag = CaseTag::Indeterminate;
    CaseTag roundtrip = CaseTag::Indeterminate;
    std::vector<FamilyCheck> checks;
    double max_phi = 0.0;
    double max_phi_fd = 0.0;
    bool passed = false;
};

/// Builds the canonical surface for a positive case tag (spiral directrix
/// for the III cases, small circle for II(b)), runs residual + classify, and
/// reports the family-defining residuals.
FamilyReport verify_family(CaseTag tag, const FamilyParams& params, const GridSpec& grid);

/// Same, with an explicit parameter rectangle instead of the per-family
/// default domain.
FamilyReport verify_family(CaseTag tag, const FamilyParams& params, const GridSpec& grid,
                           double u0, double u1, double v0, double v1);

}  // namespace meridian

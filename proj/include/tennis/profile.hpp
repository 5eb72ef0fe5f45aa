#pragma once

#include <string>
#include <vector>

namespace tennis {

/// One Fourier term  cos_coeff*cos(2*pi*k*t) + sin_coeff*sin(2*pi*k*t).
struct Harmonic {
  int k = 1;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

/// 1-periodic racket height as a finite Fourier series.  Evaluation and all
/// derivatives are closed-form, so the profile is C^infinity by construction
/// (only C^3 is ever needed).  The same struct doubles as a generic
/// trigonometric polynomial for the series algebra below.
struct RacketProfile {
  std::vector<Harmonic> harmonics;
  double mean_height = 0.0;
};

/// f, f', f'', f''' at t, all exact.
struct ProfileDerivs {
  double f = 0.0;
  double df = 0.0;
  double ddf = 0.0;
  double dddf = 0.0;
};

ProfileDerivs eval_derivs(const RacketProfile& profile, double t);

double eval(const RacketProfile& profile, double t);

/// Term-wise derivative as a new series.
RacketProfile derivative_series(const RacketProfile& profile);

/// Pointwise product of two series (band grows to the sum of the orders).
RacketProfile product_series(const RacketProfile& lhs, const RacketProfile& rhs);

/// Exact integral of the series over [a, b].
double integral(const RacketProfile& profile, double a, double b);

/// Extrema of f'' and the sup norms of f' and f'', located by dense sampling
/// plus golden-section refinement.
struct ProfileNorms {
  double m = 0.0;           // min f''
  double M = 0.0;           // max f''
  double sup_df = 0.0;      // sup |f'|
  double sup_ddf = 0.0;     // sup |f''| = max(|m|, |M|)
  double max_df = 0.0;      // signed max of f'
  double argmin_ddf = 0.0;  // a t0 with f''(t0) = m
};

/// `grid_n` >= 64 sampling points on one period; extrema are refined to
/// 1e-10 in t.
ProfileNorms norms(const RacketProfile& profile, int grid_n = 1024);

/// Outcome of a closed-form sufficient condition.  Positive margin means the
/// condition is satisfied; `applicable` is false when the formula does not
/// make sense for the given inputs (then `note` says why).
struct ConditionReport {
  bool satisfied = false;
  bool applicable = true;
  double margin = 0.0;
  std::string note;
};

/// max f' >= g/2: every bounce can gain velocity (escape-to-infinity regime).
ConditionReport check_pustylnikov(const ProfileNorms& norms, double g);

/// m < -g / (1 + sqrt(1 + g/M)): curvature condition for diffusive motion.
/// Requires M > 0; otherwise reported inapplicable.
ConditionReport check_main_condition(const ProfileNorms& norms, double g);

}  // namespace tennis

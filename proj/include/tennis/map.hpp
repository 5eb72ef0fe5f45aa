#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tennis/profile.hpp"

namespace tennis {

/// The bounce-time equation could not be bracketed/solved.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A state or point pair left the validated region of the map.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Coord { velocity, energy, momentum };

/// Phase point on the universal cover: unwrapped time t plus a second
/// coordinate whose meaning is given by the tag.  Projection to the cylinder
/// is (t mod period, value).
struct LiftState {
  double t = 0.0;
  double value = 0.0;
  Coord coord = Coord::velocity;
};

/// Immutable bundle of racket profile, gravity and solver knobs.  Build via
/// make(); derived quantities (norms, series for the generating-function
/// integrals) are cached here.
struct TennisParams {
  RacketProfile profile;
  double g = 1.0;
  double v_star = 0.0;     // domain floor velocity, > 4 sup|f'|
  double root_tol = 1e-10; // residual tolerance for the bounce-time solve
  double march_step = 0.0; // bracketing step for the bounce-time solve

  // cached
  ProfileNorms profile_norms;
  RacketProfile df_series;     // f'
  RacketProfile df_sq_series;  // (f')^2

  double e_star() const { return 0.5 * v_star * v_star; }

  /// Defaults: v_star = 4.5*sup|f'| + 0.5 (strictly above the 4*sup|f'|
  /// regularity bound and nonzero for the flat racket), march_step =
  /// 0.1*(2/g)*v_star.
  static TennisParams make(RacketProfile profile, double g = 1.0,
                           std::optional<double> v_star = std::nullopt,
                           double root_tol = 1e-10,
                           std::optional<double> march_step = std::nullopt);
};

/// Divided difference f[t, tbar] = (f(tbar) - f(t))/(tbar - t) and its two
/// partials.  Switches to a Taylor expansion for |tbar - t| < 1e-6 to avoid
/// cancellation.
struct DividedDifference {
  double value = 0.0;
  double d_t = 0.0;     // partial w.r.t. t
  double d_tbar = 0.0;  // partial w.r.t. tbar
};

DividedDifference divided_difference(const RacketProfile& profile, double t,
                                     double tbar);

/// Result of the bounce-time solve: smallest root tbar > t of
///   F_t(tbar) = f(t) - f(tbar) + w (tbar - t) - g/2 (tbar - t)^2
/// with |F_t(tbar)| <= root_tol; positivity of F on (t, tbar) is checked at
/// 16 interior samples (smallest-root rule).
struct BounceSolve {
  double t_next = 0.0;
  double residual = 0.0;
};

BounceSolve solve_bounce_time(const TennisParams& params, double t, double w);

/// One bounce in time-velocity coordinates (moving frame).  Requires v > 0.
struct StepTV {
  double t = 0.0;
  double v = 0.0;
  double residual = 0.0;
};

StepTV step_tv(const TennisParams& params, double t, double v);

/// One bounce in time-energy coordinates, e = v^2/2.  Requires e > 0.
/// `v_next` keeps the sign information that e_next discards: v_next <= 0
/// means the underlying bouncing motion is about to be absorbed.
struct StepTE {
  double t = 0.0;
  double e = 0.0;
  double v_next = 0.0;
  double residual = 0.0;
};

StepTE step_te(const TennisParams& params, double t, double e);

/// Finite orbit with per-solve residuals.  `absorbed` is set when the motion
/// reached w <= f'(t); by convention the sequence freezes there.
struct OrbitSegment {
  std::vector<LiftState> states;
  std::vector<double> residuals;
  bool absorbed = false;
};

/// Iterate the bounce map from (t0, v0), v0 >= 0, for up to n_steps bounces.
OrbitSegment bouncing_motion(const TennisParams& params, double t0, double v0,
                             long n_steps);

/// Jacobian of the time-energy map at (t, e) by implicit differentiation of
/// the generating-function relations (no finite differences).  Unit
/// determinant up to roundoff; throws DomainError if the implicit system is
/// singular.
Eigen::Matrix2d jacobian_te(const TennisParams& params, double t, double e);

/// Generating function value and all first/second partials at (t, tbar).
struct GenFunEval {
  double h = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double h11 = 0.0;
  double h12 = 0.0;
  double h22 = 0.0;
};

/// Requires (t, tbar) in the twist domain (see domain_guard); throws
/// DomainError otherwise.  The two integral terms are evaluated in closed
/// form from the cached Fourier series.
GenFunEval gen_fun(const TennisParams& params, double t, double tbar);

/// True iff (t, tbar) lies in the twist domain
///   tbar - t > (2/g) (v_star - f[t,tbar] + f'(t)).
bool domain_guard(const TennisParams& params, double t, double tbar);

/// Boundary curve T(t) of the twist domain, located by bisection in tbar.
/// Satisfies (2/g)(v_star - 2 sup|f'|) < T(t) - t < (2/g)(v_star + 2 sup|f'|).
double domain_boundary(const TennisParams& params, double t);

}  // namespace tennis

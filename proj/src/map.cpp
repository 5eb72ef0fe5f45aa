#include "tennis/map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace tennis {

TennisParams TennisParams::make(RacketProfile profile, double g,
                                std::optional<double> v_star, double root_tol,
                                std::optional<double> march_step) {
  if (g <= 0.0) throw std::invalid_argument("TennisParams: g must be > 0");
  if (root_tol <= 0.0)
    throw std::invalid_argument("TennisParams: root_tol must be > 0");
  TennisParams p;
  p.profile = std::move(profile);
  p.g = g;
  p.root_tol = root_tol;
  p.profile_norms = norms(p.profile);
  p.df_series = derivative_series(p.profile);
  p.df_sq_series = product_series(p.df_series, p.df_series);
  p.v_star = v_star ? *v_star : 4.5 * p.profile_norms.sup_df + 0.5;
  if (p.v_star <= 4.0 * p.profile_norms.sup_df)
    throw std::invalid_argument("TennisParams: v_star must exceed 4 sup|f'|");
  p.march_step = march_step ? *march_step : 0.1 * (2.0 / g) * p.v_star;
  if (p.march_step <= 0.0)
    throw std::invalid_argument("TennisParams: march_step must be > 0");
  return p;
}

DividedDifference divided_difference(const RacketProfile& profile, double t,
                                     double tbar) {
  DividedDifference r;
  const double d = tbar - t;
  if (std::abs(d) < 1e-6) {
    // Taylor about t; cancellation would cost ~6 digits at this separation.
    const ProfileDerivs p = eval_derivs(profile, t);
    r.value = p.df + 0.5 * p.ddf * d + p.dddf * d * d / 6.0;
    r.d_t = 0.5 * p.ddf + p.dddf * d / 6.0;
    r.d_tbar = 0.5 * p.ddf + p.dddf * d / 3.0;
    return r;
  }
  const ProfileDerivs pa = eval_derivs(profile, t);
  const ProfileDerivs pb = eval_derivs(profile, tbar);
  r.value = (pb.f - pa.f) / d;
  r.d_t = (r.value - pa.df) / d;
  r.d_tbar = (pb.df - r.value) / d;
  return r;
}

namespace {

struct FreeFall {
  const TennisParams& params;
  double t;    // bounce time
  double f_t;  // f(t)
  double w;    // velocity just after the bounce, inertial frame

  // F_t(t + tau) and its tau-derivative.
  double value(double tau) const {
    const double fb = eval(params.profile, t + tau);
    return f_t - fb + w * tau - 0.5 * params.g * tau * tau;
  }
  std::pair<double, double> value_slope(double tau) const {
    const ProfileDerivs pb = eval_derivs(params.profile, t + tau);
    return {f_t - pb.f + w * tau - 0.5 * params.g * tau * tau,
            w - params.g * tau - pb.df};
  }
};

// Safeguarded Newton/bisection for the smallest root inside (lo, hi] where
// F(lo) >= 0 and F(hi) <= 0.  Returns tau with |F| at roundoff level.
double newton_bisect(const FreeFall& F, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 120; ++it) {
    const auto [fx, dfx] = F.value_slope(x);
    if (fx == 0.0) return x;
    if (fx > 0.0)
      lo = x;
    else
      hi = x;
    double xn = x - fx / dfx;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // slope unusable
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(hi)))
      return 0.5 * (lo + hi);
    x = xn;
  }
  return x;
}

}  // namespace

BounceSolve solve_bounce_time(const TennisParams& params, double t, double w) {
  const ProfileDerivs pd = eval_derivs(params.profile, t);
  if (w <= pd.df)
    throw DomainError("solve_bounce_time: requires w > f'(t)");

  const double g = params.g;
  const double sup_df = params.profile_norms.sup_df;
  const FreeFall F{params, t, pd.f, w};

  // Every root tau satisfies tau = (2/g)(w - f[t,tbar]) and |f[t,tbar]| is
  // bounded by sup|f'|, so nothing can lie below tau_floor.
  const double tau_floor = std::max(0.0, (2.0 / g) * (w - sup_df));
  const double tau_limit = 4.0 * w / g + 4.0 * sup_df / g + 1.0;

  double lo = tau_floor;
  double hi = 0.0;
  double probe = tau_floor > 0.0 ? tau_floor : params.march_step;
  bool bracketed = false;
  while (probe <= tau_limit) {
    if (F.value(probe) <= 0.0) {
      hi = probe;
      bracketed = true;
      break;
    }
    lo = probe;
    probe += params.march_step;
  }
  if (!bracketed)
    throw SolverError("solve_bounce_time: no sign change up to the marching bound");

  double tau = newton_bisect(F, lo, hi);

  // Smallest-root rule: F must stay positive on (0, tau); samples at or
  // below tau_floor are positive a priori and are skipped.
  for (int round = 0; round < 4; ++round) {
    bool clean = true;
    for (int i = 1; i <= 16; ++i) {
      const double s = tau * i / 17.0;
      if (s <= tau_floor) continue;
      if (F.value(s) <= 0.0) {
        tau = newton_bisect(F, tau * (i - 1) / 17.0, s);
        clean = false;
        break;
      }
    }
    if (clean) break;
  }

  BounceSolve out;
  out.t_next = t + tau;
  out.residual = std::abs(F.value(tau));
  if (out.residual > params.root_tol)
    throw SolverError("solve_bounce_time: residual above root_tol");
  return out;
}

StepTV step_tv(const TennisParams& params, double t, double v) {
  if (!(v > 0.0)) throw DomainError("step_tv: requires v > 0");
  const ProfileDerivs pd = eval_derivs(params.profile, t);
  const double w = v + pd.df;
  const BounceSolve bs = solve_bounce_time(params, t, w);
  const ProfileDerivs pb = eval_derivs(params.profile, bs.t_next);
  const double dd = (pb.f - pd.f) / (bs.t_next - t);
  StepTV out;
  out.t = bs.t_next;
  out.v = v - 2.0 * dd + pb.df + pd.df;
  out.residual = bs.residual;
  return out;
}

StepTE step_te(const TennisParams& params, double t, double e) {
  if (!(e > 0.0)) throw DomainError("step_te: requires e > 0");
  const StepTV s = step_tv(params, t, std::sqrt(2.0 * e));
  StepTE out;
  out.t = s.t;
  out.v_next = s.v;
  out.e = 0.5 * s.v * s.v;
  out.residual = s.residual;
  return out;
}

OrbitSegment bouncing_motion(const TennisParams& params, double t0, double v0,
                             long n_steps) {
  if (v0 < 0.0) throw DomainError("bouncing_motion: requires v0 >= 0");
  OrbitSegment seg;
  seg.states.reserve(static_cast<size_t>(n_steps) + 1);
  seg.residuals.reserve(static_cast<size_t>(n_steps) + 1);
  seg.states.push_back({t0, v0, Coord::velocity});
  seg.residuals.push_back(0.0);
  double t = t0, v = v0;
  for (long n = 0; n < n_steps; ++n) {
    if (v <= 0.0) {  // w <= f'(t): the motion freezes here
      seg.absorbed = true;
      break;
    }
    const StepTV s = step_tv(params, t, v);
    t = s.t;
    v = s.v;
    seg.states.push_back({t, v, Coord::velocity});
    seg.residuals.push_back(s.residual);
  }
  return seg;
}

namespace {

struct Hessians {
  double h11, h12, h22;
};

// Second partials of the generating function at (t, tbar); shared between
// gen_fun and jacobian_te.  No domain guard here.
Hessians hessians(const TennisParams& params, double t, double tbar,
                  const ProfileDerivs& pa, const ProfileDerivs& pb,
                  const DividedDifference& dd) {
  const double g = params.g;
  const double tau = tbar - t;
  Hessians H;
  H.h11 = 0.5 * g * tau * (0.5 * g + pa.ddf) +
          (dd.d_t - pa.ddf) * (pa.df - dd.value);
  H.h22 = 0.5 * g * tau * (0.5 * g + pb.ddf) +
          (dd.d_tbar - pb.ddf) * (dd.value - pb.df);
  // h12 = -[g/2 (tbar-t) + f[t,tbar] - f'(t)] * (g/2 + d/dtbar f[t,tbar]);
  // negative on the twist domain.
  H.h12 = -(0.5 * g * tau + dd.value - pa.df) * (0.5 * g + dd.d_tbar);
  return H;
}

}  // namespace

Eigen::Matrix2d jacobian_te(const TennisParams& params, double t, double e) {
  if (!(e > 0.0)) throw DomainError("jacobian_te: requires e > 0");
  const double v = std::sqrt(2.0 * e);
  const ProfileDerivs pa = eval_derivs(params.profile, t);
  const BounceSolve bs = solve_bounce_time(params, t, v + pa.df);
  const double tbar = bs.t_next;
  const ProfileDerivs pb = eval_derivs(params.profile, tbar);
  const DividedDifference dd = divided_difference(params.profile, t, tbar);
  const Hessians H = hessians(params, t, tbar, pa, pb, dd);
  if (!(H.h12 < 0.0))
    throw DomainError("jacobian_te: singular implicit system (twist lost)");
  // Implicit differentiation of h1(t, tbar) = -e, h2(t, tbar) = ebar.
  Eigen::Matrix2d J;
  J(0, 0) = -H.h11 / H.h12;
  J(0, 1) = -1.0 / H.h12;
  J(1, 0) = H.h12 - H.h11 * H.h22 / H.h12;
  J(1, 1) = -H.h22 / H.h12;
  return J;
}

bool domain_guard(const TennisParams& params, double t, double tbar) {
  const double tau = tbar - t;
  if (tau <= 0.0) return false;
  const DividedDifference dd = divided_difference(params.profile, t, tbar);
  const double df_t = eval_derivs(params.profile, t).df;
  return tau > (2.0 / params.g) * (params.v_star - dd.value + df_t);
}

double domain_boundary(const TennisParams& params, double t) {
  const double g = params.g;
  const double s = params.profile_norms.sup_df;
  double lo = t + (2.0 / g) * (params.v_star - 2.0 * s);
  double hi = t + (2.0 / g) * (params.v_star + 2.0 * s);
  if (hi - lo <= 0.0) return lo;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (domain_guard(params, t, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

GenFunEval gen_fun(const TennisParams& params, double t, double tbar) {
  if (!domain_guard(params, t, tbar))
    throw DomainError("gen_fun: (t, tbar) outside the twist domain");
  const double g = params.g;
  const double tau = tbar - t;
  const ProfileDerivs pa = eval_derivs(params.profile, t);
  const ProfileDerivs pb = eval_derivs(params.profile, tbar);
  const DividedDifference dd = divided_difference(params.profile, t, tbar);

  GenFunEval ev;
  const double If = integral(params.profile, t, tbar);
  const double Iq = integral(params.df_sq_series, t, tbar);
  ev.h = g * g * tau * tau * tau / 24.0 + 0.5 * g * (pb.f + pa.f) * tau -
         0.5 * dd.value * dd.value * tau - g * If + 0.5 * Iq;

  const double p = 0.5 * g * tau + dd.value - pa.df;
  const double q = 0.5 * g * tau - dd.value + pb.df;
  ev.h1 = -0.5 * p * p;
  ev.h2 = 0.5 * q * q;

  const Hessians H = hessians(params, t, tbar, pa, pb, dd);
  ev.h11 = H.h11;
  ev.h12 = H.h12;
  ev.h22 = H.h22;
  return ev;
}

}  // namespace tennis

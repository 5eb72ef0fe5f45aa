#include "tennis/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "tennis/numerics.hpp"

namespace tennis {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

ProfileDerivs eval_derivs(const RacketProfile& profile, double t) {
  ProfileDerivs d;
  d.f = profile.mean_height;
  for (const Harmonic& h : profile.harmonics) {
    const double w = two_pi * h.k;
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    d.f += h.cos_coeff * c + h.sin_coeff * s;
    d.df += w * (-h.cos_coeff * s + h.sin_coeff * c);
    d.ddf += w * w * (-h.cos_coeff * c - h.sin_coeff * s);
    d.dddf += w * w * w * (h.cos_coeff * s - h.sin_coeff * c);
  }
  return d;
}

double eval(const RacketProfile& profile, double t) {
  double f = profile.mean_height;
  for (const Harmonic& h : profile.harmonics) {
    const double w = two_pi * h.k;
    f += h.cos_coeff * std::cos(w * t) + h.sin_coeff * std::sin(w * t);
  }
  return f;
}

RacketProfile derivative_series(const RacketProfile& profile) {
  RacketProfile d;
  d.mean_height = 0.0;
  d.harmonics.reserve(profile.harmonics.size());
  for (const Harmonic& h : profile.harmonics) {
    const double w = two_pi * h.k;
    // (A cos + B sin)' = (w B) cos + (-w A) sin
    d.harmonics.push_back({h.k, w * h.sin_coeff, -w * h.cos_coeff});
  }
  return d;
}

RacketProfile product_series(const RacketProfile& lhs, const RacketProfile& rhs) {
  // Accumulate cos/sin coefficients per frequency multiple.
  std::map<int, std::pair<double, double>> acc;  // k -> (cos, sin)
  double mean = lhs.mean_height * rhs.mean_height;

  auto add = [&](int k, double c, double s) {
    if (k == 0) {
      mean += c;  // sin(0) term vanishes
      return;
    }
    auto& [ac, as] = acc[k];
    ac += c;
    as += s;
  };

  for (const Harmonic& p : lhs.harmonics) {
    add(p.k, rhs.mean_height * p.cos_coeff, rhs.mean_height * p.sin_coeff);
  }
  for (const Harmonic& q : rhs.harmonics) {
    add(q.k, lhs.mean_height * q.cos_coeff, lhs.mean_height * q.sin_coeff);
  }
  for (const Harmonic& p : lhs.harmonics) {
    for (const Harmonic& q : rhs.harmonics) {
      const int sum = p.k + q.k;
      const int dif = p.k - q.k;  // may be negative; fold with parity below
      const double a1 = p.cos_coeff, b1 = p.sin_coeff;
      const double a2 = q.cos_coeff, b2 = q.sin_coeff;
      // cos j cos k = (cos(j-k) + cos(j+k))/2
      // sin j sin k = (cos(j-k) - cos(j+k))/2
      // cos j sin k = (sin(j+k) - sin(j-k))/2
      // sin j cos k = (sin(j+k) + sin(j-k))/2
      const double cc = 0.5 * a1 * a2;
      const double ss = 0.5 * b1 * b2;
      const double cs = 0.5 * a1 * b2;
      const double sc = 0.5 * b1 * a2;
      add(sum, cc - ss, cs + sc);
      const int adif = std::abs(dif);
      const double sgn = dif >= 0 ? 1.0 : -1.0;  // sin is odd, cos is even
      add(adif, cc + ss, sgn * (sc - cs));
    }
  }

  RacketProfile out;
  out.mean_height = mean;
  for (const auto& [k, c] : acc) out.harmonics.push_back({k, c.first, c.second});
  return out;
}

double integral(const RacketProfile& profile, double a, double b) {
  // Antiderivative F(t) = mean*t + sum (A sin - B cos)/w.
  auto F = [&](double t) {
    double v = profile.mean_height * t;
    for (const Harmonic& h : profile.harmonics) {
      const double w = two_pi * h.k;
      v += (h.cos_coeff * std::sin(w * t) - h.sin_coeff * std::cos(w * t)) / w;
    }
    return v;
  };
  return F(b) - F(a);
}

namespace {

// Locate all local extrema of fn over one period by dense sampling, refine
// each bracket by golden section, and return the refined (argmin, min) and
// (argmax, max).
struct Extrema {
  double argmin = 0.0, min = 0.0;
  double argmax = 0.0, max = 0.0;
};

Extrema scan_extrema(const std::function<double(double)>& fn, int grid_n) {
  Extrema ext;
  std::vector<double> vals(grid_n);
  const double h = 1.0 / grid_n;
  for (int i = 0; i < grid_n; ++i) vals[i] = fn(i * h);

  bool first = true;
  auto consider = [&](double t, double v) {
    if (first || v < ext.min) {
      ext.min = v;
      ext.argmin = t;
    }
    if (first || v > ext.max) {
      ext.max = v;
      ext.argmax = t;
    }
    first = false;
  };

  for (int i = 0; i < grid_n; ++i) {
    const double prev = vals[(i + grid_n - 1) % grid_n];
    const double cur = vals[i];
    const double next = vals[(i + 1) % grid_n];
    const double t = i * h;
    if (cur <= prev && cur <= next) {
      const double tm = golden_min(fn, t - h, t + h);
      consider(tm, fn(tm));
    }
    if (cur >= prev && cur >= next) {
      auto neg = [&](double x) { return -fn(x); };
      const double tm = golden_min(neg, t - h, t + h);
      consider(tm, fn(tm));
    }
  }
  if (first) {
    // No strict extremum found (constant function).
    consider(0.0, fn(0.0));
  }
  return ext;
}

double wrap01(double t) {
  double r = std::fmod(t, 1.0);
  return r < 0.0 ? r + 1.0 : r;
}

}  // namespace

ProfileNorms norms(const RacketProfile& profile, int grid_n) {
  if (grid_n < 64) throw std::invalid_argument("norms: grid_n must be >= 64");
  ProfileNorms n;
  if (profile.harmonics.empty()) return n;

  auto ddf = [&](double t) { return eval_derivs(profile, t).ddf; };
  auto df = [&](double t) { return eval_derivs(profile, t).df; };

  const Extrema e2 = scan_extrema(ddf, grid_n);
  n.m = e2.min;
  n.M = e2.max;
  n.argmin_ddf = wrap01(e2.argmin);
  n.sup_ddf = std::max(std::abs(n.m), std::abs(n.M));

  const Extrema e1 = scan_extrema(df, grid_n);
  n.max_df = e1.max;
  n.sup_df = std::max(std::abs(e1.min), std::abs(e1.max));
  return n;
}

ConditionReport check_pustylnikov(const ProfileNorms& norms, double g) {
  if (g <= 0.0) throw std::invalid_argument("check_pustylnikov: g must be > 0");
  ConditionReport r;
  r.margin = norms.max_df - 0.5 * g;
  r.satisfied = r.margin >= 0.0;
  return r;
}

ConditionReport check_main_condition(const ProfileNorms& norms, double g) {
  if (g <= 0.0)
    throw std::invalid_argument("check_main_condition: g must be > 0");
  ConditionReport r;
  if (norms.M <= 0.0) {
    r.applicable = false;
    r.satisfied = false;
    r.note = "max f'' <= 0: threshold -g/(1+sqrt(1+g/M)) undefined";
    return r;
  }
  const double threshold = -g / (1.0 + std::sqrt(1.0 + g / norms.M));
  r.margin = threshold - norms.m;
  r.satisfied = r.margin > 0.0;
  return r;
}

}  // namespace tennis

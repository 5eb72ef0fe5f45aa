#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tennis/twist.hpp"

namespace tennis {

/// Second-partial data of the generating function along a consecutive orbit
/// triple (x_{-1}, x_0, x_1), conditioned on the orbit surrogate
/// phi(x_n) = x_{n+1}:
///   a      = h22(x_{-1}, x_0) + h11(x_0, x_1)
///   b      = -h12(x_{-1}, x_0)
///   b_next = -h12(x_0, x_1)
struct ABRecord {
  double x = 0.0;  // base point x_0 (lift)
  double a = 0.0;
  double b = 0.0;
  double b_next = 0.0;
};

ABRecord ab_along_orbit(const TwistSystem& system, double x_m1, double x0,
                        double x1);

/// All consecutive-triple records of a segment (states must be in the
/// system's domain; throws DomainError otherwise).
std::vector<ABRecord> ab_records_from_segment(const TwistSystem& system,
                                              const OrbitSegment& segment);

/// Sample-sup/inf corrections: sup over a finite sample under-covers the true
/// sup, so B estimates are inflated and C estimates deflated.  Set both to 1
/// for exact closed-form reproductions.
struct SafetyFactors {
  double b = 1.01;
  double c = 0.99;
};

struct BCEstimate {
  double b_plus = 0.0;
  double b_minus = 0.0;
  double c_plus = 0.0;
  double c_minus = 0.0;
};

BCEstimate estimate_bc(std::span<const ABRecord> records,
                       const SafetyFactors& factors = {});

/// Bounds on the conjugacy derivative along a hypothetical invariant curve:
/// D+ and D- are roots of d^2 - B d + C = 0 for the plus/minus constant
/// families.  Undefined (criterion inapplicable) when a discriminant is
/// nonpositive; that is a result, not an error.
struct DBounds {
  double b_plus = 0.0;
  double b_minus = 0.0;
  double c_plus = 0.0;
  double c_minus = 0.0;
  double discriminant_plus = 0.0;
  double discriminant_minus = 0.0;
  std::optional<double> d_plus;
  std::optional<double> d_minus;

  bool defined() const { return d_plus && d_minus; }
};

DBounds d_bounds(double b_plus, double b_minus, double c_plus, double c_minus);

enum class CriterionKind { simple, refined, second_variation };

/// Outcome of a non-existence criterion on a sample.  Conclusive means: no
/// rotational invariant curve passes through the sampled region.  The margin
/// is the signed slack of the defining inequality (negative = violated).
struct CriterionReport {
  CriterionKind criterion = CriterionKind::simple;
  bool conclusive = false;
  double witness = 0.0;
  double margin = 0.0;
  std::optional<DBounds> constants;
};

/// a(x) > 0 is necessary on an invariant curve; conclusive iff some sampled
/// a < -tol.  Margin = min a, witness = its base point.
CriterionReport simple_criterion(std::span<const ABRecord> records,
                                 double tol = 1e-12);

/// a(x) >= b(phi(x)) D- + b(x)/D+ is necessary; conclusive iff violated by
/// more than tol at some record.  Requires `bounds.defined()`.
CriterionReport refined_criterion(std::span<const ABRecord> records,
                                  const DBounds& bounds, double tol = 1e-12);

/// Positivity of the second variation of the discrete action along the
/// segment (endpoints fixed): the tridiagonal Hessian with diagonal
/// h22(x_{n-1},x_n) + h11(x_n,x_{n+1}) and off-diagonal h12(x_n,x_{n+1})
/// must be positive semidefinite on an action-minimizing orbit.  Conclusive
/// iff the smallest eigenvalue is below -tol.  Needs >= 3 states.
CriterionReport second_variation_test(const TwistSystem& system,
                                      const OrbitSegment& segment,
                                      double tol = 1e-10);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  double center() const { return 0.5 * (lo + hi); }
  double half_width() const { return 0.5 * (hi - lo); }
};

/// Guaranteed enclosures of a, b, b_next at a bounce with energy e and racket
/// curvature f''(t), from the high-energy expansions
///   a = sqrt(2e) (g + 2 f''(t) + R^A),  b = sqrt(2e) (g/2 + R^B),
/// with explicit remainder bounds |R^A| <= 16 (g+3 sup|f''|) sup|f'|/sqrt(2e)
/// and the analogous (7g+2 sup|f''|), (5g+2 sup|f''|) bounds for b, b_next.
struct ABEnclosure {
  Interval a;
  Interval b;
  Interval b_next;
};

ABEnclosure tennis_ab_asymptotic(const ProfileNorms& norms, double g, double e,
                                 double ddf_at_t);

/// Explicit no-curve energy thresholds for the bounce map.  Above
/// e_star_simple (requires min f'' < -g/2) and above e_star_refined (requires
/// the main curvature condition) no rotational invariant curve exists.
struct ThresholdReport {
  std::optional<double> e_star_simple;
  std::optional<double> e_star_refined;
  ProfileNorms norms;
  double g = 1.0;
  double v_star = 0.0;
  std::string surrogate_note;
  std::string simple_note;   // set when e_star_simple is inapplicable
  std::string refined_note;  // set when e_star_refined is inapplicable
};

ThresholdReport tennis_thresholds(const ProfileNorms& norms, double g,
                                  double v_star);

}  // namespace tennis

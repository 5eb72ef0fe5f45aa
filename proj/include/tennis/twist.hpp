#pragma once

#include <Eigen/Core>

#include "tennis/map.hpp"

namespace tennis {

/// Exact symplectic twist map on the (lifted) cylinder, given by a lift step,
/// a generating function with h1 = -y, h2 = ybar and h12 < 0 on the domain,
/// and a domain predicate.  `period()` is the angular period of the first
/// coordinate; the criteria machinery is period-agnostic.
class TwistSystem {
 public:
  struct Step {
    Eigen::Vector2d state = Eigen::Vector2d::Zero();
    double residual = 0.0;
    /// The returned state is terminal (bouncing motion froze there).
    bool absorbed = false;
  };

  virtual ~TwistSystem() = default;

  virtual double period() const = 0;
  virtual Coord coord() const = 0;
  virtual Step step(const Eigen::Vector2d& state) const = 0;
  virtual GenFunEval gen(double x, double xbar) const = 0;
  virtual bool guard(double x, double xbar) const = 0;
  virtual Eigen::Matrix2d jacobian(const Eigen::Vector2d& state) const = 0;
};

/// The bounce map in time-energy coordinates as a TwistSystem.
class TennisSystem final : public TwistSystem {
 public:
  explicit TennisSystem(TennisParams params) : params_(std::move(params)) {}

  const TennisParams& params() const { return params_; }

  double period() const override { return 1.0; }
  Coord coord() const override { return Coord::energy; }

  Step step(const Eigen::Vector2d& state) const override {
    const StepTE s = step_te(params_, state[0], state[1]);
    Step out;
    out.state = Eigen::Vector2d(s.t, s.e);
    out.residual = s.residual;
    out.absorbed = s.v_next <= 0.0;
    return out;
  }

  GenFunEval gen(double x, double xbar) const override {
    return gen_fun(params_, x, xbar);
  }

  bool guard(double x, double xbar) const override {
    return domain_guard(params_, x, xbar);
  }

  Eigen::Matrix2d jacobian(const Eigen::Vector2d& state) const override {
    return jacobian_te(params_, state[0], state[1]);
  }

 private:
  TennisParams params_;
};

}  // namespace tennis

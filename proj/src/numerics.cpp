#include "tennis/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tennis {

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  constexpr double invphi = 0.6180339887498949;  // 1/phi
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol)
    return left + right + err / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

int tridiag_count_below(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                        double sigma) {
  const auto n = diag.size();
  // Sturm count via the LDL^T pivots of T - sigma*I; a vanishing pivot is
  // nudged to keep the recurrence defined (standard bisection safeguard).
  const double tiny = std::numeric_limits<double>::min() * 16.0;
  int count = 0;
  double q = diag[0] - sigma;
  if (q < 0.0) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (std::abs(q) < tiny) q = (q < 0.0 ? -tiny : tiny);
    q = (diag[i] - sigma) - off[i - 1] * off[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

double tridiag_min_eigenvalue(const Eigen::VectorXd& diag,
                              const Eigen::VectorXd& off) {
  const auto n = diag.size();
  if (n < 1) throw std::invalid_argument("tridiag_min_eigenvalue: empty matrix");
  if (off.size() != n - 1)
    throw std::invalid_argument("tridiag_min_eigenvalue: off-diagonal size");
  if (n == 1) return diag[0];

  // Gerschgorin bracket.
  double lo = diag[0] - std::abs(off[0]);
  double hi = diag[0] + std::abs(off[0]);
  for (Eigen::Index i = 1; i < n; ++i) {
    const double r =
        std::abs(off[i - 1]) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  // Bisect until the smallest eigenvalue is pinched.
  for (int it = 0; it < 200 && hi - lo > 1e-14 * scale; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tridiag_count_below(diag, off, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace tennis

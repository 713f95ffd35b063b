#ifndef JTCOMP_QUADRATURE_HPP
#define JTCOMP_QUADRATURE_HPP

#include <cmath>
#include <functional>

namespace jtcomp {

/// Adaptive Simpson integration with absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-9,
                               int max_depth = 40) {
  auto simpson = [&](double lo, double hi, double flo, double fmid,
                     double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };
  std::function<double(double, double, double, double, double, double, double,
                       int)>
      recurse = [&](double lo, double hi, double flo, double fmid, double fhi,
                    double whole, double eps, int depth) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(lo, mid, flo, flm, fmid);
    const double right = simpson(mid, hi, fmid, frm, fhi);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * eps) {
      return left + right + (left + right - whole) / 15.0;
    }
    return recurse(lo, mid, flo, flm, fmid, left, eps / 2.0, depth - 1) +
           recurse(mid, hi, fmid, frm, fhi, right, eps / 2.0, depth - 1);
  };
  const double mid = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(mid);
  const double fb = f(b);
  return recurse(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, max_depth);
}

}  // namespace jtcomp

#endif  // JTCOMP_QUADRATURE_HPP

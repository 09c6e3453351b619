#include "isomin/polynomial.hpp"

#include <cmath>

namespace isomin {

namespace {

Polynomial<double> trimmed(const Polynomial<double>& p) {
  std::vector<double> c = p.coeffs();
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  return Polynomial<double>(std::move(c));
}

double bisect(const Polynomial<double>& p, double a, double b) {
  double fa = p(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = p(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return std::abs(p(a)) <= std::abs(p(b)) ? a : b;
}

std::vector<double> roots_rec(const Polynomial<double>& raw, double lo, double hi, double tol,
                              double merge_tol) {
  const Polynomial<double> p = trimmed(raw);
  const int deg = p.degree();
  if (deg < 1) return {};
  if (deg == 1) {
    const double r = -p[0] / p[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  const double scale = coefficient_scale(p);
  std::vector<double> pts{lo};
  for (double x : roots_rec(p.derivative(), lo, hi, tol, merge_tol)) {
    if (x > lo && x < hi) pts.push_back(x);
  }
  pts.push_back(hi);

  std::vector<double> found;
  for (double x : pts) {
    if (std::abs(p(x)) <= tol * scale) found.push_back(x);
  }
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double fa = p(pts[k]);
    const double fb = p(pts[k + 1]);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      found.push_back(bisect(p, pts[k], pts[k + 1]));
    }
  }
  std::sort(found.begin(), found.end());

  std::vector<double> merged;
  for (double x : found) {
    if (!merged.empty() && x - merged.back() <= merge_tol) {
      if (std::abs(p(x)) < std::abs(p(merged.back()))) merged.back() = x;
      continue;
    }
    merged.push_back(x);
  }
  return merged;
}

}  // namespace

std::vector<double> real_roots(const Polynomial<double>& p, double lo, double hi, double even_root_tol,
                               double merge_tol) {
  return roots_rec(p, lo, hi, even_root_tol, merge_tol);
}

}  // namespace isomin

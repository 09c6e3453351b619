#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace isomin {

// Dense univariate polynomial, coefficient k multiplies s^k. The coefficient
// type is either double or Jet (coefficients that vary over the chart).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) {}
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

  // Length of the coefficient list; the formal degree is size() - 1.
  std::size_t size() const { return c_.size(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t k) const { return c_[k]; }

  template <class S>
  auto operator()(const S& s) const {
    using R = decltype(T{} * s);
    if (c_.empty()) return R{};
    R r = c_.back() * 1.0;
    for (std::size_t k = c_.size() - 1; k-- > 0;) r = r * s + c_[k];
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial{};
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<double>(k));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<T> r(n, T{});
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] = r[k] + b.c_[k];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * T(-1.0);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial{};
    std::vector<T> r(a.size() + b.size() - 1, T{});
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const T& x) {
    std::vector<T> r = a.c_;
    for (auto& v : r) v = v * x;
    return Polynomial(std::move(r));
  }

 private:
  std::vector<T> c_;
};

// Largest coefficient magnitude; the scale against which residuals of a
// polynomial are judged.
inline double coefficient_scale(const Polynomial<double>& p) {
  double m = 0.0;
  for (double x : p.coeffs()) m = std::max(m, std::abs(x));
  return m;
}

// All real roots of p in [lo, hi], sorted ascending.
//
// Roots of odd multiplicity are isolated by sign change and bisected to
// adjacent doubles. Even-multiplicity roots show up as critical points where
// |p| <= even_root_tol * scale; critical points come from the same routine
// applied to p', so each monotone piece holds at most one root. Roots closer
// than merge_tol collapse to one.
std::vector<double> real_roots(const Polynomial<double>& p, double lo, double hi,
                               double even_root_tol = 1e-12, double merge_tol = 1e-6);

}  // namespace isomin

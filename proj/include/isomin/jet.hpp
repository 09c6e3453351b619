#pragma once

#include <array>
#include <cstddef>

namespace isomin {

inline constexpr int kMaxJetOrder = 6;

// Truncated bivariate Taylor polynomial in (du, dv) about a fixed chart point.
//
// coeff(i, j) is the coefficient of du^i dv^j, i.e. (d^i/du^i d^j/dv^j f) / (i! j!).
// The order is carried at runtime: arithmetic between jets of different orders
// yields the smaller order, and differentiation lowers it by one. Constants are
// created at kMaxJetOrder so they never truncate a result.
class Jet {
 public:
  static constexpr int kCapacity = (kMaxJetOrder + 1) * (kMaxJetOrder + 2) / 2;

  Jet() : Jet(0.0) {}
  Jet(double value, int order = kMaxJetOrder);  // NOLINT(google-explicit-constructor)

  // The coordinate function u (axis 0) or v (axis 1) expanded about `value`.
  static Jet variable(double value, int axis, int order);

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double coeff(int i, int j) const;
  void set_coeff(int i, int j, double x);
  // Partial derivative d^i/du^i d^j/dv^j at the expansion point.
  double partial(int i, int j) const;

  Jet d_du() const;
  Jet d_dv() const;
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double x);
  Jet& operator-=(double x);
  Jet& operator*=(double x);
  Jet& operator/=(double x);

  static constexpr int count(int order) { return (order + 1) * (order + 2) / 2; }
  static constexpr int index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }

 private:
  friend Jet compose(const Jet& g, const double* taylor);

  int order_;
  std::array<double, kCapacity> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double b);
Jet operator+(double a, Jet b);
Jet operator-(Jet a, double b);
Jet operator-(double a, const Jet& b);
Jet operator*(Jet a, double b);
Jet operator*(double a, Jet b);
Jet operator/(Jet a, double b);
Jet operator/(double a, const Jet& b);

// f(g) for a univariate f given its scaled Taylor coefficients
// taylor[k] = f^(k)(g(0)) / k!, k = 0..g.order().
Jet compose(const Jet& g, const double* taylor);

Jet reciprocal(const Jet& g);
Jet sqrt(const Jet& g);
Jet pow(const Jet& g, double exponent);
Jet exp(const Jet& g);
Jet log(const Jet& g);
Jet sin(const Jet& g);
Jet cos(const Jet& g);
Jet sinh(const Jet& g);
Jet cosh(const Jet& g);
Jet square(const Jet& g);

}  // namespace isomin

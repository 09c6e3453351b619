#include "isomin/jet.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace isomin {

Jet::Jet(double value, int order) : order_(order) {
  assert(order >= 0 && order <= kMaxJetOrder);
  c_.fill(0.0);
  c_[0] = value;
}

Jet Jet::variable(double value, int axis, int order) {
  Jet x(value, order);
  if (order >= 1) x.c_[axis == 0 ? index(1, 0) : index(0, 1)] = 1.0;
  return x;
}

double Jet::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) return 0.0;
  return c_[index(i, j)];
}

void Jet::set_coeff(int i, int j, double x) {
  assert(i >= 0 && j >= 0 && i + j <= order_);
  c_[index(i, j)] = x;
}

double Jet::partial(int i, int j) const {
  double f = coeff(i, j);
  for (int k = 2; k <= i; ++k) f *= k;
  for (int k = 2; k <= j; ++k) f *= k;
  return f;
}

Jet Jet::d_du() const {
  assert(order_ >= 1);
  Jet r(0.0, order_ - 1);
  for (int d = 0; d <= order_ - 1; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      r.c_[index(i, j)] = (i + 1) * c_[index(i + 1, j)];
    }
  }
  return r;
}

Jet Jet::d_dv() const {
  assert(order_ >= 1);
  Jet r(0.0, order_ - 1);
  for (int d = 0; d <= order_ - 1; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      r.c_[index(i, j)] = (j + 1) * c_[index(i, j + 1)];
    }
  }
  return r;
}

Jet Jet::truncated(int order) const {
  Jet r = *this;
  if (order >= order_) return r;
  for (int k = count(order); k < count(order_); ++k) r.c_[k] = 0.0;
  r.order_ = order;
  return r;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (int k = 0; k < count(order_); ++k) r.c_[k] = -r.c_[k];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k < count(order_); ++k) c_[k] += o.c_[k];
  for (int k = count(order_); k < kCapacity; ++k) c_[k] = 0.0;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k < count(order_); ++k) c_[k] -= o.c_[k];
  for (int k = count(order_); k < kCapacity; ++k) c_[k] = 0.0;
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  *this = *this * o;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  *this = *this * reciprocal(o);
  return *this;
}

Jet& Jet::operator+=(double x) {
  c_[0] += x;
  return *this;
}

Jet& Jet::operator-=(double x) {
  c_[0] -= x;
  return *this;
}

Jet& Jet::operator*=(double x) {
  for (int k = 0; k < count(order_); ++k) c_[k] *= x;
  return *this;
}

Jet& Jet::operator/=(double x) {
  for (int k = 0; k < count(order_); ++k) c_[k] /= x;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  Jet r(0.0, n);
  for (int d = 0; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      double s = 0.0;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          s += a.coeff(k, l) * b.coeff(i - k, j - l);
        }
      }
      r.set_coeff(i, j, s);
    }
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
Jet operator+(Jet a, double b) { return a += b; }
Jet operator+(double a, Jet b) { return b += a; }
Jet operator-(Jet a, double b) { return a -= b; }
Jet operator-(double a, const Jet& b) { return (-b) += a; }
Jet operator*(Jet a, double b) { return a *= b; }
Jet operator*(double a, Jet b) { return b *= a; }
Jet operator/(Jet a, double b) { return a /= b; }
Jet operator/(double a, const Jet& b) { return reciprocal(b) *= a; }

Jet compose(const Jet& g, const double* taylor) {
  const int n = g.order();
  Jet h = g;
  h.c_[0] = 0.0;
  Jet r(taylor[n], n);
  for (int k = n - 1; k >= 0; --k) {
    r = r * h;
    r.c_[0] += taylor[k];
  }
  return r;
}

namespace {

using Taylor = std::array<double, kMaxJetOrder + 1>;

// Scales raw derivatives f^(k) into Taylor coefficients f^(k)/k!.
void scale_factorials(Taylor& t, int n) {
  double fact = 1.0;
  for (int k = 1; k <= n; ++k) {
    fact *= k;
    t[k] /= fact;
  }
}

}  // namespace

Jet reciprocal(const Jet& g) {
  const double x = g.value();
  Taylor t{};
  t[0] = 1.0 / x;
  for (int k = 1; k <= g.order(); ++k) t[k] = -t[k - 1] / x;
  return compose(g, t.data());
}

Jet pow(const Jet& g, double exponent) {
  const double x = g.value();
  Taylor t{};
  t[0] = std::pow(x, exponent);
  for (int k = 1; k <= g.order(); ++k) t[k] = t[k - 1] * (exponent - k + 1) / (k * x);
  return compose(g, t.data());
}

Jet sqrt(const Jet& g) { return pow(g, 0.5); }

Jet exp(const Jet& g) {
  Taylor t{};
  const double e = std::exp(g.value());
  for (int k = 0; k <= g.order(); ++k) t[k] = e;
  scale_factorials(t, g.order());
  return compose(g, t.data());
}

Jet log(const Jet& g) {
  const double x = g.value();
  Taylor t{};
  t[0] = std::log(x);
  double p = 1.0;
  for (int k = 1; k <= g.order(); ++k) {
    p /= x;
    t[k] = ((k % 2 == 1) ? 1.0 : -1.0) * p / k;
  }
  return compose(g, t.data());
}

Jet sin(const Jet& g) {
  const double s = std::sin(g.value());
  const double c = std::cos(g.value());
  const double cycle[4] = {s, c, -s, -c};
  Taylor t{};
  for (int k = 0; k <= g.order(); ++k) t[k] = cycle[k % 4];
  scale_factorials(t, g.order());
  return compose(g, t.data());
}

Jet cos(const Jet& g) {
  const double s = std::sin(g.value());
  const double c = std::cos(g.value());
  const double cycle[4] = {c, -s, -c, s};
  Taylor t{};
  for (int k = 0; k <= g.order(); ++k) t[k] = cycle[k % 4];
  scale_factorials(t, g.order());
  return compose(g, t.data());
}

Jet sinh(const Jet& g) {
  const double s = std::sinh(g.value());
  const double c = std::cosh(g.value());
  Taylor t{};
  for (int k = 0; k <= g.order(); ++k) t[k] = (k % 2 == 0) ? s : c;
  scale_factorials(t, g.order());
  return compose(g, t.data());
}

Jet cosh(const Jet& g) {
  const double s = std::sinh(g.value());
  const double c = std::cosh(g.value());
  Taylor t{};
  for (int k = 0; k <= g.order(); ++k) t[k] = (k % 2 == 0) ? c : s;
  scale_factorials(t, g.order());
  return compose(g, t.data());
}

Jet square(const Jet& g) { return g * g; }

}  // namespace isomin

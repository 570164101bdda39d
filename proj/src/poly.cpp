#include "bernstein/poly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <numbers>
#include <string>

#include "bernstein/errors.hpp"

namespace bernstein {

LaurentPolynomial::LaurentPolynomial(int n) : LaurentPolynomial(n, CoeffVector::Zero(2 * std::max(n, 0) + 1)) {}

LaurentPolynomial::LaurentPolynomial(int n, CoeffVector coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 0) {
    throw InvalidArgument("class bound must be nonnegative");
  }
  if (coeffs_.size() != 2 * n + 1) {
    throw InvalidArgument("Laurent polynomial of class " + std::to_string(n) + " needs " +
                          std::to_string(2 * n + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
}

LaurentPolynomial LaurentPolynomial::monomial(int n, int exponent, Complex c) {
  if (std::abs(exponent) > n) {
    throw InvalidArgument("monomial exponent outside the class window");
  }
  LaurentPolynomial t(n);
  t.coeffs_[exponent + n] = c;
  return t;
}

Complex LaurentPolynomial::coeff(int j) const noexcept {
  if (j < -n_ || j > n_) {
    return 0.0;
  }
  return coeffs_[j + n_];
}

bool LaurentPolynomial::is_zero() const noexcept { return (coeffs_.array() == Complex(0.0)).all(); }

double LaurentPolynomial::max_abs_coeff() const noexcept { return coeffs_.cwiseAbs().maxCoeff(); }

int LaurentPolynomial::effective_bound() const noexcept {
  for (int k = n_; k > 0; --k) {
    if (coeff(k) != 0.0 || coeff(-k) != 0.0) {
      return k;
    }
  }
  return 0;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const int n = std::max(a.n_, b.n_);
  LaurentPolynomial wa = widen(a, n);
  wa.coeffs_ += widen(b, n).coeffs_;
  return wa;
}

AlgebraicPolynomial::AlgebraicPolynomial(CoeffVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) {
    coeffs_ = CoeffVector::Zero(1);
  }
}

bool AlgebraicPolynomial::is_zero() const noexcept { return (coeffs_.array() == Complex(0.0)).all(); }

AlgebraicPolynomial AlgebraicPolynomial::normalized() const {
  Eigen::Index size = coeffs_.size();
  while (size > 1 && coeffs_[size - 1] == 0.0) {
    --size;
  }
  return AlgebraicPolynomial(coeffs_.head(size));
}

Complex eval(const LaurentPolynomial& t, Complex z) {
  if (z == 0.0) {
    throw DomainError("Laurent polynomial undefined at 0");
  }
  const int n = t.degree_bound();
  const auto& a = t.coeffs();
  Complex positive = 0.0;
  for (int j = n; j >= 0; --j) {
    positive = positive * z + a[j + n];
  }
  const Complex w = 1.0 / z;
  Complex negative = 0.0;
  for (int j = n; j >= 1; --j) {
    negative = (negative + a[n - j]) * w;
  }
  return positive + negative;
}

Complex eval(const AlgebraicPolynomial& p, Complex z) {
  const auto& a = p.coeffs();
  Complex acc = 0.0;
  for (Eigen::Index j = a.size() - 1; j >= 0; --j) {
    acc = acc * z + a[j];
  }
  return acc;
}

Eigen::ArrayXcd eval_on_circle(const LaurentPolynomial& t, const Eigen::ArrayXd& angles) {
  using Wide = std::complex<long double>;
  const int n = t.degree_bound();
  const auto& a = t.coeffs();
  // Extended precision: on the circle |T| can be far below sum |a_j|.
  std::vector<Wide> c(a.begin(), a.end());
  Eigen::ArrayXcd out(angles.size());
  for (Eigen::Index k = 0; k < angles.size(); ++k) {
    const Wide z(std::cos(angles[k]), std::sin(angles[k]));
    const Wide w = 1.0L / z;
    Wide positive = c[2 * n];
    for (int j = n - 1; j >= 0; --j) {
      positive = positive * z + c[j + n];
    }
    Wide negative = 0.0L;
    for (int j = n; j >= 1; --j) {
      negative = (negative + c[n - j]) * w;
    }
    const Wide v = positive + negative;
    out[k] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return out;
}

Eigen::ArrayXd circle_moduli(const LaurentPolynomial& t, int count) {
  const Eigen::ArrayXd angles = Eigen::ArrayXd::LinSpaced(count, 0.0, 2.0 * std::numbers::pi * (count - 1) / count);
  return eval_on_circle(t, angles).abs();
}

LaurentPolynomial derivative(const LaurentPolynomial& t) {
  const int n = t.degree_bound();
  LaurentPolynomial d(n + 1);
  CoeffVector c = CoeffVector::Zero(2 * n + 3);
  // exponent j maps to exponent j - 1, i.e. storage index (j - 1) + (n + 1) = j + n.
  for (int j = -n; j <= n; ++j) {
    c[j + n] = static_cast<double>(j) * t.coeff(j);
  }
  return {n + 1, std::move(c)};
}

LaurentPolynomial widen(const LaurentPolynomial& t, int bound) {
  const int n = t.degree_bound();
  if (bound < n) {
    throw InvalidArgument("cannot narrow a Laurent polynomial by widening");
  }
  CoeffVector c = CoeffVector::Zero(2 * bound + 1);
  c.segment(bound - n, 2 * n + 1) = t.coeffs();
  return {bound, std::move(c)};
}

LaurentPolynomial deflate(const LaurentPolynomial& t) {
  const int n = t.degree_bound();
  const int m = t.effective_bound();
  return {m, t.coeffs().segment(n - m, 2 * m + 1)};
}

AlgebraicPolynomial to_algebraic(const LaurentPolynomial& t) { return AlgebraicPolynomial(t.coeffs()); }

LaurentPolynomial from_algebraic(const AlgebraicPolynomial& p, int n) {
  const AlgebraicPolynomial q = p.normalized();
  if (q.degree() > 2 * n) {
    throw InvalidArgument("algebraic polynomial degree exceeds 2n");
  }
  CoeffVector c = CoeffVector::Zero(2 * n + 1);
  c.head(q.coeffs().size()) = q.coeffs();
  return {n, std::move(c)};
}

AlgebraicPolynomial from_roots(Complex c, std::span<const Complex> roots) {
  if (c == 0.0) {
    throw InvalidArgument("leading coefficient must be nonzero");
  }
  CoeffVector acc = CoeffVector::Zero(static_cast<Eigen::Index>(roots.size()) + 1);
  acc[0] = c;
  Eigen::Index deg = 0;
  for (const Complex r : roots) {
    // acc <- acc * (z - r), highest coefficient first so the update is in place.
    acc[deg + 1] = acc[deg];
    for (Eigen::Index k = deg; k >= 1; --k) {
      acc[k] = acc[k - 1] - r * acc[k];
    }
    acc[0] = -r * acc[0];
    ++deg;
  }
  return AlgebraicPolynomial(std::move(acc));
}

AlgebraicPolynomial multiply(const AlgebraicPolynomial& a, const AlgebraicPolynomial& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  CoeffVector out = CoeffVector::Zero(x.size() + y.size() - 1);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i, y.size()) += x[i] * y;
  }
  return AlgebraicPolynomial(std::move(out));
}

} // namespace bernstein

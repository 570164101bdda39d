#pragma once

#include <complex>
#include <span>

#include <Eigen/Core>

namespace bernstein {

using Complex = std::complex<double>;
using CoeffVector = Eigen::VectorXcd;

/// Trigonometric (Laurent) polynomial  T(z) = sum_{j=-n}^{n} a_j z^j  of class n.
///
/// The class bound n is stored, not inferred from the coefficients: a
/// polynomial with a_n = 0 still belongs to class n. Coefficients are held in
/// ascending exponent order, so storage index k holds a_{k-n}.
class LaurentPolynomial {
public:
  LaurentPolynomial() : LaurentPolynomial(0) {}

  /// Zero polynomial of class n.
  explicit LaurentPolynomial(int n);

  /// Throws InvalidArgument unless n >= 0 and coeffs.size() == 2n + 1.
  LaurentPolynomial(int n, CoeffVector coeffs);

  static LaurentPolynomial monomial(int n, int exponent, Complex c = 1.0);

  int degree_bound() const noexcept { return n_; }
  const CoeffVector& coeffs() const noexcept { return coeffs_; }

  /// a_j for j in [-n, n]; zero outside that window.
  Complex coeff(int j) const noexcept;
  Complex leading() const noexcept { return coeffs_[2 * n_]; }

  bool is_zero() const noexcept;
  double max_abs_coeff() const noexcept;

  /// Smallest n' with a_{n'} != 0 or a_{-n'} != 0 (0 for constants and zero).
  int effective_bound() const noexcept;

  LaurentPolynomial operator-() const { return {n_, -coeffs_}; }
  friend LaurentPolynomial operator*(Complex c, const LaurentPolynomial& t) {
    return {t.n_, c * t.coeffs_};
  }
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

private:
  int n_;
  CoeffVector coeffs_;
};

/// Algebraic polynomial  P(z) = sum_{j=0}^{m} a_j z^j, coefficients ascending.
class AlgebraicPolynomial {
public:
  AlgebraicPolynomial() : coeffs_(CoeffVector::Zero(1)) {}
  /// An empty vector is promoted to the zero constant.
  explicit AlgebraicPolynomial(CoeffVector coeffs);

  const CoeffVector& coeffs() const noexcept { return coeffs_; }
  /// Storage degree (size - 1); may exceed the effective degree until normalized.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex leading() const noexcept { return coeffs_[coeffs_.size() - 1]; }
  bool is_zero() const noexcept;

  /// Strips high-order coefficients that are exactly zero. The zero
  /// polynomial normalizes to the single coefficient 0.
  AlgebraicPolynomial normalized() const;

  friend bool operator==(const AlgebraicPolynomial& a, const AlgebraicPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  CoeffVector coeffs_;
};

/// Two-sided Horner evaluation. Throws DomainError at z = 0.
Complex eval(const LaurentPolynomial& t, Complex z);
Complex eval(const AlgebraicPolynomial& p, Complex z);

/// Vectorized evaluation at e^{i*theta} for every angle in `angles`.
Eigen::ArrayXcd eval_on_circle(const LaurentPolynomial& t, const Eigen::ArrayXd& angles);

/// |T(e^{i*theta_k})| at `count` uniformly spaced angles theta_k = 2*pi*k/count.
Eigen::ArrayXd circle_moduli(const LaurentPolynomial& t, int count);

/// z-derivative, stored with class bound n + 1 (exponents -n-1 .. n-1 populated).
LaurentPolynomial derivative(const LaurentPolynomial& t);

/// Re-expresses t with a larger class bound; throws if bound < t.degree_bound().
LaurentPolynomial widen(const LaurentPolynomial& t, int bound);

/// Smallest class containing t (see LaurentPolynomial::effective_bound).
LaurentPolynomial deflate(const LaurentPolynomial& t);

/// z^n T(z) as an algebraic polynomial of storage degree 2n.
AlgebraicPolynomial to_algebraic(const LaurentPolynomial& t);

/// Inverse of to_algebraic: z^{-n} P(z). Throws unless deg P <= 2n after normalization.
LaurentPolynomial from_algebraic(const AlgebraicPolynomial& p, int n);

/// c * prod_k (z - roots[k]) expanded by iterated convolution. Throws on c = 0.
AlgebraicPolynomial from_roots(Complex c, std::span<const Complex> roots);

/// Product of two algebraic polynomials.
AlgebraicPolynomial multiply(const AlgebraicPolynomial& a, const AlgebraicPolynomial& b);

} // namespace bernstein

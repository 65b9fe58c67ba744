#pragma once

#include <narayana/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace narayana {

/// Dense univariate polynomial over Rational in the indeterminate z.
///
/// coeffs()[i] is the coefficient of z^i. The representation is canonical:
/// the leading coefficient is nonzero and the zero polynomial has no
/// coefficients at all, so structural equality is polynomial equality.
///
/// Multiplication is schoolbook convolution. That is the scaling limit of
/// the type: fine up to degrees of a few thousand.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * z^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  /// Parses an ascending list of "num/den" or integer strings.
  static Polynomial from_strings(std::span<const std::string> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i, zero past the end.
  Rational coeff(std::size_t i) const;

  Polynomial derivative() const;
  /// Horner evaluation.
  Rational eval(const Rational& x) const;
  /// q with *this == z^k * q. Throws NotDivisible if z^0..z^(k-1) are not all zero.
  Polynomial div_exact_z_power(std::size_t k) const;
  /// Coefficients in reverse order, i.e. z^deg * p(1/z).
  Polynomial reversed() const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

// Free-function spellings of the ring operations.
inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Polynomial poly_scale(const Rational& c, const Polynomial& p) { return c * p; }
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }
inline Polynomial poly_div_exact_z_power(const Polynomial& p, std::size_t k) {
  return p.div_exact_z_power(k);
}

}  // namespace narayana

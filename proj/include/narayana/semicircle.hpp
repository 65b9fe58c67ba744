#pragma once

#include <narayana/polynomial.hpp>
#include <narayana/rational.hpp>

#include <cstdint>
#include <vector>

namespace narayana {

/// E[X^n] for X with density (2/pi) sqrt(1 - x^2) on [-1, 1]:
/// zero for odd n, C_{n/2} / 4^{n/2} for even n.
Rational moment(unsigned n);

/// Moments E[X^0..X^max_order], precomputed once and read-only afterwards.
class MomentTable {
 public:
  explicit MomentTable(unsigned max_order);

  unsigned max_order() const { return static_cast<unsigned>(moments_.size() - 1); }
  /// Throws DomainError past max_order().
  const Rational& operator[](unsigned n) const;

  /// E[p(X)] for a polynomial p in X.
  Rational expect(const Polynomial& p) const;

 private:
  std::vector<Rational> moments_;
};

/// sum c_ij u^i X^j with u standing for sqrt(z). Terms are kept sorted by
/// (i, j) with no zero coefficients.
class HalfPowerBivariate {
 public:
  struct Term {
    unsigned u_power = 0;
    unsigned x_power = 0;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  HalfPowerBivariate() = default;
  /// Terms may be unsorted and repeat monomials; they are merged.
  explicit HalfPowerBivariate(std::vector<Term> terms);

  static HalfPowerBivariate monomial(const Rational& c, unsigned u_power, unsigned x_power);
  /// 1 + u^2 + 2 u X, i.e. 1 + z + 2 sqrt(z) X.
  static HalfPowerBivariate semicircle_base();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned max_u_power() const;
  unsigned max_x_power() const;

  HalfPowerBivariate pow(unsigned m) const;

  HalfPowerBivariate& operator+=(const HalfPowerBivariate& o);
  HalfPowerBivariate& operator*=(const Rational& c);
  friend HalfPowerBivariate operator+(HalfPowerBivariate a, const HalfPowerBivariate& b) { return a += b; }
  friend HalfPowerBivariate operator*(const HalfPowerBivariate& a, const HalfPowerBivariate& b);
  friend HalfPowerBivariate operator*(const Rational& c, HalfPowerBivariate e) { return e *= c; }

  friend bool operator==(const HalfPowerBivariate&, const HalfPowerBivariate&) = default;

 private:
  std::vector<Term> terms_;
};

/// Applies E term by term (X^j -> E[X^j]), then substitutes z = u^2.
/// Throws InconsistentExpectation if an odd power of u survives.
Polynomial expect(const HalfPowerBivariate& e);

/// E[(1 + z + 2 sqrt(z) X)^(r-1)], r >= 1. Equals the Narayana polynomial N_r.
Polynomial binomial_power_expect(long r);
/// The same for r = 1..r_max, sharing the powers; result[r-1] is the r-th.
std::vector<Polynomial> binomial_power_expect_range(unsigned r_max);

/// E[h(X) X] - (1/3) E[h'(X) (1 - X^2)]. Zero for every polynomial h.
Rational stein_residual(const Polynomial& h);

/// N_r - (1 + z) N_{r-1} - E[2 sqrt(z) (1 + z + 2 sqrt(z) X)^(r-2) X], r >= 2.
Polynomial relation_io_residual(long r);
Polynomial relation_io_residual_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1);

/// z E[(1 + z + 2 sqrt(z) X)^(r-3) X^2] + 3/(4(r-2)) (N_r - (1 + z) N_{r-1}) - z N_{r-2}, r >= 3.
Polynomial relation_ioa_residual(long r);
Polynomial relation_ioa_residual_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1,
                                           const Polynomial& n_rm2);

}  // namespace narayana

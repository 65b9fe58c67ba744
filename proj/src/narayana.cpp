#include <narayana/error.hpp>
#include <narayana/narayana.hpp>

#include "write_once_cache.hpp"

#include <string>

namespace narayana {

namespace {

void require(bool ok, const char* what, long value) {
  if (!ok) throw DomainError(std::string(what) + " (got " + std::to_string(value) + ")");
}

detail::WriteOnceCache<unsigned, NarayanaRow>& row_cache() {
  static detail::WriteOnceCache<unsigned, NarayanaRow> cache;
  return cache;
}

detail::WriteOnceCache<unsigned, BigInt>& catalan_cache() {
  static detail::WriteOnceCache<unsigned, BigInt> cache;
  return cache;
}

NarayanaRow compute_row(unsigned r) {
  NarayanaRow row{r, {}};
  row.entries.reserve(r);
  for (unsigned k = 1; k <= r; ++k) row.entries.push_back(narayana_number(r, k));
  return row;
}

Polynomial row_polynomial(const NarayanaRow& row) {
  std::vector<Rational> c;
  c.reserve(row.entries.size());
  for (const auto& e : row.entries) c.emplace_back(e);
  return Polynomial(std::move(c));
}

const Polynomial kOnePlusZ{1, 1};
const Polynomial kOneMinusZSquared{1, -2, 1};

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt narayana_number(long r, long k) {
  require(r >= 1, "narayana_number needs r >= 1", r);
  if (k < 1 || k > r) return 0;
  const auto ur = static_cast<unsigned>(r);
  const auto uk = static_cast<unsigned>(k);
  const BigInt product = binomial(ur, uk - 1) * binomial(ur, uk);
  BigInt quotient, remainder;
  mpz_tdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), product.get_mpz_t(), ur);
  if (remainder != 0) {
    throw Error("N(" + std::to_string(r) + "," + std::to_string(k) + ") is not integral");
  }
  return quotient;
}

NarayanaRow narayana_row(unsigned r) {
  require(r >= 1, "narayana_row needs r >= 1", r);
  return *row_cache().get(r, compute_row);
}

Polynomial narayana_poly_direct(long r) {
  require(r >= 1, "narayana_poly_direct needs r >= 1", r);
  return row_polynomial(*row_cache().get(static_cast<unsigned>(r), compute_row));
}

Polynomial narayana_poly_direct_uncached(long r) {
  require(r >= 1, "narayana_poly_direct needs r >= 1", r);
  return row_polynomial(compute_row(static_cast<unsigned>(r)));
}

std::vector<Polynomial> narayana_polys_recurrence(unsigned r_max) {
  std::vector<Polynomial> rows;
  rows.reserve(r_max);
  if (r_max >= 1) rows.push_back(narayana_poly_direct(1));
  if (r_max >= 2) rows.push_back(narayana_poly_direct(2));
  for (long r = 3; r <= static_cast<long>(r_max); ++r) {
    const Polynomial& prev = rows[static_cast<std::size_t>(r - 2)];
    const Polynomial& prev2 = rows[static_cast<std::size_t>(r - 3)];
    rows.push_back(Rational::make(2 * r - 1, r + 1) * (kOnePlusZ * prev) -
                   Rational::make(r - 2, r + 1) * (kOneMinusZSquared * prev2));
  }
  return rows;
}

Polynomial narayana_poly_recurrence(long r) {
  require(r >= 1, "narayana_poly_recurrence needs r >= 1", r);
  return narayana_polys_recurrence(static_cast<unsigned>(r)).back();
}

Polynomial derivative_identity_first_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1) {
  require(r >= 2, "derivative_identity_first needs r >= 2", r);
  const Polynomial z_minus_1{-1, 1};
  const Polynomial numerator = Rational(r - 1) * (n_r + z_minus_1 * n_rm1);
  return Rational::make(1, 2) * numerator.div_exact_z_power(1);
}

Polynomial derivative_identity_first(long r) {
  require(r >= 2, "derivative_identity_first needs r >= 2", r);
  return derivative_identity_first_from_rows(r, narayana_poly_direct(r), narayana_poly_direct(r - 1));
}

Polynomial derivative_identity_second_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1) {
  require(r >= 2, "derivative_identity_second needs r >= 2", r);
  const Rational m(r - 1);
  const Polynomial factor{m, m * m};
  const Polynomial numerator = factor * n_rm1 - m * n_r;
  return numerator.div_exact_z_power(2);
}

Polynomial derivative_identity_second(long r) {
  require(r >= 2, "derivative_identity_second needs r >= 2", r);
  return derivative_identity_second_from_rows(r, narayana_poly_direct(r), narayana_poly_direct(r - 1));
}

Polynomial derivative_two_term_from_rows(long r, const Polynomial& n_rm1, const Polynomial& n_rm2) {
  require(r >= 3, "derivative_two_term needs r >= 3", r);
  const Polynomial linear{Rational(r - 2), Rational(3 * r)};
  const Polynomial numerator = Rational::make(r - 1, 2 * r + 2) * (linear * n_rm1) -
                               Rational::make((r - 1) * (r - 2), 2 * r + 2) * (kOneMinusZSquared * n_rm2);
  return numerator.div_exact_z_power(1);
}

Polynomial derivative_two_term(long r) {
  require(r >= 3, "derivative_two_term needs r >= 3", r);
  return derivative_two_term_from_rows(r, narayana_poly_direct(r - 1), narayana_poly_direct(r - 2));
}

BigInt catalan(long n) {
  require(n >= 1, "catalan needs n >= 1", n);
  return *catalan_cache().get(static_cast<unsigned>(n), [](unsigned m) {
    BigInt c = binomial(2 * m, m);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), m + 1);
    return c;
  });
}

Rational schroder_half_eval(long r) {
  return Rational::make(1, 2) * narayana_poly_direct(r).eval(Rational(2));
}

BigInt weighted_sum_first(long r) {
  const NarayanaRow row = narayana_row(static_cast<unsigned>(std::max(r, 0L)));
  BigInt sum = 0;
  for (long k = 1; k <= r; ++k) sum += BigInt(k - 1) * row.entries[static_cast<std::size_t>(k - 1)];
  return sum;
}

BigInt weighted_sum_second(long r) {
  const NarayanaRow row = narayana_row(static_cast<unsigned>(std::max(r, 0L)));
  BigInt sum = 0;
  for (long k = 1; k <= r; ++k) sum += BigInt((k - 1) * (k - 2)) * row.entries[static_cast<std::size_t>(k - 1)];
  return sum;
}

LassalleSequence lassalle_numbers(long n_max) {
  require(n_max >= 1, "lassalle_numbers needs n_max >= 1", n_max);
  LassalleSequence a;
  a.values.reserve(static_cast<std::size_t>(n_max));
  a.values.emplace_back(1);
  for (long n = 2; n <= n_max; ++n) {
    BigInt rhs = catalan(n);
    for (long j = 1; j < n; ++j) {
      BigInt term = binomial(static_cast<unsigned>(2 * n - 1), static_cast<unsigned>(2 * j - 1)) *
                    a[static_cast<std::size_t>(j)] * catalan(n - j);
      if (j % 2 == 1) rhs -= term;
      else rhs += term;
    }
    // (-1)^(n-1) A_n = rhs
    a.values.push_back(n % 2 == 1 ? rhs : BigInt(-rhs));
  }
  return a;
}

Polynomial lassalle_residual_from_rows(long r, const LassalleSequence& a, std::span<const Polynomial> rows) {
  require(r >= 1, "lassalle_residual needs r >= 1", r);
  const auto needed = static_cast<std::size_t>((r + 1) / 2);
  if (a.size() < needed) {
    throw DomainError("lassalle_residual(" + std::to_string(r) + ") needs " + std::to_string(needed) +
                      " Lassalle numbers, got " + std::to_string(a.size()));
  }
  if (rows.size() < static_cast<std::size_t>(r + 1)) {
    throw DomainError("lassalle_residual(" + std::to_string(r) + ") needs rows N_1..N_" + std::to_string(r + 1));
  }
  const auto row = [&](long i) -> const Polynomial& { return rows[static_cast<std::size_t>(i - 1)]; };
  Polynomial residual = kOnePlusZ * row(r) - row(r + 1);
  for (long n = 1; 2 * n - 1 <= r - 1; ++n) {
    const Rational sign(n % 2 == 0 ? 1 : -1);
    const BigInt weight =
        binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(2 * n - 1)) * a[static_cast<std::size_t>(n)];
    const Rational c = sign * Rational(weight);
    residual -= Polynomial::monomial(c, static_cast<std::size_t>(n)) * row(r - 2 * n + 1);
  }
  return residual;
}

Polynomial lassalle_residual(long r, const LassalleSequence& a) {
  require(r >= 1, "lassalle_residual needs r >= 1", r);
  std::vector<Polynomial> rows;
  for (long i = 1; i <= r + 1; ++i) rows.push_back(narayana_poly_direct(i));
  return lassalle_residual_from_rows(r, a, rows);
}

}  // namespace narayana

#pragma once

#include <narayana/polynomial.hpp>
#include <narayana/rational.hpp>

#include <vector>

namespace narayana {

/// Row r of the Narayana triangle: entries[k-1] = N(r, k) for k = 1..r.
struct NarayanaRow {
  unsigned r = 0;
  std::vector<BigInt> entries;
};

/// A_1..A_n of the Lassalle recurrence; values[0] = A_1 = 1.
struct LassalleSequence {
  std::vector<BigInt> values;

  std::size_t size() const { return values.size(); }
  /// A_n, 1-based.
  const BigInt& operator[](std::size_t n) const { return values.at(n - 1); }
};

BigInt binomial(unsigned n, unsigned k);

/// N(r, k) = binom(r, k-1) binom(r, k) / r, zero for k outside [1, r].
/// Throws DomainError for r < 1.
BigInt narayana_number(long r, long k);
NarayanaRow narayana_row(unsigned r);

/// sum_k N(r, k) z^(k-1), read off the (cached) triangle row.
Polynomial narayana_poly_direct(long r);
/// narayana_poly_direct without the row cache; used for timing.
Polynomial narayana_poly_direct_uncached(long r);
/// Same polynomial, from the three-term recurrence seeded with N_1 = 1, N_2 = 1 + z.
Polynomial narayana_poly_recurrence(long r);
/// N_1..N_{r_max} by the three-term recurrence; result[r-1] = N_r.
std::vector<Polynomial> narayana_polys_recurrence(unsigned r_max);

// Derivative identities. Each one is a polynomial identity after clearing the
// 1/z or 1/z^2 factor; the exact division throws NotDivisible if the inputs do
// not satisfy it. The *_from_rows forms take the Narayana polynomials as
// arguments so that arbitrary (possibly corrupted) rows can be checked.

/// N'_r = (r-1)/(2z) * (N_r + (z-1) N_{r-1}), r >= 2.
Polynomial derivative_identity_first(long r);
Polynomial derivative_identity_first_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1);

/// N''_r = (-(r-1) N_r + ((r-1)^2 z + (r-1)) N_{r-1}) / z^2, r >= 2.
Polynomial derivative_identity_second(long r);
Polynomial derivative_identity_second_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1);

/// N'_r from N_{r-1} and N_{r-2} alone, r >= 3.
Polynomial derivative_two_term(long r);
Polynomial derivative_two_term_from_rows(long r, const Polynomial& n_rm1, const Polynomial& n_rm2);

/// C_n = binom(2n, n) / (n + 1), n >= 1. Cached.
BigInt catalan(long n);

/// (1/2) N_r(2), taken literally. These are half-integers, not the large
/// Schroder numbers 2, 6, 22, 90, ... (which are 2 N_r(2)).
Rational schroder_half_eval(long r);

/// sum_k (k-1) N(r, k) by direct summation over the row.
BigInt weighted_sum_first(long r);
/// sum_k (k-1)(k-2) N(r, k) by direct summation over the row.
BigInt weighted_sum_second(long r);

LassalleSequence lassalle_numbers(long n_max);

/// (z+1) N_r - N_{r+1} - sum_{n>=1, 2n-1<=r-1} (-z)^n binom(r-1, 2n-1) A_n N_{r-2n+1}.
/// Zero when Lassalle's recurrence holds. Needs ceil(r/2) values of A.
Polynomial lassalle_residual(long r, const LassalleSequence& a);
/// rows[i] must hold N_{i+1} for i = 0..r.
Polynomial lassalle_residual_from_rows(long r, const LassalleSequence& a, std::span<const Polynomial> rows);

}  // namespace narayana

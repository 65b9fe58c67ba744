#include <doctest.h>

#include "oracles.hpp"

#include <narayana/error.hpp>
#include <narayana/narayana.hpp>

#include <thread>

using namespace narayana;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

constexpr long kMaxR = 60;

}  // namespace

TEST_CASE("narayana numbers") {
  CHECK(narayana_number(1, 1) == 1);
  CHECK(narayana_number(3, 2) == 3);
  CHECK(narayana_number(5, 3) == 20);
  CHECK(narayana_number(5, 0) == 0);
  CHECK(narayana_number(5, 6) == 0);
  CHECK_THROWS_AS(narayana_number(0, 1), DomainError);
}

TEST_CASE("triangle rows match Dyck path peak counts") {
  for (unsigned r = 1; r <= 10; ++r) {
    CAPTURE(r);
    const auto expected = oracle::narayana_row_by_dyck_paths(r);
    const NarayanaRow row = narayana_row(r);
    REQUIRE(row.entries.size() == r);
    for (unsigned k = 0; k < r; ++k) CHECK(row.entries[k] == expected[k]);
  }
}

TEST_CASE("row invariants") {
  for (unsigned r = 1; r <= 40; ++r) {
    const NarayanaRow row = narayana_row(r);
    CHECK(row.entries.front() == 1);
    CHECK(row.entries.back() == 1);
    for (unsigned k = 0; k < r; ++k) CHECK(row.entries[k] == row.entries[r - 1 - k]);
  }
}

TEST_CASE("direct polynomial") {
  CHECK(narayana_poly_direct(1) == P({1}));
  CHECK(narayana_poly_direct(3) == P({1, 3, 1}));
  CHECK(narayana_poly_direct(4) == P({1, 6, 6, 1}));
  CHECK(narayana_poly_direct(6) == P({1, 15, 50, 50, 15, 1}));
  CHECK(narayana_poly_direct_uncached(6) == narayana_poly_direct(6));
  CHECK_THROWS_AS(narayana_poly_direct(0), DomainError);
  for (long r = 1; r <= kMaxR; ++r) {
    const Polynomial p = narayana_poly_direct(r);
    CHECK(p.degree() == r - 1);
    CHECK(p.reversed() == p);
  }
}

TEST_CASE("recurrence construction") {
  CHECK(narayana_poly_recurrence(1) == P({1}));
  CHECK(narayana_poly_recurrence(2) == P({1, 1}));
  CHECK(narayana_poly_recurrence(3) == P({1, 3, 1}));
  CHECK(narayana_poly_recurrence(6) == P({1, 15, 50, 50, 15, 1}));
  CHECK_THROWS_AS(narayana_poly_recurrence(0), DomainError);
  const auto rows = narayana_polys_recurrence(kMaxR);
  for (long r = 1; r <= kMaxR; ++r) REQUIRE(rows[static_cast<std::size_t>(r - 1)] == narayana_poly_direct(r));
}

TEST_CASE("first derivative identity") {
  CHECK(derivative_identity_first(2) == P({1}));
  CHECK(derivative_identity_first(3) == P({3, 2}));
  CHECK(derivative_identity_first(4).eval(Rational(1)) == Rational(21));
  CHECK_THROWS_AS(derivative_identity_first(1), DomainError);
  for (long r = 2; r <= kMaxR; ++r) {
    REQUIRE(derivative_identity_first(r) == narayana_poly_direct(r).derivative());
  }
}

TEST_CASE("second derivative identity") {
  CHECK(derivative_identity_second(2).is_zero());
  CHECK(derivative_identity_second(3) == P({2}));
  // -(r-1) C_4 + r(r-1) C_3 = -42 + 60
  CHECK(derivative_identity_second(4).eval(Rational(1)) == Rational(18));
  CHECK_THROWS_AS(derivative_identity_second(1), DomainError);
  for (long r = 2; r <= kMaxR; ++r) {
    REQUIRE(derivative_identity_second(r) == narayana_poly_direct(r).derivative().derivative());
  }
}

TEST_CASE("two-term derivative recurrence") {
  CHECK(derivative_two_term(3) == P({3, 2}));
  CHECK(derivative_two_term(4) == P({6, 12, 3}));
  CHECK(derivative_two_term(5) == P({10, 40, 30, 4}));
  CHECK_THROWS_AS(derivative_two_term(2), DomainError);
  for (long r = 3; r <= kMaxR; ++r) REQUIRE(derivative_two_term(r) == narayana_poly_direct(r).derivative());
}

TEST_CASE("derivative identities reject rows that break them") {
  const Polynomial bad_constant = P({2, 3, 1});
  CHECK_THROWS_AS(derivative_identity_first_from_rows(3, bad_constant, narayana_poly_direct(2)), NotDivisible);
  CHECK_THROWS_AS(derivative_identity_second_from_rows(3, bad_constant, narayana_poly_direct(2)), NotDivisible);
  CHECK_THROWS_AS(derivative_identity_second_from_rows(3, P({1, 7, 1}), narayana_poly_direct(2)), NotDivisible);
  // The first-derivative identity is blind to a change in the coefficient of
  // z^j with 2j = r - 1: both sides move by the same amount.
  CHECK(derivative_identity_first_from_rows(3, P({1, 7, 1}), narayana_poly_direct(2)) == P({1, 7, 1}).derivative());
  CHECK_THROWS_AS(derivative_two_term_from_rows(3, P({2, 1}), narayana_poly_direct(1)), NotDivisible);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK_THROWS_AS(catalan(0), DomainError);
  for (long r = 1; r <= 50; ++r) {
    CHECK(Rational(catalan(r)) == narayana_poly_direct(r).eval(Rational(1)));
    if (r >= 2) CHECK(Rational(catalan(r)) == Rational::make(4 * r - 2, r + 1) * Rational(catalan(r - 1)));
  }
}

TEST_CASE("schroder half evaluation follows the literal definition") {
  CHECK(schroder_half_eval(1) == Rational::make(1, 2));
  CHECK(schroder_half_eval(2) == Rational::make(3, 2));
  CHECK(schroder_half_eval(3) == Rational::make(11, 2));
  CHECK(schroder_half_eval(4) == Rational::make(45, 2));
  // four times the literal value is the classical large Schroder sequence
  const long large[] = {2, 6, 22, 90, 394, 1806};
  for (long r = 1; r <= 6; ++r) CHECK(Rational(4) * schroder_half_eval(r) == Rational(large[r - 1]));
}

TEST_CASE("weighted sums") {
  CHECK(weighted_sum_first(3) == 5);
  CHECK(weighted_sum_second(3) == 2);
  CHECK(weighted_sum_first(1) == 0);
  CHECK(weighted_sum_second(1) == 0);
  for (long r = 1; r <= 50; ++r) {
    CAPTURE(r);
    const BigInt c_prev = r >= 2 ? catalan(r - 1) : BigInt(1);
    CHECK(Rational(weighted_sum_first(r)) == Rational::make(r - 1, 2) * Rational(catalan(r)));
    CHECK(weighted_sum_second(r) == BigInt(-(r - 1)) * catalan(r) + BigInt(r * (r - 1)) * c_prev);
    if (r >= 2) {
      CHECK(Rational(weighted_sum_first(r)) == derivative_identity_first(r).eval(Rational(1)));
      CHECK(Rational(weighted_sum_second(r)) == derivative_identity_second(r).eval(Rational(1)));
    }
  }
}

TEST_CASE("lassalle numbers") {
  const LassalleSequence a = lassalle_numbers(6);
  const auto expected = oracle::lassalle_int64(6);
  REQUIRE(a.size() == 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(a[n] == expected[n - 1]);
  CHECK(a[1] == 1);
  CHECK(a[2] == 1);
  CHECK(a[3] == 5);
  CHECK(a[4] == 56);
  CHECK(a[5] == 1092);
  CHECK_THROWS_AS(lassalle_numbers(0), DomainError);
}

TEST_CASE("lassalle residual vanishes") {
  const LassalleSequence a = lassalle_numbers(15);
  CHECK(lassalle_residual(1, a).is_zero());
  CHECK(lassalle_residual(2, a).is_zero());
  CHECK(lassalle_residual(10, a).is_zero());
  for (long r = 1; r <= 30; ++r) REQUIRE(lassalle_residual(r, a).is_zero());
  CHECK_THROWS_AS(lassalle_residual(10, lassalle_numbers(4)), DomainError);
}

TEST_CASE("concurrent cache access yields identical rows") {
  std::vector<std::thread> threads;
  std::vector<Polynomial> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = narayana_poly_direct(77); });
  }
  for (auto& th : threads) th.join();
  for (const auto& p : results) CHECK(p == narayana_poly_direct_uncached(77));
}

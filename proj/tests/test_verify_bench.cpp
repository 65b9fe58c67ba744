#include <doctest.h>

#include <narayana/bench.hpp>
#include <narayana/error.hpp>
#include <narayana/narayana.hpp>
#include <narayana/verify.hpp>

#include <json.hpp>

#include <algorithm>

using namespace narayana;

TEST_CASE("identity names round-trip") {
  for (Identity id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
  CHECK_FALSE(identity_from_name("eq99").has_value());
  CHECK(all_identities().size() == 11);
}

TEST_CASE("every identity passes on its default range") {
  const Verifier v;
  for (Identity id : all_identities()) {
    CAPTURE(identity_name(id));
    const VerifyReport report = v.run(id, identity_range(id).r_default);
    CHECK(report.passed());
    CHECK(report.r_min == identity_range(id).r_min);
  }
}

TEST_CASE("r_max below the validity range is a domain error") {
  const Verifier v;
  CHECK_THROWS_AS(v.run(Identity::eq3, 2), DomainError);
  CHECK_THROWS_AS(v.run(Identity::ioa, 2), DomainError);
  CHECK_NOTHROW(v.run(Identity::eq4, 2));
}

TEST_CASE("a corrupted reference row is caught by every row-based identity") {
  Verifier v;
  Polynomial bad = narayana_poly_direct(6);
  std::vector<Rational> c = bad.coeffs();
  c[2] += Rational(1);
  v.override_row(6, Polynomial(std::move(c)));
  for (Identity id : all_identities()) {
    if (id == Identity::stein) continue;
    CAPTURE(identity_name(id));
    const VerifyReport report = v.run(id, 20);
    REQUIRE_FALSE(report.passed());
    CHECK(report.first_failure->r <= 7);
    CHECK_FALSE(report.first_failure->residual.empty());
  }
  CHECK(v.run(Identity::stein, 5).passed());
}

TEST_CASE("report json shape") {
  Verifier v;
  auto pass = nlohmann::json::parse(v.run(Identity::eq3, 5).to_json());
  CHECK(pass["identity"] == "eq3");
  CHECK(pass["r_range"] == nlohmann::json::array({3, 5}));
  CHECK(pass["status"] == "pass");
  CHECK(pass["first_failure"].is_null());

  v.override_row(4, Polynomial({Rational(1), Rational(6), Rational(7), Rational(1)}));
  auto fail = nlohmann::json::parse(v.run(Identity::eq3, 5).to_json());
  CHECK(fail["status"] == "fail");
  CHECK(fail["first_failure"]["r"] == 4);
  CHECK(fail["first_failure"]["residual"].get<std::string>().find("residual") == 0);
}

TEST_CASE("stein runs are reproducible per seed") {
  const Verifier v;
  CHECK(v.run(Identity::stein, 20, 1).to_json() == v.run(Identity::stein, 20, 1).to_json());
}

TEST_CASE("method names") {
  for (Method m : all_methods()) CHECK(method_from_name(method_name(m)) == m);
  CHECK_FALSE(method_from_name("fft").has_value());
}

TEST_CASE("methods agree") {
  CHECK_FALSE(first_method_disagreement(60).has_value());
  for (Method m : all_methods()) CHECK(build_polynomial(m, 9) == narayana_poly_direct(9));
}

TEST_CASE("bench smoke") {
  const auto records = run_bench(3, 1, all_methods());
  CHECK(records.size() == 9);
  for (Method m : all_methods()) {
    CHECK(std::count_if(records.begin(), records.end(), [m](const BenchRecord& rec) { return rec.method == m; }) >= 1);
  }
  for (const auto& rec : records) CHECK(rec.max_coeff_bits >= 1);
  CHECK_THROWS_AS(run_bench(2, 1, all_methods()), DomainError);
  CHECK_THROWS_AS(run_bench(5, 0, all_methods()), DomainError);
}

TEST_CASE("coefficient bit length grows with r") {
  std::uint64_t previous = 0;
  for (long r = 1; r <= 120; ++r) {
    const std::uint64_t bits = max_coeff_bits(narayana_poly_direct(r));
    // the largest entry of a row sits in the middle
    const BigInt central = narayana_number(r, (r + 1) / 2);
    CHECK(bits == mpz_sizeinbase(central.get_mpz_t(), 2));
    CHECK(bits >= previous);
    previous = bits;
  }
}

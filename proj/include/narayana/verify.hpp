#pragma once

#include <narayana/polynomial.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace narayana {

enum class Identity {
  eq3,                  // three-term recurrence
  eq4,                  // first-derivative identity
  eq5,                  // second-derivative identity
  remark2,              // two-term first-derivative recurrence
  eq6,                  // Lassalle's recurrence
  eq7,                  // semicircular moment representation
  stein,                // E[h(X)X] = E[h'(X)(1-X^2)]/3 on random polynomials
  io,                   // first proof relation
  ioa,                  // second proof relation
  catalan_contraction,  // C_r = (4r-2)/(r+1) C_{r-1} and N_r(1) = C_r
  weighted_sums,        // sum (k-1) N(r,k) and sum (k-1)(k-2) N(r,k)
};

std::span<const Identity> all_identities();
std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

/// Smallest admissible r_max and the range checked by default. For stein the
/// "r" axis counts random test polynomials.
struct IdentityRange {
  long r_min = 1;
  long r_default = 1;
};
IdentityRange identity_range(Identity id);

struct Failure {
  long r = 0;
  std::string residual;
};

struct VerifyReport {
  Identity identity = Identity::eq3;
  long r_min = 0;
  long r_max = 0;
  std::optional<Failure> first_failure;

  bool passed() const { return !first_failure.has_value(); }
  /// {"identity":..,"r_range":[lo,hi],"status":"pass"|"fail","first_failure":null|{"r":..,"residual":..}}
  std::string to_json() const;
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr unsigned kSteinMaxDegree = 25;

/// Runs identity checks against a table of reference Narayana polynomials.
/// The table defaults to the direct construction; individual rows may be
/// replaced, e.g. by a deliberately corrupted fixture.
class Verifier {
 public:
  void override_row(long r, Polynomial p);
  const std::map<long, Polynomial>& overrides() const { return overrides_; }

  /// Throws DomainError if r_max < identity_range(id).r_min.
  VerifyReport run(Identity id, long r_max, std::uint64_t seed = kDefaultSeed) const;

  /// Reference N_r.
  Polynomial row(long r) const;

 private:
  std::map<long, Polynomial> overrides_;
};

/// Random polynomial of degree <= max_degree with rational coefficients whose
/// numerators and denominators are bounded by 10^6 in magnitude.
template <class Rng>
Polynomial random_polynomial(Rng& rng, unsigned max_degree);

}  // namespace narayana

#include <random>

namespace narayana {

template <class Rng>
Polynomial random_polynomial(Rng& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  const unsigned d = degree(rng);
  std::vector<Rational> c;
  c.reserve(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    const long p = num(rng);
    c.push_back(Rational::make(p, den(rng)));
  }
  return Polynomial(std::move(c));
}

}  // namespace narayana

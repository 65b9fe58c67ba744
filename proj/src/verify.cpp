#include <narayana/error.hpp>
#include <narayana/narayana.hpp>
#include <narayana/semicircle.hpp>
#include <narayana/verify.hpp>

#include <json.hpp>

#include <array>
#include <functional>
#include <random>

namespace narayana {

namespace {

struct IdentityInfo {
  Identity id;
  std::string_view name;
  IdentityRange range;
};

constexpr std::array<IdentityInfo, 11> kIdentities{{
    {Identity::eq3, "eq3", {3, 60}},
    {Identity::eq4, "eq4", {2, 60}},
    {Identity::eq5, "eq5", {2, 60}},
    {Identity::remark2, "remark2", {3, 60}},
    {Identity::eq6, "eq6", {1, 30}},
    {Identity::eq7, "eq7", {1, 40}},
    {Identity::stein, "stein", {1, 200}},
    {Identity::io, "io", {2, 40}},
    {Identity::ioa, "ioa", {3, 40}},
    {Identity::catalan_contraction, "catalan-contraction", {2, 50}},
    {Identity::weighted_sums, "weighted-sums", {1, 50}},
}};

constexpr std::array<Identity, 11> kIdentityList{
    Identity::eq3, Identity::eq4, Identity::eq5, Identity::remark2, Identity::eq6,  Identity::eq7,
    Identity::stein, Identity::io, Identity::ioa, Identity::catalan_contraction, Identity::weighted_sums};

const IdentityInfo& info(Identity id) {
  for (const auto& i : kIdentities) {
    if (i.id == id) return i;
  }
  throw Error("unknown identity");
}

constexpr std::size_t kMaxResidualChars = 400;

std::string clip(std::string s) {
  if (s.size() > kMaxResidualChars) {
    s.resize(kMaxResidualChars);
    s += "...";
  }
  return s;
}

std::string describe_mismatch(const Polynomial& got, const Polynomial& want) {
  return clip("residual " + (got - want).to_string());
}

// Result of one r: empty on success, otherwise a residual description.
using Check = std::function<std::optional<std::string>(long)>;

std::optional<std::string> expect_equal(const Polynomial& got, const Polynomial& want) {
  if (got == want) return std::nullopt;
  return describe_mismatch(got, want);
}

std::optional<std::string> expect_zero(const Polynomial& residual) {
  if (residual.is_zero()) return std::nullopt;
  return clip("residual " + residual.to_string());
}

}  // namespace

std::span<const Identity> all_identities() { return kIdentityList; }

std::string_view identity_name(Identity id) { return info(id).name; }

std::optional<Identity> identity_from_name(std::string_view name) {
  for (const auto& i : kIdentities) {
    if (i.name == name) return i.id;
  }
  return std::nullopt;
}

IdentityRange identity_range(Identity id) { return info(id).range; }

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity_name(identity);
  j["r_range"] = {r_min, r_max};
  j["status"] = passed() ? "pass" : "fail";
  if (first_failure) {
    j["first_failure"] = {{"r", first_failure->r}, {"residual", first_failure->residual}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j.dump();
}

void Verifier::override_row(long r, Polynomial p) {
  if (r < 1) throw DomainError("override_row needs r >= 1 (got " + std::to_string(r) + ")");
  overrides_.insert_or_assign(r, std::move(p));
}

Polynomial Verifier::row(long r) const {
  if (auto it = overrides_.find(r); it != overrides_.end()) return it->second;
  return narayana_poly_direct(r);
}

VerifyReport Verifier::run(Identity id, long r_max, std::uint64_t seed) const {
  const IdentityRange range = identity_range(id);
  if (r_max < range.r_min) {
    throw DomainError(std::string(identity_name(id)) + " needs r_max >= " + std::to_string(range.r_min) + " (got " +
                      std::to_string(r_max) + ")");
  }
  VerifyReport report{id, range.r_min, r_max, std::nullopt};

  // Whole-range precomputations, shared by the per-r checks below.
  std::vector<Polynomial> precomputed;
  LassalleSequence lassalle;
  std::vector<Polynomial> rows;
  std::mt19937_64 rng(seed);

  Check check;
  switch (id) {
    case Identity::eq3:
      precomputed = narayana_polys_recurrence(static_cast<unsigned>(r_max));
      check = [&](long r) { return expect_equal(precomputed[static_cast<std::size_t>(r - 1)], row(r)); };
      break;
    case Identity::eq4:
      check = [&](long r) {
        const Polynomial n_r = row(r);
        return expect_equal(derivative_identity_first_from_rows(r, n_r, row(r - 1)), n_r.derivative());
      };
      break;
    case Identity::eq5:
      check = [&](long r) {
        const Polynomial n_r = row(r);
        return expect_equal(derivative_identity_second_from_rows(r, n_r, row(r - 1)), n_r.derivative().derivative());
      };
      break;
    case Identity::remark2:
      check = [&](long r) {
        return expect_equal(derivative_two_term_from_rows(r, row(r - 1), row(r - 2)), row(r).derivative());
      };
      break;
    case Identity::eq6:
      lassalle = lassalle_numbers((r_max + 1) / 2);
      for (long i = 1; i <= r_max + 1; ++i) rows.push_back(row(i));
      check = [&](long r) { return expect_zero(lassalle_residual_from_rows(r, lassalle, rows)); };
      break;
    case Identity::eq7:
      precomputed = binomial_power_expect_range(static_cast<unsigned>(r_max));
      check = [&](long r) { return expect_equal(precomputed[static_cast<std::size_t>(r - 1)], row(r)); };
      break;
    case Identity::stein:
      check = [&](long) -> std::optional<std::string> {
        const Polynomial h = random_polynomial(rng, kSteinMaxDegree);
        const Rational residual = stein_residual(h);
        if (residual.is_zero()) return std::nullopt;
        return clip("residual " + residual.to_string() + " for h = " + h.to_string());
      };
      break;
    case Identity::io:
      check = [&](long r) { return expect_zero(relation_io_residual_from_rows(r, row(r), row(r - 1))); };
      break;
    case Identity::ioa:
      check = [&](long r) { return expect_zero(relation_ioa_residual_from_rows(r, row(r), row(r - 1), row(r - 2))); };
      break;
    case Identity::catalan_contraction:
      check = [&](long r) -> std::optional<std::string> {
        const BigInt c_r = catalan(r);
        const BigInt c_prev = catalan(r - 1);
        if (Rational(c_r) != Rational::make(4 * r - 2, r + 1) * Rational(c_prev)) {
          return "C_r = " + c_r.get_str() + " but (4r-2)/(r+1) C_{r-1} = " +
                 (Rational::make(4 * r - 2, r + 1) * Rational(c_prev)).to_string();
        }
        for (long s : {r - 1, r}) {
          const Rational at_one = row(s).eval(Rational(1));
          if (at_one != Rational(catalan(s))) {
            return "N_" + std::to_string(s) + "(1) = " + at_one.to_string() + " but C_" + std::to_string(s) + " = " +
                   catalan(s).get_str();
          }
        }
        return std::nullopt;
      };
      break;
    case Identity::weighted_sums:
      check = [&](long r) -> std::optional<std::string> {
        const Polynomial n_r = row(r);
        Rational first, second;
        for (std::size_t i = 0; i < n_r.size(); ++i) {
          const auto k_minus_1 = static_cast<long>(i);
          first += Rational(k_minus_1) * n_r.coeffs()[i];
          second += Rational(k_minus_1 * (k_minus_1 - 1)) * n_r.coeffs()[i];
        }
        const Rational c_r(catalan(r));
        const Rational c_prev = r >= 2 ? Rational(catalan(r - 1)) : Rational(1);
        const Rational want_first = Rational::make(r - 1, 2) * c_r;
        const Rational want_second = Rational(-(r - 1)) * c_r + Rational(r * (r - 1)) * c_prev;
        if (first != want_first) {
          return "sum (k-1)N(r,k) = " + first.to_string() + " but (r-1)/2 C_r = " + want_first.to_string();
        }
        if (second != want_second) {
          return "sum (k-1)(k-2)N(r,k) = " + second.to_string() + " but -(r-1)C_r + r(r-1)C_{r-1} = " +
                 want_second.to_string();
        }
        return std::nullopt;
      };
      break;
  }

  for (long r = range.r_min; r <= r_max; ++r) {
    std::optional<std::string> failure;
    try {
      failure = check(r);
    } catch (const NotDivisible& e) {
      failure = clip(std::string("exact division failed: ") + e.what());
    } catch (const InconsistentExpectation& e) {
      failure = clip(std::string("expectation failed: ") + e.what());
    }
    if (failure) {
      report.first_failure = Failure{r, std::move(*failure)};
      break;
    }
  }
  return report;
}

}  // namespace narayana

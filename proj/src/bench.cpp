#include <narayana/bench.hpp>
#include <narayana/error.hpp>
#include <narayana/narayana.hpp>
#include <narayana/semicircle.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <string>

namespace narayana {

namespace {

constexpr std::array<Method, 3> kMethods{Method::direct, Method::recurrence, Method::moment};

Polynomial build_uncached(Method m, long r) {
  switch (m) {
    case Method::direct: return narayana_poly_direct_uncached(r);
    case Method::recurrence: return narayana_poly_recurrence(r);
    case Method::moment: return binomial_power_expect(r);
  }
  throw Error("unknown method");
}

}  // namespace

std::span<const Method> all_methods() { return kMethods; }

std::string_view method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::recurrence: return "recurrence";
    case Method::moment: return "moment";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : kMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Polynomial build_polynomial(Method m, long r) {
  if (m == Method::direct) return narayana_poly_direct(r);
  return build_uncached(m, r);
}

std::uint64_t max_coeff_bits(const Polynomial& p) {
  std::uint64_t bits = 1;
  for (const auto& c : p.coeffs()) {
    bits = std::max<std::uint64_t>(bits, mpz_sizeinbase(c.raw().get_num_mpz_t(), 2));
  }
  return bits;
}

std::optional<long> first_method_disagreement(unsigned r_max) {
  const auto by_recurrence = narayana_polys_recurrence(r_max);
  const auto by_moment = binomial_power_expect_range(r_max);
  for (unsigned r = 1; r <= r_max; ++r) {
    const Polynomial direct = narayana_poly_direct(r);
    if (direct != by_recurrence[r - 1] || direct != by_moment[r - 1]) return static_cast<long>(r);
  }
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(unsigned r_max, unsigned reps, std::span<const Method> methods) {
  if (r_max < 3) throw DomainError("bench needs r_max >= 3");
  if (reps < 1) throw DomainError("bench needs reps >= 1");
  if (auto bad = first_method_disagreement(r_max)) {
    throw MethodDisagreement(*bad, "construction methods disagree at r = " + std::to_string(*bad));
  }

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  records.reserve(methods.size() * r_max);
  std::vector<std::uint64_t> times(reps);
  for (Method m : methods) {
    for (long r = 1; r <= static_cast<long>(r_max); ++r) {
      Polynomial last;
      for (unsigned i = 0; i < reps; ++i) {
        const auto start = clock::now();
        last = build_uncached(m, r);
        const auto stop = clock::now();
        times[i] = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      std::nth_element(times.begin(), times.begin() + reps / 2, times.end());
      records.push_back(BenchRecord{m, r, times[reps / 2], max_coeff_bits(last)});
    }
  }
  return records;
}

}  // namespace narayana

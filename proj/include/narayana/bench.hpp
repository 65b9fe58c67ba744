#pragma once

#include <narayana/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace narayana {

/// The three independent constructions of the Narayana polynomial.
enum class Method { direct, recurrence, moment };

std::span<const Method> all_methods();
std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// N_r built by the given method. direct goes through the row cache.
Polynomial build_polynomial(Method m, long r);

struct BenchRecord {
  Method method = Method::direct;
  long r = 0;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t max_coeff_bits = 1;
};

/// Bit length of the largest coefficient numerator (at least 1).
std::uint64_t max_coeff_bits(const Polynomial& p);

/// Smallest r <= r_max at which the three methods disagree, if any.
std::optional<long> first_method_disagreement(unsigned r_max);

/// Needs r_max >= 3 and reps >= 1. Checks agreement for r <= r_max (throws MethodDisagreement otherwise),
/// then times each method on every r in 1..r_max. Each record carries the
/// median of `reps` uncached constructions.
std::vector<BenchRecord> run_bench(unsigned r_max, unsigned reps, std::span<const Method> methods);

}  // namespace narayana

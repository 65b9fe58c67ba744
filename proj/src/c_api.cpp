#include <narayana/bench.hpp>
#include <narayana/error.hpp>
#include <narayana/narayana.h>
#include <narayana/narayana.hpp>
#include <narayana/verify.hpp>

#include <new>
#include <string>
#include <string_view>
#include <vector>

struct nar_poly {
  narayana::Polynomial value;
  std::vector<std::string> text;
};

struct nar_strings {
  std::vector<std::string> items;
};

struct nar_verifier {
  narayana::Verifier value;
};

struct nar_report {
  narayana::VerifyReport value;
  std::string json;
};

struct nar_bench {
  std::vector<narayana::BenchRecord> records;
};

namespace {

thread_local std::string g_last_error;

nar_status fail(nar_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the C++ core onto status codes.
template <class F>
nar_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const narayana::DomainError& e) {
    return fail(NAR_ERR_DOMAIN, e.what());
  } catch (const narayana::DivisionByZero& e) {
    return fail(NAR_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const narayana::NotDivisible& e) {
    return fail(NAR_ERR_NOT_DIVISIBLE, e.what());
  } catch (const narayana::InconsistentExpectation& e) {
    return fail(NAR_ERR_INCONSISTENT, e.what());
  } catch (const narayana::ParseError& e) {
    return fail(NAR_ERR_PARSE, e.what());
  } catch (const narayana::MethodDisagreement& e) {
    return fail(NAR_ERR_DISAGREEMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NAR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NAR_ERR_INTERNAL, e.what());
  }
}

narayana::Method to_method(nar_method m) {
  switch (m) {
    case NAR_METHOD_DIRECT: return narayana::Method::direct;
    case NAR_METHOD_RECURRENCE: return narayana::Method::recurrence;
    case NAR_METHOD_MOMENT: return narayana::Method::moment;
  }
  throw narayana::DomainError("unknown method code " + std::to_string(static_cast<int>(m)));
}

nar_method from_method(narayana::Method m) {
  switch (m) {
    case narayana::Method::direct: return NAR_METHOD_DIRECT;
    case narayana::Method::recurrence: return NAR_METHOD_RECURRENCE;
    case narayana::Method::moment: return NAR_METHOD_MOMENT;
  }
  return NAR_METHOD_DIRECT;
}

nar_poly* wrap(narayana::Polynomial p) {
  auto* out = new nar_poly{std::move(p), {}};
  out->text = out->value.to_strings();
  return out;
}

std::vector<std::string> sequence_values(std::string_view name, long n) {
  using namespace narayana;
  if (n < 1) throw DomainError("sequence length must be >= 1 (got " + std::to_string(n) + ")");
  std::vector<std::string> out;
  if (name == "narayana-row") {
    for (const auto& e : narayana_row(static_cast<unsigned>(n)).entries) out.push_back(e.get_str());
    return out;
  }
  if (name == "lassalle") {
    for (const auto& a : lassalle_numbers(n).values) out.push_back(a.get_str());
    return out;
  }
  for (long i = 1; i <= n; ++i) {
    if (name == "catalan") out.push_back(catalan(i).get_str());
    else if (name == "schroder-half") out.push_back(schroder_half_eval(i).to_string());
    else if (name == "large-schroder") out.push_back((Rational(4) * schroder_half_eval(i)).to_string());
    else if (name == "weighted1") out.push_back(weighted_sum_first(i).get_str());
    else if (name == "weighted2") out.push_back(weighted_sum_second(i).get_str());
    else throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* nar_last_error(void) { return g_last_error.c_str(); }

const char* nar_status_string(nar_status status) {
  switch (status) {
    case NAR_OK: return "ok";
    case NAR_ERR_DOMAIN: return "domain error";
    case NAR_ERR_DIVISION_BY_ZERO: return "division by zero";
    case NAR_ERR_NOT_DIVISIBLE: return "not divisible";
    case NAR_ERR_INCONSISTENT: return "inconsistent expectation";
    case NAR_ERR_PARSE: return "parse error";
    case NAR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NAR_ERR_DISAGREEMENT: return "methods disagree";
    case NAR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

nar_status nar_method_from_name(const char* name, nar_method* out) {
  if (name == nullptr || out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  auto m = narayana::method_from_name(name);
  if (!m) return fail(NAR_ERR_INVALID_ARGUMENT, std::string("unknown method '") + name + "'");
  *out = from_method(*m);
  return NAR_OK;
}

const char* nar_method_name(nar_method method) {
  switch (method) {
    case NAR_METHOD_DIRECT: return "direct";
    case NAR_METHOD_RECURRENCE: return "recurrence";
    case NAR_METHOD_MOMENT: return "moment";
  }
  return nullptr;
}

nar_status nar_poly_build(int64_t r, nar_method method, nar_poly** out) {
  if (out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    *out = wrap(narayana::build_polynomial(to_method(method), static_cast<long>(r)));
    return NAR_OK;
  });
}

nar_status nar_poly_parse(const char* const* coeffs, size_t count, nar_poly** out) {
  if (out == nullptr || (coeffs == nullptr && count > 0)) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> text;
    text.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (coeffs[i] == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null coefficient string");
      text.emplace_back(coeffs[i]);
    }
    *out = wrap(narayana::Polynomial::from_strings(text));
    return NAR_OK;
  });
}

void nar_poly_free(nar_poly* p) { delete p; }

size_t nar_poly_size(const nar_poly* p) { return p == nullptr ? 0 : p->text.size(); }

const char* nar_poly_coeff(const nar_poly* p, size_t i) {
  if (p == nullptr || i >= p->text.size()) return nullptr;
  return p->text[i].c_str();
}

int nar_poly_equal(const nar_poly* a, const nar_poly* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value == b->value ? 1 : 0;
}

nar_status nar_sequence(const char* name, int64_t n, nar_strings** out) {
  if (name == nullptr || out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      *out = new nar_strings{sequence_values(name, static_cast<long>(n))};
    } catch (const std::invalid_argument& e) {
      return fail(NAR_ERR_INVALID_ARGUMENT, e.what());
    }
    return NAR_OK;
  });
}

size_t nar_strings_size(const nar_strings* s) { return s == nullptr ? 0 : s->items.size(); }

const char* nar_strings_at(const nar_strings* s, size_t i) {
  if (s == nullptr || i >= s->items.size()) return nullptr;
  return s->items[i].c_str();
}

void nar_strings_free(nar_strings* s) { delete s; }

size_t nar_identity_count(void) { return narayana::all_identities().size(); }

const char* nar_identity_name(size_t index) {
  const auto ids = narayana::all_identities();
  if (index >= ids.size()) return nullptr;
  // identity names are static string literals
  return narayana::identity_name(ids[index]).data();
}

nar_status nar_identity_range(const char* identity, int64_t* r_min, int64_t* r_default) {
  if (identity == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null identity name");
  auto id = narayana::identity_from_name(identity);
  if (!id) return fail(NAR_ERR_INVALID_ARGUMENT, std::string("unknown identity '") + identity + "'");
  const auto range = narayana::identity_range(*id);
  if (r_min != nullptr) *r_min = range.r_min;
  if (r_default != nullptr) *r_default = range.r_default;
  return NAR_OK;
}

nar_status nar_verifier_create(nar_verifier** out) {
  if (out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    *out = new nar_verifier{};
    return NAR_OK;
  });
}

void nar_verifier_free(nar_verifier* v) { delete v; }

nar_status nar_verifier_override_row(nar_verifier* v, int64_t r, const nar_poly* p) {
  if (v == nullptr || p == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    v->value.override_row(static_cast<long>(r), p->value);
    return NAR_OK;
  });
}

nar_status nar_verify(const nar_verifier* v, const char* identity, int64_t r_max, uint64_t seed, nar_report** out) {
  if (v == nullptr || identity == nullptr || out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  auto id = narayana::identity_from_name(identity);
  if (!id) return fail(NAR_ERR_INVALID_ARGUMENT, std::string("unknown identity '") + identity + "'");
  return guarded([&] {
    auto report = v->value.run(*id, static_cast<long>(r_max), seed);
    std::string json = report.to_json();
    *out = new nar_report{std::move(report), std::move(json)};
    return NAR_OK;
  });
}

int nar_report_passed(const nar_report* rep) { return rep != nullptr && rep->value.passed() ? 1 : 0; }

int64_t nar_report_failure_r(const nar_report* rep) {
  if (rep == nullptr || !rep->value.first_failure) return 0;
  return rep->value.first_failure->r;
}

const char* nar_report_json(const nar_report* rep) { return rep == nullptr ? nullptr : rep->json.c_str(); }

void nar_report_free(nar_report* rep) { delete rep; }

nar_status nar_methods_agree(int64_t r_max, int64_t* first_bad_r) {
  if (r_max < 1) return fail(NAR_ERR_DOMAIN, "r_max must be >= 1");
  return guarded([&] {
    if (first_bad_r != nullptr) *first_bad_r = 0;
    if (auto bad = narayana::first_method_disagreement(static_cast<unsigned>(r_max))) {
      if (first_bad_r != nullptr) *first_bad_r = *bad;
      return fail(NAR_ERR_DISAGREEMENT, "construction methods disagree at r = " + std::to_string(*bad));
    }
    return NAR_OK;
  });
}

nar_status nar_bench_run(int64_t r_max, uint32_t reps, const nar_method* methods, size_t method_count,
                         nar_bench** out) {
  if (out == nullptr || (methods == nullptr && method_count > 0)) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  if (r_max < 3) return fail(NAR_ERR_DOMAIN, "bench needs r_max >= 3 (got " + std::to_string(r_max) + ")");
  return guarded([&] {
    std::vector<narayana::Method> selected;
    for (size_t i = 0; i < method_count; ++i) selected.push_back(to_method(methods[i]));
    if (selected.empty()) selected.assign(narayana::all_methods().begin(), narayana::all_methods().end());
    *out = new nar_bench{narayana::run_bench(static_cast<unsigned>(r_max), reps, selected)};
    return NAR_OK;
  });
}

size_t nar_bench_size(const nar_bench* b) { return b == nullptr ? 0 : b->records.size(); }

nar_status nar_bench_record_at(const nar_bench* b, size_t i, nar_bench_record* out) {
  if (b == nullptr || out == nullptr) return fail(NAR_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= b->records.size()) return fail(NAR_ERR_DOMAIN, "record index out of range");
  const auto& rec = b->records[i];
  *out = nar_bench_record{from_method(rec.method), rec.r, rec.wall_time_ns, rec.max_coeff_bits};
  return NAR_OK;
}

void nar_bench_free(nar_bench* b) { delete b; }

}  // extern "C"

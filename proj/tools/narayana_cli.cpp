// narayana: build Narayana polynomials, emit sequences, verify identities
// and benchmark the construction methods. Links only the C API.

#include <narayana/narayana.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using json = nlohmann::ordered_json;

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PolyPtr = std::unique_ptr<nar_poly, Deleter<nar_poly, nar_poly_free>>;
using StringsPtr = std::unique_ptr<nar_strings, Deleter<nar_strings, nar_strings_free>>;
using VerifierPtr = std::unique_ptr<nar_verifier, Deleter<nar_verifier, nar_verifier_free>>;
using ReportPtr = std::unique_ptr<nar_report, Deleter<nar_report, nar_report_free>>;
using BenchPtr = std::unique_ptr<nar_bench, Deleter<nar_bench, nar_bench_free>>;

// Status codes that mean "the mathematics failed" rather than "bad input".
bool is_math_failure(nar_status s) {
  return s == NAR_ERR_NOT_DIVISIBLE || s == NAR_ERR_INCONSISTENT || s == NAR_ERR_DISAGREEMENT;
}

int report_error(nar_status s) {
  std::cerr << "error: " << nar_status_string(s) << ": " << nar_last_error() << "\n";
  if (s == NAR_ERR_INTERNAL) return kExitFailure;
  return is_math_failure(s) ? kExitFailure : kExitUsage;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> coefficients(const nar_poly* p) {
  std::vector<std::string> out;
  for (size_t i = 0; i < nar_poly_size(p); ++i) out.emplace_back(nar_poly_coeff(p, i));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) s += sep;
    s += items[i];
  }
  return s;
}

// ---- poly ----------------------------------------------------------------

struct PolyArgs {
  int64_t r = 0;
  std::string method = "direct";
  std::string format = "plain";
  std::string output;
};

int cmd_poly(const PolyArgs& a) {
  nar_method method{};
  if (auto s = nar_method_from_name(a.method.c_str(), &method); s != NAR_OK) return report_error(s);
  nar_poly* raw = nullptr;
  if (auto s = nar_poly_build(a.r, method, &raw); s != NAR_OK) return report_error(s);
  PolyPtr poly(raw);
  const auto coeffs = coefficients(poly.get());

  Sink sink(a.output);
  if (a.format == "json") {
    json j;
    j["r"] = a.r;
    j["method"] = a.method;
    j["coeffs"] = coeffs;
    sink.out() << j.dump() << "\n";
  } else if (a.format == "csv") {
    std::vector<std::string> header;
    for (size_t i = 0; i < coeffs.size(); ++i) header.push_back("c" + std::to_string(i));
    sink.out() << join(header, ",") << "\n" << join(coeffs, ",") << "\n";
  } else {
    sink.out() << join(coeffs, " ") << "\n";
  }
  return kExitOk;
}

// ---- seq -----------------------------------------------------------------

struct SeqArgs {
  std::string name;
  int64_t n = 0;
  std::string format = "plain";
  std::string output;
};

int cmd_seq(const SeqArgs& a) {
  nar_strings* raw = nullptr;
  if (auto s = nar_sequence(a.name.c_str(), a.n, &raw); s != NAR_OK) return report_error(s);
  StringsPtr seq(raw);
  std::vector<std::string> values;
  for (size_t i = 0; i < nar_strings_size(seq.get()); ++i) values.emplace_back(nar_strings_at(seq.get(), i));

  Sink sink(a.output);
  if (a.format == "json") {
    json j;
    j["name"] = a.name;
    j["n"] = a.n;
    j["values"] = values;
    sink.out() << j.dump() << "\n";
  } else if (a.format == "csv") {
    sink.out() << "index,value\n";
    for (size_t i = 0; i < values.size(); ++i) sink.out() << i + 1 << "," << values[i] << "\n";
  } else {
    for (const auto& v : values) sink.out() << v << "\n";
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::optional<int64_t> r_max;
  uint64_t seed = 42;
  std::string fixture;
  std::string output;
};

// A fixture is one poly document ({"r": .., "coeffs": [..]}) or an array of them.
void load_fixture(nar_verifier* v, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("fixture '" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<json> rows = doc.is_array() ? doc.get<std::vector<json>>() : std::vector<json>{doc};
  for (const auto& row : rows) {
    if (!row.is_object() || !row.contains("r") || !row.contains("coeffs") || !row["r"].is_number_integer() ||
        !row["coeffs"].is_array()) {
      throw UsageError("fixture rows need an integer \"r\" and a \"coeffs\" array");
    }
    std::vector<std::string> text;
    for (const auto& c : row["coeffs"]) {
      if (!c.is_string()) throw UsageError("fixture coefficients must be strings");
      text.push_back(c.get<std::string>());
    }
    std::vector<const char*> ptrs;
    for (const auto& t : text) ptrs.push_back(t.c_str());
    nar_poly* raw = nullptr;
    if (nar_poly_parse(ptrs.data(), ptrs.size(), &raw) != NAR_OK) throw UsageError(nar_last_error());
    PolyPtr poly(raw);
    if (nar_verifier_override_row(v, row["r"].get<int64_t>(), poly.get()) != NAR_OK) throw UsageError(nar_last_error());
  }
}

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> identities;
  if (a.identity == "all") {
    for (size_t i = 0; i < nar_identity_count(); ++i) identities.emplace_back(nar_identity_name(i));
  } else {
    identities.push_back(a.identity);
  }
  for (const auto& id : identities) {
    if (auto s = nar_identity_range(id.c_str(), nullptr, nullptr); s != NAR_OK) return report_error(s);
  }

  nar_verifier* raw = nullptr;
  if (auto s = nar_verifier_create(&raw); s != NAR_OK) return report_error(s);
  VerifierPtr verifier(raw);
  if (!a.fixture.empty()) load_fixture(verifier.get(), a.fixture);

  Sink sink(a.output);
  bool all_passed = true;
  for (const auto& id : identities) {
    int64_t r_default = 0;
    nar_identity_range(id.c_str(), nullptr, &r_default);
    nar_report* rep_raw = nullptr;
    if (auto s = nar_verify(verifier.get(), id.c_str(), a.r_max.value_or(r_default), a.seed, &rep_raw); s != NAR_OK) {
      return report_error(s);
    }
    ReportPtr report(rep_raw);
    sink.out() << nar_report_json(report.get()) << "\n";
    all_passed = all_passed && nar_report_passed(report.get());
  }
  return all_passed ? kExitOk : kExitFailure;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  int64_t r_max = 0;
  uint32_t reps = 5;
  std::vector<std::string> methods;
  std::string format = "json";
  std::string output;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<nar_method> methods;
  for (const auto& name : a.methods) {
    nar_method m{};
    if (auto s = nar_method_from_name(name.c_str(), &m); s != NAR_OK) return report_error(s);
    methods.push_back(m);
  }
  nar_bench* raw = nullptr;
  if (auto s = nar_bench_run(a.r_max, a.reps, methods.data(), methods.size(), &raw); s != NAR_OK) {
    return report_error(s);
  }
  BenchPtr bench(raw);

  Sink sink(a.output);
  if (a.format == "csv") sink.out() << "method,r,wall_time_ns,max_coeff_bits\n";
  for (size_t i = 0; i < nar_bench_size(bench.get()); ++i) {
    nar_bench_record rec{};
    nar_bench_record_at(bench.get(), i, &rec);
    if (a.format == "csv") {
      sink.out() << nar_method_name(rec.method) << "," << rec.r << "," << rec.wall_time_ns << "," << rec.max_coeff_bits
                 << "\n";
    } else {
      json j;
      j["method"] = nar_method_name(rec.method);
      j["r"] = rec.r;
      j["wall_time_ns"] = rec.wall_time_ns;
      j["max_coeff_bits"] = rec.max_coeff_bits;
      sink.out() << j.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Narayana polynomial constructions and identity checks"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Print the coefficients of N_r in ascending degree");
  poly_cmd->add_option("-r,--r", poly.r, "Row index r >= 1")->required();
  poly_cmd->add_option("-m,--method", poly.method, "Construction method")
      ->check(CLI::IsMember({"direct", "recurrence", "moment"}));
  poly_cmd->add_option("-f,--format", poly.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  poly_cmd->add_option("-o,--output", poly.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a range of r; report as JSON lines");
  verify_cmd->add_option("identity", verify.identity,
                         "eq3 eq4 eq5 remark2 eq6 eq7 stein io ioa catalan-contraction weighted-sums, or all")
      ->required();
  verify_cmd->add_option("--r-max,--r", verify.r_max,
                         "Largest r to check (for stein: number of random polynomials); default per identity");
  verify_cmd->add_option("-s,--seed", verify.seed, "Seed for the random stein test polynomials");
  verify_cmd->add_option("--fixture", verify.fixture, "JSON file replacing reference rows N_r")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("-o,--output", verify.output, "Output file (default stdout)");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print an integer (or rational) sequence, one value per line");
  seq_cmd->add_option("name", seq.name,
                      "catalan narayana-row lassalle schroder-half large-schroder weighted1 weighted2")
      ->required();
  seq_cmd->add_option("-n,--n,--r", seq.n, "Number of terms (row index for narayana-row)")->required();
  seq_cmd->add_option("-f,--format", seq.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  seq_cmd->add_option("-o,--output", seq.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the three constructions after checking they agree");
  bench_cmd->add_option("--r-max,--r", bench.r_max, "Largest r (>= 3)")->required();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per (method, r); the median is reported");
  bench_cmd->add_option("--methods", bench.methods, "Subset of direct,recurrence,moment")->delimiter(',');
  bench_cmd->add_option("-f,--format", bench.format, "json (JSON lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("-o,--output", bench.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poly_cmd) return cmd_poly(poly);
    if (*verify_cmd) return cmd_verify(verify);
    if (*seq_cmd) return cmd_seq(seq);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

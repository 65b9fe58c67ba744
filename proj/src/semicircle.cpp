#include <narayana/error.hpp>
#include <narayana/narayana.hpp>
#include <narayana/semicircle.hpp>

#include "write_once_cache.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace narayana {

namespace {

using Term = HalfPowerBivariate::Term;

bool term_less(const Term& a, const Term& b) {
  return std::tie(a.u_power, a.x_power) < std::tie(b.u_power, b.x_power);
}

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().u_power == t.u_power && out.back().x_power == t.x_power) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

void require(bool ok, const char* what, long value) {
  if (!ok) throw DomainError(std::string(what) + " (got " + std::to_string(value) + ")");
}

const Polynomial kOnePlusZ{1, 1};

}  // namespace

Rational moment(unsigned n) {
  if (n % 2 == 1) return {};
  if (n == 0) return Rational(1);
  static detail::WriteOnceCache<unsigned, Rational> cache;
  return *cache.get(n, [](unsigned even) {
    const unsigned half = even / 2;
    BigInt four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, half);
    return Rational::make(catalan(half), four_pow);
  });
}

MomentTable::MomentTable(unsigned max_order) {
  moments_.reserve(max_order + 1);
  for (unsigned n = 0; n <= max_order; ++n) moments_.push_back(moment(n));
}

const Rational& MomentTable::operator[](unsigned n) const {
  if (n >= moments_.size()) {
    throw DomainError("moment table holds orders up to " + std::to_string(max_order()) + ", asked for " +
                      std::to_string(n));
  }
  return moments_[n];
}

Rational MomentTable::expect(const Polynomial& p) const {
  Rational acc;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j % 2 == 1) continue;
    acc += p.coeffs()[j] * (*this)[static_cast<unsigned>(j)];
  }
  return acc;
}

HalfPowerBivariate::HalfPowerBivariate(std::vector<Term> terms) : terms_(canonical(std::move(terms))) {}

HalfPowerBivariate HalfPowerBivariate::monomial(const Rational& c, unsigned u_power, unsigned x_power) {
  return HalfPowerBivariate({Term{u_power, x_power, c}});
}

HalfPowerBivariate HalfPowerBivariate::semicircle_base() {
  return HalfPowerBivariate({Term{0, 0, Rational(1)}, Term{2, 0, Rational(1)}, Term{1, 1, Rational(2)}});
}

unsigned HalfPowerBivariate::max_u_power() const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.u_power);
  return m;
}

unsigned HalfPowerBivariate::max_x_power() const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.x_power);
  return m;
}

HalfPowerBivariate& HalfPowerBivariate::operator+=(const HalfPowerBivariate& o) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonical(std::move(all));
  return *this;
}

HalfPowerBivariate& HalfPowerBivariate::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

HalfPowerBivariate operator*(const HalfPowerBivariate& a, const HalfPowerBivariate& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Accumulate on a dense grid, then read the nonzeros back out in (i, j) order.
  const unsigned width = a.max_x_power() + b.max_x_power() + 1;
  const unsigned height = a.max_u_power() + b.max_u_power() + 1;
  std::vector<Rational> grid(static_cast<std::size_t>(width) * height);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      grid[static_cast<std::size_t>(s.u_power + t.u_power) * width + s.x_power + t.x_power] += s.coeff * t.coeff;
    }
  }
  HalfPowerBivariate out;
  for (unsigned i = 0; i < height; ++i) {
    for (unsigned j = 0; j < width; ++j) {
      auto& c = grid[static_cast<std::size_t>(i) * width + j];
      if (!c.is_zero()) out.terms_.push_back(Term{i, j, std::move(c)});
    }
  }
  return out;
}

HalfPowerBivariate HalfPowerBivariate::pow(unsigned m) const {
  HalfPowerBivariate acc = monomial(Rational(1), 0, 0);
  for (unsigned k = 0; k < m; ++k) acc = acc * *this;
  return acc;
}

Polynomial expect(const HalfPowerBivariate& e) {
  if (e.is_zero()) return {};
  const MomentTable moments(e.max_x_power());
  std::vector<Rational> by_u(e.max_u_power() + 1);
  for (const auto& t : e.terms()) {
    if (t.x_power % 2 == 1) continue;
    by_u[t.u_power] += t.coeff * moments[t.x_power];
  }
  std::vector<Rational> by_z((by_u.size() + 1) / 2);
  for (std::size_t i = 0; i < by_u.size(); ++i) {
    if (by_u[i].is_zero()) continue;
    if (i % 2 == 1) {
      throw InconsistentExpectation("odd power u^" + std::to_string(i) + " of sqrt(z) survived expectation (coefficient " +
                                    by_u[i].to_string() + ")");
    }
    by_z[i / 2] = by_u[i];
  }
  return Polynomial(std::move(by_z));
}

Polynomial binomial_power_expect(long r) {
  require(r >= 1, "binomial_power_expect needs r >= 1", r);
  return expect(HalfPowerBivariate::semicircle_base().pow(static_cast<unsigned>(r - 1)));
}

std::vector<Polynomial> binomial_power_expect_range(unsigned r_max) {
  std::vector<Polynomial> out;
  out.reserve(r_max);
  const auto base = HalfPowerBivariate::semicircle_base();
  auto power = HalfPowerBivariate::monomial(Rational(1), 0, 0);
  for (unsigned r = 1; r <= r_max; ++r) {
    if (r > 1) power = power * base;
    out.push_back(expect(power));
  }
  return out;
}

Rational stein_residual(const Polynomial& h) {
  const Polynomial x{0, 1};
  const Polynomial one_minus_x2{1, 0, -1};
  const Polynomial lhs = h * x;
  const Polynomial rhs = h.derivative() * one_minus_x2;
  const MomentTable moments(static_cast<unsigned>(std::max(lhs.degree(), rhs.degree()) + 1));
  return moments.expect(lhs) - Rational::make(1, 3) * moments.expect(rhs);
}

Polynomial relation_io_residual_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1) {
  require(r >= 2, "relation_io_residual needs r >= 2", r);
  const auto inner = HalfPowerBivariate::monomial(Rational(2), 1, 1) *
                     HalfPowerBivariate::semicircle_base().pow(static_cast<unsigned>(r - 2));
  return n_r - kOnePlusZ * n_rm1 - expect(inner);
}

Polynomial relation_io_residual(long r) {
  require(r >= 2, "relation_io_residual needs r >= 2", r);
  return relation_io_residual_from_rows(r, narayana_poly_direct(r), narayana_poly_direct(r - 1));
}

Polynomial relation_ioa_residual_from_rows(long r, const Polynomial& n_r, const Polynomial& n_rm1,
                                           const Polynomial& n_rm2) {
  require(r >= 3, "relation_ioa_residual needs r >= 3", r);
  const auto inner = HalfPowerBivariate::monomial(Rational(1), 2, 2) *
                     HalfPowerBivariate::semicircle_base().pow(static_cast<unsigned>(r - 3));
  const Polynomial z{0, 1};
  const Polynomial rhs = Rational::make(-3, 4 * (r - 2)) * (n_r - kOnePlusZ * n_rm1) + z * n_rm2;
  return expect(inner) - rhs;
}

Polynomial relation_ioa_residual(long r) {
  require(r >= 3, "relation_ioa_residual needs r >= 3", r);
  return relation_ioa_residual_from_rows(r, narayana_poly_direct(r), narayana_poly_direct(r - 1),
                                         narayana_poly_direct(r - 2));
}

}  // namespace narayana

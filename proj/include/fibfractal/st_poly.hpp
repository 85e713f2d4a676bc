#pragma once

// Bivariate integer polynomials in s and t, the sequence
//   {0} = 0, {1} = 1, {n} = s{n-1} + t{n-2},
// its factorials, binomials and Catalan analogue, and the 2-adic valuation
// formulas for the Catalan numbers and their s,t-specializations.

#include "fibfractal/exact_core.hpp"
#include "fibfractal/radix.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibfractal {

struct Monomial {
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse map from monomials s^a t^b to nonzero integer coefficients.
class STPolynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  STPolynomial() = default;

  static STPolynomial constant(const Integer& c) { return monomial(c, 0, 0); }
  static STPolynomial monomial(const Integer& c, std::uint32_t s_exp, std::uint32_t t_exp) {
    STPolynomial p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial{s_exp, t_exp}, c);
    return p;
  }
  static STPolynomial s() { return monomial(1, 1, 0); }
  static STPolynomial t() { return monomial(1, 0, 1); }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(std::uint32_t s_exp, std::uint32_t t_exp) const {
    const auto it = terms_.find({s_exp, t_exp});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Degree in s; -1 for the zero polynomial.
  std::int64_t degree_s() const noexcept { return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.rbegin()->first.s); }

  STPolynomial& operator+=(const STPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  STPolynomial& operator-=(const STPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend STPolynomial operator+(STPolynomial a, const STPolynomial& b) { return a += b; }
  friend STPolynomial operator-(STPolynomial a, const STPolynomial& b) { return a -= b; }
  STPolynomial operator-() const {
    STPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend STPolynomial operator*(const STPolynomial& a, const STPolynomial& b) {
    STPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.s + mb.s, ma.t + mb.t}, ca * cb);
    return r;
  }
  STPolynomial& operator*=(const STPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const STPolynomial&, const STPolynomial&) = default;

  Integer evaluate(const Integer& s_val, const Integer& t_val) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
      Integer sp, tp;
      mpz_pow_ui(sp.get_mpz_t(), s_val.get_mpz_t(), m.s);
      mpz_pow_ui(tp.get_mpz_t(), t_val.get_mpz_t(), m.t);
      total += c * sp * tp;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = sgn(c) < 0;
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;
      const Integer mag = abs(c);
      const bool unit = mag == 1;
      if (!unit || (m.s == 0 && m.t == 0)) os << mag;
      bool need_star = !unit;
      const auto var = [&](char name, std::uint32_t e) {
        if (e == 0) return;
        if (need_star) os << '*';
        os << name;
        if (e > 1) os << '^' << e;
        need_star = true;
      };
      var('s', m.s);
      var('t', m.t);
    }
    return os.str();
  }

 private:
  void add_term(const Monomial& m, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }

  Terms terms_;
};

struct PolynomialDivision {
  STPolynomial quotient;
  STPolynomial remainder;
};

// Long division in s over Z[t]. The divisor must be monic in s (its leading
// s-coefficient is the constant 1), which keeps every step integral.
inline PolynomialDivision divmod_monic_in_s(const STPolynomial& dividend, const STPolynomial& divisor) {
  const std::int64_t dv = divisor.degree_s();
  if (dv < 0) throw std::domain_error("divmod_monic_in_s: division by zero polynomial");
  const auto lead_s = static_cast<std::uint32_t>(dv);
  for (const auto& [m, c] : divisor.terms())
    if (m.s == lead_s && (m.t != 0 || c != 1))
      throw std::invalid_argument("divmod_monic_in_s: divisor is not monic in s");

  // rows[a] holds the coefficient of s^a as a map t-exponent -> coefficient.
  using Row = std::map<std::uint32_t, Integer>;
  const std::int64_t de = dividend.degree_s();
  std::vector<Row> rows(static_cast<std::size_t>(std::max<std::int64_t>(de, 0) + 1));
  for (const auto& [m, c] : dividend.terms()) rows[m.s].emplace(m.t, c);

  std::vector<std::pair<Monomial, Integer>> lower;  // divisor without its leading term
  for (const auto& [m, c] : divisor.terms())
    if (m.s < lead_s) lower.emplace_back(m, c);

  STPolynomial quotient;
  for (std::int64_t d = de; d >= dv; --d) {
    Row lead = std::move(rows[static_cast<std::size_t>(d)]);
    rows[static_cast<std::size_t>(d)].clear();
    if (lead.empty()) continue;
    const auto shift = static_cast<std::uint32_t>(d - dv);
    for (const auto& [te, c] : lead) {
      quotient += STPolynomial::monomial(c, shift, te);
      for (const auto& [m, v] : lower) {
        Row& target = rows[shift + m.s];
        auto [it, inserted] = target.emplace(te + m.t, 0);
        it->second -= c * v;
        if (sgn(it->second) == 0) target.erase(it);
      }
    }
  }

  STPolynomial remainder;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (const auto& [te, c] : rows[a]) remainder += STPolynomial::monomial(c, static_cast<std::uint32_t>(a), te);
  return {std::move(quotient), std::move(remainder)};
}

inline STPolynomial exact_div(const STPolynomial& dividend, const STPolynomial& divisor) {
  auto [q, r] = divmod_monic_in_s(dividend, divisor);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder " + r.to_string());
  return q;
}

inline STPolynomial st_number(Index n) {
  if (n == 0) return {};
  STPolynomial prev, cur = STPolynomial::constant(1);
  const STPolynomial s = STPolynomial::s(), t = STPolynomial::t();
  for (Index i = 2; i <= n; ++i) {
    STPolynomial next = s * cur + t * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<STPolynomial> st_numbers_upto(Index n) {
  std::vector<STPolynomial> out;
  out.reserve(n + 1);
  out.emplace_back();
  if (n >= 1) out.push_back(STPolynomial::constant(1));
  const STPolynomial s = STPolynomial::s(), t = STPolynomial::t();
  for (Index i = 2; i <= n; ++i) out.push_back(s * out[i - 1] + t * out[i - 2]);
  return out;
}

inline STPolynomial st_factorial(Index n) {
  const auto numbers = st_numbers_upto(n);
  STPolynomial product = STPolynomial::constant(1);
  for (Index i = 1; i <= n; ++i) product *= numbers[i];
  return product;
}

// {n}! / ({k}! {n-k}!) as {n}{n-1}...{n-k+1}, divided by {1}, {2}, ..., {k}
// one factor at a time. Each partial quotient is itself a polynomial.
inline STPolynomial st_binomial(Index n, Index k) {
  if (k > n) throw std::invalid_argument("st_binomial: requires k <= n");
  if (2 * k > n) k = n - k;
  const auto numbers = st_numbers_upto(n);
  STPolynomial value = STPolynomial::constant(1);
  for (Index i = n - k + 1; i <= n; ++i) value *= numbers[i];
  for (Index j = 2; j <= k; ++j) value = exact_div(value, numbers[j]);
  return value;
}

inline STPolynomial st_catalan(Index n) { return exact_div(st_binomial(2 * n, n), st_number(n + 1)); }

inline Integer evaluate(const STPolynomial& p, const Integer& s, const Integer& t) { return p.evaluate(s, t); }

struct ValuationCheck {
  std::uint64_t claimed = 0;
  std::uint64_t actual = 0;
  bool ok = false;
};

// nu_2(C_n) against zeta_2(n+1) - 1.
inline ValuationCheck check_nu2_catalan(Index n) {
  ValuationCheck check;
  check.claimed = zeta(Natural(n + 1), MixedRadixBase::power(2)) - 1;
  check.actual = nu(catalan(n), 2);
  check.ok = check.claimed == check.actual;
  return check;
}

// nu_2 of C_{n} evaluated at odd s and t = 1 (mod 8), against zeta_F(n+1)
// when n = 3, 4 (mod 6) and zeta_F(n+1) - 1 otherwise. Takes the already
// computed polynomial so sweeps over (s, t) build it once.
inline ValuationCheck check_nu2_st_catalan(const STPolynomial& catalan_poly, Index n, const Integer& s, const Integer& t) {
  if (mpz_odd_p(s.get_mpz_t()) == 0) throw std::invalid_argument("check_nu2_st_catalan: s must be odd");
  if (mpz_fdiv_ui(t.get_mpz_t(), 8) != 1) throw std::invalid_argument("check_nu2_st_catalan: t must be 1 mod 8");
  const Integer value = catalan_poly.evaluate(s, t);
  if (sgn(value) == 0) throw std::domain_error("check_nu2_st_catalan: C_{n} evaluates to zero");
  ValuationCheck check;
  const std::uint64_t z = zeta(Natural(n + 1), MixedRadixBase::base_f());
  check.claimed = (n % 6 == 3 || n % 6 == 4) ? z : z - 1;
  check.actual = nu(abs_natural(value), 2);
  check.ok = check.claimed == check.actual;
  return check;
}

inline ValuationCheck check_nu2_st_catalan(Index n, const Integer& s, const Integer& t) {
  return check_nu2_st_catalan(st_catalan(n), n, s, t);
}

}  // namespace fibfractal

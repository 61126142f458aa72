/* Copyright 2026 The salemlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "salemlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "salemlab/error.hpp"

namespace salemlab {
namespace {

using RatPoly = std::vector<Rational>;  // ascending, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coefficients().size());
  for (const Integer& c : p.coefficients()) r.emplace_back(c);
  return r;
}

// Remainder of a modulo b over Q (b nonzero).
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  const Rational& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Rational factor = a.back() / lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Positive rational multiple of p with coprime integer coefficients.
IntPolynomial primitive_part(const RatPoly& p) {
  Integer lcm_den = 1;
  for (const Rational& q : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                      q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer content = 0;
  for (const Rational& q : p) {
    Integer z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (content > 1) {
    for (Integer& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(),
                                        content.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& coeff) {
  std::vector<Integer> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Sign of b^d * p(a/b), b > 0, in integer arithmetic.
  if (coeffs_.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = coeffs_.back();
  Integer bpow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + coeffs_[i] * bpow;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(r));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) {
    return a.coeffs_.size() < b.coeffs_.size();
  }
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Integer mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Integer> c(std::max(ca.size(), cb.size()));
  for (std::size_t i = 0; i < ca.size(); ++i) c[i] += ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) c[i] += cb[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<Integer> c = a.coefficients();
  for (Integer& z : c) z = -z;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Integer> c(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (sgn(ca[i]) == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial pow(const IntPolynomial& p, std::size_t exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < exponent; ++i) result = result * p;
  return result;
}

std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& p,
                                            const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidArgument("poly_exact_div: division by zero");
  if (!q.is_monic()) throw InvalidArgument("poly_exact_div: divisor must be monic");
  if (p.is_zero()) return IntPolynomial{};
  const std::size_t dp = *p.degree();
  const std::size_t dq = *q.degree();
  if (dp < dq) return std::nullopt;

  std::vector<Integer> rem = p.coefficients();
  const auto& cq = q.coefficients();
  std::vector<Integer> quot(dp - dq + 1);
  for (std::size_t k = dp - dq + 1; k-- > 0;) {
    const Integer t = rem[k + dq];
    quot[k] = t;
    if (sgn(t) == 0) continue;
    for (std::size_t i = 0; i <= dq; ++i) {
      mpz_submul(rem[k + i].get_mpz_t(), t.get_mpz_t(), cq[i].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (sgn(rem[i]) != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  RatPoly prev = to_rat(p);
  RatPoly cur = to_rat(d);
  while (true) {
    RatPoly r = rat_rem(prev, cur);
    if (r.empty()) break;
    for (Rational& q : r) q = -q;
    chain_.push_back(primitive_part(r));
    prev = std::move(cur);
    cur = std::move(r);
  }
}

std::size_t SturmSequence::sign_changes_at(const Rational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const IntPolynomial& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::sign_changes_at_infinity(bool positive) const {
  std::size_t changes = 0;
  int last = 0;
  for (const IntPolynomial& q : chain_) {
    int s = sgn(q.leading());
    if (!positive && (*q.degree() % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(
    const std::optional<Rational>& lower,
    const std::optional<Rational>& upper) const {
  if (lower && upper && *upper <= *lower) return 0;
  const std::size_t vl =
      lower ? sign_changes_at(*lower) : sign_changes_at_infinity(false);
  const std::size_t vu =
      upper ? sign_changes_at(*upper) : sign_changes_at_infinity(true);
  return vl >= vu ? vl - vu : 0;
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  // The last element of the Sturm chain is gcd(p, p') up to a constant.
  return SturmSequence(p).chain().back().degree() == 0u;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0u) return Rational(1);
  const auto& c = p.coefficients();
  Rational max_ratio = 0;
  const Integer lead = abs(c.back());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational r = make_rational(abs(c[i]), lead);
    if (r > max_ratio) max_ratio = r;
  }
  return max_ratio + 1;
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    s += c;
  }
  if (s.empty()) throw InvalidArgument("empty polynomial");
  std::vector<Integer> coeffs;
  auto add = [&coeffs](std::size_t power, const Integer& c) {
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
  };
  auto bad = [&text]() { return InvalidArgument("cannot parse polynomial: " + text); };
  auto read_digits = [&s](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw bad();
    }
    const std::string digits = read_digits(pos);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = read_digits(pos);
        if (e.empty() || e.size() > 4) throw bad();
        power = std::stoul(e);
      }
    } else if (digits.empty()) {
      throw bad();
    }
    add(power, sign * c);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace salemlab

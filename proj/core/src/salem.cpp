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

#include "salemlab/salem.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "salemlab/error.hpp"

namespace salemlab {
namespace {

std::mutex& cyclotomic_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, IntPolynomial>& cyclotomic_cache() {
  static std::map<unsigned, IntPolynomial> cache;
  return cache;
}

IntPolynomial compute_cyclotomic(unsigned n) {
  // x^n - 1 = prod_{d | n} Phi_d
  IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = poly_exact_div(p, cyclotomic(d));
    if (!q) throw InvariantViolation("cyclotomic: inexact division");
    p = std::move(*q);
  }
  return p;
}

Rational floor_to_dyadic(double v, int bits) {
  // Exactly representable rational just below v.
  const double scaled = std::floor(std::ldexp(v, bits));
  Rational q(scaled);
  q /= Rational(Integer(1) << bits);
  return q;
}

Rational ceil_to_dyadic(double v, int bits) {
  const double scaled = std::ceil(std::ldexp(v, bits));
  Rational q(scaled);
  q /= Rational(Integer(1) << bits);
  return q;
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kUnit:
      return "unit";
    case Classification::kSalem:
      return "salem";
    case Classification::kAnomalous:
      return "anomalous";
  }
  return "anomalous";
}

IntPolynomial FactorizationReport::reconstruct() const {
  IntPolynomial acc = residual;
  for (const auto& f : cyclotomic_part) {
    acc = acc * pow(cyclotomic(f.index), f.multiplicity);
  }
  return acc;
}

std::string SpectralRadius::truncated(unsigned places) const {
  Integer scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  Rational scaled = lower * Rational(scale);
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string digits = Integer(abs(whole)).get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = (sgn(whole) < 0 ? "-" : "") +
                    digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> cyclotomic_candidates(std::size_t degree) {
  // phi(n) >= sqrt(n / 2), so phi(n) <= d forces n <= 2 d^2.
  std::vector<unsigned> out;
  const std::size_t limit = 2 * degree * degree + 2;
  for (unsigned n = 1; n <= limit; ++n) {
    if (euler_phi(n) <= degree) out.push_back(n);
  }
  return out;
}

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic: n must be positive");
  {
    std::lock_guard<std::mutex> lock(cyclotomic_mutex());
    auto it = cyclotomic_cache().find(n);
    if (it != cyclotomic_cache().end()) return it->second;
  }
  IntPolynomial p = n == 1 ? IntPolynomial{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cyclotomic_mutex());
  cyclotomic_cache().emplace(n, p);
  return p;
}

FactorizationReport strip_cyclotomic(const IntPolynomial& p) {
  if (!p.is_monic()) throw InvalidArgument("strip_cyclotomic: input must be monic");
  FactorizationReport report;
  report.input = p;
  IntPolynomial rest = p;
  for (unsigned n : cyclotomic_candidates(*p.degree())) {
    const unsigned phi = euler_phi(n);
    unsigned mult = 0;
    const IntPolynomial phi_n = cyclotomic(n);
    while (*rest.degree() >= phi) {
      auto q = poly_exact_div(rest, phi_n);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) report.cyclotomic_part.push_back({n, mult});
  }
  report.residual = rest;
  report.classification = classify_residual(rest);
  return report;
}

IntPolynomial trace_polynomial(const IntPolynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg % 2 != 0 || !p.is_palindromic()) {
    throw InvalidArgument("trace_polynomial: needs a palindromic polynomial of even degree");
  }
  const std::size_t k = *deg / 2;
  // x^j + x^-j = D_j(x + 1/x), D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}.
  const IntPolynomial y{0, 1};
  IntPolynomial q = IntPolynomial::constant(p.coeff(k));
  IntPolynomial d_prev = IntPolynomial::constant(2);
  IntPolynomial d_cur = y;
  for (std::size_t j = 1; j <= k; ++j) {
    q = q + IntPolynomial::constant(p.coeff(k + j)) * d_cur;
    IntPolynomial d_next = y * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return q;
}

Classification classify_residual(const IntPolynomial& p) {
  if (p.is_one()) return Classification::kUnit;
  if (!p.is_monic()) return Classification::kAnomalous;
  const std::size_t deg = *p.degree();
  if (deg == 0 || deg % 2 != 0 || !p.is_palindromic()) {
    return Classification::kAnomalous;
  }
  if (!is_squarefree(p)) return Classification::kAnomalous;

  const IntPolynomial q = trace_polynomial(p);
  const std::size_t k = deg / 2;
  if (q.sign_at(Rational(2)) == 0 || q.sign_at(Rational(-2)) == 0) {
    return Classification::kAnomalous;
  }
  const SturmSequence sq(q);
  const std::size_t above = sq.count_roots(Rational(2), std::nullopt);
  const std::size_t inside = sq.count_roots(Rational(-2), Rational(2));
  if (above != 1 || inside != k - 1) return Classification::kAnomalous;

  // Same geometry read off p directly: one root above 1, one in (0, 1).
  const SturmSequence sp(p);
  if (sp.count_roots(Rational(1), std::nullopt) != 1 ||
      sp.count_roots(Rational(0), Rational(1)) != 1) {
    return Classification::kAnomalous;
  }
  return Classification::kSalem;
}

const Rational& spectral_radius_tolerance() {
  static const Rational tol = make_rational(1, Integer("1000000000000"));
  return tol;
}

SpectralRadius spectral_radius(const IntPolynomial& p) {
  if (classify_residual(p) != Classification::kSalem) {
    throw NotSalem("spectral_radius: " + p.to_string() + " is not a Salem polynomial");
  }
  const IntPolynomial q = trace_polynomial(p);

  // Isolate y0 > 2, the only root of q there, by exact-sign bisection.
  Rational ylo = 2;
  Rational yhi = root_bound(q);
  const int sign_lo = q.sign_at(ylo);
  const Rational y_width = make_rational(1, Integer(1) << 40);
  while (yhi - ylo > y_width) {
    Rational mid = (ylo + yhi) / 2;
    const int s = q.sign_at(mid);
    if (s == 0) {
      ylo = yhi = mid;
      break;
    }
    (s == sign_lo ? ylo : yhi) = mid;
  }

  // lambda = (y + sqrt(y^2 - 4)) / 2 is increasing in y; for rational r > 1,
  // r <= lambda(y) iff r + 1/r <= y. Start from floating estimates and
  // certify them with that test.
  auto lambda_of = [](double y) { return (y + std::sqrt(y * y - 4.0)) / 2.0; };
  Rational lo = floor_to_dyadic(lambda_of(ylo.get_d()) * (1 - 1e-9), 52);
  Rational hi = ceil_to_dyadic(lambda_of(yhi.get_d()) * (1 + 1e-9), 52);
  if (lo <= 1 || lo + 1 / lo > ylo) lo = 1;
  if (hi + 1 / hi < yhi) hi = yhi;

  // Refine on p itself; p has exactly one root in (1, inf).
  const int p_sign_lo = p.sign_at(lo) == 0 ? -p.sign_at(hi) : p.sign_at(lo);
  if (p.sign_at(lo) == 0) hi = lo;
  if (p.sign_at(hi) == 0) lo = hi;
  while (hi - lo > spectral_radius_tolerance()) {
    Rational mid = (lo + hi) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s == p_sign_lo ? lo : hi) = mid;
  }

  SpectralRadius out;
  out.lower = lo;
  out.upper = hi;
  out.decimal_hint = out.truncated(12);
  return out;
}

}  // namespace salemlab

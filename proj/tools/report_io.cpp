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

#include "report_io.hpp"

#include "salemlab/error.hpp"

namespace salemlab::cli {
namespace {

Classification classification_from_string(const std::string& s) {
  if (s == "unit") return Classification::kUnit;
  if (s == "salem") return Classification::kSalem;
  if (s == "anomalous") return Classification::kAnomalous;
  throw InvalidArgument("unknown classification: " + s);
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string& text = j.get_ref<const std::string&>();
    Integer v;
    if (text.empty() || v.set_str(text, 10) != 0) throw InvalidArgument("bad integer \"" + text + "\"");
    return v;
  }
  throw InvalidArgument("expected an integer");
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_to_json(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (std::size_t letter : w.letters) out.push_back(letter);
  return out;
}

Word word_from_json(const Json& j) {
  Word w;
  for (const auto& letter : j) w.letters.push_back(letter.get<std::size_t>());
  return w;
}

std::string lambda_display(const SalemReport& report) {
  if (report.lambda) return report.lambda->truncated(4);
  return report.classification() == Classification::kUnit ? "1.0000" : "n/a";
}

std::string salem_factor_text(const SalemReport& report) {
  return report.is_salem() ? report.factorization.residual.to_string() : "1";
}

Json report_to_json(const SalemReport& report, const std::string& family) {
  Json out;
  out["word"] = word_to_json(report.word);
  out["family"] = family;
  out["char_poly"] = polynomial_to_json(report.char_poly);
  Json cyc = Json::array();
  for (const auto& f : report.factorization.cyclotomic_part) {
    cyc.push_back(Json::array({f.index, f.multiplicity}));
  }
  out["cyclotomic"] = std::move(cyc);
  out["salem"] = report.is_salem() ? polynomial_to_json(report.factorization.residual)
                                   : Json(nullptr);
  out["classification"] = to_string(report.classification());
  out["salem_degree"] = report.salem_degree;
  if (report.lambda) {
    out["lambda"] = Json{{"lower", to_string(report.lambda->lower)},
                         {"upper", to_string(report.lambda->upper)},
                         {"display", report.lambda->truncated(4)}};
  } else {
    out["lambda"] = nullptr;
  }
  return out;
}

SalemReport report_from_json(const Json& j, std::string* family) {
  try {
    SalemReport r;
    r.word = word_from_json(j.at("word"));
    if (family) *family = j.at("family").get<std::string>();
    r.char_poly = polynomial_from_json(j.at("char_poly"));
    r.factorization.input = r.char_poly;
    for (const auto& f : j.at("cyclotomic")) {
      r.factorization.cyclotomic_part.push_back(
          {f.at(0).get<unsigned>(), f.at(1).get<unsigned>()});
    }
    r.factorization.classification =
        classification_from_string(j.at("classification").get<std::string>());
    r.salem_degree = j.at("salem_degree").get<std::size_t>();
    const Json& salem = j.at("salem");
    if (!salem.is_null()) {
      r.factorization.residual = polynomial_from_json(salem);
    } else {
      // Residual is whatever the cyclotomic part leaves over.
      const auto q = poly_exact_div(r.char_poly, [&] {
        IntPolynomial prod{1};
        for (const auto& f : r.factorization.cyclotomic_part) {
          prod = prod * pow(cyclotomic(f.index), f.multiplicity);
        }
        return prod;
      }());
      if (!q) throw InvalidArgument("cyclotomic part does not divide char_poly");
      r.factorization.residual = *q;
    }
    if (r.factorization.reconstruct() != r.char_poly) {
      throw InvalidArgument("factorization does not reconstruct char_poly");
    }
    const Json& lambda = j.at("lambda");
    if (!lambda.is_null()) {
      SpectralRadius s;
      s.lower = parse_rational(lambda.at("lower").get<std::string>());
      s.upper = parse_rational(lambda.at("upper").get<std::string>());
      s.decimal_hint = s.truncated(12);
      r.lambda = std::move(s);
    }
    if (r.lambda.has_value() != r.is_salem()) {
      throw InvalidArgument("lambda must be present exactly for Salem reports");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace salemlab::cli

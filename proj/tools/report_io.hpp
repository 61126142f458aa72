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

#ifndef SALEMLAB_TOOLS_REPORT_IO_HPP_
#define SALEMLAB_TOOLS_REPORT_IO_HPP_

#include <string>

#include "json.hpp"
#include "salemlab/dynamics.hpp"

namespace salemlab::cli {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// {word, family, char_poly, cyclotomic, salem, classification, salem_degree,
//  lambda: {lower, upper, display} | null}
Json report_to_json(const SalemReport& report, const std::string& family);
SalemReport report_from_json(const Json& j, std::string* family = nullptr);

// Four decimals, truncated. Units print as 1.0000, anomalies as "n/a".
std::string lambda_display(const SalemReport& report);

// Salem factor as text, or "1" when there is none.
std::string salem_factor_text(const SalemReport& report);

}  // namespace salemlab::cli

#endif  // SALEMLAB_TOOLS_REPORT_IO_HPP_

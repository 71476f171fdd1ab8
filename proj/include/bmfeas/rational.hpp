// Copyright 2026 The bmfeas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMFEAS_RATIONAL_HPP
#define BMFEAS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bmfeas {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Formats as "num/den", including "/1" for integers ("-4/1").
std::string to_string(const Rational& value);

/// Accepts "num/den", a plain integer, or a finite decimal ("0.25").
/// Throws std::invalid_argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace bmfeas

#endif  // BMFEAS_RATIONAL_HPP

// Copyright 2026 The fttomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

namespace fttomo {

/// 17 significant digits; round-trips every finite double. Infinities print
/// as "inf"/"-inf".
std::string format_double(double v);

/// Parses a real number or a multiple of pi: "2.27", "pi", "-pi/2",
/// "11pi/15", "0.5*pi". Throws ValidationError on anything else.
double parse_angle(std::string_view text);

/// Strict decimal parse of the whole string.
double parse_double(std::string_view text);

} // namespace fttomo

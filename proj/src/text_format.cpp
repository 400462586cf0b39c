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

#include "fttomo/text_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fttomo/errors.hpp"

namespace fttomo {

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view text) {
    const std::string s(text);
    if (s.empty()) {
        throw ValidationError("expected a number, got an empty string");
    }
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        throw ValidationError("not a number: '" + s + "'");
    }
    return v;
}

double parse_angle(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s.push_back(ch);
        }
    }
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        return parse_double(s);
    }
    std::string coef = s.substr(0, pi_pos);
    std::string rest = s.substr(pi_pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double scale = 1.0;
    if (coef == "-") {
        scale = -1.0;
    } else if (!coef.empty() && coef != "+") {
        scale = parse_double(coef);
    }
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ValidationError("cannot parse angle '" + std::string(text) + "'");
        }
        denom = parse_double(rest.substr(1));
        if (denom == 0.0) {
            throw ValidationError("angle '" + std::string(text) + "' divides by zero");
        }
    }
    return scale * M_PI / denom;
}

} // namespace fttomo

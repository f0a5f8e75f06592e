// Copyright 2026 The sclego Authors
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

#ifndef SCLEGO_DATES_HPP
#define SCLEGO_DATES_HPP

#include <chrono>
#include <cstdio>
#include <string>
#include <string_view>

#include "sclego/errors.hpp"

namespace sclego {

using Date = std::chrono::year_month_day;

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}
}  // namespace detail

// Parses a strict ISO-8601 calendar date (YYYY-MM-DD). Rejects anything
// else, including out-of-range components such as 2023-02-30.
inline Date parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !detail::all_digits(s.substr(0, 4)) ||
      !detail::all_digits(s.substr(5, 2)) ||
      !detail::all_digits(s.substr(8, 2))) {
    throw InputError("invalid date '" + std::string(s) +
                     "': expected YYYY-MM-DD");
  }
  const int y = std::stoi(std::string(s.substr(0, 4)));
  const unsigned m = static_cast<unsigned>(std::stoi(std::string(s.substr(5, 2))));
  const unsigned d = static_cast<unsigned>(std::stoi(std::string(s.substr(8, 2))));
  const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) {
    throw InputError("invalid date '" + std::string(s) +
                     "': no such calendar day");
  }
  return date;
}

inline std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

}  // namespace sclego

#endif  // SCLEGO_DATES_HPP

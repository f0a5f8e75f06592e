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
//
// Deterministic text formatting, strict numeric parsing, CSV cell
// handling, and the FNV-1a checksum used by dataset manifests.

#ifndef SCLEGO_FORMAT_HPP
#define SCLEGO_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "sclego/errors.hpp"

namespace sclego {

// Fixed-point with banker's rounding at the stated precision (printf on a
// binary double rounds half-to-even). "-0.00" collapses to "0.00".
inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string out = buf;
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);
  }
  return out;
}

// Fixed-point with trailing zeros (and a dangling point) trimmed: 21.00
// formats as "21", 12.50 as "12.5".
inline std::string format_trimmed(double value, int max_decimals) {
  std::string out = format_fixed(value, max_decimals);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

// Shortest-ish general form for machine-readable CSV columns.
inline std::string format_compact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  std::string out = buf;
  if (out == "-0") out = "0";
  return out;
}

// ---------------------------------------------------------------------------
// Strict parsing: the whole token must be consumed, otherwise reject.
// ---------------------------------------------------------------------------

inline double parse_double_strict(std::string_view token,
                                  const std::string& context) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw InputError(context + ": not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw InputError(context + ": non-finite number: '" + std::string(token) +
                     "'");
  }
  return value;
}

inline long long parse_int_strict(std::string_view token,
                                  const std::string& context) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw InputError(context + ": not an integer: '" + std::string(token) +
                     "'");
  }
  return value;
}

inline std::uint64_t parse_uint64_strict(std::string_view token,
                                         const std::string& context) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw InputError(context + ": not an unsigned integer: '" +
                     std::string(token) + "'");
  }
  return value;
}

// ---------------------------------------------------------------------------
// CSV cells (comma separator, double-quote escaping per RFC 4180)
// ---------------------------------------------------------------------------

inline std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(cell);
  }
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// Splits one line into cells. Embedded newlines in quoted cells are not
// supported (none of the shipped formats need them).
inline std::vector<std::string> split_csv_line(std::string_view line,
                                               const std::string& context) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      if (!cell.empty()) {
        throw InputError(context + ": stray quote inside unquoted cell");
      }
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  if (quoted) throw InputError(context + ": unterminated quoted cell");
  cells.push_back(std::move(cell));
  return cells;
}

// Splits text into lines; accepts \n and \r\n, drops a trailing blank line.
inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

// Semicolon-separated set cells (e.g. "flash_loan;governance_attack").
inline std::vector<std::string> split_list_cell(std::string_view cell) {
  std::vector<std::string> items;
  std::string item;
  for (char c : cell) {
    if (c == ';') {
      items.push_back(std::move(item));
      item.clear();
    } else {
      item += c;
    }
  }
  items.push_back(std::move(item));
  if (items.size() == 1 && items[0].empty()) items.clear();
  return items;
}

// ---------------------------------------------------------------------------
// FNV-1a 64-bit checksum (manifest integrity, not cryptographic)
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

}  // namespace sclego

#endif  // SCLEGO_FORMAT_HPP

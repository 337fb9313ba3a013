#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace indcyc {

/// Exact cycle count. 128 bits covers C(n,k)*(k-1)!/2 for every (n,k) this
/// toolkit can enumerate; arithmetic on it is overflow-checked.
using Count = unsigned __int128;

class CountOverflow : public std::overflow_error {
 public:
  CountOverflow() : std::overflow_error("cycle count exceeds 128-bit accumulator") {}
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw CountOverflow();
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow();
  return r;
}

inline Count checked_pow(Count base, unsigned exp) {
  Count r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::string to_string(Count v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline Count parse_count(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty count literal");
  Count v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad count literal: " + s);
    v = checked_add(checked_mul(v, 10), static_cast<Count>(ch - '0'));
  }
  return v;
}

/// Counts that fit in 64 bits serialize as JSON numbers, larger ones as
/// decimal strings.
inline nlohmann::json count_to_json(Count v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

inline Count count_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_count(j.get<std::string>());
  return static_cast<Count>(j.get<std::uint64_t>());
}

inline double to_double(Count v) { return static_cast<double>(v); }

}  // namespace indcyc

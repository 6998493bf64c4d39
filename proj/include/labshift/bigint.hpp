#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace labshift {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& n) {
  return n > 0 ? 1 : (n < 0 ? -1 : 0);
}

inline Int abs_of(const Int& n) {
  return n < 0 ? Int(-n) : n;
}

inline std::string to_dec(const Int& n) {
  return n.str();
}

// Strict decimal parser: optional leading '-', digits only.
inline Int from_dec(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + s);
  return Int(s);
}

inline Int ipow(const Int& base, unsigned long e) {
  Int acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace labshift

#ifndef FLOPARR_RATIONAL_HPP
#define FLOPARR_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "floparr/errors.hpp"

namespace floparr {

using Int = long long;
using Rat = boost::rational<Int>;

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Formats as "p/q" always (used where the denominator carries meaning).
inline std::string to_fraction_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(ErrorCode::Internal, "cannot parse rational '" + s + "'");
  }
}

inline Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Scales to primitive integer form with the first nonzero entry positive.
inline void canonicalize(std::vector<Int>& v) {
  Int g = vec_gcd(v);
  if (g == 0) return;
  for (Int& x : v) x /= g;
  for (Int x : v) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
  }
}

inline bool is_zero(const std::vector<Int>& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace floparr

#endif

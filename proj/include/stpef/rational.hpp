#ifndef STPEF_RATIONAL_HPP
#define STPEF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace stpef {

// Exact rational scalar used by every polyhedral computation. mpq_class keeps
// values canonical (gcd 1, positive denominator) through arithmetic.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with optional sign; rejects everything else.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("rat_parse: bad character in '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Internal invariant failures (broken certificates, impossible states) are
// fatal defects: they throw and are never caught by library code.
inline void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal check failed: ") + what);
}

}  // namespace stpef

#endif

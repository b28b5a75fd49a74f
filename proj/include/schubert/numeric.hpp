#ifndef SCHUBERT_NUMERIC_HPP
#define SCHUBERT_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace schubert {

/// Arbitrary-precision integer (GMP).
using Int = mpz_class;

/// Exact rational coefficient (GMP, always canonicalized).
using Rat = mpq_class;

inline Rat makeRat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q" (or "p" when the denominator is 1).
inline std::string ratToString(const Rat& r) { return r.get_str(); }

/// Parses "p/q" or "p"; throws on malformed input.
Rat ratFromString(const std::string& text);

}  // namespace schubert

#endif

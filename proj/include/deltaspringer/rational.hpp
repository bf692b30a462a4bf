#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ds {

// All arithmetic in this project is exact. Integers are GMP integers and
// matrix/solver entries are GMP rationals; nothing is ever rounded.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string int_str(const Int& z) { return z.get_str(); }

// Rationals serialize as "p" or "p/q" in lowest terms, q > 0.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ds

#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace twistcert {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for, so these conversions are lossless.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

// "p/q" (or plain "p" when the denominator is 1), always canonical.
inline std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (rem != 0) q += 1;
  return q;
}

}  // namespace twistcert

#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals (GMP-backed), Pochhammer symbols, factorials, and
// canonical "p/q" rendering used by all serialization paths.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
inline Rat pochhammer(const Rat& x, unsigned long n) {
  Rat acc = 1;
  Rat term = x;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// GMP does not canonicalize two-argument constructions, so test divisibility.
inline bool is_integer(const Rat& x) { return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()); }

inline long to_long(const Rat& x) {
  if (!is_integer(x)) throw std::domain_error("to_long: not an integer");
  Int q = x.get_num() / x.get_den();
  if (!q.fits_slong_p()) throw std::overflow_error("to_long: overflow");
  return q.get_si();
}

// Canonical rendering: integers as "n", non-integers as "p/q" with q > 0.
inline std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Int& x) { return x.get_str(); }

// Parses "p", "-p", "p/q". Rejects anything else.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

using QVec = std::vector<Rat>;

inline QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVec+: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVec-: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec operator*(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline QVec operator*(const QVec& a, const Rat& c) { return c * a; }

inline QVec& operator+=(QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVec+=: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec zero_vec(size_t n) { return QVec(n, Rat(0)); }

inline std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace branchlab

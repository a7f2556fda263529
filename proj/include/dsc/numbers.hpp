#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "dsc/error.hpp"

namespace dsc {

// All counting in this library is exact.  Integer is an arbitrary-precision
// integer; Rational is always kept in lowest terms with positive denominator.
using Integer = mpz_class;

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Integer ipow(Integer const& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Number of factors of p in x (x != 0).
inline unsigned long p_valuation(Integer const& x, Integer const& p) {
  if (x == 0) throw DomainError("p_valuation: x must be nonzero");
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

// Deterministic Miller-Rabin.  The twelve-prime base set is a proven witness
// set for n < 3317044064679887385961981 (~3.3e24); larger inputs fall back to
// GMP's probabilistic test with 50 rounds.
inline bool is_prime(Integer const& n) {
  static int const small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (int p : small_primes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static Integer const proven_bound("3317044064679887385961981");
  if (n >= proven_bound)
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;

  Integer const n_minus_1 = n - 1;
  Integer d = n_minus_1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (int a : small_primes) {
    Integer x;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline Integer parse_integer(std::string const& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  Integer v;
  if (v.set_str(s, 10) != 0) throw ParseError("bad integer literal: " + s);
  return v;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    reduce();
  }
  explicit Rational(long v) : num_(v), den_(1) {}

  Integer const& num() const { return num_; }
  Integer const& den() const { return den_; }

  bool operator==(Rational const& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(Rational const& o) const { return !(*this == o); }
  bool operator<(Rational const& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(Rational const& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(Rational const& o) const { return o < *this; }
  bool operator>=(Rational const& o) const { return o <= *this; }

  Rational operator*(Rational const& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

  // Fractions are always printed as p/q, even when q = 1.
  std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s), 1);
    if (slash == 0 || slash + 1 == s.size()) throw ParseError("bad rational literal: " + s);
    return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

}  // namespace dsc

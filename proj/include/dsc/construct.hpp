#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsc/error.hpp"
#include "dsc/numbers.hpp"
#include "dsc/rees.hpp"
#include "dsc/relation.hpp"

namespace dsc {

inline Integer smallest_prime_above(Integer const& x) {
  if (x < 1) throw DomainError("smallest_prime_above: x must be >= 1");
  if (x < 2) return 2;
  Integer c = x + 1;
  if (mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

// chi of the rectangular band: B(a)B(b) / 2^(a^2-a) 2^(b^2-b), the floor of
// the attainable chi values for fixed index sets of sizes a, b > 1.
inline Rational band_chi(int a, int b) {
  return Rational(bell(a) * bell(b), reflexive_count(a) * reflexive_count(b));
}

// The minimal pair (by a+b, then a) with a,b >= 2 whose band bound does not
// exceed alpha.  Exists for every alpha in (0,1) since the bound vanishes as
// the index sets grow.
inline std::pair<int, int> choose_dimensions(Rational const& alpha) {
  if (alpha <= Rational(0) || alpha >= Rational(1, 1))
    throw DomainError("choose_dimensions: alpha must lie strictly between 0 and 1"
                      " (alpha = 1 is attained by any finite group)");
  for (int total = 4; total <= 2 * kBellCap; ++total)
    for (int a = 2; a <= total - 2; ++a) {
      int const b = total - a;
      if (band_chi(a, b) <= alpha) return {a, b};
    }
  throw SizeError("choose_dimensions: no dimensions within the bell cap");
}

// A certified realization of alpha as chi of the Rees matrix semigroup over
// Z_{p^k} with sandwich entries p^r 2^s.
struct ConstructionCertificate {
  Rational alpha;
  int a = 0;
  int b = 0;
  Integer c, d, k, r, p;
  std::vector<Integer> entries;  // p^r 2^s, ascending s; fills P row-major
  Rational chi;
};

// chi from the certificate parameters alone:
// ((r+1) B(a)B(b) + k-r) / ((r+1) 2^(a^2-a) 2^(b^2-b) + k-r).
inline Rational chi_certificate(ConstructionCertificate const& cert) {
  if (cert.a < 2 || cert.b < 2) throw DomainError("chi_certificate: a and b must exceed 1");
  if (cert.r < 0 || cert.r > cert.k) throw DomainError("chi_certificate: need 0 <= r <= k");
  Integer const linked = cert.r + 1;
  Integer const diagonal_only = cert.k - cert.r;
  return Rational(linked * bell(cert.a) * bell(cert.b) + diagonal_only,
                  linked * reflexive_count(cert.a) * reflexive_count(cert.b) + diagonal_only);
}

inline ConstructionCertificate construct(Rational const& alpha, int a, int b) {
  if (a < 2 || b < 2) throw DomainError("construct: a and b must exceed 1");
  if (alpha <= Rational(0) || alpha >= Rational(1, 1))
    throw DomainError("construct: alpha must lie strictly between 0 and 1");

  Integer const& beta = alpha.num();
  Integer const& gamma = alpha.den();
  Integer const bb = bell(a) * bell(b);
  Integer const rr = reflexive_count(a) * reflexive_count(b);

  ConstructionCertificate cert;
  cert.alpha = alpha;
  cert.a = a;
  cert.b = b;
  cert.c = gamma - beta;
  cert.d = beta * rr - gamma * bb;
  if (cert.d < 0)
    throw DomainError("construct: alpha = " + alpha.str() + " lies below the (a,b) = (" +
                      std::to_string(a) + "," + std::to_string(b) + ") bound " +
                      Rational(bb, rr).str());
  cert.k = cert.c + cert.d - 1;
  cert.r = cert.c - 1;
  cert.p = smallest_prime_above(pow2(static_cast<unsigned long>(a) * b + 1));

  if (!cert.r.fits_ulong_p()) throw SizeError("construct: r too large to materialize entries");
  Integer const p_r = ipow(cert.p, cert.r.get_ui());
  cert.entries.reserve(static_cast<std::size_t>(a) * b);
  for (int s = 0; s < a * b; ++s) cert.entries.push_back(p_r << s);

  cert.chi = chi_certificate(cert);
  if (cert.chi != alpha) throw InternalError("construct: certificate chi does not equal alpha");
  return cert;
}

// The certificate's sandwich matrix as a symbolic Rees spec: entries fill P
// row-major and are reduced mod p^k (only the r = k edge needs reduction).
inline SymbolicCyclicReesSpec certificate_to_rees(ConstructionCertificate const& cert) {
  SymbolicCyclicGroup group(cert.p, cert.k);
  std::vector<std::vector<Integer>> P(cert.b, std::vector<Integer>(cert.a));
  bool const reduce = cert.r == cert.k;
  Integer modulus;
  if (reduce) {
    if (!cert.k.fits_ulong_p()) throw SizeError("certificate_to_rees: p^k too large");
    modulus = ipow(cert.p, cert.k.get_ui());
  }
  for (int lambda = 0; lambda < cert.b; ++lambda)
    for (int i = 0; i < cert.a; ++i) {
      Integer e = cert.entries.at(static_cast<std::size_t>(lambda) * cert.a + i);
      if (reduce) e %= modulus;
      P[lambda][i] = std::move(e);
    }
  return SymbolicCyclicReesSpec(std::move(group), cert.a, cert.b, std::move(P));
}

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerificationReport {
  std::vector<CertificateCheck> checks;

  bool ok() const {
    for (auto const& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Independent checks of a certificate, over plain integers:
//   1. p is prime and p > 2^(ab+1)
//   2. entries are exactly p^r 2^s for s = 0..ab-1, all distinct
//   3. every extract with lambda != mu, i != j has p-adic valuation exactly r
//   4. c, d, k, r arithmetic against alpha
//   5. the chi formula reproduces alpha
// plus a materialized cross-check when a p^k b fits the caps.
inline VerificationReport verify_certificate(ConstructionCertificate const& cert) {
  VerificationReport report;
  auto check = [&](std::string name, bool pass, std::string witness) {
    report.checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  };

  unsigned long const ab = static_cast<unsigned long>(cert.a) * cert.b;
  Integer const threshold = pow2(ab + 1);
  check("prime", is_prime(cert.p) && cert.p > threshold,
        "p = " + cert.p.get_str() + " must be a prime above " + threshold.get_str());

  bool entries_ok = cert.entries.size() == ab && cert.r >= 0 && cert.r.fits_ulong_p();
  if (entries_ok) {
    Integer const p_r = ipow(cert.p, cert.r.get_ui());
    for (unsigned long s = 0; s < ab && entries_ok; ++s)
      entries_ok = cert.entries[s] == (p_r << s);
    // Distinctness is immediate from the strictly increasing form; check the
    // stored values anyway.
    for (std::size_t u = 0; u < cert.entries.size() && entries_ok; ++u)
      for (std::size_t v = u + 1; v < cert.entries.size() && entries_ok; ++v)
        entries_ok = cert.entries[u] != cert.entries[v];
  }
  check("entries", entries_ok, "entries must be p^r 2^s for s = 0.." + std::to_string(ab - 1));

  bool extracts_ok = cert.entries.size() == ab && cert.r.fits_ulong_p();
  std::string extract_witness;
  if (extracts_ok) {
    Integer const p_r = ipow(cert.p, cert.r.get_ui());
    auto entry = [&](int lambda, int i) -> Integer const& {
      return cert.entries[static_cast<std::size_t>(lambda) * cert.a + i];
    };
    for (int lambda = 0; lambda < cert.b && extracts_ok; ++lambda)
      for (int mu = 0; mu < cert.b && extracts_ok; ++mu) {
        if (lambda == mu) continue;
        for (int i = 0; i < cert.a && extracts_ok; ++i)
          for (int j = 0; j < cert.a && extracts_ok; ++j) {
            if (i == j) continue;
            Integer const q = entry(lambda, i) - entry(mu, i) + entry(mu, j) - entry(lambda, j);
            bool ok = q != 0 && mpz_divisible_p(q.get_mpz_t(), p_r.get_mpz_t());
            if (ok) {
              Integer quotient;
              mpz_divexact(quotient.get_mpz_t(), q.get_mpz_t(), p_r.get_mpz_t());
              ok = !mpz_divisible_p(quotient.get_mpz_t(), cert.p.get_mpz_t());
            }
            if (!ok) {
              extracts_ok = false;
              extract_witness = "extract at (lambda,mu,i,j) = (" + std::to_string(lambda) + "," +
                                std::to_string(mu) + "," + std::to_string(i) + "," +
                                std::to_string(j) + ") is not an exact p^r multiple";
            }
          }
      }
  } else {
    extract_witness = "entries unavailable";
  }
  check("extracts", extracts_ok, extract_witness);

  Integer const& beta = cert.alpha.num();
  Integer const& gamma = cert.alpha.den();
  bool const params_ok = beta > 0 && beta < gamma && cert.c == gamma - beta && cert.c >= 1 &&
                         cert.a >= 2 && cert.b >= 2 &&
                         cert.d == beta * reflexive_count(cert.a) * reflexive_count(cert.b) -
                                       gamma * bell(cert.a) * bell(cert.b) &&
                         cert.d >= 0 && cert.k == cert.c + cert.d - 1 && cert.r == cert.c - 1;
  check("parameters", params_ok, "c,d,k,r must satisfy the construction arithmetic for alpha");

  bool chi_ok = false;
  std::string chi_witness = "chi formula disagrees with alpha";
  if (cert.a >= 2 && cert.b >= 2 && cert.r >= 0 && cert.r <= cert.k) {
    Rational const chi = chi_certificate(cert);
    chi_ok = chi == cert.alpha && cert.chi == cert.alpha;
    if (!chi_ok) chi_witness = "chi = " + chi.str() + ", alpha = " + cert.alpha.str();
  }
  check("chi", chi_ok, chi_witness);

  // Materialized cross-check, possible only for tiny p^k.
  if (report.ok() && cert.k.fits_ulong_p() && cert.k.get_ui() <= 8) {
    Integer const pk = ipow(cert.p, cert.k.get_ui());
    if (pk * cert.a * cert.b <= kMaterializeCap) {
      auto spec = concretize(certificate_to_rees(cert));
      auto census = chi_rees(spec);
      check("materialized-census", census.chi == cert.alpha,
            "concrete census chi = " + census.chi.str());
      if (spec.order() <= kBruteForceCap) {
        auto brute = dsc_coefficient(materialize(spec));
        check("materialized-brute-force",
              brute.congruence_count == census.congruence_count &&
                  brute.diagonal_count == census.diagonal_count,
              "brute-force counts disagree with the census");
      }
    }
  }

  return report;
}

}  // namespace dsc

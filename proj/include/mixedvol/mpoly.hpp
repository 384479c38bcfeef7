#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mixedvol {

// Multivariate polynomials over a prime field F_p, with the two monomial
// orders the engine needs: graded reverse lex (optionally with a designated
// cheapest variable) and a one-block elimination order for the last
// variable.

struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
};

bool is_prime(std::uint64_t n);

using Mono = std::vector<int>;  // exponent vector

struct MonomialOrder {
  int nvars = 0;
  bool elim_last = false;  // last variable dominates, ties by grevlex on the rest
  int cheap_var = -1;      // grevlex with this variable cheapest; -1 means the last

  static MonomialOrder grevlex(int nvars) { return {nvars, false, -1}; }
  static MonomialOrder grevlex_cheapest(int nvars, int var) { return {nvars, false, var}; }
  static MonomialOrder elim(int nvars) { return {nvars, true, -1}; }

  // < 0, 0, > 0 as a < b, a == b, a > b
  int cmp(const Mono& a, const Mono& b) const;
};

struct Term {
  Mono m;
  std::uint32_t c = 0;
};

struct MPoly {
  std::vector<Term> terms;  // sorted descending in the ambient order

  bool zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

struct PolyRing {
  int nvars = 0;
  PrimeField field;
  MonomialOrder order;

  PolyRing(int nv, std::uint32_t p, MonomialOrder ord) : nvars(nv), field(p), order(ord) {}
  static PolyRing grevlex(int nv, std::uint32_t p) {
    return PolyRing(nv, p, MonomialOrder::grevlex(nv));
  }
};

long total_degree(const Mono& m);
bool divides(const Mono& a, const Mono& b);   // a | b
Mono mono_div(const Mono& b, const Mono& a);  // b / a, assumes divisibility
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);

// Builds a polynomial from unsorted (monomial, coefficient) pairs.
MPoly make_poly(const PolyRing& ring, std::vector<Term> terms);
MPoly mono_poly(const PolyRing& ring, Mono m, std::uint32_t c = 1);
MPoly constant_poly(const PolyRing& ring, std::uint32_t c);

MPoly add(const PolyRing& ring, const MPoly& f, const MPoly& g);
// f - c * x^m * g
MPoly subtract_multiple(const PolyRing& ring, const MPoly& f, std::uint32_t c, const Mono& m,
                        const MPoly& g);
MPoly multiply(const PolyRing& ring, const MPoly& f, const MPoly& g);
MPoly scale(const PolyRing& ring, const MPoly& f, std::uint32_t c);
MPoly make_monic(const PolyRing& ring, const MPoly& f);

bool is_homogeneous(const MPoly& f);

std::string to_string(const MPoly& f, const std::vector<std::string>& var_names = {});

}  // namespace mixedvol

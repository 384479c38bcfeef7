#include "mixedvol/mpoly.hpp"

#include <algorithm>
#include <map>

#include "mixedvol/errors.hpp"

namespace mixedvol {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  require(is_prime(prime), "modulus must be prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  internal_check(a % p != 0, "inverse of zero");
  return pow(a, p - 2);
}

long total_degree(const Mono& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
  if (elim_last) {
    if (a[nvars - 1] != b[nvars - 1]) return a[nvars - 1] < b[nvars - 1] ? -1 : 1;
    // fall through to grevlex on the remaining variables
    long da = 0, db = 0;
    for (int j = 0; j + 1 < nvars; ++j) { da += a[j]; db += b[j]; }
    if (da != db) return da < db ? -1 : 1;
    for (int j = nvars - 2; j >= 0; --j) {
      if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
    }
    return 0;
  }
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // significance sequence: natural order with cheap_var moved to the end
  const int cheap = cheap_var < 0 ? nvars - 1 : cheap_var;
  if (a[cheap] != b[cheap]) return a[cheap] > b[cheap] ? -1 : 1;
  for (int j = nvars - 1; j >= 0; --j) {
    if (j == cheap) continue;
    if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
  }
  return 0;
}

bool divides(const Mono& a, const Mono& b) {
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono r(b.size());
  for (size_t j = 0; j < b.size(); ++j) r[j] = b[j] - a[j];
  return r;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = std::max(a[j], b[j]);
  return r;
}

MPoly make_poly(const PolyRing& ring, std::vector<Term> terms) {
  std::map<Mono, std::uint64_t> acc;
  for (auto& t : terms) {
    require(static_cast<int>(t.m.size()) == ring.nvars, "term arity mismatch");
    acc[t.m] = (acc[t.m] + t.c) % ring.field.p;
  }
  MPoly f;
  for (auto& [m, c] : acc) {
    if (c % ring.field.p) f.terms.push_back({m, static_cast<std::uint32_t>(c % ring.field.p)});
  }
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const Term& x, const Term& y) { return ring.order.cmp(x.m, y.m) > 0; });
  return f;
}

MPoly mono_poly(const PolyRing& ring, Mono m, std::uint32_t c) {
  return make_poly(ring, {{std::move(m), c}});
}

MPoly constant_poly(const PolyRing& ring, std::uint32_t c) {
  return make_poly(ring, {{Mono(ring.nvars, 0), c}});
}

MPoly add(const PolyRing& ring, const MPoly& f, const MPoly& g) {
  return subtract_multiple(ring, f, ring.field.neg(1), Mono(ring.nvars, 0), g);
}

MPoly subtract_multiple(const PolyRing& ring, const MPoly& f, std::uint32_t c, const Mono& m,
                        const MPoly& g) {
  MPoly out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() || j < g.terms.size()) {
    int rel;
    Mono gm;
    if (j < g.terms.size()) gm = mono_mul(g.terms[j].m, m);
    if (i >= f.terms.size()) rel = -1;
    else if (j >= g.terms.size()) rel = 1;
    else rel = ring.order.cmp(f.terms[i].m, gm);
    if (rel > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (rel < 0) {
      std::uint32_t v = ring.field.neg(ring.field.mul(c, g.terms[j].c));
      if (v) out.terms.push_back({std::move(gm), v});
      ++j;
    } else {
      std::uint32_t v = ring.field.sub(f.terms[i].c, ring.field.mul(c, g.terms[j].c));
      if (v) out.terms.push_back({f.terms[i].m, v});
      ++i;
      ++j;
    }
  }
  return out;
}

MPoly multiply(const PolyRing& ring, const MPoly& f, const MPoly& g) {
  std::vector<Term> terms;
  terms.reserve(f.terms.size() * g.terms.size());
  for (const auto& a : f.terms) {
    for (const auto& b : g.terms) {
      terms.push_back({mono_mul(a.m, b.m), ring.field.mul(a.c, b.c)});
    }
  }
  return make_poly(ring, std::move(terms));
}

MPoly scale(const PolyRing& ring, const MPoly& f, std::uint32_t c) {
  MPoly out;
  if (c % ring.field.p == 0) return out;
  out.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) out.terms.push_back({t.m, ring.field.mul(t.c, c)});
  return out;
}

MPoly make_monic(const PolyRing& ring, const MPoly& f) {
  if (f.zero() || f.lead().c == 1) return f;
  return scale(ring, f, ring.field.inv(f.lead().c));
}

bool is_homogeneous(const MPoly& f) {
  if (f.zero()) return true;
  long d = total_degree(f.terms[0].m);
  for (const auto& t : f.terms) {
    if (total_degree(t.m) != d) return false;
  }
  return true;
}

std::string to_string(const MPoly& f, const std::vector<std::string>& var_names) {
  if (f.zero()) return "0";
  std::string out;
  for (const auto& t : f.terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (size_t j = 0; j < t.m.size(); ++j) {
      if (t.m[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += j < var_names.size() ? var_names[j] : "x" + std::to_string(j);
      if (t.m[j] > 1) mono += "^" + std::to_string(t.m[j]);
    }
    if (mono.empty()) out += std::to_string(t.c);
    else if (t.c == 1) out += mono;
    else out += std::to_string(t.c) + "*" + mono;
  }
  return out;
}

}  // namespace mixedvol

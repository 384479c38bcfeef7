#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixedvol/hilbert.hpp"
#include "mixedvol/mpoly.hpp"

namespace mixedvol {

// Minimal Buchberger engine over a prime field, sized for graded rings in a
// handful of variables, plus the saturation / dimension / multiplicity
// toolchain built on it.

// Full normal form of f against the (monic) polynomials in g.
MPoly normal_form(const PolyRing& ring, MPoly f, const std::vector<MPoly>& g);

// Reduced Groebner basis; canonical for the ideal and the ring's order.
std::vector<MPoly> buchberger(const PolyRing& ring, const std::vector<MPoly>& gens);

// I : f^infinity via an auxiliary inverse variable and elimination.
// The returned generators form a reduced basis for the ring's grevlex order.
std::vector<MPoly> saturate(const PolyRing& ring, const std::vector<MPoly>& gens,
                            const MPoly& f);

// I : (x_0 * ... * x_{n-1})^infinity for a homogeneous ideal, via the
// reverse-lex trick: with x_j cheapest, dividing every basis element by its
// maximal x_j power saturates with respect to x_j.
std::vector<MPoly> saturate_coordinates(const PolyRing& ring, std::vector<MPoly> gens);

// Krull dimension of A/I from the lead-term ideal of a basis; -1 for the
// unit ideal.
int krull_dim(const PolyRing& ring, const std::vector<MPoly>& basis);

// Normalized leading coefficient of the Hilbert polynomial of A/I
// (I homogeneous and proper), from the lead-term ideal's rational Hilbert
// series.  For a zero-dimensional quotient this is its length.
long long graded_multiplicity(const PolyRing& ring, const std::vector<MPoly>& basis);

// Vector-space dimension of A/I; requires dim A/I = 0.
long long quotient_colength(const PolyRing& ring, const std::vector<MPoly>& basis);

// Random F_p-combination of the monomials of j, all coefficients nonzero;
// deterministic in the seed.
MPoly general_element(const PolyRing& ring, const MonomialSet& j, std::uint64_t seed);

struct SamuelResult {
  int dim = -1;            // dim A/(Q : J^infinity), -1 when the saturation is the unit ideal
  long long e = 0;         // multiplicity when the dimension test passes, else 0
  bool positive = false;   // dimension test verdict
  std::uint64_t seed_used = 0;
  int reseeds = 0;
};

// The Samuel-multiplicity route: draw alpha_i general elements from each
// J_i, saturate away the coordinate hyperplanes, test the dimension, and
// read the graded multiplicity.  One internal reseed softens unlucky draws
// unless allow_reseed is false.
SamuelResult samuel_mixed_multiplicity(const MonomialConfiguration& c, const MultiIndex& alpha,
                                       std::uint64_t seed, std::uint32_t p = 32003,
                                       bool allow_reseed = true);

struct TeissierResult {
  long long lhs = 0;  // e_alpha via finite differences
  long long rhs = 0;  // colength of the parameter ideal of general elements
};

// For m-primary configurations, e_alpha equals the colength of an ideal
// generated by alpha_0 + 1 general linear forms and alpha_i general
// elements of each J_i.
TeissierResult teissier_check(const MonomialConfiguration& c, const MultiIndex& alpha,
                              std::uint64_t seed, std::uint32_t p = 32003);

}  // namespace mixedvol

#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace mixedvol {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Plain fraction-based Gaussian elimination.  Everything here is exact and
// sized for dimensions <= 7 or small interpolation systems, so no effort is
// spent on pivoting strategies or fraction-free variants.

int rank_of(QMat m);

Rat det(QMat m);

// Solves the square system a * x = b; empty result when a is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// One-dimensional kernel of the (rows x cols) matrix, cols = rows + 1.
// Used for hyperplanes through affinely independent point sets.
QVec kernel_vector(QMat m);

}  // namespace mixedvol

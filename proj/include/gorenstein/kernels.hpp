#pragma once

#include <span>
#include <vector>

#include "gorenstein/poly_matrix.hpp"

// Data-parallel kernels behind the linear algebra and resolution code.
//
// Every kernel exists twice with identical signatures: `serial` is the
// reference implementation kept for testing; `parallel` distributes the
// independent outer loop with OpenMP. Library entry points call `parallel`.
// Both must return identical results (exact arithmetic, no reductions whose
// order matters).

namespace gorenstein::kernels {

namespace serial {

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Shares one memo table across all minors.
std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m);
std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m);

/// (phi(rows[i] * middle * cols[j]))_{i,j}.
FieldMatrix catalecticant(const DualElement& phi, std::span<const Monomial> rows,
                          std::span<const Monomial> cols, const Polynomial& middle);

}  // namespace serial

namespace parallel {

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// One memo table per minor; minors run concurrently.
std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m);
std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m);

FieldMatrix catalecticant(const DualElement& phi, std::span<const Monomial> rows,
                          std::span<const Monomial> cols, const Polynomial& middle);

}  // namespace parallel

/// Worker count used by the parallel kernels.
int max_threads();

}  // namespace gorenstein::kernels

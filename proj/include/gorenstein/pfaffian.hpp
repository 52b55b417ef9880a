#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gorenstein/poly_matrix.hpp"

namespace gorenstein {

/// Largest matrix the subset-indexed expansion accepts.
inline constexpr std::size_t kMaxPfaffianSize = 63;

namespace detail {

/// First-row Pfaffian expansion memoized on the subset of surviving indices:
///   Pf(S) = sum_{j in S, j != i} (-1)^{pos(j)} m(i, j) Pf(S \ {i, j}),
/// where i = min S and pos(j) is the 1-based position of j in S. This fixes
/// Pf([[0, a], [-a, 0]]) = a. Odd subsets give zero.
///
/// The memo is owned by one expander; share an expander only within a thread.
template <class T>
class PfaffianExpander {
 public:
  /// zeros[k] must be the zero value for a subset of size 2k (for polynomial
  /// entries of degree d this is the zero form of degree k*d).
  PfaffianExpander(const Matrix<T>& m, T one, std::vector<T> zeros)
      : m_(m), one_(std::move(one)), zeros_(std::move(zeros)) {}

  const T& of(std::uint64_t mask) {
    const int count = std::popcount(mask);
    if (count % 2 != 0) return zeros_[static_cast<std::size_t>(count / 2)];
    if (mask == 0) return one_;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    const int i = std::countr_zero(mask);
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << i);
    T acc = zeros_[static_cast<std::size_t>(count / 2)];
    int pos = 0;
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      ++pos;
      const T& entry = m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (entry.is_zero()) continue;
      const T& minor = of(rest & ~(std::uint64_t{1} << j));
      if (minor.is_zero()) continue;
      if (pos % 2 == 1) {
        acc += entry * minor;
      } else {
        acc -= entry * minor;
      }
    }
    return memo_.emplace(mask, std::move(acc)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const Matrix<T>& m_;
  T one_;
  std::vector<T> zeros_;
  std::unordered_map<std::uint64_t, T> memo_;
};

inline std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

PfaffianExpander<Scalar> make_expander(const FieldMatrix& m, const Field& field);
PfaffianExpander<Polynomial> make_expander(const PolyMatrix& m);

}  // namespace detail

/// Throws std::invalid_argument unless m is alternating and small enough.
void require_alternating(const FieldMatrix& m);
void require_alternating(const PolyMatrix& m);

/// Pfaffian of an alternating matrix; zero for odd size.
Scalar pfaffian(const FieldMatrix& m);
Polynomial pfaffian(const PolyMatrix& m);

/// Pfaffian of m with row and column `deleted` removed.
Scalar pfaffian_minor(const FieldMatrix& m, std::size_t deleted);
Polynomial pfaffian_minor(const PolyMatrix& m, std::size_t deleted);

/// (M_1, ..., M_m) with M_j = (-1)^{j+1} Pf(m with row and column j deleted),
/// j 1-based. Requires odd size.
std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m);
std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m);

/// Whether Pf(m^T a m) == det(m) Pf(a).
bool congruence_pfaffian_check(const FieldMatrix& a, const FieldMatrix& m);

}  // namespace gorenstein

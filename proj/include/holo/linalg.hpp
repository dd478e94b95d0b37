#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holo/modular.hpp"
#include "holo/poly.hpp"

namespace holo {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form data: pivots[i] is the pivot column of row i.
struct Echelon {
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  /// Free columns in ascending order.
  std::vector<std::size_t> free_columns() const;
};

/// In-place RREF over Q. Rows past the rank are zero afterwards.
Echelon rref(Matrix<Rational>& m);
/// In-place RREF over F_p.
Echelon rref_mod(Matrix<u64>& m, u64 p);

/// Kernel basis read off an RREF: one vector per free column f, with entry 1
/// at f and zeros at the other free columns. Same order as free_columns().
std::vector<std::vector<Rational>> kernel_from_rref(const Matrix<Rational>& r, const Echelon& e);
std::vector<std::vector<u64>> kernel_from_rref_mod(const Matrix<u64>& r, const Echelon& e, u64 p);

/// Rank of a matrix over F_p (the input is copied).
std::size_t rank_mod(Matrix<u64> m, u64 p);

/// Incremental fraction-free elimination over Q[x]. Vectors are fed one at a
/// time; the first one that depends on its predecessors yields polynomial
/// coefficients c_0..c_k (c_k != 0) with sum c_i v_i = 0.
class PolyDependency {
 public:
  explicit PolyDependency(std::size_t dim) : dim_(dim) {}
  std::optional<std::vector<Poly>> add(const std::vector<Poly>& v);
  std::size_t count() const { return count_; }

 private:
  struct Row {
    std::vector<ZPoly> main;
    std::vector<ZPoly> aug;
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

/// Removes the common polynomial factor (and integer content) of all entries.
void remove_common_content(std::vector<ZPoly>& a, std::vector<ZPoly>& b);

}  // namespace holo

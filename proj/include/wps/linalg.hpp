#pragma once

#include <cstddef>
#include <vector>

#include "wps/rational.hpp"

namespace wps {

/// Dense row-major matrix over the rationals.
using DenseMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form: nonzero rows only, pivots[k] is the pivot column of row k.
struct RowEchelon {
  DenseMatrix rows;
  std::vector<std::size_t> pivots;
};

/// Every row must have `ncols` entries.
RowEchelon row_reduce(DenseMatrix m, std::size_t ncols);
std::size_t rank(DenseMatrix m, std::size_t ncols);
/// Basis of {x : m x = 0}, one row per free column, in reduced echelon form.
DenseMatrix nullspace(const DenseMatrix& m, std::size_t ncols);

}  // namespace wps

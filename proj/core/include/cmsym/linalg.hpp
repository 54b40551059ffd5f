#pragma once

#include <optional>
#include <vector>

#include "cmsym/frac.hpp"

namespace cmsym {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Exact inverse over Q; nullopt when singular.
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a);

/// Basis of {x : A x = 0} over the fraction field, by Gaussian elimination
/// with the pivot taken as the first nonzero entry in column order. Each
/// basis vector has a 1 in its free column and zeros in the other free
/// columns.
std::vector<std::vector<Frac>> nullspace(const Matrix<Frac>& a, std::size_t columns);

/// Rank of a list of row vectors of equal length.
std::size_t rank(Matrix<Frac> rows);

/// True when v lies in the span of `rows`.
bool in_span(const Matrix<Frac>& rows, const std::vector<Frac>& v);

}  // namespace cmsym

#pragma once

#include <cstddef>
#include <vector>

#include "superlab/field.hpp"

namespace superlab {

/// Dense row-major matrix of field elements.
template <class F>
using Matrix = std::vector<std::vector<typename F::Element>>;

/// Exact rank. Over Q rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination; over F_p plain Gaussian elimination.
std::size_t rank(const RationalField& k, Matrix<RationalField> m);
std::size_t rank(const PrimeField& k, Matrix<PrimeField> m);

}  // namespace superlab

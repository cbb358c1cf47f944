#pragma once

#include <cstdint>
#include <vector>

#include "superlab/adic.hpp"
#include "superlab/linalg.hpp"

namespace superlab {

/// Basis of I^n M / I^{n+1} M: the monomials in the leading-term ideal of
/// I^n + J but not in that of I^{n+1} + J, each with a representative of
/// I^n + J carrying it as leading monomial, reduced modulo I^{n+1} + J.
template <class F>
struct GradedPieceBasis {
  unsigned degree;
  std::vector<Monomial> monomials;  // descending
  std::vector<Polynomial<F>> representatives;

  std::size_t dim() const { return monomials.size(); }
};

/// Multiplication by f: G(M)_n -> G(M)_{n+s}. Column j holds the
/// coordinates of f * basis_n[j] in basis_{n+s}.
template <class F>
struct MultMatrix {
  unsigned source;
  unsigned target;
  std::size_t rows;
  std::size_t cols;
  Matrix<F> entries;
};

/// Throws InfiniteDimension when I^{n+1} + J has infinite colength.
template <class F>
GradedPieceBasis<F> piece_basis(const AdicContext<F>& ctx, unsigned n);

template <class F>
MultMatrix<F> mult_matrix(const Polynomial<F>& f, unsigned s, const AdicContext<F>& ctx, unsigned n);

/// Kernel dimension of multiplication by f on G(M)_n for n in [n_lo, n_hi],
/// indexed by source degree.
template <class F>
std::vector<std::uint64_t> injectivity_scan(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_lo,
                                            unsigned n_hi, unsigned ord_cap = 30);

/// dim [in(fM)]_n - dim [f G(M)]_n for n in [n_lo, n_hi], indexed by target
/// degree: the failure of G(M)/fG(M) -> G(M/fM) to be injective.
template <class F>
std::vector<std::uint64_t> kirby_cokernel_scan(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_lo,
                                               unsigned n_hi, unsigned ord_cap = 30);

/// dim ker(G(N/J) -> G(M)(shift))_n for n in [n_lo, n_hi], where N ⊇ J and
/// the source is filtered by I^n N + J, placed in degree n + shift of G(M).
/// Requires N ⊆ I^shift + J.
template <class F>
std::vector<std::uint64_t> kernel_dims_graded_inclusion(const Ideal<F>& N, const AdicContext<F>& ctx,
                                                        unsigned n_lo, unsigned n_hi, unsigned shift = 0);

/// colength(I^n + J), or InfiniteDimension.
template <class F>
std::uint64_t finite_colength(const Ideal<F>& A);

}  // namespace superlab

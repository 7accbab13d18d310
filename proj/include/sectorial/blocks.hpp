// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "sectorial/accretive.hpp"
#include "sectorial/numeric.hpp"

// 2x2 block matrices M = [A, X; Y*, B], the partial transpose (swap of the
// off-diagonal blocks), and the PPT/APT predicates.

namespace sectorial {

struct Block2x2 {
  CMatrix A;      // (1,1)
  CMatrix X;      // (1,2)
  CMatrix Ystar;  // (2,1)
  CMatrix B;      // (2,2)

  Index block_dim() const { return A.rows(); }

  static Block2x2 from_blocks(CMatrix a, CMatrix x, CMatrix ystar, CMatrix b) {
    require_square(a, "Block2x2");
    require_same_dim(a, x, "Block2x2");
    require_same_dim(a, ystar, "Block2x2");
    require_same_dim(a, b, "Block2x2");
    require_finite(x, "Block2x2");
    require_finite(ystar, "Block2x2");
    require_finite(b, "Block2x2");
    require_finite(a, "Block2x2");
    return Block2x2{std::move(a), std::move(x), std::move(ystar), std::move(b)};
  }

  /// The form [A, X; X*, B].
  static Block2x2 hermitian_offdiag(CMatrix a, CMatrix x, CMatrix b) {
    CMatrix xa = x.adjoint();
    return from_blocks(std::move(a), std::move(x), std::move(xa), std::move(b));
  }

  CMatrix assemble() const {
    const Index n = block_dim();
    CMatrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = A;
    m.topRightCorner(n, n) = X;
    m.bottomLeftCorner(n, n) = Ystar;
    m.bottomRightCorner(n, n) = B;
    return m;
  }

  static Block2x2 disassemble(const CMatrix& m) {
    require_square(m, "Block2x2::disassemble");
    if (m.rows() % 2 != 0)
      throw DimensionError("Block2x2::disassemble: dimension must be even");
    const Index n = m.rows() / 2;
    return from_blocks(m.topLeftCorner(n, n), m.topRightCorner(n, n), m.bottomLeftCorner(n, n),
                       m.bottomRightCorner(n, n));
  }
};

/// Partial transpose: swaps the two off-diagonal blocks. An involution.
inline Block2x2 partial_transpose(const Block2x2& m) {
  return Block2x2{m.A, m.Ystar, m.X, m.B};
}

inline bool is_ppt(const Block2x2& m, const ToleranceProfile& tol = {}) {
  const HMatrix h = HMatrix::certify(m.assemble(), tol.tol_eq);
  const HMatrix ht = HMatrix::certify(partial_transpose(m).assemble(), tol.tol_eq);
  return is_psd(h, tol) && is_psd(ht, tol);
}

inline bool is_apt(const Block2x2& m, const ToleranceProfile& tol = {}) {
  return is_accretive(m.assemble(), tol) && is_accretive(partial_transpose(m).assemble(), tol);
}

/// A - X B^{-1} X*. B must be invertible within the condition cap.
inline CMatrix accretive_schur_complement(const CMatrix& a, const CMatrix& b, const CMatrix& x) {
  require_square(a, "accretive_schur_complement");
  require_same_dim(a, b, "accretive_schur_complement");
  require_same_dim(a, x, "accretive_schur_complement");
  return a - x * inverse(b) * x.adjoint();
}

}  // namespace sectorial

#pragma once

#include "orientalis/chain.hpp"

namespace orientalis {

/// The composability condition for the k-indexed operations: the (k-1)-st
/// face of x equals the k-th face of y.
bool composable(const Chain& x, const Chain& y, int k);

/// x - x d_{k-1} s_{k-1} + y. Both equivalent formulas are computed and
/// cross-asserted. Throws on composability failure, reporting both faces.
Chain paste(const Chain& x, const Chain& y, int k);

/// x s_k - x d_{k-1} s_{k-1}^2 + y s_{k-1}, the (m+1)-dimensional witness of
/// the pasting. Face identities are asserted on every call:
///   (fill)d_{k-1} = y, (fill)d_k = paste(x,y,k), (fill)d_{k+1} = x.
Chain fill(const Chain& x, const Chain& y, int k);

/// True iff every operator in the support is degenerate at k-1 or at k;
/// equivalently (asserted both ways) x = fill(x d_{k+1}, x d_{k-1}, k).
bool is_filler_shaped(const Chain& x, int k);

struct SumDecomposition {
  Chain u;
  Chain v;
  Chain witness;  // fill(u, v, k)
};

/// Turns a sum y + z into a pasting: u = y + z d_k s_{k-1},
/// v = y d_{k-1} s_{k-1} + z. Asserts u d_{k-1} = v d_k,
/// fill(u,v,k) = y s_k + z s_{k-1} and paste(u,v,k) = y + z.
SumDecomposition decompose_sum(const Chain& y, const Chain& z, int k);

}  // namespace orientalis

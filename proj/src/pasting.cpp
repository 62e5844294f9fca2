#include "orientalis/pasting.hpp"

#include "orientalis/diagnostics.hpp"

namespace orientalis {

namespace {

void require_index(const Chain& x, const Chain& y, int k) {
  ORI_REQUIRE(x.source_dim() == y.source_dim() && x.target_dim() == y.target_dim(),
              "pasting operands must have matching dimensions");
  ORI_REQUIRE(k >= 1 && k <= x.source_dim(), "pasting index must satisfy 1 <= k <= m");
}

void require_composable(const Chain& x, const Chain& y, int k) {
  require_index(x, y, k);
  Chain fx = face(x, k - 1);
  Chain fy = face(y, k);
  if (fx != fy) {
    throw std::invalid_argument("not composable at k=" + std::to_string(k) +
                                ": x d_{k-1} = " + to_string(fx) +
                                " but y d_k = " + to_string(fy));
  }
}

}  // namespace

bool composable(const Chain& x, const Chain& y, int k) {
  require_index(x, y, k);
  return face(x, k - 1) == face(y, k);
}

Chain paste(const Chain& x, const Chain& y, int k) {
  require_composable(x, y, k);
  Chain out = x - degeneracy(face(x, k - 1), k - 1) + y;
  Chain alt = x - degeneracy(face(y, k), k - 1) + y;
  ORI_CHECK(out == alt, "the two paste formulas disagree");
  return out;
}

Chain fill(const Chain& x, const Chain& y, int k) {
  require_composable(x, y, k);
  Chain shared = degeneracy(degeneracy(face(x, k - 1), k - 1), k - 1);
  Chain out = degeneracy(x, k) - shared + degeneracy(y, k - 1);
  Chain alt = degeneracy(x, k) -
              degeneracy(degeneracy(face(y, k), k - 1), k - 1) +
              degeneracy(y, k - 1);
  ORI_CHECK(out == alt, "the two fill formulas disagree");
  ORI_CHECK(face(out, k - 1) == y, "fill face identity d_{k-1} failed");
  ORI_CHECK(face(out, k) == paste(x, y, k), "fill face identity d_k failed");
  ORI_CHECK(face(out, k + 1) == x, "fill face identity d_{k+1} failed");
  return out;
}

bool is_filler_shaped(const Chain& x, int k) {
  ORI_REQUIRE(k >= 1 && k <= x.source_dim() - 1,
              "is_filler_shaped needs 1 <= k <= m-1");
  bool by_support = true;
  for (const auto& [a, c] : x.terms()) {
    if (!a.is_degenerate_at(k - 1) && !a.is_degenerate_at(k)) {
      by_support = false;
      break;
    }
  }
  if (x.is_zero()) by_support = true;
  bool by_reconstruction = false;
  Chain top = face(x, k + 1);
  Chain bottom = face(x, k - 1);
  if (composable(top, bottom, k)) {
    by_reconstruction = (fill(top, bottom, k) == x);
  }
  ORI_CHECK(by_support == by_reconstruction,
            "filler-shape support test disagrees with reconstruction");
  return by_support;
}

SumDecomposition decompose_sum(const Chain& y, const Chain& z, int k) {
  ORI_REQUIRE(y.source_dim() == z.source_dim() && y.target_dim() == z.target_dim(),
              "decompose_sum operands must have matching dimensions");
  ORI_REQUIRE(k >= 1 && k <= y.source_dim(), "decompose_sum needs 1 <= k <= m");
  Chain u = y + degeneracy(face(z, k), k - 1);
  Chain v = degeneracy(face(y, k - 1), k - 1) + z;
  ORI_CHECK(face(u, k - 1) == face(v, k), "decompose_sum composability identity failed");
  Chain witness = fill(u, v, k);
  ORI_CHECK(witness == degeneracy(y, k) + degeneracy(z, k - 1),
            "decompose_sum witness identity failed");
  ORI_CHECK(paste(u, v, k) == y + z, "decompose_sum pasting identity failed");
  return SumDecomposition{std::move(u), std::move(v), std::move(witness)};
}

}  // namespace orientalis

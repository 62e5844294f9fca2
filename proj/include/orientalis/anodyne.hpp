#pragma once

#include <string>
#include <vector>

#include "orientalis/certificate.hpp"
#include "orientalis/chain.hpp"
#include "orientalis/enumeration.hpp"

namespace orientalis {

/// The rank/level/corank combinatorics of a nondegenerate simplex outside A.
struct RankData {
  int rank = 0;
  int level = 0;
  int corank = 0;       // dim - rank
  int alt_corank = 0;   // max |a^{-1}(n)| over the support; equals corank + 1
  bool dagger = false;  // bar part degenerate at level - 1
  Chain check_part;     // operators with a(rank) < n
  Chain bar_part;       // operators with a(rank) = n
};

/// Requires x nondegenerate, a member, and outside A.
RankData rank_data(const Chain& x);

/// x d_level, defined for dagger simplices. Asserts: the child is
/// nondegenerate, outside A, of rank rank-1, same level and corank, fails
/// the dagger condition, and its split is the face of x's split.
Chain child(const Chain& x);

struct ParentResult {
  Chain w;  // check s_level + bar s_{level-1}
  Chain u;  // check + bar d_level s_{level-1}
  Chain v;  // check d_{level-1} s_{level-1} + bar
  RankData data;  // rank data of w
};

/// Defined for non-dagger simplices outside A. Membership of w is
/// established as fill(u, v, level) from the two checked members u and v,
/// then re-verified directly. Asserts: w d_level = x, rank +1, same level
/// and corank, dagger holds, w is marked, nondegenerate, outside A.
ParentResult parent(const Chain& x);

enum class FaceTag { InA, Dagger, LexLower };

struct FaceClass {
  int k = 0;
  FaceTag tag{};
};

/// Classifies every face w d_k, k != level, of a parent w; a face fitting
/// no tag is a fatal error.
std::vector<FaceClass> classify_faces(const Chain& w);

/// Appends the terminal vertex n to every operator (target n-1 -> n).
/// Asserts the output is a member, lies in A, and is marked iff x is.
Chain join_cone(const Chain& x);

struct JoinReport {
  bool ok = false;
  long long base_count = 0;  // nondegenerate simplices with c = 0
  long long cone_count = 0;  // nondegenerate cones (c = 1)
  long long point_count = 0;
  std::string detail;
};

/// Checks that the nondegenerate simplices of A up to dimension M are
/// exactly: {members of O(-,n-1)} (avoiding n), their cones, and the
/// point (n); and that a cone is marked iff its base is.
JoinReport verify_A_join_structure(int n, int max_dim, Oracle& oracle);

/// The anodyne decomposition of Delta[n] -> O(-,n) truncated at max_dim:
/// the transported certificate for n-1 (each step widened to target n and
/// immediately followed by its cone, falling back to originals-then-cones
/// if the interleaved order fails to replay), then one HornFill per parent
/// in lexicographic (m, corank, level) order, paired with a ThinExt
/// whenever the filled face is marked.
Certificate generate_certificate(int n, int max_dim, Oracle& oracle);

}  // namespace orientalis

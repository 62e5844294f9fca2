#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orientalis/oriental.hpp"

namespace orientalis {

struct EnumerationResult {
  std::vector<Chain> members;  // canonical (chain) order
  bool boundary_hit = false;   // some solution attained the coefficient bound
  int bound = 0;
};

/// Exhaustive search for O(m,n) over integer coefficient vectors with
/// |coefficient| <= bound, organized as a prefix-tree refinement of the
/// vertex constraints: every partial-sum instance of (O1)/(O2) that is
/// decided by a prefix of the value tuples is enforced during the search.
/// A full (O2) check is re-run on every solution found. If any solution
/// attains the bound anywhere, boundary_hit is set and the result is not
/// certified complete.
EnumerationResult enumerate_O(int m, int n, int bound, int jobs = 1);

/// Memoizing oracle; raises the bound until the boundary flag clears, so
/// every answer it returns is a certified-complete enumeration.
class Oracle {
 public:
  explicit Oracle(int initial_bound = 2, int jobs = 1)
      : initial_bound_(initial_bound), jobs_(jobs) {}

  const std::vector<Chain>& members(int m, int n);
  const std::vector<Chain>& nondegenerate(int m, int n);
  int bound_used(int m, int n);

 private:
  int initial_bound_;
  int jobs_;
  std::map<std::pair<int, int>, EnumerationResult> cache_;
  std::map<std::pair<int, int>, std::vector<Chain>> nondeg_cache_;
};

struct ClosureResult {
  // per-dimension member sets, 0..M
  std::vector<std::set<Chain>> by_dim;
};

/// Secondary strategy: the closure of all single-operator simplices under
/// faces, degeneracies (within the cutoff), fill/paste of composable pairs,
/// and cones from target n-1. Every produced chain is membership-checked,
/// so the result is a subset of O(-,n) by construction.
ClosureResult enumerate_by_closure(int n, int max_dim);

struct EnumReport {
  int n = 0;
  int m = 0;
  int bound = 0;
  std::string strategy;  // "search" | "closure" | "both"
  long long member_count = -1;
  long long nondegenerate_count = -1;
  bool boundary_hit = false;
  long long closure_count = -1;  // members of dimension m found by closure
  bool strategies_agree = true;  // only meaningful for "both"
};

EnumReport run_enumeration(int m, int n, int bound, const std::string& strategy,
                           int jobs = 1);

/// Per-dimension nondegenerate counts of an enumeration, via
/// degeneracy_normalize.
std::map<int, long long> count_nondegenerate(const std::vector<Chain>& members);

}  // namespace orientalis

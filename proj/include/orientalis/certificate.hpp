#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orientalis/enumeration.hpp"
#include "orientalis/oriental.hpp"

namespace orientalis {

enum class StepKind { HornFill, ThinExt };

struct CertStep {
  StepKind kind;
  int m = 0;
  int k = 0;
  Chain w;
};

struct Certificate {
  int n = 0;
  int max_dim = 0;
  std::vector<CertStep> steps;
};

enum class RejectClause {
  BadIndex,
  NotMember,
  AlreadyPresent,
  InteriorNotMarked,
  RestrictionNotMarked,
  MissingFace,
  FillFacePresent,
  ThinnessRequired,
  ThinTargetMissing,
  ThinFaceNotMarked,
};

std::string to_string(RejectClause clause);

struct Rejection {
  std::size_t step_index = 0;
  RejectClause clause{};
  std::string detail;
};

/// The growing regular subset, stored as nondegenerate canonical forms per
/// dimension; a chain is present iff its nondegenerate core is stored, and
/// markings are never stored (they are intrinsic to O(-,n)).
class ComplexState {
 public:
  /// Seeded with the faces of the simplex (0,...,n).
  ComplexState(int n, int max_dim);

  int n() const { return n_; }
  int max_dim() const { return max_dim_; }

  bool contains(const Chain& x) const;
  void insert_core(const Chain& x);
  const std::set<Chain>& at_dim(int m) const;

 private:
  int n_;
  int max_dim_;
  std::vector<std::set<Chain>> by_dim_;
};

/// True iff w restricted along every injective alpha != id whose image
/// contains {k-1, k, k+1} is marked; these are the marked faces of the
/// k-th complicial horn.
bool restrictions_marked(const Chain& w, int k);

/// Sequential step applier. Tracks the pending thinness obligation: a horn
/// fill whose filled face is marked must be followed immediately by the
/// matching thinness extension.
class Replayer {
 public:
  Replayer(int n, int max_dim);

  std::optional<Rejection> step(const CertStep& s);
  /// Rejects if a thinness obligation is still pending at end of input.
  std::optional<Rejection> finish();

  const ComplexState& state() const { return state_; }
  std::size_t steps_applied() const { return index_; }

 private:
  ComplexState state_;
  std::size_t index_ = 0;
  std::optional<CertStep> pending_thin_;
};

struct ReplayReport {
  bool legal = false;
  std::optional<Rejection> rejection;
  bool complete = false;    // state matches the oracle through max_dim - 1
  int verified_through = -1;
  std::vector<long long> state_counts;   // nondegenerate, per dimension 0..M
  std::vector<long long> oracle_counts;  // per dimension 0..M-1

  bool ok() const { return legal && complete; }
};

/// Legality only: replays the steps and reports the first rejection.
std::optional<Rejection> replay_legality(const Certificate& cert);

/// Full replay: legality plus exact agreement with the enumeration oracle
/// in every dimension <= max_dim - 1 (dimension max_dim itself may be
/// incomplete under truncation, so it is reported but not compared).
ReplayReport replay(const Certificate& cert, Oracle& oracle);

struct FillerVerdict {
  long long count = 0;
  std::vector<Chain> witnesses;
  bool unique_and_matches = false;  // exactly one, equal to fill(x, y, k)
};

/// Exhaustively searches O(m+1, n) for simplices z with z d_{k-1} = y,
/// z d_{k+1} = x, z marked, and all horn restrictions marked.
FillerVerdict unique_filler_test(const Chain& x, const Chain& y, int k,
                                 Oracle& oracle);

}  // namespace orientalis

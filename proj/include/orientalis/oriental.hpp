#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orientalis/chain.hpp"

namespace orientalis {

struct MembershipViolation {
  std::string clause;  // "zero-chain" | "O1" | "O2"
  std::optional<Operator> beta;
  std::optional<Operator> gamma;
  Int value = 0;  // offending sum or coefficient

  std::string describe() const;
};

/// Checks (O1) and (O2): coefficients sum to 1, and every injective
/// restriction has nonnegative coefficients on injective operators.
/// Returns the first violating witness, in order of increasing p and
/// lexicographic beta, or nullopt for members of O(m,n).
std::optional<MembershipViolation> check_membership(const Chain& x);

/// True iff every operator in the support is degenerate.
bool chain_is_marked(const Chain& x);

/// True iff |a^{-1}(n)| is constant over the support (n the chain target).
bool chain_in_A(const Chain& x);

/// A chain validated to lie in O(m,n), with the vertex tuple, marked flag
/// and in-A flag cached.
class OSimplex {
 public:
  static std::variant<OSimplex, MembershipViolation> validate(Chain x);
  /// Throws std::invalid_argument on violation.
  static OSimplex checked(Chain x);

  const Chain& chain() const { return chain_; }
  int dim() const { return chain_.source_dim(); }
  int target() const { return chain_.target_dim(); }

  int vertex(int i) const;
  const std::vector<int>& vertices() const { return vertices_; }
  bool marked() const { return marked_; }
  bool in_A() const { return in_A_; }
  bool is_degenerate() const { return chain_.is_degenerate(); }

  friend bool operator==(const OSimplex& a, const OSimplex& b) {
    return a.chain_ == b.chain_;
  }

 private:
  explicit OSimplex(Chain x);

  Chain chain_;
  std::vector<int> vertices_;
  bool marked_;
  bool in_A_;
};

/// compose_chains followed by a full membership re-check; the re-check must
/// always pass, its failure is a bug trap.
OSimplex compose_in_O(const OSimplex& x, const OSimplex& w);

}  // namespace orientalis

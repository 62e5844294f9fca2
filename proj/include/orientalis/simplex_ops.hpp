#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace orientalis {

/// A morphism of the simplex category: a weakly increasing map [m] -> [n],
/// stored as its value tuple (a(0), ..., a(m)).
class Operator {
 public:
  Operator(std::vector<int> values, int target);

  static Operator identity(int m);
  /// delta_k : [m-1] -> [m], skips k.
  static Operator face(int k, int m);
  /// sigma_k : [m+1] -> [m], repeats k.
  static Operator degeneracy(int k, int m);
  /// (i) : [0] -> [m].
  static Operator vertex(int i, int m);

  int source_dim() const { return static_cast<int>(values_.size()) - 1; }
  int target_dim() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;
  /// a(k) == a(k+1).
  bool is_degenerate_at(int k) const;
  bool is_degenerate() const { return !is_injective(); }
  std::vector<int> image() const;
  /// a^{-1}(v) as a half-open index range [lo, hi); empty when v not hit.
  std::pair<int, int> preimage_of(int v) const;
  int preimage_count(int v) const;

  friend bool operator==(const Operator&, const Operator&) = default;
  friend std::strong_ordering operator<=>(const Operator& a, const Operator& b) {
    if (auto c = a.values_ <=> b.values_; c != 0) return c;
    return a.target_ <=> b.target_;
  }

 private:
  std::vector<int> values_;
  int target_;
};

/// i |-> outer(inner(i)); inner's target must equal outer's source.
Operator compose(const Operator& outer, const Operator& inner);

/// All weakly (resp. strictly) increasing tuples [m] -> [n], lexicographic.
std::vector<Operator> enumerate_operators(int m, int n, bool injective_only);

struct EpiMono {
  Operator epi;
  Operator mono;
};

/// Unique surjection-followed-by-injection factorization.
EpiMono epi_mono_factor(const Operator& a);

std::size_t hash_value(const Operator& a) noexcept;

std::string to_string(const Operator& a);

}  // namespace orientalis

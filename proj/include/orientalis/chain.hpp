#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "orientalis/simplex_ops.hpp"

namespace orientalis {

using Int = boost::multiprecision::cpp_int;

/// An element of ZDelta([m],[n]): a formal integer combination of operators
/// [m] -> [n]. Canonical form; zero coefficients are never stored.
class Chain {
 public:
  Chain() : Chain(0, 0) {}
  Chain(int m, int n);
  static Chain single(const Operator& a, Int coeff = 1);

  int source_dim() const { return m_; }
  int target_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Operator, Int>& terms() const { return terms_; }
  Int coefficient(const Operator& a) const;
  std::vector<Operator> support() const;

  void add_term(const Operator& a, const Int& c);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  Chain operator-() const;

  /// True iff every operator in the support is degenerate at k.
  bool is_degenerate_at(int k) const;
  bool is_degenerate() const;
  bool is_nondegenerate() const { return !is_degenerate(); }

  /// Same terms reinterpreted with a larger target ordinal.
  Chain with_target(int new_target) const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

 private:
  int m_;
  int n_;
  std::map<Operator, Int> terms_;
};

Chain add(const Chain& x, const Chain& y);
Chain scale(const Int& c, const Chain& x);

/// Right action by precomposition, extended linearly: sum of x_a * (a . beta).
Chain act(const Chain& x, const Operator& beta);

/// Bilinear extension of operator composition.
Chain compose_chains(const Chain& x, const Chain& w);

Chain face(const Chain& x, int k);
Chain degeneracy(const Chain& x, int k);

/// Append the value target+1 to every operator; the chain-level cone.
Chain cone_extend(const Chain& x);

struct DegeneracyNormalForm {
  Chain core;
  std::vector<int> word;  // degeneracy indices in stripping order
};

/// Strips common degeneracies (smallest index first) until the core is
/// nondegenerate. Reassembly applies the word in reverse order.
DegeneracyNormalForm degeneracy_normalize(const Chain& x);
Chain reassemble(const DegeneracyNormalForm& nf);

std::size_t hash_value(const Chain& x) noexcept;

struct ChainHash {
  std::size_t operator()(const Chain& x) const noexcept { return hash_value(x); }
};

std::string to_string(const Chain& x);

}  // namespace orientalis

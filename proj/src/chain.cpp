#include "orientalis/chain.hpp"

#include "orientalis/diagnostics.hpp"

namespace orientalis {

Chain::Chain(int m, int n) : m_(m), n_(n) {
  ORI_REQUIRE(m >= 0 && n >= 0, "chain dimensions must be >= 0");
}

Chain Chain::single(const Operator& a, Int coeff) {
  Chain x(a.source_dim(), a.target_dim());
  x.add_term(a, coeff);
  return x;
}

Int Chain::coefficient(const Operator& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<Operator> Chain::support() const {
  std::vector<Operator> out;
  out.reserve(terms_.size());
  for (const auto& [a, c] : terms_) out.push_back(a);
  return out;
}

void Chain::add_term(const Operator& a, const Int& c) {
  ORI_REQUIRE(a.source_dim() == m_ && a.target_dim() == n_,
              "chain term dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  ORI_REQUIRE(m_ == other.m_ && n_ == other.n_, "chain addition dimension mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  ORI_REQUIRE(m_ == other.m_ && n_ == other.n_, "chain subtraction dimension mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

Chain Chain::operator-() const {
  Chain out(m_, n_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
  return out;
}

bool Chain::is_degenerate_at(int k) const {
  if (terms_.empty()) return false;
  for (const auto& [a, c] : terms_) {
    if (!a.is_degenerate_at(k)) return false;
  }
  return true;
}

bool Chain::is_degenerate() const {
  for (int k = 0; k + 1 <= m_; ++k) {
    if (is_degenerate_at(k)) return true;
  }
  return false;
}

Chain Chain::with_target(int new_target) const {
  ORI_REQUIRE(new_target >= n_, "with_target can only widen the target");
  Chain out(m_, new_target);
  for (const auto& [a, c] : terms_) {
    out.add_term(Operator(a.values(), new_target), c);
  }
  return out;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (ia->second < ib->second) return std::strong_ordering::less;
    if (ia->second > ib->second) return std::strong_ordering::greater;
  }
  if (ia != a.terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Chain add(const Chain& x, const Chain& y) { return x + y; }

Chain scale(const Int& c, const Chain& x) {
  Chain out(x.source_dim(), x.target_dim());
  if (c == 0) return out;
  for (const auto& [a, xc] : x.terms()) out.add_term(a, c * xc);
  return out;
}

Chain act(const Chain& x, const Operator& beta) {
  ORI_REQUIRE(beta.target_dim() == x.source_dim(),
              "act: operator target must equal chain source dimension");
  Chain out(beta.source_dim(), x.target_dim());
  for (const auto& [a, c] : x.terms()) out.add_term(compose(a, beta), c);
  return out;
}

Chain compose_chains(const Chain& x, const Chain& w) {
  ORI_REQUIRE(w.target_dim() == x.source_dim(),
              "compose_chains: dimensions do not chain");
  Chain out(w.source_dim(), x.target_dim());
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : w.terms()) {
      out.add_term(compose(a, b), c * d);
    }
  }
  return out;
}

Chain face(const Chain& x, int k) {
  return act(x, Operator::face(k, x.source_dim()));
}

Chain degeneracy(const Chain& x, int k) {
  return act(x, Operator::degeneracy(k, x.source_dim()));
}

Chain cone_extend(const Chain& x) {
  int new_target = x.target_dim() + 1;
  Chain out(x.source_dim() + 1, new_target);
  for (const auto& [a, c] : x.terms()) {
    std::vector<int> v = a.values();
    v.push_back(new_target);
    out.add_term(Operator(std::move(v), new_target), c);
  }
  return out;
}

DegeneracyNormalForm degeneracy_normalize(const Chain& x) {
  ORI_REQUIRE(!x.is_zero(), "degeneracy_normalize: zero chain");
  DegeneracyNormalForm nf{x, {}};
  bool changed = true;
  while (changed && nf.core.source_dim() >= 1) {
    changed = false;
    for (int k = 0; k + 1 <= nf.core.source_dim(); ++k) {
      if (nf.core.is_degenerate_at(k)) {
        nf.core = face(nf.core, k);
        nf.word.push_back(k);
        changed = true;
        break;
      }
    }
  }
  return nf;
}

Chain reassemble(const DegeneracyNormalForm& nf) {
  Chain out = nf.core;
  for (auto it = nf.word.rbegin(); it != nf.word.rend(); ++it) {
    out = degeneracy(out, *it);
  }
  return out;
}

std::size_t hash_value(const Chain& x) noexcept {
  std::size_t h = 0x243f6a8885a308d3ull;
  h ^= static_cast<std::size_t>(x.source_dim()) * 0x100000001b3ull;
  h ^= static_cast<std::size_t>(x.target_dim()) * 0xc2b2ae3d27d4eb4full;
  for (const auto& [a, c] : x.terms()) {
    h ^= hash_value(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    long long small = static_cast<long long>(c % 0x7fffffffffffLL);
    h ^= static_cast<std::size_t>(small) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Chain& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : x.terms()) {
    if (c > 0 && !s.empty()) s += "+";
    if (c == -1) {
      s += "-";
    } else if (c != 1) {
      s += c.str() + "*";
    }
    s += to_string(a);
  }
  return s;
}

}  // namespace orientalis

#include "orientalis/simplex_ops.hpp"

#include <algorithm>

#include "orientalis/diagnostics.hpp"

namespace orientalis {

Operator::Operator(std::vector<int> values, int target)
    : values_(std::move(values)), target_(target) {
  ORI_REQUIRE(!values_.empty(), "operator needs a nonempty value tuple");
  ORI_REQUIRE(target_ >= 0, "operator target must be a natural number");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    ORI_REQUIRE(values_[i] >= 0 && values_[i] <= target_,
                "operator value out of range [0, target]");
    if (i > 0) {
      ORI_REQUIRE(values_[i - 1] <= values_[i],
                  "operator values must be weakly increasing");
    }
  }
}

Operator Operator::identity(int m) {
  ORI_REQUIRE(m >= 0, "identity dimension must be >= 0");
  std::vector<int> v(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
  return Operator(std::move(v), m);
}

Operator Operator::face(int k, int m) {
  ORI_REQUIRE(m >= 1 && k >= 0 && k <= m, "face index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i <= m; ++i) {
    if (i != k) v.push_back(i);
  }
  return Operator(std::move(v), m);
}

Operator Operator::degeneracy(int k, int m) {
  ORI_REQUIRE(m >= 0 && k >= 0 && k <= m, "degeneracy index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(m) + 2);
  for (int i = 0; i <= m; ++i) {
    v.push_back(i);
    if (i == k) v.push_back(i);
  }
  return Operator(std::move(v), m);
}

Operator Operator::vertex(int i, int m) {
  ORI_REQUIRE(i >= 0 && i <= m, "vertex index out of range");
  return Operator({i}, m);
}

bool Operator::is_identity() const {
  if (target_ != source_dim()) return false;
  for (int i = 0; i <= source_dim(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

bool Operator::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[i - 1]) return false;
  }
  return true;
}

bool Operator::is_surjective() const {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] - values_[i - 1] > 1) return false;
  }
  return true;
}

bool Operator::is_degenerate_at(int k) const {
  ORI_REQUIRE(k >= 0 && k + 1 <= source_dim(), "degeneracy test index out of range");
  return values_[static_cast<std::size_t>(k)] == values_[static_cast<std::size_t>(k) + 1];
}

std::vector<int> Operator::image() const {
  std::vector<int> out;
  for (int v : values_) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::pair<int, int> Operator::preimage_of(int v) const {
  auto lo = std::lower_bound(values_.begin(), values_.end(), v);
  auto hi = std::upper_bound(values_.begin(), values_.end(), v);
  return {static_cast<int>(lo - values_.begin()), static_cast<int>(hi - values_.begin())};
}

int Operator::preimage_count(int v) const {
  auto [lo, hi] = preimage_of(v);
  return hi - lo;
}

Operator compose(const Operator& outer, const Operator& inner) {
  ORI_REQUIRE(inner.target_dim() == outer.source_dim(),
              "compose: inner target must equal outer source");
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int x : inner.values()) v.push_back(outer(x));
  return Operator(std::move(v), outer.target_dim());
}

namespace {

void enumerate_rec(int pos, int m, int n, bool injective_only, std::vector<int>& cur,
                   std::vector<Operator>& out) {
  if (pos == m + 1) {
    out.emplace_back(cur, n);
    return;
  }
  int lo = pos == 0 ? 0 : (injective_only ? cur.back() + 1 : cur.back());
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    enumerate_rec(pos + 1, m, n, injective_only, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Operator> enumerate_operators(int m, int n, bool injective_only) {
  ORI_REQUIRE(m >= 0 && n >= 0, "enumerate_operators: dimensions must be >= 0");
  std::vector<Operator> out;
  std::vector<int> cur;
  enumerate_rec(0, m, n, injective_only, cur, out);
  return out;
}

EpiMono epi_mono_factor(const Operator& a) {
  std::vector<int> img = a.image();
  int p = static_cast<int>(img.size()) - 1;
  std::vector<int> epi_vals;
  epi_vals.reserve(a.values().size());
  for (int v : a.values()) {
    auto it = std::lower_bound(img.begin(), img.end(), v);
    epi_vals.push_back(static_cast<int>(it - img.begin()));
  }
  return EpiMono{Operator(std::move(epi_vals), p), Operator(img, a.target_dim())};
}

std::size_t hash_value(const Operator& a) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(a.target_dim());
  for (int v : a.values()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Operator& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.values()[i]);
  }
  s += ")";
  return s;
}

}  // namespace orientalis

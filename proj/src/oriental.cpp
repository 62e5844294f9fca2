#include "orientalis/oriental.hpp"

#include <algorithm>

#include "orientalis/diagnostics.hpp"

namespace orientalis {

std::string MembershipViolation::describe() const {
  std::string s = clause;
  if (beta) s += " at beta=" + to_string(*beta);
  if (gamma) s += " gamma=" + to_string(*gamma);
  s += " value=" + value.str();
  return s;
}

std::optional<MembershipViolation> check_membership(const Chain& x) {
  if (x.is_zero()) {
    return MembershipViolation{"zero-chain", std::nullopt, std::nullopt, 0};
  }
  Int sum = 0;
  for (const auto& [a, c] : x.terms()) sum += c;
  if (sum != 1) {
    return MembershipViolation{"O1", std::nullopt, std::nullopt, sum};
  }
  const int m = x.source_dim();
  const int n = x.target_dim();
  for (int p = 0; p <= std::min(m, n); ++p) {
    for (const Operator& beta : enumerate_operators(p, m, true)) {
      Chain xb = act(x, beta);
      for (const auto& [gamma, c] : xb.terms()) {
        if (gamma.is_injective() && c < 0) {
          return MembershipViolation{"O2", beta, gamma, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool chain_is_marked(const Chain& x) {
  if (x.is_zero()) return false;
  for (const auto& [a, c] : x.terms()) {
    if (a.is_injective()) return false;
  }
  return true;
}

bool chain_in_A(const Chain& x) {
  if (x.is_zero()) return false;
  const int n = x.target_dim();
  int card = -1;
  for (const auto& [a, c] : x.terms()) {
    int k = a.preimage_count(n);
    if (card < 0) {
      card = k;
    } else if (card != k) {
      return false;
    }
  }
  return true;
}

OSimplex::OSimplex(Chain x) : chain_(std::move(x)) {
  const int m = chain_.source_dim();
  vertices_.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    Chain xi = act(chain_, Operator::vertex(i, m));
    ORI_CHECK(xi.terms().size() == 1 && xi.terms().begin()->second == 1,
              "vertex evaluation of a member must be a single vertex");
    vertices_.push_back(xi.terms().begin()->first(0));
  }
  // Consequences checked: the vertex tuple is weakly increasing, and the
  // endpoints agree with the support extrema.
  for (int i = 0; i + 1 <= m; ++i) {
    ORI_CHECK(vertices_[static_cast<std::size_t>(i)] <=
                  vertices_[static_cast<std::size_t>(i) + 1],
              "member vertex tuple must be weakly increasing");
  }
  int min_first = chain_.target_dim();
  int max_last = 0;
  for (const auto& [a, c] : chain_.terms()) {
    min_first = std::min(min_first, a(0));
    max_last = std::max(max_last, a(m));
  }
  ORI_CHECK(vertices_.front() == min_first, "x(0) must equal min a(0) over supp");
  ORI_CHECK(vertices_.back() == max_last, "x(m) must equal max a(m) over supp");

  marked_ = chain_is_marked(chain_);
  in_A_ = chain_in_A(chain_);
}

std::variant<OSimplex, MembershipViolation> OSimplex::validate(Chain x) {
  if (auto v = check_membership(x)) return *v;
  return OSimplex(std::move(x));
}

OSimplex OSimplex::checked(Chain x) {
  auto r = validate(std::move(x));
  if (auto* v = std::get_if<MembershipViolation>(&r)) {
    throw std::invalid_argument("not a member of O(m,n): " + v->describe());
  }
  return std::get<OSimplex>(std::move(r));
}

int OSimplex::vertex(int i) const {
  ORI_REQUIRE(i >= 0 && i <= dim(), "vertex index out of range");
  return vertices_[static_cast<std::size_t>(i)];
}

OSimplex compose_in_O(const OSimplex& x, const OSimplex& w) {
  ORI_REQUIRE(w.target() == x.dim(), "compose_in_O: dimensions do not chain");
  Chain c = compose_chains(x.chain(), w.chain());
  auto r = OSimplex::validate(std::move(c));
  ORI_CHECK(std::holds_alternative<OSimplex>(r),
            "composite of members failed membership re-check");
  return std::get<OSimplex>(std::move(r));
}

}  // namespace orientalis

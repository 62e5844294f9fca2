// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "orientalis/anodyne.hpp"
#include "orientalis/certificate.hpp"
#include "orientalis/enumeration.hpp"
#include "orientalis/pasting.hpp"

using namespace orientalis;

namespace {

Oracle oracle(2, 4);
int failures = 0;

void report(int number, const std::string& title, bool ok, double seconds) {
  std::printf("%s: criterion %d — %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), seconds);
  if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& title, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(number, title, ok, seconds);
}

Chain chain(int m, int n, std::vector<std::pair<std::vector<int>, int>> terms) {
  Chain x(m, n);
  for (auto& [values, c] : terms) x.add_term(Operator(values, n), c);
  return x;
}

bool worked_examples() {
  Chain composite = chain(1, 2, {{{0, 1}, 1}, {{1, 1}, -1}, {{1, 2}, 1}});
  if (face(composite, 0) != Chain::single(Operator({2}, 2))) return false;

  Chain x = chain(2, 3, {{{0, 0, 2}, 1}, {{0, 2, 2}, -1}, {{0, 2, 3}, 1}});
  Chain y = chain(2, 3, {{{0, 1, 2}, 1}, {{2, 2, 2}, -1}, {{2, 2, 3}, 1}});
  if (paste(x, y, 1) !=
      chain(2, 3, {{{0, 1, 2}, 1}, {{0, 2, 2}, -1}, {{0, 2, 3}, 1}})) {
    return false;
  }

  for (int n = 0; n <= 4; ++n) {
    const auto& vertices = oracle.members(0, n);
    if (static_cast<int>(vertices.size()) != n + 1) return false;
    for (int i = 0; i <= n; ++i) {
      if (vertices[static_cast<std::size_t>(i)] !=
          Chain::single(Operator::vertex(i, n))) {
        return false;
      }
    }
  }
  return true;
}

bool filler_identities() {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const auto& members = oracle.members(m, n);
      for (int k = 1; k <= m; ++k) {
        for (const Chain& a : members) {
          Chain af = face(a, k - 1);
          for (const Chain& b : members) {
            if (face(b, k) != af) continue;
            Chain w = fill(a, b, k);  // asserts the three face identities
            if (face(w, k - 1) != b || face(w, k) != paste(a, b, k) ||
                face(w, k + 1) != a) {
              return false;
            }
          }
        }
      }
      // support characterization <=> reconstruction, asserted internally
      if (m == 2) {
        for (const Chain& a : members) (void)is_filler_shaped(a, 1);
      }
    }
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    int n = static_cast<int>(rng() % 4);
    int k = 1 + static_cast<int>(rng() % m);
    Chain y(m, n), z(m, n);
    for (const Operator& a : enumerate_operators(m, n, false)) {
      y.add_term(a, coeff(rng));
      z.add_term(a, coeff(rng));
    }
    SumDecomposition d = decompose_sum(y, z, k);  // asserts all identities
    if (paste(d.u, d.v, k) != y + z) return false;
    if (d.witness != degeneracy(y, k) + degeneracy(z, k - 1)) return false;
  }
  return true;
}

bool closure_and_functoriality() {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const auto& members = oracle.members(m, n);
      for (const Chain& a : members) {
        for (int p = 0; p <= 3; ++p) {
          for (const Operator& beta : enumerate_operators(p, m, false)) {
            if (check_membership(act(a, beta))) return false;
          }
        }
      }
      for (int k = 1; k <= m; ++k) {
        for (const Chain& a : members) {
          Chain af = face(a, k - 1);
          for (const Chain& b : members) {
            if (face(b, k) != af) continue;
            if (check_membership(paste(a, b, k))) return false;
            if (check_membership(fill(a, b, k))) return false;
          }
        }
      }
    }
  }
  return true;
}

bool partition_theorem() {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 5; ++m) {
      long long daggers = 0, non_daggers = 0;
      for (const Chain& x : oracle.nondegenerate(m, n)) {
        if (chain_in_A(x)) continue;
        RankData rd = rank_data(x);  // asserts level >= 1, corank forms
        if (rd.dagger) {
          ++daggers;
          // parent() inside the roundtrip asserts marking and corank
          Chain y = child(x);
          ParentResult back = parent(y);
          if (back.w != x) return false;
          classify_faces(x);  // asserts Claim about non-level faces
        } else {
          ++non_daggers;
          ParentResult p = parent(x);
          if (child(p.w) != x) return false;
          if (p.data.corank != rank_data(x).corank) return false;
          if (!chain_is_marked(p.w)) return false;
          if (chain_is_marked(x)) {
            // marked non-dagger simplices have marked neighbour faces
            if (!chain_is_marked(face(p.w, p.data.level - 1)) ||
                !chain_is_marked(face(p.w, p.data.level + 1))) {
              return false;
            }
          }
        }
      }
      // parents of dimension m are children's partners one level up, so the
      // classes partition each graded piece against its neighbours
      if (m >= 2) {
        long long parents_here = daggers;
        long long children_below = 0;
        for (const Chain& x : oracle.nondegenerate(m - 1, n)) {
          if (chain_in_A(x)) continue;
          if (!rank_data(x).dagger) ++children_below;
        }
        if (parents_here != children_below) return false;
      }
    }
  }
  return true;
}

bool main_theorem() {
  const std::vector<std::pair<int, int>> cases = {{0, 3}, {1, 4}, {2, 4}, {3, 5}};
  for (auto [n, max_dim] : cases) {
    Certificate cert = generate_certificate(n, max_dim, oracle);
    ReplayReport r = replay(cert, oracle);
    if (!r.ok() || r.verified_through != max_dim - 1) return false;
    if (n >= 1 && !verify_A_join_structure(n, max_dim, oracle).ok) return false;
  }
  return true;
}

bool filler_uniqueness() {
  for (int n = 2; n <= 3; ++n) {
    const auto& members = oracle.members(1, n);
    for (const Chain& a : members) {
      Chain af = face(a, 0);
      for (const Chain& b : members) {
        if (face(b, 1) != af) continue;
        FillerVerdict v = unique_filler_test(a, b, 1, oracle);
        if (!v.unique_and_matches) return false;
      }
    }
  }
  return true;
}

bool oracle_cross_validation() {
  for (int n = 1; n <= 3; ++n) {
    ClosureResult c = enumerate_by_closure(n, 4);
    for (int m = 0; m <= 4; ++m) {
      const auto& members = oracle.members(m, n);
      const auto& set = c.by_dim[static_cast<std::size_t>(m)];
      if (set.size() != members.size()) return false;
      for (const Chain& x : members) {
        if (!set.contains(x)) return false;
      }
    }
  }
  // coefficient-bound stability at the certified bound
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      int bound = oracle.bound_used(m, n);
      EnumerationResult again = enumerate_O(m, n, bound + 1, 4);
      if (again.members != oracle.members(m, n)) return false;
    }
  }
  return oracle.members(1, 2).size() == 7;
}

struct Mutation {
  std::string label;
  Certificate cert;
  RejectClause expected;
};

// mutation battery: every tampering is derived structurally, with the
// expected clause predicted from the construction rather than observed
std::vector<Mutation> build_mutations() {
  std::vector<Mutation> out;
  Certificate base2 = generate_certificate(2, 4, oracle);
  Certificate base3 = generate_certificate(3, 4, oracle);

  // (a) swapped steps: move a horn unit before a predecessor that inserts
  // one of its faces -> the face is missing at the earlier position
  auto add_swaps = [&out](const Certificate& base, int want) {
    // cores inserted by each step, replayed once
    Replayer r(base.n, base.max_dim);
    std::map<Chain, std::size_t> inserted_at;
    for (std::size_t i = 0; i < base.steps.size(); ++i) {
      const CertStep& s = base.steps[i];
      if (s.kind == StepKind::HornFill) {
        inserted_at.emplace(degeneracy_normalize(s.w).core, i);
        inserted_at.emplace(degeneracy_normalize(face(s.w, s.k)).core, i);
      }
      if (r.step(s)) std::terminate();
    }
    int added = 0;
    for (std::size_t j = 0; j < base.steps.size() && added < want; ++j) {
      const CertStep& s = base.steps[j];
      if (s.kind != StepKind::HornFill) continue;
      for (int i = 0; i <= s.m; ++i) {
        if (i == s.k) continue;
        Chain core = degeneracy_normalize(face(s.w, i)).core;
        auto it = inserted_at.find(core);
        if (it == inserted_at.end() || it->second >= j) continue;
        // move step j to the position of its dependency
        Certificate tampered = base;
        CertStep moved = tampered.steps[j];
        tampered.steps.erase(tampered.steps.begin() +
                             static_cast<std::ptrdiff_t>(j));
        tampered.steps.insert(
            tampered.steps.begin() + static_cast<std::ptrdiff_t>(it->second),
            moved);
        out.push_back({"swapped step " + std::to_string(j), std::move(tampered),
                       RejectClause::MissingFace});
        ++added;
        break;
      }
    }
    return added;
  };
  int swaps = add_swaps(base3, 5);
  if (swaps < 5) add_swaps(base2, 5 - swaps);

  // (b) dropped thinness extensions -> the obligation goes unmet
  int dropped = 0;
  for (std::size_t i = 0; i < base3.steps.size() && dropped < 5; ++i) {
    if (base3.steps[i].kind != StepKind::ThinExt) continue;
    Certificate tampered = base3;
    tampered.steps.erase(tampered.steps.begin() +
                         static_cast<std::ptrdiff_t>(i));
    out.push_back({"dropped thin " + std::to_string(i), std::move(tampered),
                   RejectClause::ThinnessRequired});
    ++dropped;
  }

  // (c) unmarked interiors: prepend a horn whose simplex is a genuine
  // member outside the initial state but not marked
  int unmarked = 0;
  for (const Chain& z : oracle.nondegenerate(2, 3)) {
    if (unmarked >= 5) break;
    if (chain_is_marked(z)) continue;
    if (Replayer(3, 4).state().contains(z)) continue;
    Certificate tampered = base3;
    tampered.steps.insert(tampered.steps.begin(),
                          CertStep{StepKind::HornFill, 2, 1, z});
    out.push_back({"unmarked interior " + to_string(z), std::move(tampered),
                   RejectClause::InteriorNotMarked});
    ++unmarked;
  }

  // (d) wrong horn index: out of range -> rejected outright; in range with
  // all marking clauses intact -> the level face is reported missing
  int wrong = 0;
  for (std::size_t i = 0; i < base3.steps.size() && wrong < 5; ++i) {
    const CertStep& s = base3.steps[i];
    if (s.kind != StepKind::HornFill) continue;
    if (wrong < 2) {
      Certificate tampered = base3;
      tampered.steps[i].k = (wrong == 0) ? 0 : s.m;
      out.push_back({"horn index out of range " + std::to_string(i),
                     std::move(tampered), RejectClause::BadIndex});
      ++wrong;
      continue;
    }
    int alt = -1;
    for (int k = 1; k < s.m; ++k) {
      if (k != s.k && restrictions_marked(s.w, k)) {
        alt = k;
        break;
      }
    }
    if (alt < 0) continue;
    Certificate tampered = base3;
    tampered.steps[i].k = alt;
    // the original fill face s.w d_{s.k} is still absent at step i, and it
    // is checked among the horn faces of the altered index
    out.push_back({"horn index shifted " + std::to_string(i),
                   std::move(tampered), RejectClause::MissingFace});
    ++wrong;
  }
  return out;
}

bool mutation_robustness() {
  std::vector<Mutation> mutations = build_mutations();
  if (mutations.size() != 20) {
    std::printf("  built %zu mutations, expected 20\n", mutations.size());
    return false;
  }
  for (const Mutation& m : mutations) {
    auto rej = replay_legality(m.cert);
    if (!rej) {
      std::printf("  accepted tampered certificate: %s\n", m.label.c_str());
      return false;
    }
    if (rej->clause != m.expected) {
      std::printf("  %s rejected with '%s', expected '%s'\n", m.label.c_str(),
                  to_string(rej->clause).c_str(),
                  to_string(m.expected).c_str());
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "reference worked examples reproduce exactly", worked_examples);
  criterion(2, "filler, pasting and decomposition identities", filler_identities);
  criterion(3, "closure of O(-,n) under the operations and the action",
            closure_and_functoriality);
  criterion(4, "parent/child partition with all graded claims (n<=3, M=5)",
            partition_theorem);
  criterion(5, "anodyne certificates replay to O(-,n) through M-1", main_theorem);
  criterion(6, "horn fillers are unique in O(1,2) and O(1,3)", filler_uniqueness);
  criterion(7, "independent oracles agree and bounds are stable",
            oracle_cross_validation);
  criterion(8, "20 tampered certificates rejected with predicted clauses",
            mutation_robustness);
  return failures == 0 ? 0 : 1;
}

#include "orientalis/anodyne.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "orientalis/diagnostics.hpp"
#include "orientalis/pasting.hpp"

namespace orientalis {

namespace {

std::set<Operator> support_set(const Chain& x) {
  std::set<Operator> s;
  for (const auto& [a, c] : x.terms()) s.insert(a);
  return s;
}

// preimage size of the top value n
int top_count(const Operator& a) {
  auto [lo, hi] = a.preimage_of(a.target_dim());
  return hi - lo;
}

}  // namespace

RankData rank_data(const Chain& x) {
  ORI_REQUIRE(x.is_nondegenerate(), "rank_data: chain is degenerate");
  ORI_REQUIRE(!chain_in_A(x), "rank_data: chain lies in A");
  ORI_REQUIRE(!check_membership(x), "rank_data: chain is not a member");
  const int m = x.source_dim();
  const int n = x.target_dim();

  RankData rd;
  rd.check_part = Chain(m, n);
  rd.bar_part = Chain(m, n);

  int rank = m + 1;
  int alt = 0;
  for (const auto& [a, c] : x.terms()) {
    auto [lo, hi] = a.preimage_of(n);
    if (lo < hi) rank = std::min(rank, lo);
    alt = std::max(alt, hi - lo);
  }
  ORI_CHECK(rank <= m, "rank_data: no operator attains the top value");
  rd.rank = rank;
  for (const auto& [a, c] : x.terms()) {
    if (a(rank) == n) {
      rd.bar_part.add_term(a, c);
    } else {
      rd.check_part.add_term(a, c);
    }
  }
  ORI_CHECK(!rd.check_part.is_zero() && !rd.bar_part.is_zero(),
            "rank_data: trivial split outside A");

  int level = rank;
  for (int i = rank - 1; i >= 0; --i) {
    bool constant = true;
    for (const auto& [a, c] : rd.check_part.terms()) {
      if (a(i) != a(rank)) {
        constant = false;
        break;
      }
    }
    if (!constant) break;
    level = i;
  }
  rd.level = level;
  ORI_CHECK(level >= 1, "rank_data: level must be positive");

  rd.corank = m - rank;
  rd.alt_corank = alt;
  // the alternative corank convention is off from dim - rank by exactly one
  ORI_CHECK(rd.alt_corank == rd.corank + 1,
            "rank_data: corank variants disagree");

  rd.dagger = rd.bar_part.is_degenerate_at(level - 1);
  if (rd.dagger) {
    ORI_CHECK(level < rank, "rank_data: dagger forces level < rank");
  }
  return rd;
}

Chain child(const Chain& x) {
  RankData rd = rank_data(x);
  ORI_REQUIRE(rd.dagger, "child: simplex does not satisfy the dagger condition");
  const int l = rd.level;
  Chain y = face(x, l);

  ORI_CHECK(!check_membership(y), "child: face left O(-,n)");
  ORI_CHECK(y.is_nondegenerate(), "child: face is degenerate");
  ORI_CHECK(!chain_in_A(y), "child: face fell into A");
  RankData rdy = rank_data(y);
  ORI_CHECK(rdy.rank == rd.rank - 1, "child: rank did not drop by one");
  ORI_CHECK(rdy.level == l, "child: level changed");
  ORI_CHECK(rdy.corank == rd.corank, "child: corank changed");
  ORI_CHECK(!rdy.dagger, "child: child still satisfies the dagger condition");
  ORI_CHECK(rdy.check_part == face(rd.check_part, l),
            "child: check part is not the face of the check part");
  ORI_CHECK(rdy.bar_part == face(rd.bar_part, l),
            "child: bar part is not the face of the bar part");

  // the face map is injective on the support here: no cancellation
  Operator delta = Operator::face(l, x.source_dim());
  std::set<Operator> expected;
  for (const auto& [a, c] : x.terms()) expected.insert(compose(a, delta));
  ORI_CHECK(support_set(y) == expected && expected.size() == x.terms().size(),
            "child: support is not the termwise face");
  return y;
}

ParentResult parent(const Chain& x) {
  RankData rd = rank_data(x);
  ORI_REQUIRE(!rd.dagger, "parent: simplex satisfies the dagger condition");
  const int l = rd.level;
  const int m = x.source_dim();

  ParentResult result;
  result.u = add(rd.check_part, degeneracy(face(rd.bar_part, l), l - 1));
  result.v = add(degeneracy(face(rd.check_part, l - 1), l - 1), rd.bar_part);
  ORI_CHECK(!check_membership(result.u), "parent: u is not a member");
  ORI_CHECK(!check_membership(result.v), "parent: v is not a member");

  Chain w = add(degeneracy(rd.check_part, l), degeneracy(rd.bar_part, l - 1));
  ORI_CHECK(fill(result.u, result.v, l) == w,
            "parent: w is not the filler of u and v");
  ORI_CHECK(!check_membership(w), "parent: direct membership re-check failed");
  ORI_CHECK(face(w, l) == x, "parent: d_level does not recover the simplex");
  ORI_CHECK(w.is_nondegenerate(), "parent: degenerate parent");
  ORI_CHECK(!chain_in_A(w), "parent: parent fell into A");
  ORI_CHECK(chain_is_marked(w), "parent: parent is not marked");

  RankData rdw = rank_data(w);
  ORI_CHECK(rdw.rank == rd.rank + 1, "parent: rank did not rise by one");
  ORI_CHECK(rdw.level == l, "parent: level changed");
  ORI_CHECK(rdw.corank == rd.corank, "parent: corank changed");
  ORI_CHECK(rdw.dagger, "parent: parent fails the dagger condition");

  std::set<Operator> expected;
  Operator sl = Operator::degeneracy(l, m);
  Operator sl1 = Operator::degeneracy(l - 1, m);
  for (const auto& [a, c] : rd.check_part.terms()) expected.insert(compose(a, sl));
  for (const auto& [a, c] : rd.bar_part.terms()) expected.insert(compose(a, sl1));
  ORI_CHECK(support_set(w) == expected,
            "parent: support is not the termwise degeneracy of the split");

  result.w = std::move(w);
  result.data = std::move(rdw);
  return result;
}

std::vector<FaceClass> classify_faces(const Chain& w) {
  RankData rd = rank_data(w);
  ORI_REQUIRE(rd.dagger, "classify_faces: not a parent simplex");
  const int m = w.source_dim();
  std::vector<FaceClass> out;
  for (int k = 0; k <= m; ++k) {
    if (k == rd.level) continue;
    Chain f = face(w, k);
    ORI_CHECK(!f.is_zero(), "classify_faces: face collapsed to zero");
    if (chain_in_A(f)) {
      out.push_back({k, FaceTag::InA});
      continue;
    }
    Chain core = degeneracy_normalize(f).core;
    ORI_CHECK(!chain_in_A(core), "classify_faces: core classification drifted");
    RankData rdf = rank_data(core);
    if (rdf.dagger) {
      out.push_back({k, FaceTag::Dagger});
      continue;
    }
    if (core.source_dim() < m - 1) {
      // the core's parent lives strictly below dimension m
      out.push_back({k, FaceTag::LexLower});
      continue;
    }
    bool lex_lower = std::make_pair(rdf.corank, rdf.level) <
                     std::make_pair(rd.corank, rd.level);
    ORI_CHECK(lex_lower,
              "classify_faces: face contradicts the filtration at " +
                  to_string(f));
    out.push_back({k, FaceTag::LexLower});
  }
  return out;
}

Chain join_cone(const Chain& x) {
  ORI_REQUIRE(!check_membership(x), "join_cone: input is not a member");
  Chain c = cone_extend(x);
  ORI_CHECK(!check_membership(c), "join_cone: cone left O(-,n)");
  ORI_CHECK(chain_in_A(c), "join_cone: cone is not in A");
  ORI_CHECK(chain_is_marked(c) == chain_is_marked(x),
            "join_cone: marking not preserved");
  return c;
}

namespace {

// rebuild with target narrowed to n-1; valid when no operator attains n
Chain narrow_target(const Chain& x) {
  Chain out(x.source_dim(), x.target_dim() - 1);
  for (const auto& [a, c] : x.terms()) {
    out.add_term(Operator(a.values(), x.target_dim() - 1), c);
  }
  return out;
}

}  // namespace

JoinReport verify_A_join_structure(int n, int max_dim, Oracle& oracle) {
  ORI_REQUIRE(n >= 1, "verify_A_join_structure: need n >= 1");
  JoinReport report;
  report.ok = true;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += what;
  };
  for (int m = 0; m <= max_dim; ++m) {
    for (const Chain& x : oracle.nondegenerate(m, n)) {
      if (!chain_in_A(x)) continue;
      int c = top_count(x.terms().begin()->first);
      if (c == 0) {
        Chain base = narrow_target(x);
        if (check_membership(base) || base.is_degenerate()) {
          fail("c=0 simplex is not a lower member: " + to_string(x));
        } else {
          ++report.base_count;
        }
      } else if (c == 1 && m == 0) {
        if (x == Chain::single(Operator({n}, n))) {
          ++report.point_count;
        } else {
          fail("unexpected vertex in A: " + to_string(x));
        }
      } else if (c == 1) {
        Chain front = narrow_target(face(x, m));
        if (check_membership(front) || front.is_degenerate()) {
          fail("cone base is not a lower member: " + to_string(x));
        } else if (join_cone(front) != x) {
          fail("simplex is not the cone of its front face: " + to_string(x));
        } else if (chain_is_marked(x) != chain_is_marked(front)) {
          fail("cone marking mismatch: " + to_string(x));
        } else {
          ++report.cone_count;
        }
      } else {
        fail("nondegenerate simplex of A with c >= 2: " + to_string(x));
      }
    }
  }
  // the three classes biject with lower members, their cones, and the point
  long long lower = 0;
  for (int m = 0; m <= max_dim; ++m) {
    lower += static_cast<long long>(oracle.nondegenerate(m, n - 1).size());
  }
  long long lower_conable = 0;
  for (int m = 0; m + 1 <= max_dim; ++m) {
    lower_conable +=
        static_cast<long long>(oracle.nondegenerate(m, n - 1).size());
  }
  if (report.base_count != lower) {
    fail("c=0 count mismatch with O(-,n-1)");
  }
  if (report.cone_count != lower_conable) {
    fail("cone count mismatch with O(-,n-1)");
  }
  if (report.point_count != 1) {
    fail("expected exactly one top vertex");
  }
  return report;
}

namespace {

CertStep widen_step(const CertStep& s, int n) {
  return CertStep{s.kind, s.m, s.k, s.w.with_target(n)};
}

CertStep cone_step(const CertStep& s) {
  return CertStep{s.kind, s.m + 1, s.k, cone_extend(s.w)};
}

// units: a HornFill optionally followed by its ThinExt
std::vector<std::vector<CertStep>> split_units(const std::vector<CertStep>& steps) {
  std::vector<std::vector<CertStep>> units;
  for (const CertStep& s : steps) {
    if (s.kind == StepKind::ThinExt && !units.empty() &&
        units.back().size() == 1 &&
        units.back().front().kind == StepKind::HornFill &&
        units.back().front().w == s.w) {
      units.back().push_back(s);
    } else {
      units.push_back({s});
    }
  }
  return units;
}

std::vector<CertStep> stage_c_steps(int n, int max_dim, Oracle& oracle) {
  // parents of dimension <= max_dim, in lexicographic (m, corank, level)
  // order; within one index, canonical chain order
  std::map<std::tuple<int, int, int>, std::vector<Chain>> parents;
  for (int m = 1; m <= max_dim; ++m) {
    for (const Chain& x : oracle.nondegenerate(m, n)) {
      if (chain_in_A(x)) continue;
      RankData rd = rank_data(x);
      if (!rd.dagger) continue;
      parents[{m, rd.corank, rd.level}].push_back(x);
    }
  }
  std::vector<CertStep> steps;
  for (auto& [index, group] : parents) {
    std::sort(group.begin(), group.end());
    for (const Chain& w : group) {
      RankData rd = rank_data(w);
      classify_faces(w);  // fatal if the filtration claim fails
      steps.push_back({StepKind::HornFill, w.source_dim(), rd.level, w});
      if (chain_is_marked(face(w, rd.level))) {
        ORI_CHECK(chain_is_marked(face(w, rd.level - 1)) &&
                      chain_is_marked(face(w, rd.level + 1)),
                  "stage c: neighbour faces of a marked fill are unmarked");
        steps.push_back({StepKind::ThinExt, w.source_dim(), rd.level, w});
      }
    }
  }
  return steps;
}

}  // namespace

Certificate generate_certificate(int n, int max_dim, Oracle& oracle) {
  ORI_REQUIRE(n >= 0 && max_dim >= n, "generate_certificate: need max_dim >= n");
  Certificate cert{n, max_dim, {}};
  if (n == 0) return cert;

  Certificate lower = generate_certificate(n - 1, max_dim, oracle);
  auto units = split_units(lower.steps);

  // stage (b): the lower certificate widened to target n, with each unit's
  // cone interleaved right after it; units at the cutoff stay un-coned
  std::vector<CertStep> interleaved;
  std::vector<CertStep> originals_first;
  std::vector<CertStep> cones;
  for (const auto& unit : units) {
    for (const CertStep& s : unit) {
      interleaved.push_back(widen_step(s, n));
      originals_first.push_back(widen_step(s, n));
    }
    if (unit.front().m + 1 <= max_dim) {
      for (const CertStep& s : unit) {
        interleaved.push_back(cone_step(s));
        cones.push_back(cone_step(s));
      }
    }
  }

  std::vector<CertStep> stage_c = stage_c_steps(n, max_dim, oracle);

  cert.steps = interleaved;
  cert.steps.insert(cert.steps.end(), stage_c.begin(), stage_c.end());
  if (!replay_legality(cert)) return cert;

  // the join-induced cell order is not canonical; fall back to
  // all originals, then all cones
  cert.steps = std::move(originals_first);
  cert.steps.insert(cert.steps.end(), cones.begin(), cones.end());
  cert.steps.insert(cert.steps.end(), stage_c.begin(), stage_c.end());
  auto rejection = replay_legality(cert);
  ORI_CHECK(!rejection, "generate_certificate: both step orders fail replay: " +
                            (rejection ? rejection->detail : ""));
  return cert;
}

}  // namespace orientalis

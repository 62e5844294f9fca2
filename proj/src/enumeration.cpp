#include "orientalis/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "orientalis/diagnostics.hpp"
#include "orientalis/pasting.hpp"

namespace orientalis {

namespace {

// The search assigns integer weights to the prefix tree of value tuples,
// level by level. The weight of a prefix q at level l is the sum of the
// coefficients of all operators extending q, so the column marginals
// (forced by the vertex images) and every (O2) instance whose injective
// beta lands in the first l+1 columns become exact linear constraints on
// level-l weights. Leaves are the coefficients themselves.
struct LevelPlan {
  // children, in lexicographic order; contiguous per parent
  std::vector<int> parent;          // index into previous level's prefixes
  std::vector<int> value;           // tuple value at this level
  std::vector<char> strictly_inc;   // prefix strictly increasing => weight >= 0
  std::vector<std::vector<int>> prefixes;  // full tuples

  struct ConstraintTemplate {
    bool equality;          // equality with a runtime target, else >= 0
    int marginal_value;     // for equality-marginals: the column value j; -1 otherwise
    std::vector<int> vars;  // child indices
  };
  std::vector<ConstraintTemplate> constraints;
  // per parent: [start, end) child range (for the node-sum equalities)
  std::vector<std::pair<int, int>> node_ranges;
};

struct SearchPlan {
  int m, n;
  std::vector<std::vector<int>> level0;  // prefixes of length 1
  std::vector<LevelPlan> levels;         // levels 1..m
};

SearchPlan build_plan(int m, int n) {
  SearchPlan plan{m, n, {}, {}};
  for (int j = 0; j <= n; ++j) plan.level0.push_back({j});
  std::vector<std::vector<int>> prev = plan.level0;
  for (int l = 1; l <= m; ++l) {
    LevelPlan lp;
    lp.node_ranges.resize(prev.size());
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      int start = static_cast<int>(lp.prefixes.size());
      for (int j = prev[static_cast<std::size_t>(p)].back(); j <= n; ++j) {
        std::vector<int> q = prev[static_cast<std::size_t>(p)];
        q.push_back(j);
        bool strict = true;
        for (std::size_t i = 1; i < q.size(); ++i) {
          if (q[i] == q[i - 1]) strict = false;
        }
        lp.parent.push_back(p);
        lp.value.push_back(j);
        lp.strictly_inc.push_back(strict ? 1 : 0);
        lp.prefixes.push_back(std::move(q));
      }
      lp.node_ranges[static_cast<std::size_t>(p)] = {start,
                                                     static_cast<int>(lp.prefixes.size())};
    }
    const int count = static_cast<int>(lp.prefixes.size());

    // column marginals at this level
    for (int j = 0; j <= n; ++j) {
      LevelPlan::ConstraintTemplate ct{true, j, {}};
      for (int q = 0; q < count; ++q) {
        if (lp.value[static_cast<std::size_t>(q)] == j) ct.vars.push_back(q);
      }
      lp.constraints.push_back(std::move(ct));
    }

    // (O2) instances newly decided at this level: injective beta with image
    // S, max(S) = l, |S| >= 2; the full column set is already covered by the
    // per-variable sign bounds.
    int max_size = std::min(l + 1, n + 1);
    std::vector<int> subset;
    auto add_o2 = [&](const std::vector<int>& cols) {
      std::vector<int> gamma(cols.size());
      auto rec_gamma = [&](auto&& self, std::size_t t, int lo) -> void {
        if (t == cols.size()) {
          LevelPlan::ConstraintTemplate ct{false, -1, {}};
          for (int q = 0; q < count; ++q) {
            bool match = true;
            for (std::size_t u = 0; u < cols.size(); ++u) {
              if (lp.prefixes[static_cast<std::size_t>(q)]
                             [static_cast<std::size_t>(cols[u])] != gamma[u]) {
                match = false;
                break;
              }
            }
            if (match) ct.vars.push_back(q);
          }
          if (!ct.vars.empty()) lp.constraints.push_back(std::move(ct));
          return;
        }
        for (int g = lo; g <= n; ++g) {
          gamma[t] = g;
          self(self, t + 1, g + 1);
        }
      };
      rec_gamma(rec_gamma, 0, 0);
    };
    auto rec_subset = [&](auto&& self, int next, int remaining) -> void {
      if (remaining == 0) {
        std::vector<int> cols = subset;
        cols.push_back(l);
        // the full column set reduces to the per-variable sign bounds
        if (static_cast<int>(cols.size()) <= l) add_o2(cols);
        return;
      }
      for (int c = next; c <= l - 1 - (remaining - 1); ++c) {
        subset.push_back(c);
        self(self, c + 1, remaining - 1);
        subset.pop_back();
      }
    };
    for (int size = 2; size <= max_size; ++size) {
      subset.clear();
      rec_subset(rec_subset, 0, size - 1);
    }

    prev = lp.prefixes;
    plan.levels.push_back(std::move(lp));
  }
  return plan;
}

struct ConstraintState {
  bool equality;
  int target;  // for equality
  int cur;
  int rem_lo, rem_hi;
};

// Depth-first enumeration for one vertex tuple.
class VertexSearch {
 public:
  VertexSearch(const SearchPlan& plan, const std::vector<int>& v, int bound,
               std::vector<Chain>& out, bool& boundary_hit)
      : plan_(plan), v_(v), bound_(bound), out_(out), boundary_hit_(boundary_hit) {}

  void run() {
    std::vector<int> w0(plan_.level0.size(), 0);
    for (std::size_t j = 0; j < w0.size(); ++j) {
      w0[j] = (static_cast<int>(j) == v_[0]) ? 1 : 0;
    }
    weights_.clear();
    weights_.push_back(std::move(w0));
    solve_level(1);
  }

 private:
  void solve_level(int l) {
    if (l > plan_.m) {
      record_solution();
      return;
    }
    const LevelPlan& lp = plan_.levels[static_cast<std::size_t>(l - 1)];
    const int count = static_cast<int>(lp.prefixes.size());

    // variable bounds
    lo_.assign(static_cast<std::size_t>(count), -bound_);
    hi_.assign(static_cast<std::size_t>(count), bound_);
    for (int q = 0; q < count; ++q) {
      if (lp.strictly_inc[static_cast<std::size_t>(q)]) lo_[static_cast<std::size_t>(q)] = 0;
    }

    // instantiate constraints: node sums, then the templates
    cons_.clear();
    incidence_.assign(static_cast<std::size_t>(count), {});
    const std::vector<int>& parent_w = weights_[static_cast<std::size_t>(l - 1)];
    for (std::size_t p = 0; p < lp.node_ranges.size(); ++p) {
      auto [s, e] = lp.node_ranges[p];
      ConstraintState cs{true, parent_w[p], 0, 0, 0};
      int idx = static_cast<int>(cons_.size());
      for (int q = s; q < e; ++q) {
        cs.rem_lo += lo_[static_cast<std::size_t>(q)];
        cs.rem_hi += hi_[static_cast<std::size_t>(q)];
        incidence_[static_cast<std::size_t>(q)].push_back(idx);
      }
      cons_.push_back(cs);
    }
    for (const auto& ct : lp.constraints) {
      ConstraintState cs{ct.equality, 0, 0, 0, 0};
      if (ct.equality) cs.target = (ct.marginal_value == v_[static_cast<std::size_t>(l)]) ? 1 : 0;
      int idx = static_cast<int>(cons_.size());
      for (int q : ct.vars) {
        cs.rem_lo += lo_[static_cast<std::size_t>(q)];
        cs.rem_hi += hi_[static_cast<std::size_t>(q)];
        incidence_[static_cast<std::size_t>(q)].push_back(idx);
      }
      cons_.push_back(cs);
    }

    weights_.emplace_back(static_cast<std::size_t>(count), 0);
    assign(l, 0);
    weights_.pop_back();
  }

  void assign(int l, int q) {
    const LevelPlan& lp = plan_.levels[static_cast<std::size_t>(l - 1)];
    const int count = static_cast<int>(lp.prefixes.size());
    if (q == count) {
      // all equality targets are met exactly by propagation; inequalities have
      // cur >= 0 enforced by the interval logic below
      descend(l);
      return;
    }
    // remove q's slack from its constraints, then intersect the feasible
    // interval for its value
    int vlo = lo_[static_cast<std::size_t>(q)];
    int vhi = hi_[static_cast<std::size_t>(q)];
    for (int ci : incidence_[static_cast<std::size_t>(q)]) {
      ConstraintState& cs = cons_[static_cast<std::size_t>(ci)];
      cs.rem_lo -= lo_[static_cast<std::size_t>(q)];
      cs.rem_hi -= hi_[static_cast<std::size_t>(q)];
      if (cs.equality) {
        vlo = std::max(vlo, cs.target - cs.cur - cs.rem_hi);
        vhi = std::min(vhi, cs.target - cs.cur - cs.rem_lo);
      } else {
        vlo = std::max(vlo, -cs.cur - cs.rem_hi);
      }
    }
    for (int c = vlo; c <= vhi; ++c) {
      for (int ci : incidence_[static_cast<std::size_t>(q)]) {
        cons_[static_cast<std::size_t>(ci)].cur += c;
      }
      weights_.back()[static_cast<std::size_t>(q)] = c;
      assign(l, q + 1);
      for (int ci : incidence_[static_cast<std::size_t>(q)]) {
        cons_[static_cast<std::size_t>(ci)].cur -= c;
      }
    }
    for (int ci : incidence_[static_cast<std::size_t>(q)]) {
      ConstraintState& cs = cons_[static_cast<std::size_t>(ci)];
      cs.rem_lo += lo_[static_cast<std::size_t>(q)];
      cs.rem_hi += hi_[static_cast<std::size_t>(q)];
    }
  }

  void descend(int l) {
    // deeper levels rebuild cons_/incidence_/bounds, so stash this level's
    // engine state and restore it afterwards
    std::vector<ConstraintState> saved_cons = std::move(cons_);
    std::vector<std::vector<int>> saved_inc = std::move(incidence_);
    std::vector<int> saved_lo = std::move(lo_), saved_hi = std::move(hi_);
    solve_level(l + 1);
    cons_ = std::move(saved_cons);
    incidence_ = std::move(saved_inc);
    lo_ = std::move(saved_lo);
    hi_ = std::move(saved_hi);
  }

  void record_solution() {
    const std::vector<int>& leaves = weights_.back();
    const std::vector<std::vector<int>>& tuples =
        plan_.m == 0 ? plan_.level0 : plan_.levels.back().prefixes;
    Chain x(plan_.m, plan_.n);
    for (std::size_t q = 0; q < leaves.size(); ++q) {
      if (leaves[q] != 0) {
        x.add_term(Operator(tuples[q], plan_.n), leaves[q]);
      }
    }
    if (x.is_zero()) return;
    // independent full re-check; the search constraints are supposed to be
    // exactly (O1)+(O2), so a failure here is a bug
    ORI_CHECK(!check_membership(x).has_value(),
              "search produced a chain that fails the direct membership check");
    for (const auto& level : weights_) {
      for (int w : level) {
        if (w >= bound_ || w <= -bound_) boundary_hit_ = true;
      }
    }
    out_.push_back(std::move(x));
  }

  const SearchPlan& plan_;
  const std::vector<int>& v_;
  int bound_;
  std::vector<Chain>& out_;
  bool& boundary_hit_;

  std::vector<std::vector<int>> weights_;  // per level
  std::vector<ConstraintState> cons_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> lo_, hi_;
};

std::vector<std::vector<int>> vertex_tuples(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = cur.empty() ? 0 : cur.back(); v <= n; ++v) {
      cur.push_back(v);
      self(self, pos + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

EnumerationResult enumerate_O(int m, int n, int bound, int jobs) {
  ORI_REQUIRE(m >= 0 && n >= 0, "enumerate_O: dimensions must be >= 0");
  ORI_REQUIRE(bound >= 1, "enumerate_O: bound must be >= 1");
  SearchPlan plan = build_plan(m, n);
  std::vector<std::vector<int>> vs = vertex_tuples(m, n);

  EnumerationResult result;
  result.bound = bound;

  if (jobs <= 1 || vs.size() < 2) {
    for (const auto& v : vs) {
      VertexSearch s(plan, v, bound, result.members, result.boundary_hit);
      s.run();
    }
  } else {
    int workers = std::min<int>(jobs, static_cast<int>(vs.size()));
    std::vector<std::vector<Chain>> outs(static_cast<std::size_t>(workers));
    std::vector<char> flags(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) {
      threads.emplace_back([&, t]() {
        bool hit = false;
        for (std::size_t i = static_cast<std::size_t>(t); i < vs.size();
             i += static_cast<std::size_t>(workers)) {
          VertexSearch s(plan, vs[i], bound, outs[static_cast<std::size_t>(t)], hit);
          s.run();
        }
        flags[static_cast<std::size_t>(t)] = hit ? 1 : 0;
      });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < workers; ++t) {
      for (auto& x : outs[static_cast<std::size_t>(t)]) {
        result.members.push_back(std::move(x));
      }
      if (flags[static_cast<std::size_t>(t)]) result.boundary_hit = true;
    }
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

const std::vector<Chain>& Oracle::members(int m, int n) {
  auto key = std::make_pair(m, n);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second.members;
  int bound = initial_bound_;
  EnumerationResult r = enumerate_O(m, n, bound, jobs_);
  while (r.boundary_hit) {
    ++bound;
    r = enumerate_O(m, n, bound, jobs_);
  }
  return cache_.emplace(key, std::move(r)).first->second.members;
}

const std::vector<Chain>& Oracle::nondegenerate(int m, int n) {
  auto key = std::make_pair(m, n);
  auto it = nondeg_cache_.find(key);
  if (it != nondeg_cache_.end()) return it->second;
  std::vector<Chain> nd;
  for (const Chain& x : members(m, n)) {
    if (x.is_nondegenerate()) nd.push_back(x);
  }
  return nondeg_cache_.emplace(key, std::move(nd)).first->second;
}

int Oracle::bound_used(int m, int n) {
  members(m, n);
  return cache_.at(std::make_pair(m, n)).bound;
}

ClosureResult enumerate_by_closure(int n, int max_dim) {
  ORI_REQUIRE(n >= 0 && max_dim >= 0, "enumerate_by_closure: bad arguments");
  ClosureResult result;
  result.by_dim.resize(static_cast<std::size_t>(max_dim) + 1);

  std::deque<Chain> work;
  auto offer = [&](const Chain& x) {
    int m = x.source_dim();
    if (m > max_dim) return;
    auto& set = result.by_dim[static_cast<std::size_t>(m)];
    if (set.contains(x)) return;
    ORI_CHECK(!check_membership(x).has_value(),
              "closure produced a chain outside O(-,n): " + to_string(x));
    set.insert(x);
    work.push_back(x);
  };

  for (int m = 0; m <= max_dim; ++m) {
    for (const Operator& a : enumerate_operators(m, n, false)) {
      offer(Chain::single(a));
    }
  }
  if (n >= 1 && max_dim >= 1) {
    ClosureResult lower = enumerate_by_closure(n - 1, max_dim - 1);
    for (const auto& set : lower.by_dim) {
      for (const Chain& x : set) offer(cone_extend(x));
    }
  }

  while (!work.empty()) {
    Chain x = std::move(work.front());
    work.pop_front();
    const int m = x.source_dim();
    if (m >= 1) {
      for (int k = 0; k <= m; ++k) offer(face(x, k));
    }
    if (m + 1 <= max_dim) {
      for (int k = 0; k <= m; ++k) offer(degeneracy(x, k));
    }
    if (m >= 1) {
      // composable pairs within the current dimension-m set, x on either side
      const auto& set = result.by_dim[static_cast<std::size_t>(m)];
      std::vector<Chain> snapshot(set.begin(), set.end());
      for (int k = 1; k <= m; ++k) {
        Chain xl = face(x, k - 1);  // x as the left operand
        Chain xr = face(x, k);      // x as the right operand
        for (const Chain& y : snapshot) {
          if (face(y, k) == xl) {
            offer(paste(x, y, k));
            if (m + 1 <= max_dim) offer(fill(x, y, k));
          }
          if (face(y, k - 1) == xr) {
            offer(paste(y, x, k));
            if (m + 1 <= max_dim) offer(fill(y, x, k));
          }
        }
      }
    }
  }
  return result;
}

EnumReport run_enumeration(int m, int n, int bound, const std::string& strategy,
                           int jobs) {
  EnumReport report;
  report.n = n;
  report.m = m;
  report.bound = bound;
  report.strategy = strategy;
  std::vector<Chain> searched;
  if (strategy == "search" || strategy == "both") {
    EnumerationResult r = enumerate_O(m, n, bound, jobs);
    report.member_count = static_cast<long long>(r.members.size());
    report.boundary_hit = r.boundary_hit;
    auto counts = count_nondegenerate(r.members);
    report.nondegenerate_count = counts.contains(m) ? counts.at(m) : 0;
    searched = std::move(r.members);
  }
  if (strategy == "closure" || strategy == "both") {
    ClosureResult c = enumerate_by_closure(n, m);
    const auto& set = c.by_dim[static_cast<std::size_t>(m)];
    report.closure_count = static_cast<long long>(set.size());
    if (strategy == "both") {
      bool agree = set.size() == searched.size();
      if (agree) {
        for (const Chain& x : searched) {
          if (!set.contains(x)) {
            agree = false;
            break;
          }
        }
      } else {
        // closure must at least be contained in the search result
        for (const Chain& x : set) {
          if (!std::binary_search(searched.begin(), searched.end(), x)) {
            agree = false;
          }
        }
      }
      report.strategies_agree = agree;
    }
  }
  return report;
}

std::map<int, long long> count_nondegenerate(const std::vector<Chain>& members) {
  std::map<int, long long> out;
  for (const Chain& x : members) {
    out.try_emplace(x.source_dim(), 0);
    if (x.is_nondegenerate()) {
      ORI_CHECK(degeneracy_normalize(x).word.empty(),
                "nondegeneracy disagrees with the normal form");
      ++out[x.source_dim()];
    }
  }
  return out;
}

}  // namespace orientalis

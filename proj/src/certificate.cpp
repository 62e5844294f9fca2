#include "orientalis/certificate.hpp"

#include <algorithm>

#include "orientalis/diagnostics.hpp"
#include "orientalis/pasting.hpp"

namespace orientalis {

std::string to_string(RejectClause clause) {
  switch (clause) {
    case RejectClause::BadIndex: return "bad index";
    case RejectClause::NotMember: return "not a member";
    case RejectClause::AlreadyPresent: return "already present";
    case RejectClause::InteriorNotMarked: return "interior not marked";
    case RejectClause::RestrictionNotMarked: return "restriction not marked";
    case RejectClause::MissingFace: return "face not present";
    case RejectClause::FillFacePresent: return "filled face already present";
    case RejectClause::ThinnessRequired: return "thinness extension required";
    case RejectClause::ThinTargetMissing: return "thinness target not present";
    case RejectClause::ThinFaceNotMarked: return "thinness face not marked";
  }
  return "unknown";
}

ComplexState::ComplexState(int n, int max_dim) : n_(n), max_dim_(max_dim) {
  ORI_REQUIRE(n >= 0 && max_dim >= n, "ComplexState: need max_dim >= n >= 0");
  by_dim_.resize(static_cast<std::size_t>(max_dim) + 1);
  // faces of the generating simplex (0,...,n): all injective operators
  for (int m = 0; m <= std::min(n, max_dim); ++m) {
    for (const Operator& a : enumerate_operators(m, n, true)) {
      by_dim_[static_cast<std::size_t>(m)].insert(Chain::single(a));
    }
  }
}

bool ComplexState::contains(const Chain& x) const {
  ORI_REQUIRE(!x.is_zero(), "ComplexState::contains: zero chain");
  Chain core = degeneracy_normalize(x).core;
  int m = core.source_dim();
  if (m > max_dim_) return false;
  return by_dim_[static_cast<std::size_t>(m)].contains(core);
}

void ComplexState::insert_core(const Chain& x) {
  Chain core = degeneracy_normalize(x).core;
  int m = core.source_dim();
  ORI_CHECK(m <= max_dim_, "ComplexState::insert_core: dimension overflow");
  by_dim_[static_cast<std::size_t>(m)].insert(std::move(core));
}

const std::set<Chain>& ComplexState::at_dim(int m) const {
  ORI_REQUIRE(m >= 0 && m <= max_dim_, "ComplexState::at_dim: out of range");
  return by_dim_[static_cast<std::size_t>(m)];
}

bool restrictions_marked(const Chain& w, int k) {
  const int m = w.source_dim();
  for (int p = 2; p <= m; ++p) {
    for (const Operator& a : enumerate_operators(p, m, true)) {
      if (a.is_identity()) continue;
      auto img = a.image();
      bool covers = std::binary_search(img.begin(), img.end(), k - 1) &&
                    std::binary_search(img.begin(), img.end(), k) &&
                    std::binary_search(img.begin(), img.end(), k + 1);
      if (!covers) continue;
      if (!chain_is_marked(act(w, a))) return false;
    }
  }
  return true;
}

Replayer::Replayer(int n, int max_dim) : state_(n, max_dim) {}

std::optional<Rejection> Replayer::step(const CertStep& s) {
  const std::size_t index = index_++;
  auto reject = [&](RejectClause clause, std::string detail) {
    return Rejection{index, clause, std::move(detail)};
  };

  if (pending_thin_) {
    const CertStep& want = *pending_thin_;
    if (s.kind != StepKind::ThinExt || s.m != want.m || s.k != want.k ||
        s.w != want.w) {
      return reject(RejectClause::ThinnessRequired,
                    "a marked face was filled and must be thinned next: " +
                        to_string(want.w));
    }
    pending_thin_.reset();
  }

  if (s.m <= 1 || s.m > state_.max_dim() || s.k <= 0 || s.k >= s.m ||
      s.w.source_dim() != s.m || s.w.target_dim() != state_.n()) {
    return reject(RejectClause::BadIndex,
                  "need 0 < k < m <= max_dim and a matching chain");
  }

  if (s.kind == StepKind::ThinExt) {
    // a pure marking assertion: nothing is inserted, but the simplex and
    // all faces the extension marks must already be marked in O(-,n)
    if (!state_.contains(s.w)) {
      return reject(RejectClause::ThinTargetMissing, to_string(s.w));
    }
    for (int i : {s.k - 1, s.k, s.k + 1}) {
      if (!chain_is_marked(face(s.w, i))) {
        return reject(RejectClause::ThinFaceNotMarked,
                      "face " + std::to_string(i) + " of " + to_string(s.w));
      }
    }
    if (!chain_is_marked(s.w)) {
      return reject(RejectClause::InteriorNotMarked, to_string(s.w));
    }
    if (!restrictions_marked(s.w, s.k)) {
      return reject(RejectClause::RestrictionNotMarked, to_string(s.w));
    }
    return std::nullopt;
  }

  if (auto violation = check_membership(s.w)) {
    return reject(RejectClause::NotMember, violation->describe());
  }
  if (state_.contains(s.w)) {
    return reject(RejectClause::AlreadyPresent, to_string(s.w));
  }
  if (!chain_is_marked(s.w)) {
    return reject(RejectClause::InteriorNotMarked, to_string(s.w));
  }
  if (!restrictions_marked(s.w, s.k)) {
    return reject(RejectClause::RestrictionNotMarked, to_string(s.w));
  }
  for (int i = 0; i <= s.m; ++i) {
    if (i == s.k) continue;
    if (!state_.contains(face(s.w, i))) {
      return reject(RejectClause::MissingFace,
                    "face " + std::to_string(i) + " of " + to_string(s.w));
    }
  }
  Chain filled = face(s.w, s.k);
  if (state_.contains(filled)) {
    return reject(RejectClause::FillFacePresent, to_string(filled));
  }
  state_.insert_core(s.w);
  state_.insert_core(filled);
  if (chain_is_marked(filled)) {
    pending_thin_ = CertStep{StepKind::ThinExt, s.m, s.k, s.w};
  }
  return std::nullopt;
}

std::optional<Rejection> Replayer::finish() {
  if (pending_thin_) {
    return Rejection{index_, RejectClause::ThinnessRequired,
                     "certificate ended with a pending thinness extension"};
  }
  return std::nullopt;
}

std::optional<Rejection> replay_legality(const Certificate& cert) {
  Replayer r(cert.n, cert.max_dim);
  for (const CertStep& s : cert.steps) {
    if (auto rej = r.step(s)) return rej;
  }
  return r.finish();
}

ReplayReport replay(const Certificate& cert, Oracle& oracle) {
  ReplayReport report;
  Replayer r(cert.n, cert.max_dim);
  for (const CertStep& s : cert.steps) {
    if (auto rej = r.step(s)) {
      report.rejection = std::move(rej);
      return report;
    }
  }
  if (auto rej = r.finish()) {
    report.rejection = std::move(rej);
    return report;
  }
  report.legal = true;
  report.verified_through = cert.max_dim - 1;
  report.complete = true;
  for (int m = 0; m <= cert.max_dim; ++m) {
    report.state_counts.push_back(
        static_cast<long long>(r.state().at_dim(m).size()));
  }
  for (int m = 0; m <= cert.max_dim - 1; ++m) {
    const std::vector<Chain>& nd = oracle.nondegenerate(m, cert.n);
    report.oracle_counts.push_back(static_cast<long long>(nd.size()));
    const std::set<Chain>& got = r.state().at_dim(m);
    if (got.size() != nd.size() ||
        !std::equal(got.begin(), got.end(), nd.begin())) {
      report.complete = false;
    }
  }
  return report;
}

FillerVerdict unique_filler_test(const Chain& x, const Chain& y, int k,
                                 Oracle& oracle) {
  ORI_REQUIRE(x.source_dim() == y.source_dim() &&
                  x.target_dim() == y.target_dim(),
              "unique_filler_test: mismatched operands");
  ORI_REQUIRE(composable(x, y, k), "unique_filler_test: not composable");
  const int m = x.source_dim();
  const int n = x.target_dim();
  FillerVerdict verdict;
  for (const Chain& z : oracle.members(m + 1, n)) {
    if (face(z, k - 1) != y || face(z, k + 1) != x) continue;
    if (!chain_is_marked(z)) continue;
    if (!restrictions_marked(z, k)) continue;
    verdict.witnesses.push_back(z);
  }
  verdict.count = static_cast<long long>(verdict.witnesses.size());
  verdict.unique_and_matches =
      verdict.count == 1 && verdict.witnesses.front() == fill(x, y, k);
  return verdict;
}

}  // namespace orientalis

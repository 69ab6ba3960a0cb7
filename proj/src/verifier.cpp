#include "packdense/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace packdense {

namespace {

constexpr std::array<std::string_view, 24> kNames = {
    "C_DENSITY", "C_MAIN",  "C_DIFF_STRICT", "C_DIFF_WEAK", "C_DIFF_LOWER", "C_CRUDE",  "C_CONT",
    "C_BIMODAL", "C_NKUB",  "C_BASE",        "C_KFORL",     "C_NPKUB",      "C_KFB",    "C_TECH",
    "C_DD",      "C_BRUCE", "C_KN_L2",       "C_MARTIN",    "C_WINDOW",     "C_CONJ1",  "C_CONJ2",
    "C_GENLOW",  "C_CONJ4", "P_COUNTEREXAMPLE",
};

mpz_class to_mpz(Int128 v) { return mpz_class(to_string(v), 10); }

// Accumulates instance verdicts for one report.
class Builder {
 public:
  Builder(CheckId id, CheckCategory category, int ell, std::string param = "n") {
    report_.id = id;
    report_.category = category;
    report_.ell = ell;
    report_.param = std::move(param);
  }

  void range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return;
    report_.range_lo = lo;
    report_.range_hi = hi;
  }

  void pass() { ++report_.counts[static_cast<std::size_t>(Verdict::Pass)]; }

  void add(Verdict v, std::int64_t value, std::string detail, std::optional<std::string> observed = {},
           std::optional<std::string> relation = {}, std::optional<RationalInterval> bound = {}) {
    ++report_.counts[static_cast<std::size_t>(v)];
    if (v == Verdict::Pass) return;
    report_.witnesses.push_back(
        {report_.param, value, v, std::move(detail), std::move(observed), std::move(relation), std::move(bound)});
  }

  /// Exact integer predicate; `detail` describes the violated statement.
  void exact(bool holds, std::int64_t value, const std::string& detail) {
    if (holds) {
      pass();
    } else {
      add(Verdict::Fail, value, detail);
    }
  }

  void not_applicable(const std::string& why) {
    add(Verdict::NotApplicable, 0, why);
    report_.note = why;
  }

  void note(std::string text) { report_.note = std::move(text); }
  void threshold(std::optional<std::int64_t> t) { report_.threshold = t; }

  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
};

std::string describe(std::string_view label, BoundKind kind) {
  std::string s(label);
  s += " vs ";
  s += bound_kind_name(kind);
  return s;
}

Verdict to_verdict(Decision d) {
  switch (d) {
    case Decision::True: return Verdict::Pass;
    case Decision::False: return Verdict::Fail;
    case Decision::Undecidable: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

class Checker {
 public:
  Checker(const PackingTable& table, const ConstantLadder& ladder, const VerifyOptions& options)
      : t_(table), ladder_(ladder), opts_(options), ell_(table.ell()), nmax_(table.nmax()) {
    if (ladder.ell() != ell_) throw InvalidInput("ladder and table disagree on ell");
  }

  CheckReport run(CheckId id) {
    switch (id) {
      case CheckId::C_DENSITY: return density();
      case CheckId::C_MAIN: return main_bounds();
      case CheckId::C_DIFF_STRICT: return diff_strict();
      case CheckId::C_DIFF_WEAK: return diff_weak();
      case CheckId::C_DIFF_LOWER: return diff_lower();
      case CheckId::C_CRUDE: return crude();
      case CheckId::C_CONT: return continuity();
      case CheckId::C_BIMODAL: return bimodal();
      case CheckId::C_NKUB: return nk_upper();
      case CheckId::C_BASE: return base_cases();
      case CheckId::C_KFORL: return k_multiplicity();
      case CheckId::C_NPKUB: return last_n_upper();
      case CheckId::C_KFB: return k_first_bound();
      case CheckId::C_TECH: return technical();
      case CheckId::C_DD: return second_difference();
      case CheckId::C_BRUCE: return bruce();
      case CheckId::C_KN_L2: return kn_l2();
      case CheckId::C_MARTIN: return martin();
      case CheckId::C_WINDOW: return window();
      case CheckId::C_CONJ1: return conj1();
      case CheckId::C_CONJ2: return conj2();
      case CheckId::C_GENLOW: return general_lower();
      case CheckId::C_CONJ4: return conj4();
      case CheckId::P_COUNTEREXAMPLE: return probe();
    }
    throw std::logic_error("unknown check id");
  }

 private:
  [[nodiscard]] Int128 diff(int n) const { return t_.M(n) - t_.M(n - 1); }

  [[nodiscard]] BoundExpr expr(BoundKind kind, std::int64_t n, std::int64_t k = 0) const {
    return BoundExpr{kind, ell_, n, k, 0};
  }

  // Records `observed rel bound` as one instance and returns its verdict.
  Verdict bound(Builder& b, std::int64_t n, const std::string& label, Int128 observed, Relation rel,
                const BoundExpr& e) {
    const Comparison c = compare(to_rational(observed), rel, e, ladder_);
    const Verdict v = to_verdict(c.decision);
    std::string detail = describe(label, e.kind);
    if (v == Verdict::Inconclusive) detail += " (undecided at width 2^-" + std::to_string(c.bits) + ")";
    b.add(v, n, detail, to_string(observed), std::string(relation_symbol(rel)), c.bound);
    return v;
  }

  // Decision only, no recording (threshold scans record afterwards).
  Comparison decide(Int128 observed, Relation rel, const BoundExpr& e) const {
    return compare(to_rational(observed), rel, e, ladder_);
  }

  // "For n sufficiently large": the least n0 with the property on [n0, nmax],
  // violations below n0 are NOT_APPLICABLE, violations in the top quarter of
  // the range are FAIL.
  template <typename Eval>
  void threshold_scan(Builder& b, std::int64_t lo, std::int64_t hi, const std::string& label, BoundKind kind,
                      Relation rel, Eval&& eval) {
    if (lo > hi) return;
    std::vector<std::pair<Comparison, Int128>> results;
    results.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) results.push_back(eval(n));
    std::optional<std::int64_t> n0;
    for (std::int64_t n = hi; n >= lo; --n) {
      if (results[static_cast<std::size_t>(n - lo)].first.decision != Decision::True) break;
      n0 = n;
    }
    const std::int64_t len = hi - lo + 1;
    const std::int64_t top_quarter_start = hi - len / 4 + 1;
    for (std::int64_t n = lo; n <= hi; ++n) {
      const auto& [c, observed] = results[static_cast<std::size_t>(n - lo)];
      Verdict v = to_verdict(c.decision);
      std::string detail = describe(label, kind);
      if (v == Verdict::Fail) {
        if (n < top_quarter_start) {
          v = Verdict::NotApplicable;
          detail += " (below reported threshold)";
        }
      }
      b.add(v, n, detail, to_string(observed), std::string(relation_symbol(rel)), c.bound);
    }
    b.threshold(n0);
  }

  CheckReport density() {
    Builder b(CheckId::C_DENSITY, CheckCategory::Theorem, ell_);
    b.range(ell_ + 2, nmax_);
    for (int n = ell_ + 2; n <= nmax_; ++n) {
      // M_n / C(n, ell+1) <= M_{n-1} / C(n-1, ell+1)
      const mpz_class lhs = to_mpz(t_.M(n)) * to_mpz(binomial(n - 1, ell_ + 1));
      const mpz_class rhs = to_mpz(t_.M(n - 1)) * to_mpz(binomial(n, ell_ + 1));
      b.exact(lhs <= rhs, n, "M_n/C(n,ell+1) exceeds M_{n-1}/C(n-1,ell+1)");
    }
    return b.take();
  }

  CheckReport main_bounds() {
    Builder b(CheckId::C_MAIN, CheckCategory::Theorem, ell_);
    b.range(ell_, nmax_);
    for (int n = ell_; n <= nmax_; ++n) {
      bound(b, n, "M_n lower", t_.M(n), Relation::GreaterEq, expr(BoundKind::MainLower, n));
      bound(b, n, "M_n upper", t_.M(n), Relation::LessEq, expr(BoundKind::MainUpper, n));
    }
    return b.take();
  }

  CheckReport diff_strict() {
    const bool forced = ell_ == 2;
    Builder b(CheckId::C_DIFF_STRICT, forced ? CheckCategory::Forced : CheckCategory::Theorem, ell_);
    if (forced && !opts_.force_strict_diff) {
      b.not_applicable("hypothesis ell >= 3 excludes ell = 2 (use --force-strict-diff to apply it anyway)");
      return b.take();
    }
    if (forced) b.note("forced onto ell = 2 outside its hypotheses; failures are expected");
    b.range(1, nmax_);
    for (int n = 1; n <= nmax_; ++n) {
      bound(b, n, "M_n - M_{n-1}", diff(n), Relation::LessEq, expr(BoundKind::DiffUpperStrict, n));
    }
    return b.take();
  }

  CheckReport diff_weak() {
    Builder b(CheckId::C_DIFF_WEAK, CheckCategory::Theorem, ell_);
    if (ell_ != 2) {
      b.not_applicable("stated for ell = 2 only");
      return b.take();
    }
    b.range(ell_, nmax_);
    for (int n = ell_; n <= nmax_; ++n) {
      bound(b, n, "M_n - M_{n-1}", diff(n), Relation::LessEq, expr(BoundKind::DiffUpperWeak, n));
    }
    return b.take();
  }

  CheckReport diff_lower() {
    Builder b(CheckId::C_DIFF_LOWER, CheckCategory::Theorem, ell_);
    b.range(ell_, nmax_);
    for (int n = ell_; n <= nmax_; ++n) {
      bound(b, n, "M_n - M_{n-1}", diff(n), Relation::GreaterEq, expr(BoundKind::DiffLower, n));
    }
    return b.take();
  }

  CheckReport crude() {
    Builder b(CheckId::C_CRUDE, CheckCategory::Theorem, ell_);
    b.range(ell_ + 1, nmax_);
    for (int n = ell_ + 1; n <= nmax_; ++n) {
      bound(b, n, "k_n lower", t_.K(n), Relation::GreaterEq, expr(BoundKind::CrudeLower, n));
      bound(b, n, "k_n upper", t_.K(n), Relation::Less, expr(BoundKind::CrudeUpper, n));
    }
    return b.take();
  }

  CheckReport continuity() {
    Builder b(CheckId::C_CONT, CheckCategory::Theorem, ell_);
    b.range(ell_ + 2, nmax_);
    for (int n = ell_ + 2; n <= nmax_; ++n) {
      const int prev = t_.K(n - 1);
      const int cur = t_.K(n);
      b.exact(prev <= cur && cur <= prev + 1, n,
              "k_{n-1}=" + std::to_string(prev) + ", k_n=" + std::to_string(cur));
    }
    return b.take();
  }

  CheckReport bimodal() {
    Builder b(CheckId::C_BIMODAL, CheckCategory::Theorem, ell_);
    b.range(ell_ + 1, nmax_);
    for (int n = ell_ + 1; n <= nmax_; ++n) {
      const CSeq seq = c_sequence(t_, n);
      const BimodalShape s = bimodal_shape(seq);
      b.exact(s.well_formed && s.k_turn == t_.K(n), n,
              "k_turn=" + std::to_string(s.k_turn) + " (k_n=" + std::to_string(t_.K(n)) +
                  "), j_turn=" + std::to_string(s.j_turn) + ", well_formed=" + (s.well_formed ? "true" : "false"));
    }
    return b.take();
  }

  [[nodiscard]] int k_top() const { return t_.has_k(nmax_) ? t_.K(nmax_) : 0; }

  CheckReport nk_upper() {
    Builder b(CheckId::C_NKUB, CheckCategory::Theorem, ell_, "k");
    b.range(2, k_top());
    for (int k = 2; k <= k_top(); ++k) {
      const auto nk = first_n_with_k(t_, k);
      if (!nk) {
        b.add(Verdict::Inconclusive, k, "k not attained inside the table");
        continue;
      }
      b.exact(*nk <= (ell_ + 1) * k - 1, k, "n_k=" + std::to_string(*nk));
    }
    return b.take();
  }

  CheckReport base_cases() {
    Builder b(CheckId::C_BASE, CheckCategory::Theorem, ell_, "k");
    const int hi = std::min(ell_ + 1, k_top());
    b.range(1, hi);
    for (int k = 1; k <= hi; ++k) {
      const auto nk = first_n_with_k(t_, k);
      const int expected = k == 1 ? ell_ + 1 : (ell_ + 1) * k - 1;
      if (!nk) {
        b.add(Verdict::Inconclusive, k, "k not attained inside the table");
        continue;
      }
      b.exact(*nk == expected, k, "n_k=" + std::to_string(*nk) + ", expected " + std::to_string(expected));
    }
    if (hi < ell_ + 1) b.note("k > " + std::to_string(hi) + " not reached within nmax");
    return b.take();
  }

  // number of n with k_n = k, for every k below the right-censored top value
  [[nodiscard]] std::map<int, int> k_multiplicities() const {
    std::map<int, int> out;
    for (int n = ell_ + 1; n <= nmax_; ++n) ++out[t_.K(n)];
    return out;
  }

  CheckReport k_multiplicity() {
    Builder b(CheckId::C_KFORL, CheckCategory::Theorem, ell_, "k");
    b.range(1, k_top() - 1);
    const auto mult = k_multiplicities();
    for (int k = 1; k < k_top(); ++k) {
      const auto it = mult.find(k);
      const int c = it == mult.end() ? 0 : it->second;
      b.exact(c == ell_ || c == ell_ + 1, k, "k occurs " + std::to_string(c) + " times");
    }
    b.note("k = k_nmax is right-censored and skipped");
    return b.take();
  }

  CheckReport last_n_upper() {
    Builder b(CheckId::C_NPKUB, CheckCategory::Theorem, ell_, "k");
    b.range(1, k_top() - 1);
    for (int k = 1; k < k_top(); ++k) {
      const auto last = last_n_with_k(t_, k);
      if (!last) {
        b.add(Verdict::Inconclusive, k, "n'_k unavailable");
        continue;
      }
      b.exact(*last <= (ell_ + 1) * k + ell_ - 1, k, "n'_k=" + std::to_string(*last));
    }
    b.note("k = k_nmax is right-censored and skipped");
    return b.take();
  }

  CheckReport k_first_bound() {
    Builder b(CheckId::C_KFB, CheckCategory::Theorem, ell_);
    const int lo = (ell_ + 1) * ell_;
    b.range(lo, nmax_);
    for (int n = lo; n <= nmax_; ++n) {
      b.exact(static_cast<std::int64_t>(ell_) * t_.K(n) <= n - ell_, n, "k_n=" + std::to_string(t_.K(n)));
    }
    return b.take();
  }

  CheckReport technical() {
    Builder b(CheckId::C_TECH, CheckCategory::Theorem, ell_);
    const int lo = (ell_ + 1) * ell_;
    b.range(lo, nmax_);
    for (int n = lo; n <= nmax_; ++n) {
      // (right side - left side) <= 0 with k = k_n
      bound(b, n, "0 >= rhs - lhs", 0, Relation::GreaterEq, expr(BoundKind::Technical, n, t_.K(n)));
    }
    return b.take();
  }

  CheckReport second_difference() {
    Builder b(CheckId::C_DD, CheckCategory::Theorem, ell_);
    b.range(0, nmax_ - 2);
    for (int n = 0; n + 2 <= nmax_; ++n) {
      const Int128 dd = (t_.M(n + 2) - t_.M(n + 1)) - (t_.M(n + 1) - t_.M(n));
      b.exact(dd >= 0 && dd <= binomial(n, ell_ - 1), n, "second difference " + to_string(dd));
    }
    return b.take();
  }

  CheckReport bruce() {
    Builder b(CheckId::C_BRUCE, CheckCategory::Theorem, ell_);
    if (ell_ < 3) {
      b.not_applicable("hypothesis ell >= 3 excludes ell = 2");
      return b.take();
    }
    b.range(ell_ + 1, nmax_);
    for (int n = ell_ + 1; n <= nmax_; ++n) {
      bound(b, n, "k_n", t_.K(n), Relation::LessEq, expr(BoundKind::KnUpperBruce, n));
    }
    return b.take();
  }

  CheckReport kn_l2() {
    Builder b(CheckId::C_KN_L2, CheckCategory::Theorem, ell_);
    if (ell_ != 2) {
      b.not_applicable("stated for ell = 2 only");
      return b.take();
    }
    b.range(3, nmax_);
    for (int n = 3; n <= nmax_; ++n) bound(b, n, "k_n", t_.K(n), Relation::LessEq, expr(BoundKind::KnUpperL2, n));
    return b.take();
  }

  CheckReport martin() {
    Builder b(CheckId::C_MARTIN, CheckCategory::Theorem, ell_);
    b.range(ell_ + 1, nmax_);
    b.note("holds for n sufficiently large; threshold reported");
    threshold_scan(b, ell_ + 1, nmax_, "k_n", BoundKind::KnLowerMartin, Relation::GreaterEq, [&](std::int64_t n) {
      const Int128 k = t_.K(static_cast<int>(n));
      return std::make_pair(decide(k, Relation::GreaterEq, expr(BoundKind::KnLowerMartin, n)), k);
    });
    return b.take();
  }

  CheckReport window() {
    Builder b(CheckId::C_WINDOW, CheckCategory::Theorem, ell_);
    b.range(ell_ + 1, nmax_);
    if (ell_ >= 3) {
      for (int n = ell_ + 1; n <= nmax_; ++n) {
        bound(b, n, "k_n (upper window)", t_.K(n), Relation::Less, expr(BoundKind::WindowUpper, n));
      }
      b.note("upper window per n; lower window holds for n sufficiently large, threshold reported");
    } else {
      b.add(Verdict::NotApplicable, 0, "upper window stated for ell >= 3");
      b.note("upper window not applicable for ell = 2; lower window threshold reported");
    }
    threshold_scan(b, ell_ + 1, nmax_, "k_n (lower window)", BoundKind::WindowLower, Relation::Greater, [&](std::int64_t n) {
      const Int128 k = t_.K(static_cast<int>(n));
      return std::make_pair(decide(k, Relation::Greater, expr(BoundKind::WindowLower, n)), k);
    });
    return b.take();
  }

  CheckReport conj1() {
    Builder b(CheckId::C_CONJ1, CheckCategory::Conjecture, ell_);
    if (ell_ != 2) {
      b.not_applicable("conjectured for ell = 2 only");
      return b.take();
    }
    b.range(3, nmax_);
    for (int n = 3; n <= nmax_; ++n) {
      bound(b, n, "M_n", t_.M(n), Relation::LessEq, expr(BoundKind::Conj1M, n));
      bound(b, n, "k_n", t_.K(n), Relation::LessEq, expr(BoundKind::Conj1K, n));
    }
    return b.take();
  }

  CheckReport conj2() {
    Builder b(CheckId::C_CONJ2, CheckCategory::Conjecture, ell_);
    b.range(ell_ + 1, nmax_);
    std::optional<std::int64_t> n0;
    std::vector<Verdict> verdicts;
    for (int n = ell_ + 1; n <= nmax_; ++n) {
      verdicts.push_back(bound(b, n, "k_n", t_.K(n), Relation::GreaterEq, expr(BoundKind::Conj2K, n)));
    }
    for (int n = nmax_; n >= ell_ + 1; --n) {
      if (verdicts[static_cast<std::size_t>(n - ell_ - 1)] != Verdict::Pass) break;
      n0 = n;
    }
    b.threshold(n0);
    return b.take();
  }

  CheckReport general_lower() {
    Builder b(CheckId::C_GENLOW, CheckCategory::Theorem, ell_);
    const int L = ell_ + 1;
    b.range(L, nmax_);
    for (int n = L; n <= nmax_; ++n) {
      bound(b, n, "M_n", t_.M(n), Relation::GreaterEq, BoundExpr{BoundKind::GeneralLower, ell_, n, 0, L});
    }
    return b.take();
  }

  CheckReport conj4() {
    Builder b(CheckId::C_CONJ4, CheckCategory::Conjecture, ell_);
    const int L = ell_ + 1;
    b.range(L, nmax_);
    for (int n = L; n <= nmax_; ++n) {
      bound(b, n, "M_n", t_.M(n), Relation::LessEq, BoundExpr{BoundKind::Conj4, ell_, n, 0, L});
    }
    return b.take();
  }

  CheckReport probe() {
    Builder b(CheckId::P_COUNTEREXAMPLE, CheckCategory::Probe, ell_);
    if (ell_ != 2) {
      b.not_applicable("counterexample concerns ell = 2 only");
      return b.take();
    }
    constexpr int kExpected = 17;
    if (nmax_ < kExpected) {
      b.add(Verdict::Inconclusive, nmax_, "nmax < 17: range too short to reach the counterexample");
      return b.take();
    }
    b.range(1, nmax_);
    std::vector<int> violations;
    Comparison at_expected;
    for (int n = 1; n <= nmax_; ++n) {
      const Comparison c = decide(diff(n), Relation::LessEq, expr(BoundKind::DiffUpperStrict, n));
      if (c.decision == Decision::Undecidable) {
        b.add(Verdict::Inconclusive, n, "strict difference bound undecided");
        return b.take();
      }
      if (c.decision == Decision::False) violations.push_back(n);
      if (n == kExpected) at_expected = c;
    }
    std::string listed;
    for (int n : violations) {
      if (n >= kExpected) break;
      listed += (listed.empty() ? "" : ",") + std::to_string(n);
    }
    const bool ok = diff(kExpected) == 60 && at_expected.decision == Decision::False;
    std::string detail = "M_17 - M_16 = " + to_string(diff(kExpected)) + " vs beta 16^2/2";
    if (!listed.empty()) detail += "; the forced bound also fails at n=" + listed;
    if (ok) {
      b.pass();
      b.note(detail);
    } else {
      b.add(Verdict::Fail, kExpected, detail, to_string(diff(kExpected)), "<=", at_expected.bound);
    }
    return b.take();
  }

  const PackingTable& t_;
  const ConstantLadder& ladder_;
  VerifyOptions opts_;
  int ell_;
  int nmax_;
};

std::vector<CheckId> sorted_unique(std::vector<CheckId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

CheckReport guarded_run(const PackingTable& table, const ConstantLadder& ladder, CheckId id,
                        const VerifyOptions& options) {
  try {
    return run_check(table, ladder, id, options);
  } catch (const std::exception& e) {
    Builder b(id, CheckCategory::Theorem, table.ell());
    b.add(Verdict::Inconclusive, 0, std::string("evaluation error: ") + e.what());
    return b.take();
  }
}

}  // namespace

std::string_view check_name(CheckId id) { return kNames[static_cast<std::size_t>(id)]; }

CheckId parse_check_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<CheckId>(i);
  }
  throw InvalidInput("unknown check id '" + std::string(name) + "'");
}

std::vector<CheckId> parse_check_list(std::string_view list) {
  std::vector<CheckId> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const auto token = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token == "all") {
      out.insert(out.end(), kRegistry.begin(), kRegistry.end());
    } else if (!token.empty()) {
      out.push_back(parse_check_id(token));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return sorted_unique(std::move(out));
}

std::string_view category_name(CheckCategory c) {
  switch (c) {
    case CheckCategory::Theorem: return "THEOREM";
    case CheckCategory::Conjecture: return "CONJECTURE";
    case CheckCategory::Forced: return "FORCED";
    case CheckCategory::Probe: return "PROBE";
  }
  return "?";
}

Verdict CheckReport::overall() const {
  if (count(Verdict::Fail) > 0) return Verdict::Fail;
  if (count(Verdict::Inconclusive) > 0) return Verdict::Inconclusive;
  if (count(Verdict::Pass) > 0) return Verdict::Pass;
  if (count(Verdict::NotApplicable) > 0) return Verdict::NotApplicable;
  return Verdict::Pass;  // vacuous: empty range
}

CheckReport run_check(const PackingTable& table, const ConstantLadder& ladder, CheckId id,
                      const VerifyOptions& options) {
  Checker checker(table, ladder, options);
  return checker.run(id);
}

std::vector<CheckReport> run_checks(const PackingTable& table, const std::vector<CheckId>& selection,
                                    const VerifyOptions& options) {
  const auto ids = sorted_unique(selection);
  if (ids.empty()) return {};
  const ConstantLadder ladder(table.ell());
  std::vector<CheckReport> reports(ids.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = guarded_run(table, ladder, ids[i], options);
  return reports;
}

std::vector<CheckReport> run_checks_serial(const PackingTable& table, const std::vector<CheckId>& selection,
                                           const VerifyOptions& options) {
  const auto ids = sorted_unique(selection);
  if (ids.empty()) return {};
  const ConstantLadder ladder(table.ell());
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (CheckId id : ids) reports.push_back(guarded_run(table, ladder, id, options));
  return reports;
}

CheckReport counterexample_probe(const PackingTable& table, const ConstantLadder& ladder) {
  return run_check(table, ladder, CheckId::P_COUNTEREXAMPLE);
}

CheckReport counterexample_probe(const PackingTable& table) {
  const ConstantLadder ladder(table.ell());
  return counterexample_probe(table, ladder);
}

int exit_code(const std::vector<CheckReport>& reports, bool strict_conjectures) {
  bool fail = false;
  bool inconclusive = false;
  for (const auto& r : reports) {
    const bool counts = r.category == CheckCategory::Theorem || r.category == CheckCategory::Probe ||
                        (strict_conjectures && r.category == CheckCategory::Conjecture);
    if (!counts) continue;
    fail = fail || r.count(Verdict::Fail) > 0;
    inconclusive = inconclusive || r.count(Verdict::Inconclusive) > 0;
  }
  if (fail) return 1;
  if (inconclusive) return 3;
  return 0;
}

}  // namespace packdense

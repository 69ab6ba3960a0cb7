#ifndef PACKDENSE_VERIFIER_HPP
#define PACKDENSE_VERIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packdense/analytic.hpp"
#include "packdense/packing_table.hpp"
#include "packdense/verdict.hpp"

namespace packdense {

/// Registry order is also the report order.
enum class CheckId {
  C_DENSITY,
  C_MAIN,
  C_DIFF_STRICT,
  C_DIFF_WEAK,
  C_DIFF_LOWER,
  C_CRUDE,
  C_CONT,
  C_BIMODAL,
  C_NKUB,
  C_BASE,
  C_KFORL,
  C_NPKUB,
  C_KFB,
  C_TECH,
  C_DD,
  C_BRUCE,
  C_KN_L2,
  C_MARTIN,
  C_WINDOW,
  C_CONJ1,
  C_CONJ2,
  C_GENLOW,
  C_CONJ4,
  P_COUNTEREXAMPLE,
};

inline constexpr std::array kRegistry = {
    CheckId::C_DENSITY, CheckId::C_MAIN,  CheckId::C_DIFF_STRICT, CheckId::C_DIFF_WEAK, CheckId::C_DIFF_LOWER,
    CheckId::C_CRUDE,   CheckId::C_CONT,  CheckId::C_BIMODAL,     CheckId::C_NKUB,      CheckId::C_BASE,
    CheckId::C_KFORL,   CheckId::C_NPKUB, CheckId::C_KFB,         CheckId::C_TECH,      CheckId::C_DD,
    CheckId::C_BRUCE,   CheckId::C_KN_L2, CheckId::C_MARTIN,      CheckId::C_WINDOW,    CheckId::C_CONJ1,
    CheckId::C_CONJ2,   CheckId::C_GENLOW, CheckId::C_CONJ4,
};

std::string_view check_name(CheckId id);
/// Throws InvalidInput for an unknown name.
CheckId parse_check_id(std::string_view name);
/// Comma-separated list of names; "all" selects the registry.
std::vector<CheckId> parse_check_list(std::string_view list);

enum class CheckCategory {
  Theorem,     // a proved statement; FAIL breaks the exit code
  Conjecture,  // FAIL is a discovery; ignored by the exit code unless strict
  Forced,      // theorem applied outside its hypotheses on request; never affects the exit code
  Probe,       // expected-outcome probe; its own FAIL does affect the exit code
};

std::string_view category_name(CheckCategory c);

struct Witness {
  std::string param;  // "n" or "k"
  std::int64_t value = 0;
  Verdict verdict = Verdict::Fail;
  std::string detail;
  std::optional<std::string> observed;         // exact integer that was compared
  std::optional<std::string> relation;         // observed <rel> bound
  std::optional<RationalInterval> bound;       // interval that produced the verdict
};

struct CheckReport {
  CheckId id = CheckId::C_DENSITY;
  CheckCategory category = CheckCategory::Theorem;
  int ell = 2;
  std::string param = "n";
  std::optional<std::int64_t> range_lo;
  std::optional<std::int64_t> range_hi;
  std::array<std::int64_t, 4> counts{};  // indexed by Verdict
  std::vector<Witness> witnesses;        // one per non-PASS instance
  std::optional<std::int64_t> threshold;  // least n0 with the property on [n0, nmax]
  std::string note;

  [[nodiscard]] std::int64_t count(Verdict v) const { return counts[static_cast<std::size_t>(v)]; }
  [[nodiscard]] Verdict overall() const;
};

struct VerifyOptions {
  bool force_strict_diff = false;  // apply C_DIFF_STRICT to ell = 2 as a forced check
};

/// One report per selected check, in registry order, evaluated in parallel.
std::vector<CheckReport> run_checks(const PackingTable& table, const std::vector<CheckId>& selection,
                                    const VerifyOptions& options = {});

/// Single-threaded reference with identical output.
std::vector<CheckReport> run_checks_serial(const PackingTable& table, const std::vector<CheckId>& selection,
                                           const VerifyOptions& options = {});

/// Single check against a prebuilt ladder (ladder.ell() must match).
CheckReport run_check(const PackingTable& table, const ConstantLadder& ladder, CheckId id,
                      const VerifyOptions& options = {});

/// For ell = 2: PASS iff the strict difference bound, forced onto ell = 2,
/// fails at n = 17 with M_17 - M_16 = 60; earlier violations are listed in
/// the note. NOT_APPLICABLE for ell != 2,
/// INCONCLUSIVE when nmax < 17.
CheckReport counterexample_probe(const PackingTable& table);
CheckReport counterexample_probe(const PackingTable& table, const ConstantLadder& ladder);

/// 0: no FAIL among exit-relevant reports; 1: some FAIL; 3: INCONCLUSIVE only.
int exit_code(const std::vector<CheckReport>& reports, bool strict_conjectures = false);

std::string format_reports_human(const std::vector<CheckReport>& reports);
std::string format_reports_csv(const std::vector<CheckReport>& reports);
std::string format_reports_json(const std::vector<CheckReport>& reports);

}  // namespace packdense

#endif  // PACKDENSE_VERIFIER_HPP

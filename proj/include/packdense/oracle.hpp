#ifndef PACKDENSE_ORACLE_HPP
#define PACKDENSE_ORACLE_HPP

// Brute-force ground truth, independent of the packing-table recurrence.
//
// The default entry points split their sweeps into disjoint chunks run under
// OpenMP and merged in chunk order, so results match the sequential sweeps in
// namespace serial exactly (including which witness is reported).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packdense/checked_int.hpp"
#include "packdense/patterns.hpp"
#include "packdense/verdict.hpp"

namespace packdense {

inline constexpr int kPermutationSweepCap = 10;
inline constexpr int kCompositionSweepCap = 30;
inline constexpr int kSuffixMaxCap = 60;

class OracleCapExceeded : public std::length_error {
 public:
  explicit OracleCapExceeded(const std::string& what) : std::length_error(what) {}
};

struct OracleResult {
  int n = 0;
  Permutation q;
  Int128 max_count = 0;
  Permutation witness;  // lexicographically least maximizer
  bool layered_witness_exists = false;
};

/// max of c_q(p) over all of S_n.
OracleResult brute_force_Mnq(int n, const Permutation& q, int cap = kPermutationSweepCap);

/// Max of count_qell_in_layered over all 2^(n-1) compositions of n, one
/// ascent/no-ascent decision between each pair of neighbouring positions.
Int128 brute_force_layered(int n, int ell, int cap = kCompositionSweepCap);

/// Same maximum through memoized suffix maxima: best(s) is the most copies
/// the layers after a prefix of size s can add, best(s) = max_b s*C(b,ell) + best(s+b).
Int128 layered_suffix_max(int n, int ell, int cap = kSuffixMaxCap);

struct MonotonicityProbe {
  Verdict verdict = Verdict::Pass;
  int first_n = 0;              // |q|
  std::vector<Int128> maxima;   // M_{n,q} for n = first_n, first_n + 1, ...
  std::optional<int> violation; // first n with density above that of n-1
};

/// Checks M_{n,q} / C(n,|q|) weakly decreasing for |q| <= n <= nmax.
MonotonicityProbe density_monotonicity_probe(const Permutation& q, int nmax);

namespace serial {

OracleResult brute_force_Mnq(int n, const Permutation& q, int cap = kPermutationSweepCap);

/// Literal loop over ascent masks 0 .. 2^(n-1)-1, O(n) work per mask.
Int128 brute_force_layered(int n, int ell, int cap = kCompositionSweepCap);

}  // namespace serial

/// Whether some layered n-permutation has exactly `target` copies of q.
bool layered_attains(int n, const Permutation& q, Int128 target);

}  // namespace packdense

#endif  // PACKDENSE_ORACLE_HPP

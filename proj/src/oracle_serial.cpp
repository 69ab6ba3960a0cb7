#include <algorithm>
#include <numeric>

#include "packdense/oracle.hpp"

namespace packdense {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw InvalidInput(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw OracleCapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap));
  }
}

}  // namespace

bool layered_attains(int n, const Permutation& q, Int128 target) {
  const PatternCounter counter(q);
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  std::vector<int> ranks(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    // bit i set: ascent between positions i and i+1, i.e. a new layer starts
    int start = 0;
    for (int i = 0; i < n; ++i) {
      const bool closes = i == n - 1 || ((mask >> i) & 1U) != 0;
      if (closes) {
        for (int t = start; t <= i; ++t) ranks[static_cast<std::size_t>(t)] = i + 1 - (t - start);
        start = i + 1;
      }
    }
    if (counter.count(ranks) == target) return true;
  }
  return false;
}

MonotonicityProbe density_monotonicity_probe(const Permutation& q, int nmax) {
  const int k = q.size();
  if (k < 1) throw InvalidInput("pattern must be nonempty");
  if (nmax > 9) throw OracleCapExceeded("density_monotonicity_probe: nmax is limited to 9");
  if (nmax < k) throw InvalidInput("density_monotonicity_probe: nmax must be at least |q|");
  MonotonicityProbe probe;
  probe.first_n = k;
  for (int n = k; n <= nmax; ++n) probe.maxima.push_back(brute_force_Mnq(n, q).max_count);
  for (int n = k + 1; n <= nmax; ++n) {
    const Int128 cur = probe.maxima[static_cast<std::size_t>(n - k)];
    const Int128 prev = probe.maxima[static_cast<std::size_t>(n - k - 1)];
    // cur / C(n,k) <= prev / C(n-1,k)
    if (checked_mul(cur, binomial(n - 1, k)) > checked_mul(prev, binomial(n, k))) {
      probe.verdict = Verdict::Fail;
      probe.violation = n;
      break;
    }
  }
  return probe;
}

Int128 layered_suffix_max(int n, int ell, int cap) {
  check_cap(n, cap, "layered_suffix_max");
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  std::vector<Int128> best(static_cast<std::size_t>(n) + 1, 0);
  for (int s = n - 1; s >= 0; --s) {
    Int128 top = -1;
    for (int b = 1; s + b <= n; ++b) {
      const Int128 v = checked_add(checked_mul(s, binomial(b, ell)), best[static_cast<std::size_t>(s + b)]);
      top = std::max(top, v);
    }
    best[static_cast<std::size_t>(s)] = top;
  }
  return best[0];
}

namespace serial {

OracleResult brute_force_Mnq(int n, const Permutation& q, int cap) {
  check_cap(n, cap, "brute_force_Mnq");
  const PatternCounter counter(q);
  std::vector<int> ranks(static_cast<std::size_t>(n));
  std::iota(ranks.begin(), ranks.end(), 1);
  Int128 best = -1;
  std::vector<int> witness;
  do {
    const Int128 c = counter.count(ranks);
    if (c > best) {
      best = c;
      witness = ranks;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  OracleResult r;
  r.n = n;
  r.q = q;
  r.max_count = best;
  r.witness = Permutation(std::move(witness));
  r.layered_witness_exists = layered_attains(n, q, best);
  return r;
}

Int128 brute_force_layered(int n, int ell, int cap) {
  check_cap(n, cap, "brute_force_layered");
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  Int128 best = -1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Int128 copies = 0;
    int prefix = 0;
    int len = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (((mask >> i) & 1U) != 0) {
        copies += static_cast<Int128>(prefix) * binomial(len, ell);
        prefix += len;
        len = 1;
      } else {
        ++len;
      }
    }
    copies += static_cast<Int128>(prefix) * binomial(len, ell);
    best = std::max(best, copies);
  }
  return best;
}

}  // namespace serial

}  // namespace packdense

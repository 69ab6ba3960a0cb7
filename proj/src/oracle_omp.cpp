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

// All injective prefixes of length d over 1..n, in lexicographic order.
std::vector<std::vector<int>> sweep_prefixes(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

struct ChunkBest {
  Int128 count = -1;
  std::vector<int> witness;
};

class CompositionSweep {
 public:
  CompositionSweep(int n, int ell) : n_(n), layer_copies_(static_cast<std::size_t>(n) + 1) {
    for (int m = 0; m <= n; ++m) layer_copies_[static_cast<std::size_t>(m)] = binomial(m, ell);
  }

  // `placed` elements are assigned; the open layer has length `len` and sits
  // above `prefix` elements in closed layers. Sums stay below C(n, ell+1).
  [[nodiscard]] Int128 best(int placed, int prefix, int len, Int128 acc) const {
    if (placed == n_) return acc + static_cast<Int128>(prefix) * layer_copies_[static_cast<std::size_t>(len)];
    const Int128 extend = best(placed + 1, prefix, len + 1, acc);
    const Int128 close = best(placed + 1, prefix + len, 1,
                              acc + static_cast<Int128>(prefix) * layer_copies_[static_cast<std::size_t>(len)]);
    return std::max(extend, close);
  }

  // Fix the first `bits` ascent decisions from `mask`, then search the rest.
  [[nodiscard]] Int128 best_with_prefix(std::uint64_t mask, int bits) const {
    int prefix = 0;
    int len = 1;
    Int128 acc = 0;
    for (int i = 0; i < bits; ++i) {
      if (((mask >> i) & 1U) != 0) {
        acc += static_cast<Int128>(prefix) * layer_copies_[static_cast<std::size_t>(len)];
        prefix += len;
        len = 1;
      } else {
        ++len;
      }
    }
    return best(bits + 1, prefix, len, acc);
  }

 private:
  int n_;
  std::vector<Int128> layer_copies_;
};

}  // namespace

OracleResult brute_force_Mnq(int n, const Permutation& q, int cap) {
  check_cap(n, cap, "brute_force_Mnq");
  const PatternCounter counter(q);
  const auto prefixes = sweep_prefixes(n, std::min(n, 2));
  std::vector<ChunkBest> chunks(prefixes.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < prefixes.size(); ++c) {
    std::vector<int> ranks = prefixes[c];
    const auto head = static_cast<std::ptrdiff_t>(ranks.size());
    for (int v = 1; v <= n; ++v) {
      if (std::find(prefixes[c].begin(), prefixes[c].end(), v) == prefixes[c].end()) ranks.push_back(v);
    }
    ChunkBest local;
    do {
      const Int128 count = counter.count(ranks);
      if (count > local.count) {
        local.count = count;
        local.witness = ranks;
      }
    } while (std::next_permutation(ranks.begin() + head, ranks.end()));
    chunks[c] = std::move(local);
  }

  // chunks are in lexicographic order, so the first strict improvement wins ties
  ChunkBest best;
  for (auto& c : chunks) {
    if (c.count > best.count) best = std::move(c);
  }
  OracleResult r;
  r.n = n;
  r.q = q;
  r.max_count = best.count;
  r.witness = Permutation(std::move(best.witness));
  r.layered_witness_exists = layered_attains(n, q, best.count);
  return r;
}

Int128 brute_force_layered(int n, int ell, int cap) {
  check_cap(n, cap, "brute_force_layered");
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  const int bits = std::min(n - 1, 12);
  const std::int64_t tasks = std::int64_t{1} << bits;
  const CompositionSweep sweep(n, ell);
  std::vector<Int128> task_best(static_cast<std::size_t>(tasks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < tasks; ++t) {
    task_best[static_cast<std::size_t>(t)] = sweep.best_with_prefix(static_cast<std::uint64_t>(t), bits);
  }
  return *std::max_element(task_best.begin(), task_best.end());
}

}  // namespace packdense

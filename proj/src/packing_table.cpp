#include "packdense/packing_table.hpp"

#include <climits>

namespace packdense {

namespace {

constexpr Int128 kGuardLimit = static_cast<Int128>(1) << 120;

bool guard_ok(std::int64_t n, int ell) {
  try {
    return binomial(n, ell + 1) <= kGuardLimit;
  } catch (const ArithmeticOverflow&) {
    return false;
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw TableFileError(TableFileError::Code::InvariantViolation, what);
}

}  // namespace

int max_safe_nmax(int ell) {
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  std::int64_t lo = ell + 1;  // C(ell+1, ell+1) = 1 always fits
  std::int64_t hi = INT_MAX;
  if (guard_ok(hi, ell)) return INT_MAX;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (guard_ok(mid, ell) ? lo : hi) = mid;
  }
  return static_cast<int>(lo);
}

PackingTable PackingTable::build(int ell, int nmax) {
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  if (nmax < 1) throw InvalidInput("nmax must be at least 1");
  PackingTable t(ell, 0);
  t.m_.assign(1, 0);
  t.k_.assign(1, 0);
  t.grow_to(nmax);
  return t;
}

void PackingTable::grow_to(int new_nmax) {
  if (!guard_ok(new_nmax, ell_)) {
    const int safe = max_safe_nmax(ell_);
    throw TableGuardExceeded("nmax=" + std::to_string(new_nmax) + " exceeds the 128-bit overflow guard for ell=" +
                                 std::to_string(ell_) + "; maximal safe nmax is " + std::to_string(safe),
                             safe);
  }
  std::vector<Int128> last_layer(static_cast<std::size_t>(new_nmax) + 1);
  for (int m = 0; m <= new_nmax; ++m) last_layer[static_cast<std::size_t>(m)] = binomial(m, ell_);

  m_.resize(static_cast<std::size_t>(new_nmax) + 1, 0);
  k_.resize(static_cast<std::size_t>(new_nmax) + 1, 0);
  for (int n = nmax_ + 1; n <= new_nmax; ++n) {
    if (n <= ell_) {
      m_[n] = 0;
      k_[n] = 0;
      continue;
    }
    Int128 best = -1;
    int best_k = 0;
    // >= keeps the largest maximizer
    for (int k = 1; k < n; ++k) {
      const Int128 c = checked_add(m_[k], checked_mul(k, last_layer[static_cast<std::size_t>(n - k)]));
      if (c >= best) {
        best = c;
        best_k = k;
      }
    }
    m_[n] = best;
    k_[n] = best_k;
  }
  nmax_ = new_nmax;
}

PackingTable PackingTable::extended(int new_nmax) const {
  if (new_nmax < nmax_) throw InvalidInput("extended() cannot shrink a table");
  PackingTable t = *this;
  t.grow_to(new_nmax);
  return t;
}

PackingTable PackingTable::truncated(int new_nmax) const {
  if (new_nmax < 1 || new_nmax > nmax_) throw InvalidInput("truncated(): nmax out of range");
  PackingTable t = *this;
  t.m_.resize(static_cast<std::size_t>(new_nmax) + 1);
  t.k_.resize(static_cast<std::size_t>(new_nmax) + 1);
  t.nmax_ = new_nmax;
  return t;
}

Int128 PackingTable::M(int n) const {
  if (n < 0 || n > nmax_) throw InvalidInput("M(" + std::to_string(n) + ") outside table range");
  return m_[static_cast<std::size_t>(n)];
}

int PackingTable::K(int n) const {
  if (!has_k(n)) throw InvalidInput("k_" + std::to_string(n) + " undefined for this table");
  return k_[static_cast<std::size_t>(n)];
}

std::vector<int> PackingTable::k_values() const {
  if (nmax_ <= ell_) return {};
  return {k_.begin() + ell_ + 1, k_.end()};
}

PackingTable PackingTable::from_arrays(int ell, std::vector<Int128> m, std::vector<int> k) {
  require(ell >= 2, "ell must be at least 2");
  const int nmax = static_cast<int>(m.size());
  require(nmax >= 1, "table must contain at least M_1");
  require(static_cast<int>(k.size()) == std::max(0, nmax - ell), "K array length does not match nmax - ell");
  require(guard_ok(nmax, ell), "nmax exceeds the overflow guard");

  for (int n = 1; n <= nmax; ++n) {
    const Int128 mn = m[static_cast<std::size_t>(n - 1)];
    if (n <= ell) require(mn == 0, "M_" + std::to_string(n) + " must be 0 for n <= ell");
    if (n > 1) require(mn >= m[static_cast<std::size_t>(n - 2)], "M is not nondecreasing at n=" + std::to_string(n));
  }
  for (int n = ell + 2; n <= nmax; ++n) {
    const int prev = k[static_cast<std::size_t>(n - ell - 2)];
    const int cur = k[static_cast<std::size_t>(n - ell - 1)];
    require(prev <= cur && cur <= prev + 1, "k_n violates continuity at n=" + std::to_string(n));
  }

  // The recurrence with its tie-break determines the table completely.
  const PackingTable rebuilt = build(ell, nmax);
  for (int n = 1; n <= nmax; ++n) {
    require(rebuilt.M(n) == m[static_cast<std::size_t>(n - 1)],
            "M_" + std::to_string(n) + " does not satisfy the recurrence (expected " + to_string(rebuilt.M(n)) +
                ", found " + to_string(m[static_cast<std::size_t>(n - 1)]) + ")");
    if (n > ell) {
      require(rebuilt.K(n) == k[static_cast<std::size_t>(n - ell - 1)],
              "k_" + std::to_string(n) + " is not the largest maximizer");
    }
  }
  return rebuilt;
}

CSeq c_sequence(const PackingTable& table, int n) {
  const int ell = table.ell();
  if (n <= ell || n > table.nmax()) {
    throw InvalidInput("c_sequence: n must satisfy " + std::to_string(ell) + " < n <= " + std::to_string(table.nmax()));
  }
  CSeq seq;
  seq.ell = ell;
  seq.n = n;
  seq.values.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) seq.values.push_back(checked_add(table.M(i), checked_mul(i, binomial(n - i, ell))));
  seq.j_turn = bimodal_shape(seq).j_turn;
  return seq;
}

BimodalShape bimodal_shape(const CSeq& cseq) {
  const int last = static_cast<int>(cseq.values.size());  // = n - 1
  BimodalShape shape;
  if (last == 0) return shape;
  int k = 1;
  for (int i = 1; i <= last; ++i) {
    if (cseq.at(i) >= cseq.at(k)) k = i;
  }
  int j = k;
  while (j < last && cseq.at(j) > cseq.at(j + 1)) ++j;
  bool ok = true;
  for (int i = 2; i <= k; ++i) ok = ok && cseq.at(i - 1) <= cseq.at(i);
  for (int i = j + 1; i <= last; ++i) ok = ok && cseq.at(i - 1) <= cseq.at(i);
  // j > n / ell  <=>  ell * j > n
  ok = ok && static_cast<std::int64_t>(cseq.ell) * j > cseq.n;
  shape.k_turn = k;
  shape.j_turn = j;
  shape.well_formed = ok;
  return shape;
}

std::optional<int> first_n_with_k(const PackingTable& table, int k) {
  for (int n = table.ell() + 1; n <= table.nmax(); ++n) {
    if (table.K(n) == k) return n;
  }
  return std::nullopt;
}

std::optional<int> last_n_with_k(const PackingTable& table, int k) {
  if (!table.has_k(table.nmax()) || k >= table.K(table.nmax())) return std::nullopt;
  std::optional<int> found;
  for (int n = table.ell() + 1; n <= table.nmax(); ++n) {
    if (table.K(n) == k) found = n;
  }
  return found;
}

LayerProfile optimal_layer_profile(const PackingTable& table, int n) {
  if (n < 1 || n > table.nmax()) throw InvalidInput("optimal_layer_profile: n out of range");
  std::vector<int> reversed;
  while (n > table.ell()) {
    const int k = table.K(n);
    reversed.push_back(n - k);
    n = k;
  }
  reversed.push_back(n);
  return LayerProfile({reversed.rbegin(), reversed.rend()});
}

}  // namespace packdense

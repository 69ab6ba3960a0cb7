#ifndef PACKDENSE_TEST_SUPPORT_HPP
#define PACKDENSE_TEST_SUPPORT_HPP

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "packdense/analytic.hpp"
#include "packdense/checked_int.hpp"
#include "packdense/patterns.hpp"

namespace doctest {
template <>
struct StringMaker<__int128> {
  static String convert(__int128 v) { return packdense::to_string(v).c_str(); }
};
}  // namespace doctest

namespace testing {

// Published plot of c_{30,i}, i = 1..29, for ell = 2. The points at
// kPlottedLow sit one below M_i + i C(30-i, 2); the tests exhibit layered
// permutations attaining the larger value.
inline const std::vector<long long> kPlotted30 = {406,  756,  1053, 1303, 1506, 1668, 1791, 1878, 1935, 1963,
                                                1968, 1951, 1915, 1866, 1806, 1738, 1668, 1596, 1527, 1466,
                                                1413, 1374, 1353, 1350, 1375, 1425, 1504, 1621, 1773};
inline const std::vector<int> kPlottedLow = {3, 8, 9, 10, 22, 23, 24, 25, 26, 27, 28, 29};

// Independent pattern counter: recursive subset enumeration with a direct
// pairwise order comparison at the leaves.
inline long long subset_count(const std::vector<int>& p, const std::vector<int>& q) {
  const std::size_t k = q.size();
  std::vector<int> pick;
  long long total = 0;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          if ((p[pick[a]] < p[pick[b]]) != (q[a] < q[b])) return;
      ++total;
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= p.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

inline std::vector<int> as_vector(const packdense::Permutation& p) { return {p.ranks().begin(), p.ranks().end()}; }

// Test-local maximum over S_n with the independent counter.
inline long long naive_max(int n, const std::vector<int>& q) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  long long best = 0;
  do best = std::max(best, subset_count(p, q));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline packdense::Rational q(long num, long den = 1) { return packdense::make_rational(num, den); }

// Exact membership of the root of a x^2 + b x + c between lo and hi, for a
// quadratic that changes sign on the interval.
inline bool brackets_root(const packdense::RationalInterval& iv, long a, long b, long c) {
  auto f = [&](const packdense::Rational& x) { packdense::Rational r(a * x * x + b * x + c); return r; };
  return sgn(f(iv.lo)) * sgn(f(iv.hi)) <= 0;
}

}  // namespace testing

#endif  // PACKDENSE_TEST_SUPPORT_HPP

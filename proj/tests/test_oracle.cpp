#include "test_support.hpp"

#include <omp.h>

#include "packdense/oracle.hpp"
#include "packdense/packing_table.hpp"

using namespace packdense;
using testing::as_vector;
using testing::subset_count;

namespace {

// Scan S_n in lexicographic order for the first permutation with `target` copies.
Permutation first_with(int n, const Permutation& q, Int128 target) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  const std::vector<int> qq = as_vector(q);
  do {
    if (subset_count(p, qq) == target) return Permutation(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return {};
}

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("small cases") {
  const Permutation q132 = Permutation::parse("132");
  const OracleResult r3 = brute_force_Mnq(3, q132);
  CHECK(r3.max_count == 1);
  CHECK(r3.layered_witness_exists);
  const OracleResult r4 = brute_force_Mnq(4, q132);
  CHECK(r4.max_count == 3);
  CHECK(count_occurrences(r4.witness, q132) == 3);
  CHECK(brute_force_Mnq(5, q132).max_count == PackingTable::build(2, 5).M(5));
  for (int ell = 2; ell <= 6; ++ell) CHECK(brute_force_layered(ell + 1, ell) == 1);
  CHECK(brute_force_layered(9, 3) == brute_force_Mnq(9, Permutation::parse("1432")).max_count);
}

TEST_CASE("witness is the lexicographically least maximizer") {
  for (const char* qs : {"132", "2413", "1432", "231", "12"}) {
    const Permutation q = Permutation::parse(qs);
    for (int n = q.size(); n <= 7; ++n) {
      const OracleResult r = brute_force_Mnq(n, q);
      CHECK(r.max_count == testing::naive_max(n, as_vector(q)));
      CHECK(r.witness == first_with(n, q, r.max_count));
    }
  }
}

TEST_CASE("desk-scale layered optimality") {
  for (int ell = 2; ell <= 3; ++ell) {
    const PackingTable t = PackingTable::build(ell, 9);
    for (int n = 1; n <= 9; ++n) {
      const OracleResult r = brute_force_Mnq(n, qell_pattern(ell));
      CHECK(r.max_count == t.M(n));
      CHECK(r.layered_witness_exists);
    }
  }
}

TEST_CASE("nonlayered patterns report layered status honestly") {
  const OracleResult r = brute_force_Mnq(7, Permutation::parse("2413"));
  CHECK(r.max_count == 9);
  CHECK_FALSE(r.layered_witness_exists);
  CHECK_FALSE(layered_attains(7, Permutation::parse("2413"), 9));
  CHECK(layered_attains(4, Permutation::parse("132"), 3));
  CHECK_FALSE(layered_attains(4, Permutation::parse("132"), 4));
}

TEST_CASE("composition sweep and suffix maxima match the table") {
  const PackingTable t2 = PackingTable::build(2, 60);
  for (int n = 1; n <= 24; ++n) CHECK(brute_force_layered(n, 2) == t2.M(n));
  for (int n = 1; n <= 60; ++n) CHECK(layered_suffix_max(n, 2) == t2.M(n));
  const PackingTable t4 = PackingTable::build(4, 60);
  for (int n = 1; n <= 20; ++n) CHECK(brute_force_layered(n, 4) == t4.M(n));
  for (int n = 1; n <= 60; ++n) CHECK(layered_suffix_max(n, 4) == t4.M(n));
}

TEST_CASE("parallel sweeps equal the serial references") {
  const Threads threads(4);
  for (const char* qs : {"132", "2413", "1432", "321"}) {
    const Permutation q = Permutation::parse(qs);
    for (int n = 1; n <= 8; ++n) {
      const OracleResult a = brute_force_Mnq(n, q);
      const OracleResult b = serial::brute_force_Mnq(n, q);
      CHECK(a.max_count == b.max_count);
      CHECK(a.witness == b.witness);
      CHECK(a.layered_witness_exists == b.layered_witness_exists);
    }
  }
  for (int ell = 2; ell <= 4; ++ell)
    for (int n = 1; n <= 18; ++n) CHECK(brute_force_layered(n, ell) == serial::brute_force_layered(n, ell));
}

TEST_CASE("caps are hard errors") {
  CHECK_THROWS_AS(brute_force_Mnq(kPermutationSweepCap + 1, Permutation::parse("132")), OracleCapExceeded);
  CHECK_THROWS_AS(brute_force_layered(kCompositionSweepCap + 1, 2), OracleCapExceeded);
  CHECK_THROWS_AS(layered_suffix_max(kSuffixMaxCap + 1, 2), OracleCapExceeded);
  CHECK_THROWS_AS(serial::brute_force_Mnq(kPermutationSweepCap + 1, Permutation::parse("132")), OracleCapExceeded);
  CHECK_NOTHROW(brute_force_Mnq(4, Permutation::parse("132"), 4));
  CHECK_THROWS_AS(brute_force_Mnq(5, Permutation::parse("132"), 4), OracleCapExceeded);
}

TEST_CASE("density monotonicity probe") {
  const MonotonicityProbe a = density_monotonicity_probe(Permutation::parse("132"), 8);
  CHECK(a.verdict == Verdict::Pass);
  CHECK_FALSE(a.violation.has_value());
  const MonotonicityProbe b = density_monotonicity_probe(Permutation::parse("12"), 6);
  CHECK(b.verdict == Verdict::Pass);
  REQUIRE(b.maxima.size() == 5);
  for (int n = 2; n <= 6; ++n) CHECK(b.maxima[static_cast<std::size_t>(n - 2)] == binomial(n, 2));
  CHECK(density_monotonicity_probe(Permutation::parse("2413"), 7).verdict == Verdict::Pass);
  CHECK_THROWS(density_monotonicity_probe(Permutation::parse("132"), 10));
  CHECK_THROWS(density_monotonicity_probe(Permutation::parse("1432"), 3));
}

}

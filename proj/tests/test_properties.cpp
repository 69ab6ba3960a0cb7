#include "test_support.hpp"

#include <random>

#include "packdense/oracle.hpp"
#include "packdense/packing_table.hpp"
#include "packdense/patterns.hpp"
#include "packdense/verifier.hpp"

using namespace packdense;

namespace {

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

std::vector<Permutation> all_of_length(int k) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every composition of n, as ascent masks over the n-1 gaps.
std::vector<LayerProfile> compositions(int n) {
  std::vector<LayerProfile> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> layers{1};
    for (int g = 0; g < n - 1; ++g) {
      if (mask & (1u << g))
        layers.push_back(1);
      else
        ++layers.back();
    }
    out.emplace_back(layers);
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("pattern counts of each length partition the subsequences") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> len(1, 10);
  std::vector<std::vector<Permutation>> by_length;
  for (int k = 0; k <= 4; ++k) by_length.push_back(k == 0 ? std::vector<Permutation>{} : all_of_length(k));
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation p = random_permutation(rng, len(rng));
    for (int k = 1; k <= 4; ++k) {
      Int128 total = 0;
      for (const Permutation& q : by_length[static_cast<std::size_t>(k)]) total += count_occurrences(p, q);
      CHECK(total == binomial(p.size(), k));
    }
  }
}

TEST_CASE("counts are invariant under reverse-complement") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> len(1, 10);
  const auto pats = all_of_length(3);
  const auto pats4 = all_of_length(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation p = random_permutation(rng, len(rng));
    const Permutation rp = reverse_complement(p);
    for (const auto& q : pats) CHECK(count_occurrences(p, q) == count_occurrences(rp, reverse_complement(q)));
    const Permutation& q4 = pats4[static_cast<std::size_t>(trial) % pats4.size()];
    CHECK(count_occurrences(p, q4) == count_occurrences(rp, reverse_complement(q4)));
  }
}

TEST_CASE("fast counter agrees with the reference counters on random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<int> plen(1, 5);
  for (int trial = 0; trial < 600; ++trial) {
    const Permutation p = random_permutation(rng, len(rng));
    const Permutation q = random_permutation(rng, plen(rng));
    const Int128 fast = count_occurrences(p, q);
    CHECK(fast == count_occurrences_naive(p, q));
    CHECK(fast == testing::subset_count(testing::as_vector(p), testing::as_vector(q)));
  }
}

TEST_CASE("layered closed form equals brute counting on every profile with sum <= 12") {
  for (int ell = 2; ell <= 3; ++ell) {
    const Permutation q = qell_pattern(ell);
    for (int n = 1; n <= 12; ++n) {
      for (const LayerProfile& prof : compositions(n)) {
        const Permutation p = prof.expand();
        const Int128 closed = count_qell_in_layered(prof, ell);
        CHECK(closed == count_occurrences_naive(p, q));
        CHECK(closed == count_occurrences(p, q));
        CHECK(closed == count_layered_in_layered(LayerProfile({1, ell}), prof));
      }
    }
  }
}

TEST_CASE("general layered counting matches brute counting") {
  std::mt19937_64 rng(11);
  const std::vector<LayerProfile> patterns{LayerProfile({2, 2}), LayerProfile({1, 1, 1}), LayerProfile({2, 1}),
                                           LayerProfile({3}),    LayerProfile({1, 2, 1}), LayerProfile({2, 1, 2})};
  for (int n = 1; n <= 10; ++n) {
    for (const LayerProfile& prof : compositions(n)) {
      const LayerProfile& qp = patterns[rng() % patterns.size()];
      CHECK(count_layered_in_layered(qp, prof) == count_occurrences(prof.expand(), qp.expand()));
    }
  }
}

TEST_CASE("decompose_layers inverts expand") {
  for (int n = 1; n <= 11; ++n) {
    for (const LayerProfile& prof : compositions(n)) {
      const auto back = decompose_layers(prof.expand());
      REQUIRE(back.has_value());
      CHECK(*back == prof);
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation p = random_permutation(rng, 1 + static_cast<int>(rng() % 9));
    const auto prof = decompose_layers(p);
    if (prof) CHECK(prof->expand() == p);
  }
}

TEST_CASE("cache round trip over many shapes") {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int nmax : {1, ell, ell + 1, 37, 400}) {
      const PackingTable t = PackingTable::build(ell, nmax);
      CHECK(deserialize_table(serialize_table(t)) == t);
    }
  }
}

TEST_CASE("any single-entry tamper is detected") {
  const PackingTable t = PackingTable::build(3, 60);
  for (int n = 1; n <= 60; n += 3) {
    auto m = t.m_values();
    m[static_cast<std::size_t>(n - 1)] += 1;
    CHECK_THROWS_AS(PackingTable::from_arrays(3, m, t.k_values()), TableFileError);
  }
  for (std::size_t i = 0; i < t.k_values().size(); i += 5) {
    auto k = t.k_values();
    k[i] = k[i] == 1 ? 2 : k[i] - 1;
    CHECK_THROWS_AS(PackingTable::from_arrays(3, t.m_values(), k), TableFileError);
  }
}

TEST_CASE("recurrence invariants over a wide range") {
  for (int ell = 2; ell <= 5; ++ell) {
    const PackingTable t = PackingTable::build(ell, 700);
    for (int n = ell + 2; n <= 700; ++n) {
      const int d = t.K(n) - t.K(n - 1);
      CHECK((d == 0 || d == 1));
      const Int128 second = t.M(n) - 2 * t.M(n - 1) + t.M(n - 2);
      CHECK(second >= 0);
      CHECK(second <= binomial(n, ell - 1));
    }
  }
}

TEST_CASE("verdicts are a pure function of the inputs") {
  const PackingTable t = PackingTable::build(5, 250);
  const std::vector<CheckId> all(kRegistry.begin(), kRegistry.end());
  CHECK(format_reports_json(run_checks(t, all)) == format_reports_json(run_checks(t, all)));
}

}

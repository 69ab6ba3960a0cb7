#include "test_support.hpp"

#include <unistd.h>

#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gmpxx.h>

#include "packdense/oracle.hpp"
#include "packdense/packing_table.hpp"

using namespace packdense;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("packdense-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

TableFileError::Code load_error(const fs::path& p) {
  try {
    (void)load_table(p);
  } catch (const TableFileError& e) {
    return e.code();
  }
  FAIL("load_table accepted a bad file");
  return TableFileError::Code::Io;
}

}  // namespace

TEST_SUITE("packing_table") {

TEST_CASE("frozen values") {
  const PackingTable t = PackingTable::build(2, 30);
  CHECK(t.M(30) == 1968);
  CHECK(t.K(30) == 11);
  CHECK(t.M(17) - t.M(16) == 60);
  CHECK(t.M(4) == 3);
  CHECK(t.K(4) == 1);
  // max number of 132-copies for n = 1..12, independently by brute force below
  const std::vector<long long> expected{0, 0, 1, 3, 6, 12, 20, 31, 46, 64, 87, 115};
  for (int n = 1; n <= 12; ++n) CHECK(t.M(n) == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("small values agree with an independent maximum over S_n") {
  for (int ell = 2; ell <= 3; ++ell) {
    const PackingTable t = PackingTable::build(ell, 8);
    std::vector<int> q = testing::as_vector(qell_pattern(ell));
    for (int n = 1; n <= 8; ++n) CHECK(t.M(n) == testing::naive_max(n, q));
  }
}

TEST_CASE("edge of the nontrivial range") {
  for (int ell = 2; ell <= 8; ++ell) {
    const PackingTable t = PackingTable::build(ell, ell + 3);
    CHECK(t.M(0) == 0);
    for (int n = 1; n <= ell; ++n) {
      CHECK(t.M(n) == 0);
      CHECK_FALSE(t.has_k(n));
    }
    CHECK(t.M(ell + 1) == 1);
    CHECK(t.K(ell + 1) == 1);
  }
  const PackingTable seven = PackingTable::build(7, 7);
  for (int n = 1; n <= 7; ++n) CHECK(seven.M(n) == 0);
  CHECK(seven.k_values().empty());
}

TEST_CASE("k_n is the largest maximizer") {
  const PackingTable t = PackingTable::build(2, 300);
  for (int n = 3; n <= 300; ++n) {
    Int128 best = -1;
    int arg = 0;
    for (int k = 1; k < n; ++k) {
      const Int128 v = t.M(k) + Int128(k) * binomial(n - k, 2);
      if (v >= best) {
        best = v;
        arg = k;
      }
    }
    CHECK(best == t.M(n));
    CHECK(arg == t.K(n));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(PackingTable::build(1, 10), InvalidInput);
  CHECK_THROWS_AS(PackingTable::build(2, 0), InvalidInput);
  const PackingTable t = PackingTable::build(2, 10);
  CHECK_THROWS_AS((void)t.M(11), InvalidInput);
  CHECK_THROWS_AS((void)t.K(2), InvalidInput);
}

TEST_CASE("overflow guard names the maximal safe nmax") {
  CHECK(max_safe_nmax(2) == INT_MAX);
  CHECK(max_safe_nmax(3) == INT_MAX);
  for (int ell : {5, 7, 10, 20}) {
    const int safe = max_safe_nmax(ell);
    mpz_class at, past, limit;
    mpz_bin_uiui(at.get_mpz_t(), static_cast<unsigned long>(safe), static_cast<unsigned long>(ell + 1));
    mpz_bin_uiui(past.get_mpz_t(), static_cast<unsigned long>(safe + 1), static_cast<unsigned long>(ell + 1));
    mpz_ui_pow_ui(limit.get_mpz_t(), 2, 120);
    CHECK(at <= limit);
    CHECK(past > limit);
    try {
      (void)PackingTable::build(ell, safe + 1);
      FAIL("guard not enforced");
    } catch (const TableGuardExceeded& e) {
      CHECK(e.max_safe_nmax() == safe);
      CHECK(std::string(e.what()).find(std::to_string(safe)) != std::string::npos);
    }
  }
  CHECK_NOTHROW((void)PackingTable::build(10, max_safe_nmax(10)));
}

TEST_CASE("extended and truncated agree with direct builds") {
  const PackingTable small = PackingTable::build(3, 40);
  CHECK(small.extended(250) == PackingTable::build(3, 250));
  CHECK(PackingTable::build(3, 250).truncated(40) == small);
  CHECK(small.extended(40) == small);
}

TEST_CASE("c_sequence for n = 30 against the plotted points") {
  const PackingTable t = PackingTable::build(2, 30);
  const CSeq s = c_sequence(t, 30);
  REQUIRE(s.values.size() == 29);
  const std::vector<int> q{1, 3, 2};
  for (int i = 1; i <= 29; ++i) {
    CAPTURE(i);
    const long long plotted = testing::kPlotted30[static_cast<std::size_t>(i - 1)];
    const bool low = std::find(testing::kPlottedLow.begin(), testing::kPlottedLow.end(), i) != testing::kPlottedLow.end();
    CHECK(s.at(i) == plotted + (low ? 1 : 0));
    // an optimal i-prefix under a last layer of 30 - i attains the value
    const LayerProfile prefix = optimal_layer_profile(t, i);
    std::vector<int> layers(prefix.layers().begin(), prefix.layers().end());
    layers.push_back(30 - i);
    CHECK(s.at(i) == testing::subset_count(testing::as_vector(LayerProfile(layers).expand()), q));
  }
  CHECK(s.at(1) == 406);
  CHECK(s.at(11) == t.M(30));
  CHECK(s.at(11) == 1968);
  CHECK(s.j_turn == 24);
  CHECK_THROWS_AS(c_sequence(t, 2), InvalidInput);
  CHECK_THROWS_AS(c_sequence(t, 31), InvalidInput);
}

TEST_CASE("c_sequence maximum is M_n") {
  const PackingTable t = PackingTable::build(3, 60);
  for (int n = 4; n <= 60; ++n) {
    const CSeq s = c_sequence(t, n);
    CHECK(*std::max_element(s.values.begin(), s.values.end()) == t.M(n));
  }
}

TEST_CASE("bimodal_shape") {
  const PackingTable t = PackingTable::build(2, 30);
  const BimodalShape b = bimodal_shape(c_sequence(t, 30));
  CHECK(b.k_turn == 11);
  CHECK(b.j_turn == 24);
  CHECK(b.well_formed);

  const BimodalShape tiny = bimodal_shape(c_sequence(t, 3));
  CHECK(tiny.k_turn == 1);
  CHECK(tiny.j_turn == 2);
  CHECK(tiny.well_formed);

  // ell = 3, n = 4: (1, 0, 0) turns down once and then stays flat
  const BimodalShape flat = bimodal_shape(c_sequence(PackingTable::build(3, 4), 4));
  CHECK(flat.k_turn == 1);
  CHECK(flat.j_turn == 2);
  CHECK(flat.well_formed);

  CSeq bad{2, 8, {1, 5, 2, 4, 3, 6, 1}, 0};
  CHECK_FALSE(bimodal_shape(bad).well_formed);
  CSeq early{2, 12, {9, 8, 1, 2, 3, 4, 5, 6, 7, 8, 8}, 0};  // turns before n/ell
  CHECK_FALSE(bimodal_shape(early).well_formed);
}

TEST_CASE("n_k and n'_k") {
  for (int ell = 2; ell <= 5; ++ell) {
    const PackingTable t = PackingTable::build(ell, 400);
    CHECK(first_n_with_k(t, 1) == ell + 1);
    for (int k = 2; k <= ell + 1; ++k) CHECK(first_n_with_k(t, k) == (ell + 1) * k - 1);
    CHECK_FALSE(first_n_with_k(t, t.K(400) + 1).has_value());
    CHECK_FALSE(last_n_with_k(t, t.K(400)).has_value());
    for (int k = 1; k < t.K(400); ++k) {
      const auto lo = first_n_with_k(t, k);
      const auto hi = last_n_with_k(t, k);
      REQUIRE(lo.has_value());
      REQUIRE(hi.has_value());
      const int run = *hi - *lo + 1;
      CHECK((run == ell || run == ell + 1));
    }
  }
  CHECK(last_n_with_k(PackingTable::build(2, 30), 1) == 4);
}

TEST_CASE("optimal_layer_profile") {
  const PackingTable t = PackingTable::build(2, 200);
  CHECK(optimal_layer_profile(t, 2).to_string() == "2");
  CHECK(optimal_layer_profile(t, 4).to_string() == "1,3");
  const LayerProfile p30 = optimal_layer_profile(t, 30);
  CHECK(p30.layers().back() == 19);
  const LayerProfile p11 = optimal_layer_profile(t, 11);
  CHECK(std::equal(p11.layers().begin(), p11.layers().end(), p30.layers().begin()));
  for (int n = 1; n <= 200; ++n) {
    const LayerProfile p = optimal_layer_profile(t, n);
    CHECK(p.total() == n);
    CHECK(count_qell_in_layered(p, 2) == t.M(n));
  }
  const PackingTable t3 = PackingTable::build(3, 12);
  for (int n = 1; n <= 12; ++n) {
    const LayerProfile p = optimal_layer_profile(t3, n);
    CHECK(count_occurrences(p.expand(), qell_pattern(3)) == t3.M(n));
  }
}

TEST_CASE("from_arrays validates contents") {
  const PackingTable t = PackingTable::build(2, 40);
  CHECK(PackingTable::from_arrays(2, t.m_values(), t.k_values()) == t);
  auto m = t.m_values();
  m[29] += 1;
  CHECK_THROWS_AS(PackingTable::from_arrays(2, m, t.k_values()), TableFileError);
  auto k = t.k_values();
  k.back() -= 1;
  CHECK_THROWS_AS(PackingTable::from_arrays(2, t.m_values(), k), TableFileError);
}

TEST_CASE("save and load round trip") {
  const fs::path dir = scratch_dir("roundtrip");
  const PackingTable t = PackingTable::build(2, 100);
  save_table(t, dir / "t.txt");
  CHECK(load_table(dir / "t.txt") == t);
  CHECK(deserialize_table(serialize_table(t)) == t);
  fs::remove_all(dir);
}

TEST_CASE("damaged files give distinct error codes") {
  const fs::path dir = scratch_dir("damage");
  const PackingTable t = PackingTable::build(2, 100);
  const std::string good = serialize_table(t);

  write_file(dir / "trunc.txt", good.substr(0, good.size() / 2));
  CHECK(load_error(dir / "trunc.txt") == TableFileError::Code::CorruptFile);

  std::string tampered = good;
  const std::string needle = ",1968,";
  const auto at = tampered.find(needle);
  REQUIRE(at != std::string::npos);
  tampered.replace(at, needle.size(), ",1969,");
  write_file(dir / "tamper.txt", tampered);
  CHECK(load_error(dir / "tamper.txt") == TableFileError::Code::InvariantViolation);

  std::string version = good;
  version.replace(version.find(kTableFormatTag), std::string(kTableFormatTag).size(), "packdense-table-v0");
  write_file(dir / "version.txt", version);
  CHECK(load_error(dir / "version.txt") == TableFileError::Code::VersionMismatch);

  write_file(dir / "junk.txt", "hello\n");
  CHECK(load_error(dir / "junk.txt") == TableFileError::Code::CorruptFile);

  CHECK(load_error(dir / "missing.txt") == TableFileError::Code::Io);
  fs::remove_all(dir);
}

TEST_CASE("csv export") {
  const std::string csv = table_csv(PackingTable::build(2, 30));
  CHECK(csv.rfind("n,M_n,k_n,density_num,density_den\n", 0) == 0);
  CHECK(csv.find("\n1,0,,,\n") != std::string::npos);
  CHECK(csv.find("\n4,3,1,3,4\n") != std::string::npos);
  // 1968 / C(30,3) = 1968 / 4060 = 492 / 1015
  CHECK(csv.find("\n30,1968,11,492,1015\n") != std::string::npos);
}

}

#ifndef PACKDENSE_PACKING_TABLE_HPP
#define PACKDENSE_PACKING_TABLE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packdense/checked_int.hpp"
#include "packdense/patterns.hpp"

namespace packdense {

/// Exact values of M_n (maximum number of copies of q_ell in an
/// n-permutation) and k_n (largest optimal prefix length) for 1 <= n <= nmax.
///
/// M_n = max over 1 <= k < n of M_k + k * C(n-k, ell), with M_n = 0 for
/// n <= ell. k_n is tracked only for n > ell.
class PackingTable {
 public:
  /// Rejects nmax whose guard value C(nmax, ell+1) exceeds 2^120.
  static PackingTable build(int ell, int nmax);

  /// Builds from raw arrays; throws TableFileError(InvariantViolation) if the
  /// arrays are not exactly what build() would produce.
  static PackingTable from_arrays(int ell, std::vector<Int128> m, std::vector<int> k);

  /// Continues the recurrence from an existing table up to new_nmax.
  [[nodiscard]] PackingTable extended(int new_nmax) const;
  /// Prefix of this table with a smaller nmax.
  [[nodiscard]] PackingTable truncated(int new_nmax) const;

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int nmax() const { return nmax_; }

  /// M_n for 0 <= n <= nmax (M_0 = 0).
  [[nodiscard]] Int128 M(int n) const;
  /// k_n for ell < n <= nmax.
  [[nodiscard]] int K(int n) const;
  [[nodiscard]] bool has_k(int n) const { return n > ell_ && n <= nmax_; }

  /// M_1..M_nmax.
  [[nodiscard]] std::vector<Int128> m_values() const { return {m_.begin() + 1, m_.end()}; }
  /// k_{ell+1}..k_nmax.
  [[nodiscard]] std::vector<int> k_values() const;

  friend bool operator==(const PackingTable&, const PackingTable&) = default;

 private:
  PackingTable(int ell, int nmax) : ell_(ell), nmax_(nmax) {}
  void grow_to(int new_nmax);

  int ell_ = 2;
  int nmax_ = 0;
  std::vector<Int128> m_;  // index 0..nmax
  std::vector<int> k_;     // index 0..nmax, meaningful for n > ell
};

/// Largest nmax accepted by PackingTable::build for this ell.
int max_safe_nmax(int ell);

class TableGuardExceeded : public std::length_error {
 public:
  TableGuardExceeded(const std::string& what, int max_safe) : std::length_error(what), max_safe_(max_safe) {}
  [[nodiscard]] int max_safe_nmax() const { return max_safe_; }

 private:
  int max_safe_;
};

/// c_{n,i} = M_i + i * C(n-i, ell): copies achieved by an optimal i-prefix
/// under a last layer of length n - i.
struct CSeq {
  int ell = 2;
  int n = 0;
  std::vector<Int128> values;  // values[i-1] = c_{n,i}, i = 1..n-1
  int j_turn = 0;

  [[nodiscard]] Int128 at(int i) const { return values[static_cast<std::size_t>(i - 1)]; }
};

/// Throws InvalidInput unless ell < n <= table.nmax(). Fills j_turn with the
/// end of the strictly decreasing run that follows the largest maximizer.
CSeq c_sequence(const PackingTable& table, int n);

/// Turn points of a c-sequence. k_turn is its largest maximizer.
struct BimodalShape {
  int k_turn = 0;
  int j_turn = 0;
  bool well_formed = false;
};

/// Three-segment shape test: weakly increasing up to k_turn, strictly
/// decreasing up to j_turn, weakly increasing after; also needs j_turn > n/ell.
BimodalShape bimodal_shape(const CSeq& cseq);

/// n_k: least n with k_n = k.
std::optional<int> first_n_with_k(const PackingTable& table, int k);

/// n'_k: largest n with k_n = k; absent unless k < k_nmax.
std::optional<int> last_n_with_k(const PackingTable& table, int k);

/// Layered witness for M_n, built by repeatedly peeling a last layer of
/// length n - k_n.
LayerProfile optimal_layer_profile(const PackingTable& table, int n);

// --- persistence ------------------------------------------------------------

inline constexpr const char* kTableFormatTag = "packdense-table-v1";

class TableFileError : public std::runtime_error {
 public:
  enum class Code { Io = 1, CorruptFile = 2, VersionMismatch = 3, InvariantViolation = 4 };
  TableFileError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] Code code() const { return code_; }

 private:
  Code code_;
};

std::string serialize_table(const PackingTable& table);
PackingTable deserialize_table(const std::string& text);

void save_table(const PackingTable& table, const std::filesystem::path& path);
PackingTable load_table(const std::filesystem::path& path);

/// CSV with columns n,M_n,k_n,density_num,density_den. The density is
/// M_n / C(n, ell+1) reduced; k_n and the density are blank where undefined.
std::string table_csv(const PackingTable& table);

}  // namespace packdense

#endif  // PACKDENSE_PACKING_TABLE_HPP

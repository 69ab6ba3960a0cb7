#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "packdense/packing_table.hpp"

namespace packdense {

namespace {

[[noreturn]] void corrupt(const std::string& what) {
  throw TableFileError(TableFileError::Code::CorruptFile, "corrupt table file: " + what);
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& values, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += fmt(values[i]);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Int128 parse_field(const std::string& token, const std::string& key) {
  try {
    return parse_int128(token);
  } catch (const std::exception&) {
    corrupt("bad integer '" + token + "' in " + key);
  }
}

Int128 gcd128(Int128 a, Int128 b) {
  while (b != 0) {
    const Int128 r = a % b;
    a = b;
    b = r;
  }
  return a < 0 ? -a : a;
}

}  // namespace

std::string serialize_table(const PackingTable& table) {
  std::ostringstream out;
  out << "format=" << kTableFormatTag << '\n';
  out << "ell=" << table.ell() << '\n';
  out << "nmax=" << table.nmax() << '\n';
  out << "M=" << join(table.m_values(), [](Int128 v) { return to_string(v); }) << '\n';
  out << "K=" << join(table.k_values(), [](int v) { return std::to_string(v); }) << '\n';
  return out.str();
}

PackingTable deserialize_table(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::vector<std::string> order;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) corrupt("line without '=': " + line.substr(0, 40));
    const std::string key = line.substr(0, eq);
    if (fields.count(key) != 0) corrupt("duplicate key " + key);
    fields[key] = line.substr(eq + 1);
    order.push_back(key);
  }
  if (order.empty() || order.front() != "format") corrupt("missing format header");
  if (fields["format"] != kTableFormatTag) {
    throw TableFileError(TableFileError::Code::VersionMismatch,
                         "unsupported table format '" + fields["format"] + "', expected " + kTableFormatTag);
  }
  for (const char* key : {"ell", "nmax", "M", "K"}) {
    if (fields.count(key) == 0) corrupt(std::string("missing key ") + key);
  }
  const Int128 ell = parse_field(fields["ell"], "ell");
  const Int128 nmax = parse_field(fields["nmax"], "nmax");
  if (ell < 2 || ell > 1'000'000 || nmax < 1 || nmax > 100'000'000) corrupt("ell/nmax out of range");

  std::vector<Int128> m;
  for (const auto& tok : split_commas(fields["M"])) m.push_back(parse_field(tok, "M"));
  std::vector<int> k;
  for (const auto& tok : split_commas(fields["K"])) {
    const Int128 v = parse_field(tok, "K");
    if (v < 0 || v > nmax) corrupt("K entry out of range");
    k.push_back(static_cast<int>(v));
  }
  if (static_cast<Int128>(m.size()) != nmax) corrupt("M has " + std::to_string(m.size()) + " entries, nmax says " + to_string(nmax));
  const Int128 expected_k = nmax > ell ? nmax - ell : 0;
  if (static_cast<Int128>(k.size()) != expected_k) corrupt("K has wrong number of entries");

  return PackingTable::from_arrays(static_cast<int>(ell), std::move(m), std::move(k));
}

void save_table(const PackingTable& table, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  // write-then-rename so a crash never leaves a half-written cache
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw TableFileError(TableFileError::Code::Io, "cannot write " + tmp);
    out << serialize_table(table);
    if (!out.flush()) throw TableFileError(TableFileError::Code::Io, "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw TableFileError(TableFileError::Code::Io, "cannot rename to " + path.string() + ": " + ec.message());
}

PackingTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableFileError(TableFileError::Code::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_table(buf.str());
}

std::string table_csv(const PackingTable& table) {
  std::ostringstream out;
  out << "n,M_n,k_n,density_num,density_den\n";
  for (int n = 1; n <= table.nmax(); ++n) {
    out << n << ',' << to_string(table.M(n)) << ',';
    if (table.has_k(n)) out << table.K(n);
    out << ',';
    const Int128 den = binomial(n, table.ell() + 1);
    if (den > 0) {
      const Int128 g = gcd128(table.M(n), den);
      out << to_string(table.M(n) / g) << ',' << to_string(den / g);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace packdense

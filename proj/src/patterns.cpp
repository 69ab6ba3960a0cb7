#include "packdense/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace packdense {

Permutation::Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int r : ranks_) {
    if (r < 1 || r > n) {
      throw InvalidInput("rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(r)]) throw InvalidInput("rank " + std::to_string(r) + " repeated");
    seen[static_cast<std::size_t>(r)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(r));
}

namespace {

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<int> split_ints(std::string_view text, bool allow_digit_run) {
  std::vector<int> out;
  const bool has_separator = std::any_of(text.begin(), text.end(), is_separator);
  if (!has_separator && allow_digit_run) {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("invalid digit '" + std::string(1, c) + "' in permutation");
      out.push_back(c - '0');
    }
    return out;
  }
  // commas delimit fields, which may not be empty; otherwise whitespace does
  const bool commas = text.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    if (commas) {
      end = std::min(text.find(',', pos), text.size());
    } else {
      while (pos < text.size() && is_separator(text[pos])) ++pos;
      if (pos == text.size()) break;
      end = pos;
      while (end < text.size() && !is_separator(text[end])) ++end;
    }
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && is_separator(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_separator(token.back())) token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("invalid integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  auto ranks = split_ints(text, true);
  if (ranks.empty()) throw InvalidInput("empty permutation");
  return Permutation(std::move(ranks));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (!compact && i > 0) out.push_back(' ');
    out += std::to_string(ranks_[i]);
  }
  return out;
}

LayerProfile::LayerProfile(std::vector<int> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw InvalidInput("layer profile must have at least one layer");
  for (int b : layers_) {
    if (b < 1) throw InvalidInput("layer lengths must be positive");
    total_ += b;
  }
}

LayerProfile LayerProfile::parse(std::string_view text) { return LayerProfile(split_ints(text, false)); }

Permutation LayerProfile::expand() const {
  std::vector<int> ranks;
  ranks.reserve(static_cast<std::size_t>(total_));
  int base = 0;
  for (int b : layers_) {
    for (int v = base + b; v > base; --v) ranks.push_back(v);
    base += b;
  }
  return Permutation(std::move(ranks));
}

std::string LayerProfile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(layers_[i]);
  }
  return out;
}

Permutation qell_pattern(int ell) {
  if (ell < 1) throw InvalidInput("ell must be positive");
  return LayerProfile({1, ell}).expand();
}

bool same_type(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InvalidInput("same_type: length mismatch");
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] || b[i] == b[j]) throw InvalidInput("same_type: repeated entry");
      if ((a[i] < a[j]) != (b[i] < b[j])) same = false;
    }
  }
  return same;
}

PatternCounter::PatternCounter(Permutation q) : q_(std::move(q)) {
  const int k = q_.size();
  below_.assign(static_cast<std::size_t>(k), -1);
  above_.assign(static_cast<std::size_t>(k), -1);
  for (int t = 0; t < k; ++t) {
    auto& lo = below_[static_cast<std::size_t>(t)];
    auto& hi = above_[static_cast<std::size_t>(t)];
    for (int s = 0; s < t; ++s) {
      if (q_[s] < q_[t] && (lo < 0 || q_[s] > q_[lo])) lo = s;
      if (q_[s] > q_[t] && (hi < 0 || q_[s] < q_[hi])) hi = s;
    }
  }
}

namespace {

struct EmbedState {
  std::span<const int> p;
  const std::vector<int>& below;
  const std::vector<int>& above;
  std::vector<int> chosen;
  int k;
  int lo_sentinel;
  int hi_sentinel;

  Int128 count(int t, int start) {
    if (t == k) return 1;
    const int b = below[static_cast<std::size_t>(t)];
    const int a = above[static_cast<std::size_t>(t)];
    const int lo = b < 0 ? lo_sentinel : chosen[static_cast<std::size_t>(b)];
    const int hi = a < 0 ? hi_sentinel : chosen[static_cast<std::size_t>(a)];
    Int128 total = 0;
    const int last = static_cast<int>(p.size()) - (k - t);
    for (int pos = start; pos <= last; ++pos) {
      const int v = p[static_cast<std::size_t>(pos)];
      if (v <= lo || v >= hi) continue;
      chosen[static_cast<std::size_t>(t)] = v;
      total = checked_add(total, count(t + 1, pos + 1));
    }
    return total;
  }
};

}  // namespace

Int128 PatternCounter::count(std::span<const int> p) const {
  const int k = q_.size();
  if (k > static_cast<int>(p.size())) return 0;
  if (k == 0) return 1;
  const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  EmbedState st{p, below_, above_, std::vector<int>(static_cast<std::size_t>(k)), k, *mn - 1, *mx + 1};
  return st.count(0, 0);
}

Int128 count_occurrences(const Permutation& p, const Permutation& q) {
  if (q.size() > p.size()) return 0;
  return PatternCounter(q).count(p.ranks());
}

Int128 count_occurrences_naive(const Permutation& p, const Permutation& q) {
  const int n = p.size();
  const int k = q.size();
  if (n > kNaiveCountMaxLength) {
    throw InvalidInput("naive counter limited to |p| <= " + std::to_string(kNaiveCountMaxLength));
  }
  if (k > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> sub(static_cast<std::size_t>(k));
  Int128 total = 0;
  while (true) {
    for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = p[idx[static_cast<std::size_t>(i)]];
    if (same_type(sub, q.ranks())) total = checked_add(total, 1);
    // advance to the next k-subset in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

std::optional<LayerProfile> decompose_layers(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return std::nullopt;
  std::vector<int> layers;
  int start = 0;
  int covered = 0;  // values 1..covered used by the layers so far
  while (start < n) {
    int end = start + 1;
    while (end < n && p[end] < p[end - 1]) ++end;
    const int len = end - start;
    // a layer must be exactly the block covered+len, ..., covered+1
    if (p[start] != covered + len || p[end - 1] != covered + 1) return std::nullopt;
    layers.push_back(len);
    covered += len;
    start = end;
  }
  return LayerProfile(std::move(layers));
}

Int128 count_qell_in_layered(const LayerProfile& profile, int ell) {
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  Int128 total = 0;
  Int128 prefix = 0;
  for (int b : profile.layers()) {
    total = checked_add(total, checked_mul(prefix, binomial(b, ell)));
    prefix += b;
  }
  return total;
}

Int128 count_layered_in_layered(const LayerProfile& q_profile, const LayerProfile& p_profile) {
  const auto a = q_profile.layers();
  const auto b = p_profile.layers();
  // ways[i] = embeddings of the first i layers of q into the p-layers seen so far
  std::vector<Int128> ways(a.size() + 1, 0);
  ways[0] = 1;
  for (int bj : b) {
    for (std::size_t i = a.size(); i >= 1; --i) {
      ways[i] = checked_add(ways[i], checked_mul(ways[i - 1], binomial(bj, a[i - 1])));
    }
  }
  return ways[a.size()];
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n + 1 - p[n - 1 - i];
  return Permutation(std::move(r));
}

}  // namespace packdense

#include "topvert/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace topvert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

long Partition::norm2() const {
  long s = 0;
  for (int x : parts_) s += static_cast<long>(x) * x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError("empty partition string (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad partition part '" + std::string(tok) + "' in '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

PartitionStats stats(const Partition& p) { return {p.size(), p.norm2(), p.length()}; }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}

void bounded_rec(const std::vector<int>& cap, std::size_t i, int max_part, std::vector<int>& cur,
                 std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (i >= cap.size()) return;
  for (int v = 1; v <= std::min(cap[i], max_part); ++v) {
    cur.push_back(v);
    bounded_rec(cap, i + 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto p = partitions_of(k);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<Partition> common_subpartitions(const Partition& a, const Partition& b) {
  std::vector<int> cap;
  for (int i = 0; i < std::min(a.length(), b.length()); ++i)
    cap.push_back(std::min(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
  std::vector<Partition> out;
  std::vector<int> cur;
  bounded_rec(cap, 0, cap.empty() ? 0 : cap.front(), cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x > y;
  });
  return out;
}

int LegTriple::max_extent() const {
  return std::max({lambda[0], lambda.length(), mu[0], mu.length(), nu[0], nu.length()});
}

int LegTriple::legs_containing(const Cell& c) const {
  const auto [i, j, k] = c;
  int n = 0;
  if (j < lambda[static_cast<std::size_t>(k)]) ++n;
  if (k < mu[static_cast<std::size_t>(i)]) ++n;
  if (i < nu[static_cast<std::size_t>(j)]) ++n;
  return n;
}

std::string LegTriple::to_string() const {
  return lambda.to_string() + ";" + mu.to_string() + ";" + nu.to_string();
}

LegTriple LegTriple::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    parts.push_back(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (parts.size() != 3) throw ParseError("leg triple needs three partitions separated by ';'");
  return {Partition::parse(parts[0]), Partition::parse(parts[1]), Partition::parse(parts[2])};
}

std::vector<LegTriple> leg_triples_up_to(int n) {
  std::vector<LegTriple> out;
  const auto all = partitions_up_to(n);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (a.size() + b.size() + c.size() <= n) out.push_back({a, b, c});
  return out;
}

MinimalConfig minimal_config(const LegTriple& legs) {
  MinimalConfig mc;
  const int m = legs.max_extent();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const int n = legs.legs_containing({i, j, k});
        if (n >= 2) {
          mc.overlaps.push_back({{i, j, k}, n});
          mc.base_volume += 1 - n;
        }
      }
  return mc;
}

bool Partition3D::is_valid() const {
  std::set<Cell> boxes;
  for (const auto& c : extra) {
    if (c[0] < 0 || c[1] < 0 || c[2] < 0) return false;
    if (legs.legs_containing(c) != 0) return false;
    if (!boxes.insert(c).second) return false;
  }
  for (const auto& c : extra)
    for (int axis = 0; axis < 3; ++axis) {
      if (c[static_cast<std::size_t>(axis)] == 0) continue;
      Cell prev = c;
      --prev[static_cast<std::size_t>(axis)];
      if (legs.legs_containing(prev) == 0 && !boxes.contains(prev)) return false;
    }
  return true;
}

long Partition3D::renormalized_volume() const {
  return minimal_config(legs).base_volume + static_cast<long>(extra.size());
}

}  // namespace topvert

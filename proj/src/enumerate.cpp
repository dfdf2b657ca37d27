#include <algorithm>
#include <cstdint>
#include <tuple>

#include "topvert/parallel.hpp"
#include "topvert/partitions.hpp"

namespace topvert {

namespace {

auto cell_key(const Cell& c) { return std::make_tuple(c[0] + c[1] + c[2], c[0], c[1]); }
bool key_less(const Cell& a, const Cell& b) { return cell_key(a) < cell_key(b); }

// Depth-first search over stability-closed sets of extra boxes. Each set is
// produced once: the candidate list only ever gains cells that the newest box
// made addable, and skipped candidates stay excluded below the branch point.
class Search {
 public:
  Search(const LegTriple& legs, int budget, int box)
      : legs_(legs), budget_(budget), b_(box),
        occ_(static_cast<std::size_t>(box) * box * box, 0),
        counts_(static_cast<std::size_t>(budget) + 1, 0) {
    for (int i = 0; i < b_; ++i)
      for (int j = 0; j < b_; ++j)
        for (int k = 0; k < b_; ++k)
          if (legs_.legs_containing({i, j, k}) > 0) occ_[index({i, j, k})] = 1;
  }

  std::vector<Cell> initial_candidates() const {
    std::vector<Cell> out;
    for (int i = 0; i < b_; ++i)
      for (int j = 0; j < b_; ++j)
        for (int k = 0; k < b_; ++k)
          if (addable({i, j, k})) out.push_back({i, j, k});
    std::sort(out.begin(), out.end(), key_less);
    return out;
  }

  // Explores every set whose smallest-index candidate is cands[t].
  void branch(const std::vector<Cell>& cands, std::size_t t, int depth) {
    if (depth >= budget_) return;
    const Cell c = cands[t];
    occ_[index(c)] = 1;
    std::vector<Cell> fresh;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      Cell s = c;
      ++s[axis];
      if (addable(s)) fresh.push_back(s);
    }
    std::sort(fresh.begin(), fresh.end(), key_less);
    std::vector<Cell> next;
    next.reserve(cands.size() - t - 1 + fresh.size());
    std::merge(cands.begin() + static_cast<std::ptrdiff_t>(t) + 1, cands.end(), fresh.begin(), fresh.end(),
               std::back_inserter(next), key_less);
    ++counts_[static_cast<std::size_t>(depth) + 1];
    for (std::size_t u = 0; u < next.size(); ++u) branch(next, u, depth + 1);
    occ_[index(c)] = 0;
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  std::size_t index(const Cell& c) const {
    return (static_cast<std::size_t>(c[0]) * b_ + c[1]) * b_ + c[2];
  }
  bool inside(const Cell& c) const { return c[0] < b_ && c[1] < b_ && c[2] < b_; }
  bool addable(const Cell& c) const {
    if (!inside(c) || occ_[index(c)]) return false;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      if (c[axis] == 0) continue;
      Cell p = c;
      --p[axis];
      if (!occ_[index(p)]) return false;
    }
    return true;
  }

  const LegTriple& legs_;
  int budget_;
  int b_;
  std::vector<std::uint8_t> occ_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

int default_bounding_box(const LegTriple& legs, int budget) {
  return budget + legs.max_extent() + 1;
}

std::map<long, Integer> enumerate_asymptotic(const LegTriple& legs, int budget,
                                             const EnumerateOptions& opts) {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  const int box = opts.box > 0 ? opts.box : default_bounding_box(legs, budget);
  const long base = minimal_config(legs).base_volume;

  const Search root(legs, budget, box);
  const std::vector<Cell> cands = root.initial_candidates();
  std::vector<std::vector<std::uint64_t>> partial(cands.size());
  parallel_for(cands.size(), opts.jobs, [&](std::size_t t) {
    Search s(legs, budget, box);
    s.branch(cands, t, 0);
    partial[t] = s.counts();
  });

  std::vector<Integer> total(static_cast<std::size_t>(budget) + 1);
  total[0] = 1;
  for (const auto& part : partial)
    for (std::size_t d = 0; d < part.size(); ++d) total[d] += Integer(static_cast<unsigned long>(part[d]));
  std::map<long, Integer> out;
  for (std::size_t d = 0; d < total.size(); ++d) out[base + static_cast<long>(d)] = total[d];
  return out;
}

PSeries vertex_box_counting(const LegTriple& legs, HalfExp top, const EnumerateOptions& opts) {
  const long base = minimal_config(legs).base_volume;
  const long budget = top.floor() - base;
  if (budget < 0) return PSeries::zero(top);
  std::vector<std::pair<HalfExp, Rational>> terms;
  for (const auto& [v, n] : enumerate_asymptotic(legs, static_cast<int>(budget), opts))
    terms.emplace_back(HalfExp::from_int(v), Rational(n));
  return PSeries::from_terms(terms, top);
}

}  // namespace topvert

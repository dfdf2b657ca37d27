#include <doctest.h>

#include "helpers.hpp"
#include "topvert/partitions.hpp"
#include "topvert/products.hpp"

using namespace topvert;
using topvert::testing::hx;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Counts valid configurations by trying every set of at most `budget` boxes
// in the search cube.
std::map<long, long> brute_force_counts(const LegTriple& legs, int budget) {
  const int box = default_bounding_box(legs, budget);
  std::vector<Cell> cells;
  for (int i = 0; i < box; ++i)
    for (int j = 0; j < box; ++j)
      for (int k = 0; k < box; ++k)
        if (legs.legs_containing({i, j, k}) == 0) cells.push_back({i, j, k});
  std::map<long, long> out;
  Partition3D pi{legs, {}};
  const long base = minimal_config(legs).base_volume;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pi.is_valid()) ++out[base + static_cast<long>(pi.extra.size())];
    if (static_cast<int>(pi.extra.size()) == budget) return;
    for (std::size_t t = from; t < cells.size(); ++t) {
      pi.extra.push_back(cells[t]);
      self(self, t + 1);
      pi.extra.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("conjugate and stats") {
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(P({2, 2}).conjugate() == P({2, 2}));
  for (const auto& p : partitions_up_to(7)) {
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().size() == p.size());
  }
  auto s = stats(P({2, 1}));
  CHECK(s.size == 3);
  CHECK(s.norm2 == 5);
  CHECK(s.length == 2);
  s = stats(Partition());
  CHECK((s.size == 0 && s.norm2 == 0 && s.length == 0));
  s = stats(P({4}));
  CHECK((s.size == 4 && s.norm2 == 16 && s.length == 1));
}

TEST_CASE("partition text format") {
  CHECK(Partition::parse("3,1") == P({3, 1}));
  CHECK(Partition::parse("-").empty());
  CHECK(P({3, 1}).to_string() == "3,1");
  CHECK_THROWS_AS(Partition::parse("1,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("1,,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("0"), ParseError);
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
  CHECK_THROWS_AS(Partition::parse("x"), ParseError);
  const LegTriple t = LegTriple::parse("3,1;2;-");
  CHECK(t.lambda == P({3, 1}));
  CHECK(t.mu == P({2}));
  CHECK(t.nu.empty());
  CHECK(t.to_string() == "3,1;2;-");
  CHECK_THROWS_AS(LegTriple::parse("1;1"), ParseError);
}

TEST_CASE("partitions of n") {
  const auto four = partitions_of(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == P({4}));
  CHECK(four[1] == P({3, 1}));
  CHECK(four[2] == P({2, 2}));
  CHECK(four[3] == P({2, 1, 1}));
  CHECK(four[4] == P({1, 1, 1, 1}));
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});

  const QSeries gen = euler_product(q_pochhammer_factors(6, -1), 6, HalfExp::unbounded());
  const std::vector<long> expected{1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) {
    CHECK(static_cast<long>(partitions_of(n).size()) == expected[static_cast<std::size_t>(n)]);
    CHECK(gen[n].coeff(hx(0)) == static_cast<long>(partitions_of(n).size()));
  }
}

TEST_CASE("common subpartitions") {
  const auto s = common_subpartitions(P({2, 1}), P({1, 1}));
  CHECK(s == std::vector<Partition>{Partition(), P({1}), P({1, 1})});
  CHECK(common_subpartitions(Partition(), P({3})) == std::vector<Partition>{Partition()});
}

TEST_CASE("minimal configurations") {
  const Partition box = Partition::box();
  CHECK(minimal_config({box, {}, {}}).base_volume == 0);
  CHECK(minimal_config({box, box, {}}).base_volume == -1);
  CHECK(minimal_config({box, box, box}).base_volume == -2);
  CHECK(minimal_config({box, box, box}).overlaps.size() == 1);

  CHECK(Partition3D{{box, box, box}, {}}.renormalized_volume() == -2);
  CHECK(Partition3D{{}, {{0, 0, 0}}}.renormalized_volume() == 1);
  const Partition3D one{{box, {}, {}}, {{0, 1, 0}}};
  CHECK(one.is_valid());
  CHECK(one.renormalized_volume() == 1);
  CHECK_FALSE(Partition3D{{}, {{0, 1, 0}}}.is_valid());
  CHECK_FALSE(Partition3D{{box, {}, {}}, {{5, 0, 0}}}.is_valid());
}

TEST_CASE("enumeration") {
  const auto m = enumerate_asymptotic({}, 6);
  std::vector<long> got;
  for (const auto& [v, n] : m) got.push_back(n.get_si());
  CHECK(got == std::vector<long>{1, 1, 3, 6, 13, 24, 48});

  const Partition box = Partition::box();
  CHECK(enumerate_asymptotic({box, {}, {}}, 0) == std::map<long, Integer>{{0, 1}});
  CHECK(enumerate_asymptotic({box, box, box}, 0) == std::map<long, Integer>{{-2, 1}});
}

TEST_CASE("enumeration agrees with brute force") {
  const std::vector<LegTriple> cases{
      {Partition::box(), {}, {}},
      {P({2}), P({1}), {}},
      {P({1, 1}), P({1}), P({1})},
      {P({2, 1}), {}, P({1})},
  };
  for (const auto& legs : cases) {
    const auto fast = enumerate_asymptotic(legs, 3);
    const auto slow = brute_force_counts(legs, 3);
    for (const auto& [v, n] : fast) CHECK(n.get_si() == (slow.contains(v) ? slow.at(v) : 0));
  }
}

TEST_CASE("enumeration symmetries, box stability and jobs") {
  for (const auto& legs : leg_triples_up_to(3)) {
    const auto base = enumerate_asymptotic(legs, 4);
    CHECK(enumerate_asymptotic(legs.cycled(), 4) == base);
    CHECK(enumerate_asymptotic(legs.reflected(), 4) == base);
    CHECK(enumerate_asymptotic(legs, 4, {default_bounding_box(legs, 4) + 1, 1}) == base);
    CHECK(enumerate_asymptotic(legs, 4, {0, 3}) == base);
  }
}

TEST_CASE("box-counting vertex") {
  const PSeries m = macmahon(hx(6));
  CHECK(vertex_box_counting({}, hx(6)) == m);
  const PSeries one_leg = vertex_box_counting({Partition::box(), {}, {}}, hx(6));
  CHECK(one_leg == (m * PSeries::from_terms({{hx(0), 1}, {hx(1), -1}}).inverse(hx(6))));
  CHECK(one_leg.top() == hx(6));
}

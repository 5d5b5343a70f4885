#include <doctest.h>

#include <algorithm>
#include <set>

#include "dynwg/error.hpp"
#include "dynwg/rootdata.hpp"
#include "oracles.hpp"

using namespace dynwg;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

std::vector<int> coords(const CorootVector& g) { return g.coords; }

}  // namespace

TEST_CASE("Lie types parse and validate") {
  CHECK(LieType::parse("A2").name() == "A2");
  CHECK(LieType::parse("g2").name() == "G2");
  CHECK_THROWS_AS(LieType::parse("B1"), InvalidArgument);
  CHECK_THROWS_AS(LieType::parse("G3"), InvalidArgument);
  CHECK_THROWS_AS(LieType::parse("D2"), InvalidArgument);
  CHECK_THROWS_AS(LieType::parse("E5"), InvalidArgument);
  CHECK_THROWS_AS(LieType::parse("F"), InvalidArgument);
  CHECK_NOTHROW(LieType::parse("E8"));
  CHECK_NOTHROW(LieType::parse("F4"));
}

TEST_CASE("Cartan matrices follow Bourbaki numbering") {
  CHECK(cartan_matrix(LieType::parse("A1")) == CartanMatrix{{2}});
  CHECK(cartan_matrix(LieType::parse("A2")) == CartanMatrix{{2, -1}, {-1, 2}});
  // alpha_1 long: <alpha_1, coroot_2> = -2.
  CHECK(cartan_matrix(LieType::parse("B2")) == CartanMatrix{{2, -1}, {-2, 2}});
  for (const auto& t : kTypes) {
    CAPTURE(t);
    CHECK(cartan_matrix(LieType::parse(t)) == oracle::cartan(t));
  }
}

TEST_CASE("simple reflections") {
  RootSystem a1(LieType::parse("A1"));
  CHECK(a1.simple_reflection(1, Weight{3}) == Weight{-3});
  RootSystem a2(LieType::parse("A2"));
  CHECK(a2.simple_reflection(1, Weight{1, 0}) == Weight{-1, 1});
  CHECK(a2.simple_reflection(1, Weight{0, 1}) == Weight{0, 1});
  CHECK_THROWS_AS(a2.simple_reflection(3, Weight{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(a2.simple_reflection(0, Weight{0, 1}), InvalidArgument);

  for (const auto& t : kTypes) {
    RootSystem rs(LieType::parse(t));
    const auto a = oracle::cartan(t);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> c(rs.rank());
        for (int k = 0; k < rs.rank(); ++k) c[k] = (trial * 7 + k * 3 + i) % 5 - 2;
        const Weight mu(c);
        CHECK(rs.simple_reflection(i, rs.simple_reflection(i, mu)) == mu);
        CHECK(rs.simple_reflection(i, mu).coords == oracle::reflect(a, i, c));
      }
  }
}

TEST_CASE("act applies the rightmost letter first") {
  RootSystem a2(LieType::parse("A2"));
  CHECK(a2.act(WeylWord{}, Weight{2, 5}) == Weight{2, 5});
  CHECK(a2.act(WeylWord{1, 2, 1}, Weight{1, 0}) == Weight{0, -1});
  CHECK(a2.act(WeylWord{2, 1, 2}, Weight{1, 0}) == Weight{0, -1});
  // s1 s2 on (1,0): s2 fixes it, then s1 gives (-1,1).
  CHECK(a2.act(WeylWord{1, 2}, Weight{1, 0}) == Weight{-1, 1});
  CHECK(a2.act(WeylWord{2, 1}, Weight{1, 0}) == Weight{0, -1});
}

TEST_CASE("reducedness") {
  RootSystem a2(LieType::parse("A2"));
  CHECK(a2.is_reduced(WeylWord{1, 2, 1}));
  CHECK_FALSE(a2.is_reduced(WeylWord{1, 1}));
  CHECK(a2.is_reduced(WeylWord{}));
  CHECK_FALSE(a2.is_reduced(WeylWord{1, 2, 1, 2}));
  RootSystem b2(LieType::parse("B2"));
  CHECK(b2.is_reduced(WeylWord{1, 2, 1, 2}));
  CHECK_FALSE(b2.is_reduced(WeylWord{1, 2, 1, 2, 1}));
  RootSystem g2(LieType::parse("G2"));
  CHECK(g2.is_reduced(WeylWord{1, 2, 1, 2, 1, 2}));
  CHECK_FALSE(g2.is_reduced(WeylWord{2, 1, 2, 1, 2, 1, 2}));
}

TEST_CASE("crossing coroots") {
  RootSystem a2(LieType::parse("A2"));
  auto g = a2.crossing_coroots(WeylWord{1, 2});
  REQUIRE(g.size() == 2);
  CHECK(coords(g[0]) == std::vector<int>{0, 1});
  CHECK(coords(g[1]) == std::vector<int>{1, 1});
  CHECK(coords(a2.crossing_coroots(WeylWord{2})[0]) == std::vector<int>{0, 1});
  RootSystem a1(LieType::parse("A1"));
  CHECK(coords(a1.crossing_coroots(WeylWord{1})[0]) == std::vector<int>{1});
  CHECK_THROWS_AS(a2.crossing_coroots(WeylWord{2, 2}), NotReduced);

  // For the longest element the crossing coroots are exactly the positive coroots.
  for (const auto& t : kTypes) {
    CAPTURE(t);
    RootSystem rs(LieType::parse(t));
    auto cs = rs.crossing_coroots(rs.longest_element());
    std::set<std::vector<int>> got;
    for (const auto& c : cs) {
      CHECK(c.is_positive());
      got.insert(c.coords);
    }
    CHECK(got.size() == cs.size());
    const auto expect = oracle::positive_coroots(oracle::cartan(t));
    CHECK(got == std::set<std::vector<int>>(expect.begin(), expect.end()));
  }
}

TEST_CASE("reduced word enumeration") {
  RootSystem a2(LieType::parse("A2"));
  auto w = a2.all_reduced_words(a2.longest_element(), 32);
  CHECK(w == std::vector<WeylWord>{WeylWord{1, 2, 1}, WeylWord{2, 1, 2}});
  RootSystem a1(LieType::parse("A1"));
  CHECK(a1.all_reduced_words(WeylWord{1}, 32) == std::vector<WeylWord>{WeylWord{1}});
  RootSystem b2(LieType::parse("B2"));
  auto wb = b2.all_reduced_words(b2.longest_element(), 32);
  CHECK(wb.size() == 2);
  for (const auto& x : wb) CHECK(x.length() == 4);
  // A3 longest element has 16 reduced words.
  RootSystem a3(LieType::parse("A3"));
  auto wa3 = a3.all_reduced_words(a3.longest_element(), 32);
  CHECK(wa3.size() == 16);
  for (const auto& x : wa3) {
    CHECK(a3.is_reduced(x));
    CHECK(WeylElement::from_word(a3, x) == WeylElement::from_word(a3, a3.longest_element()));
  }
  CHECK(a3.all_reduced_words(a3.longest_element(), 5).size() == 5);
}

TEST_CASE("positive coroots, longest element and dominance") {
  RootSystem a2(LieType::parse("A2"));
  std::set<std::vector<int>> pos;
  for (const auto& g : a2.positive_coroots()) pos.insert(g.coords);
  CHECK(pos == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  RootSystem a1(LieType::parse("A1"));
  CHECK(a1.longest_element() == WeylWord{1});
  CHECK(is_dominant(Weight{0, 0}));
  CHECK_FALSE(is_dominant(Weight{1, -1}));

  RootSystem b2(LieType::parse("B2"));
  std::set<std::vector<int>> pb;
  for (const auto& g : b2.positive_coroots()) pb.insert(g.coords);
  CHECK(pb == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});

  for (const auto& t : kTypes) {
    CAPTURE(t);
    RootSystem rs(LieType::parse(t));
    const auto a = oracle::cartan(t);
    CHECK(rs.positive_coroots().size() == oracle::positive_coroots(a).size());
    CHECK(rs.positive_roots().size() == oracle::positive_roots(a).size());
    CHECK(rs.longest_element().length() == rs.positive_coroots().size());
    // The longest element sends rho to -rho.
    Weight neg = rs.rho();
    for (auto& c : neg.coords) c = -c;
    CHECK(rs.act(rs.longest_element(), rs.rho()) == neg);
    // 2 rho-check is the sum of positive coroots and pairs to 2 with each simple root.
    CorootVector s(std::vector<int>(rs.rank(), 0));
    for (const auto& g : rs.positive_coroots())
      for (int k = 0; k < rs.rank(); ++k) s.coords[k] += g.coords[k];
    CHECK(rs.two_rho_check() == s);
    for (int j = 1; j <= rs.rank(); ++j) {
      int p = 0;
      for (int k = 0; k < rs.rank(); ++k) p += s.coords[k] * rs.cartan(k + 1, j);
      CHECK(p == 2);
    }
  }
}

TEST_CASE("Weyl group invariants") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    RootSystem rs(LieType::parse(t));
    const auto group = oracle::weyl_group(oracle::cartan(t));
    const std::size_t expected_order = t == "A1" ? 2 : t == "A2" ? 6 : t == "A3" ? 24 : t == "B2" ? 8 : t == "G2" ? 12 : 48;
    CHECK(group.size() == expected_order);
    // Pairing invariance on generators: <s_i mu, s_i gamma> = <mu, gamma>.
    for (int i = 1; i <= rs.rank(); ++i)
      for (const auto& g : rs.positive_coroots()) {
        Weight mu(std::vector<int>(rs.rank(), 0));
        for (int k = 0; k < rs.rank(); ++k) mu.coords[k] = k + 2 * i - 3;
        CHECK(pairing(rs.simple_reflection(i, mu), rs.reflect_coroot(i, g)) == pairing(mu, g));
      }
    // Each orbit has exactly one dominant weight, and its size divides |W|.
    for (const Weight& mu : {Weight(std::vector<int>(rs.rank(), 1)), Weight(std::vector<int>(rs.rank(), 0))}) {
      Weight start = rs.act(rs.longest_element(), mu);
      auto orb = rs.orbit(start);
      CHECK(std::count_if(orb.begin(), orb.end(), [](const Weight& w) { return is_dominant(w); }) == 1);
      CHECK(expected_order % orb.size() == 0);
    }
    CHECK(rs.orbit(rs.rho()).size() == expected_order);
  }
}

TEST_CASE("canonical words identify Weyl elements") {
  RootSystem a2(LieType::parse("A2"));
  CHECK(a2.canonical_word(WeylWord{2, 1, 2}) == WeylWord{1, 2, 1});
  CHECK(a2.canonical_word(WeylWord{}) == WeylWord{});
  RootSystem g2(LieType::parse("G2"));
  for (const auto& e : oracle::weyl_group(oracle::cartan("G2"))) {
    const WeylWord w(e.word);
    const WeylWord c = g2.canonical_word(w);
    CHECK(g2.is_reduced(c));
    CHECK(c.length() == w.length());
    CHECK(WeylElement::from_word(g2, c) == WeylElement::from_word(g2, w));
    auto all = g2.all_reduced_words(w, 100);
    CHECK(all.front() == c);
  }
}

TEST_CASE("parsing of weights and words") {
  CHECK(Weight::parse("1,-2, 3") == Weight{1, -2, 3});
  CHECK(WeylWord::parse("") == WeylWord{});
  CHECK(WeylWord::parse("1,2,1") == WeylWord{1, 2, 1});
  CHECK_THROWS_AS(Weight::parse("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(Weight::parse("a"), InvalidArgument);
}

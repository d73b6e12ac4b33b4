#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace minorstar;
using testing_support::brute_cyclic;
using testing_support::brute_unordered;
using testing_support::double_wheel;

TEST(Pattern, ParsesBothKindsAndInfinity) {
  const auto c = parse_cyclic("< 5, 6,6 ,5,* >");
  EXPECT_EQ(c.str(), "<5,6,6,5,*>");
  EXPECT_TRUE(c.bounds[4].is_infinite());
  EXPECT_TRUE(c.bounds[4].admits(1000));
  EXPECT_FALSE(c.bounds[1].admits(7));
  const auto u = parse_unordered("(5,6,7)");
  EXPECT_EQ(u.rays(), 3u);
  EXPECT_EQ(u.str(), "(5,6,7)");
  EXPECT_LT(Bound::at_most(99), Bound::infinite());
}

TEST(Pattern, RejectsMalformed) {
  for (const char* bad : {"<5,6,6,5>", "<5,6,6,5,6,7>", "<5,4,6,5,6>", "(5,6", "5,6,7", "(5,x)", "()", "(5,5,5,5,5,5)",
                          "<5,,6,5,6>", "<5,6,6,5,-1>"}) {
    EXPECT_THROW(parse_pattern(bad), PatternError) << bad;
  }
  EXPECT_THROW(parse_cyclic("(5,6)"), PatternError);
  EXPECT_THROW(parse_unordered("<5,5,5,5,5>"), PatternError);
}

TEST(Pattern, ListFileLineNumbers) {
  const auto list = parse_pattern_list("# header\n<5,6,6,5,*>\n\n<6,6,6,6,11> # trailing\n");
  ASSERT_EQ(list.size(), 2u);
  try {
    parse_pattern_list("<5,6,6,5,*>\n<5,6,6>\n");
    FAIL();
  } catch (const PatternError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Pattern, BuiltinListsMatchShippedFiles) {
  for (auto [file, list] : {std::pair{"/theorem1.pat", &theorem1_list()}, std::pair{"/theorem2.pat", &theorem2_list()}}) {
    std::ifstream f(std::string(MINORSTAR_PATTERN_DATA) + file);
    ASSERT_TRUE(f) << file;
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(parse_pattern_list(ss.str()), *list) << file;
  }
  EXPECT_EQ(theorem1_list().size(), 34u);
  EXPECT_EQ(theorem2_list().size(), 40u);
  // Spot checks of printed entries.
  EXPECT_EQ(theorem1_list().front().str(), "<5,7,7,5,17>");
  EXPECT_EQ(theorem1_list()[8].str(), "<5,6,6,5,*>");
  EXPECT_EQ(theorem1_list().back().str(), "<5,5,9,5,17>");
  EXPECT_EQ(theorem2_list().front().str(), "<5,5,5,7,17>");
  EXPECT_EQ(theorem2_list()[26].str(), "<5,6,7,5,23>");
  EXPECT_EQ(theorem2_list().back().str(), "<5,5,11,5,13>");
}

TEST(Classify, NeighborKinds) {
  // Host rotation degrees: 5-neighbors flanked in different ways.
  const std::vector<int> d{5, 7, 5, 5, 5, 5, 5, 6, 5, 8};
  EXPECT_TRUE(classify_position(d, 0).strong);  // flanks 8 and 7
  EXPECT_FALSE(classify_position(d, 0).non_strong);
  EXPECT_FALSE(classify_position(d, 1).is_five());
  const auto c2 = classify_position(d, 2);
  EXPECT_TRUE(c2.non_strong);
  EXPECT_FALSE(c2.weak);
  const auto c4 = classify_position(d, 4);
  EXPECT_TRUE(c4.weak);
  EXPECT_TRUE(c4.twice_weak);
  const auto c3 = classify_position(d, 3);
  EXPECT_TRUE(c3.weak);
  EXPECT_FALSE(c3.twice_weak);  // two steps back is the 7
  const auto c8 = classify_position(d, 8);
  EXPECT_TRUE(c8.strong);
  EXPECT_THROW(classify_position(d, 10), std::out_of_range);
}

TEST(Classify, DoubleWheelRingIsTwiceWeakAroundPole) {
  const PlaneGraph g = double_wheel(10);
  for (int i = 0; i < 10; ++i) {
    const auto c = classify_neighbor(g, 0, i);
    EXPECT_TRUE(c.twice_weak);
  }
  EXPECT_THROW(classify_neighbor(g, 0, 10), std::out_of_range);
}

TEST(CyclicMatch, AlignmentsAreLoggedAndLeavesFollowPatternOrder) {
  const PlaneGraph g = double_wheel(7);
  // Ring vertex 2: neighbors are the 7-pole and four 5-vertices.
  const auto p = parse_cyclic("<7,5,5,5,5>");
  const auto matches = match_cyclic(g, 2, p);
  ASSERT_EQ(matches.size(), 2u);  // one per orientation
  for (const auto& m : matches) {
    ASSERT_EQ(m.leaves.size(), 5u);
    EXPECT_EQ(m.leaves[0], 0);
    for (int j = 0; j < 5; ++j) EXPECT_TRUE(p.bounds[j].admits(g.degree(m.leaves[j])));
    EXPECT_EQ(m.weight, 5 + 7 + 20);
    EXPECT_EQ(m.height, 7);
  }
  EXPECT_NE(matches[0].orientation, matches[1].orientation);
  EXPECT_TRUE(match_cyclic(g, 0, p).empty());  // the pole has degree 7
}

TEST(CyclicMatch, IcosahedronFirstListedStar) {
  const PlaneGraph g = icosahedron();
  const auto m1 = find_listed_star(g, theorem1_list());
  ASSERT_TRUE(m1);
  EXPECT_EQ(m1->list_position, 1);
  EXPECT_EQ(m1->center, 0);
  EXPECT_EQ(m1->weight, 30);
  const auto m2 = find_listed_star(g, theorem2_list());
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->list_position, 1);
  EXPECT_THROW(find_listed_star(PlaneGraph::from_rotation({{1}, {0}}), theorem1_list()), std::invalid_argument);
}

// Oracle: scan the list with the brute-force dihedral matcher.
TEST(CyclicMatch, FindListedStarAgreesWithBruteScan) {
  for (const PlaneGraph& g : testing_support::small_corpus(40, 120).graphs) {
    for (const auto* list : {&theorem1_list(), &theorem2_list()}) {
      std::optional<std::pair<int, Vertex>> expect;
      for (int k = 0; k < static_cast<int>(list->size()) && !expect; ++k) {
        for (Vertex v = 0; v < g.order() && !expect; ++v) {
          if (g.degree(v) != 5) continue;
          std::array<int, 5> d{};
          for (int i = 0; i < 5; ++i) d[i] = g.degree(g.neighbor(v, i));
          if (brute_cyclic(d, (*list)[k])) expect = {k + 1, v};
        }
      }
      const auto got = find_listed_star(g, *list);
      ASSERT_EQ(got.has_value(), expect.has_value());
      if (got) {
        EXPECT_EQ(got->list_position, expect->first);
        EXPECT_EQ(got->center, expect->second);
      }
    }
  }
}

TEST(CyclicMatch, RandomConfigurationsAgreeWithDihedralOracle) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30000; ++t) {
    std::array<int, 5> d{};
    for (auto& x : d) x = 5 + static_cast<int>(rng() % 16);
    CyclicPattern p;
    for (auto& b : p.bounds) b = testing_support::random_bound(rng);
    ASSERT_EQ(cyclic_fits(d, p), brute_cyclic(d, p));
    ASSERT_EQ(!cyclic_alignments(d, p).empty(), brute_cyclic(d, p));
  }
  EXPECT_EQ(testing_support::dihedral5().size(), 10u);
}

TEST(CyclicMatch, MirrorHasSameStars) {
  for (const PlaneGraph& g : testing_support::small_corpus(15).graphs) {
    const PlaneGraph m = mirror(g);
    for (const auto& p : theorem1_list()) EXPECT_EQ(contains_cyclic(g, p), contains_cyclic(m, p));
  }
}

TEST(UnorderedMatch, RandomConfigurationsAgreeWithPermutationOracle) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20000; ++t) {
    std::vector<int> d(3 + rng() % 4);
    for (auto& x : d) x = 3 + static_cast<int>(rng() % 12);
    UnorderedPattern p;
    const std::size_t rays = 1 + rng() % 5;
    while (p.bounds.size() < rays) p.bounds.push_back(testing_support::random_bound(rng));
    ASSERT_EQ(unordered_fits(d, p), brute_unordered(d, p));
  }
}

TEST(UnorderedMatch, IcosahedronAndMinorCenters) {
  const PlaneGraph g = icosahedron();
  EXPECT_TRUE(contains_minor_unordered(g, parse_unordered("(6)")));
  EXPECT_TRUE(contains_minor_unordered(g, parse_unordered("(5,5,5,5,5)")));
  EXPECT_FALSE(contains_minor_unordered(double_wheel(7), parse_unordered("(6,6,6,6,6)")));
  EXPECT_TRUE(contains_minor_unordered(double_wheel(7), parse_unordered("(5,5,5,5)")));
}

// Oracle: minimum over every k-subset of neighbors.
TEST(StarMeasures, LightestStarAgreesWithSubsetOracle) {
  for (const PlaneGraph& g : testing_support::small_corpus(15, 60).graphs) {
    for (int k = 1; k <= 5; ++k) {
      std::optional<int> best_w, best_h;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 5) continue;
        const auto d = neighbor_degrees(g, v);
        const int n = static_cast<int>(d.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
          if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
          int w = g.degree(v), h = g.degree(v);
          for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) {
              w += d[i];
              h = std::max(h, d[i]);
            }
          }
          best_w = best_w ? std::min(*best_w, w) : w;
          best_h = best_h ? std::min(*best_h, h) : h;
        }
      }
      EXPECT_EQ(min_weight_minor_star(g, k), best_w);
      EXPECT_EQ(min_height_minor_star(g, k), best_h);
    }
  }
  EXPECT_EQ(min_weight_minor_star(icosahedron(), 4), 25);
  EXPECT_EQ(min_weight_minor_star(icosahedron(), 5), 30);
  EXPECT_THROW(min_weight_minor_star(icosahedron(), 6), std::invalid_argument);
}

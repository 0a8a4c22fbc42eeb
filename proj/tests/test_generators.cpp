#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mixsep/classify.hpp"
#include "mixsep/error.hpp"
#include "mixsep/generators.hpp"

using namespace mixsep;
using namespace mixsep::testing;

TEST(Enumerator, Counts) {
  EXPECT_EQ(GraphEnumerator(2, {EdgeKind::Line}).count(), 2U);
  EXPECT_EQ(GraphEnumerator(2, KindSet::all()).count(), 32U);
  EXPECT_EQ(GraphEnumerator(3, {EdgeKind::Arrow}).count(), 64U);
  EXPECT_EQ(GraphEnumerator(3, KindSet::all()).count(), std::uint64_t{1} << 15);
  EXPECT_EQ(GraphEnumerator(1, KindSet::all()).count(), 1U);
}

TEST(Enumerator, DuplicateFreeAndComplete) {
  const GraphEnumerator all(2, KindSet::all());
  std::vector<std::string> seen;
  for (const Graph& a : all) {
    EXPECT_EQ(a.size(), 2U);
    seen.push_back(serialize_graph(a));
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  EXPECT_EQ(seen.size(), 32U);
  EXPECT_EQ(all.at(0).edges().size(), 0U);
  EXPECT_EQ(all.at(31).edges().size(), 5U);
}

TEST(Enumerator, OnlyRequestedKinds) {
  for (const Graph& a : GraphEnumerator(3, {EdgeKind::Arc, EdgeKind::Dotted})) {
    EXPECT_FALSE(a.has_kind(EdgeKind::Line));
    EXPECT_FALSE(a.has_kind(EdgeKind::Arrow));
  }
}

TEST(Enumerator, SizeLimit) {
  try {
    GraphEnumerator(5, {EdgeKind::Line});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(RandomGraph, SingleNode) {
  for (ClassId id : all_classes()) {
    const Graph a = random_graph({1, id, 0.9, 3});
    EXPECT_EQ(a.size(), 1U);
    EXPECT_TRUE(a.edges().empty());
  }
}

TEST(RandomGraph, DenseBidirectedTriangle) {
  EXPECT_EQ(random_graph({3, ClassId::BG, 1.0, 11}), g("0 <-> 1\n1 <-> 2\n0 <-> 2"));
}

TEST(RandomGraph, DensityZeroIsEmpty) {
  const Graph a = random_graph({4, ClassId::Any, 0.0, 5});
  EXPECT_EQ(a.size(), 4U);
  EXPECT_TRUE(a.edges().empty());
}

TEST(RandomGraph, SamplesBelongToTheirClass) {
  for (ClassId id : all_classes()) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const double density = 0.1 + 0.8 * static_cast<double>(seed % 9) / 8.0;
      const Graph a = random_graph({5, id, density, seed});
      ASSERT_TRUE(is_member(a, id)) << to_string(id) << "\n" << serialize_graph(a);
      for (const Edge& e : a.edges()) ASSERT_TRUE(admissible_kinds(id).contains(e.kind));
    }
  }
}

TEST(RandomGraph, Deterministic) {
  for (ClassId id : all_classes()) {
    EXPECT_EQ(random_graph({5, id, 0.5, 42}), random_graph({5, id, 0.5, 42}));
  }
  int differing = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    if (random_graph({5, ClassId::Any, 0.3, seed}) != random_graph({5, ClassId::Any, 0.3, seed + 1})) {
      ++differing;
    }
  }
  EXPECT_GT(differing, 10);
}

TEST(RandomGraph, AllKindsShowUp) {
  KindSet seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = random_graph({5, ClassId::Any, 0.3, seed});
    for (const Edge& e : a.edges()) seen.insert(e.kind);
  }
  EXPECT_EQ(seen, KindSet::all());
}

TEST(RandomGraph, BadSpecs) {
  for (const GenSpec& s : {GenSpec{0, ClassId::Any, 0.5, 0}, GenSpec{65, ClassId::Any, 0.5, 0},
                           GenSpec{3, ClassId::Any, 1.5, 0}, GenSpec{3, ClassId::Any, -0.1, 0}}) {
    try {
      random_graph(s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsatisfiableSpec);
    }
  }
}

TEST(AdmissibleKinds, Examples) {
  EXPECT_EQ(admissible_kinds(ClassId::UG), KindSet{EdgeKind::Line});
  EXPECT_EQ(admissible_kinds(ClassId::DAG), KindSet{EdgeKind::Arrow});
  EXPECT_FALSE(admissible_kinds(ClassId::CMG).contains(EdgeKind::Dotted));
  EXPECT_EQ(admissible_kinds(ClassId::Any), KindSet::all());
}

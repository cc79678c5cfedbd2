#include <gtest/gtest.h>

#include "support.hpp"
#include "twc/verify.hpp"

using namespace twc;

namespace {

oracle::Space base_space(const Nerve& y) {
  oracle::Space s;
  s.vertices = y.vertices;
  for (const auto& e : y.edges) s.edges.push_back({e[0], e[1]});
  for (const auto& t : y.tris) s.tris.push_back(t);
  return s;
}

}  // namespace

TEST(Correspondence, PlainH1MatchesOracle) {
  const Nerve filled = nerve_from_maximal(4, {{0, 1, 2}, {1, 2, 3}, {0, 3}});
  for (const auto& name : builtin_group_names()) {
    const GroupPtr h = builtin_group(name);
    EXPECT_EQ(plain_h1(fixtures::y_tri(), h).size(), oracle::plain_h1(base_space(fixtures::y_tri()), support::grp(*h)))
        << name;
    EXPECT_EQ(plain_h1(filled, h).size(), oracle::plain_h1(base_space(filled), support::grp(*h))) << name;
    EXPECT_EQ(plain_h1(fixtures::y_tri(), h).size(), static_cast<int>(conjugacy_classes(*h).size()));
  }
}

TEST(Correspondence, FiberMatchesOracle) {
  for (const auto& p : fixtures::default_grid()) {
    if (p.space != "X_HEX") continue;
    const CoverDescent ds = quotient(p.x);
    const auto hat = build_twisted_product(p.data);
    const FiberResult fib = fiber_over_cover(ds.down, hat, ds);
    const int want = support::brute_fiber(ds, hat);
    EXPECT_EQ(static_cast<int>(fib.members.size()), want) << p.name;
    EXPECT_EQ(h1_reduced(p.x, p.data).size(), want) << p.name;
    EXPECT_TRUE(fib.criteria_agree);
  }
}

TEST(Correspondence, DescendAscend) {
  for (const auto& p : fixtures::default_grid()) {
    if (p.space == "Y_TRI") continue;
    const CoverDescent ds = quotient(p.x);
    const FramedSystem sys = c_twisted_system(ds, p.data);
    for (const auto& rep : h1_twisted(p.x, p.data).reps) {
      const TwistedCocycle e = deserialize(p.x, rep);
      const CTwistedCocycleY yc = descend(ds, p.data, e);
      EXPECT_TRUE(framed_is_cocycle(sys, yc.k)) << p.name;
      const TwistedCocycle back = ascend(yc);
      EXPECT_TRUE(is_twisted_cocycle(p.x, p.data, back).ok);
      EXPECT_EQ(h1_key(p.x, p.data.action, back), h1_key(p.x, p.data.action, e));
      const GhatCocycleY gc = to_ghat_cocycle(yc, build_twisted_product(p.data));
      EXPECT_TRUE(framed_is_cocycle(plain_system(ds.down, gc.ghat->group), gc.x));
    }
  }
}

TEST(Correspondence, DescendNeedsFreeAction) {
  const auto tri = validate_gamma_nerve(nerve_from_maximal(3, {{0, 1, 2}}), builtin_group("C2"), {{0, 1, 2}, {1, 0, 2}});
  try {
    quotient(tri);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), "NotFree");
  }
}

TEST(Correspondence, ConnectedReductionNeedsConnectedBase) {
  const Nerve two = nerve_from_maximal(2, {{0}, {1}});
  const TwistedData d = trivial_data(trivial_action(builtin_group("C2"), builtin_group("C2")));
  const GhatCocycleY x{build_twisted_product(d), {}};
  try {
    connected_reduction(two, x);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), "Disconnected");
  }
}

TEST(Correspondence, SuitesPassOnGrid) {
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& cl : {verify_correspondence(p), verify_roundtrips(p)})
      for (const auto& c : cl.checks) EXPECT_TRUE(c.pass) << p.name << ": " << c.name << " " << c.detail;
  }
}

TEST(Correspondence, TwoTriangleCounts) {
  const auto grid = fixtures::default_grid();
  const auto c4 = fixtures::filter_grid(grid, "TWO_TRI,C4,inv,triv").front();
  EXPECT_EQ(h1_reduced(c4.x, c4.data).size(), 3);
  const auto q8 = fixtures::filter_grid(grid, "TWO_TRI,Q8,outer,triv").front();
  EXPECT_EQ(h1_reduced(q8.x, q8.data).size(), 4);
}

// The descent depends on the chosen section; the counts must not.
TEST(Correspondence, CountsIndependentOfSection) {
  for (const auto& p : fixtures::default_grid()) {
    if (p.space != "X_HEX") continue;
    const CoverDescent base = quotient(p.x);
    const auto hat = build_twisted_product(p.data);
    const int want = static_cast<int>(fiber_over_cover(base.down, hat, base).members.size());
    const int ny = base.down.vertices;
    for (int mask = 0; mask < (1 << ny); ++mask) {
      std::vector<int> section(ny);
      for (int k = 0; k < ny; ++k) section[k] = p.x.v(base.section[k], (mask >> k) & 1);
      const CoverDescent ds = quotient(p.x, section);
      EXPECT_EQ(static_cast<int>(fiber_over_cover(ds.down, hat, ds).members.size()), want) << p.name << " " << mask;
      for (const auto& rep : h1_twisted(p.x, p.data).reps) {
        const TwistedCocycle e = deserialize(p.x, rep);
        const CTwistedCocycleY yc = descend(ds, p.data, e);
        EXPECT_EQ(h1_key(p.x, p.data.action, ascend(yc)), h1_key(p.x, p.data.action, e)) << p.name;
      }
    }
  }
}

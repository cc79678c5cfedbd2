#include <gtest/gtest.h>

#include "support.hpp"
#include "twc/verify.hpp"

using namespace twc;

namespace {

GammaNerve tetra_c2() {
  return validate_gamma_nerve(nerve_from_maximal(4, {{0, 1, 2, 3}}), builtin_group("C2"), {{0, 1, 2, 3}, {1, 0, 2, 3}});
}

}  // namespace

// A contractible Γ-complex with a Γ-fixed vertex has the group cohomology of Γ.
TEST(H2, ContractibleMatchesGroupCohomology) {
  const GroupPtr c2 = builtin_group("C2"), c4 = builtin_group("C4");
  const std::vector<GammaAction> acts{trivial_action(c2, c2), trivial_action(c2, c4), fixtures::theta_inv(c4),
                                      trivial_action(c2, builtin_group("C2xC2"))};
  for (const auto& x : {fixtures::nerve_by_name("POINT_C2"), support::flipped_triangle(), tetra_c2()}) {
    for (const auto& act : acts) {
      const CohomologySet h = h2(x, act);
      EXPECT_EQ(h.size(), static_cast<int>(oracle::h2_classes(support::module(act)).size()))
          << act.g->label << " on " << x.nerve.vertices << " vertices";
    }
  }
  const GammaNerve tri3 = support::rotated_triangle();
  const GammaAction act = trivial_action(tri3.gamma, c2);
  EXPECT_EQ(h2(tri3, act).size(), static_cast<int>(oracle::h2_classes(support::module(act)).size()));
}

TEST(H2, VanishesOnFreeGraphs) {
  const GammaAction act = trivial_action(builtin_group("C2"), builtin_group("C4"));
  EXPECT_EQ(h2(fixtures::x_hex(), act).size(), 1);
  EXPECT_EQ(h2(fixtures::two_triangles(), act).size(), 1);
}

TEST(H2, PreimageOfCoboundary) {
  const GammaNerve x = tetra_c2();
  const GammaAction act = fixtures::theta_inv(builtin_group("C4"));
  const H2Engine eng(x, act);
  TwistedCocycle c = trivial_cocycle(x, *act.g);
  for (size_t e = 0; e < c.a.size(); ++e) c.a[e] = static_cast<int>(e % 4);
  for (auto& v : c.phi[1]) v = 3;
  const CochainTriple t = d1(x, act, c);
  ASSERT_TRUE(eng.in_kernel(t));
  const auto pre = eng.preimage(t);
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(d1(x, act, *pre), t);
  EXPECT_EQ(eng.key(t), eng.key(d1(x, act, trivial_cocycle(x, *act.g))));
}

TEST(Les, AllPassOnGrid) {
  for (const auto& p : fixtures::default_grid()) {
    const CheckList cl = verify_les(p);
    for (const auto& c : cl.checks) EXPECT_TRUE(c.pass) << p.name << ": " << c.name << " " << c.detail;
    EXPECT_GE(cl.checks.size(), 17u);
  }
}

TEST(Les, SignFlipFails) {
  int detected = 0, points = 0;
  for (const auto& p : fixtures::default_grid()) {
    if (p.data.G().order == 2) continue;  // the flip is invisible when every element is its own inverse
    ++points;
    const CheckList cl = les_verify(p.x, p.data, {}, Fault::SignFlip);
    detected += !cl.all_pass();
  }
  EXPECT_EQ(detected, points);
}

TEST(Les, ExistenceAgreesWithH1) {
  std::vector<std::pair<GammaNerve, TwistedData>> cases;
  for (const auto& p : fixtures::default_grid()) cases.push_back({p.x, p.data});
  for (const auto& d : support::c2_data("Q8")) cases.push_back({support::flipped_triangle(), d});
  for (const auto& d : support::c2_data("C4")) cases.push_back({fixtures::nerve_by_name("POINT_C2"), d});
  int empty = 0;
  for (const auto& [x, d] : cases) {
    const ExistenceResult ex = existence_check(x, d);
    const int n = h1_twisted(x, d).size();
    EXPECT_EQ(ex.exists, n > 0);
    if (ex.witness) EXPECT_TRUE(is_twisted_cocycle(x, d, *ex.witness).ok);
    empty += n == 0;
  }
  EXPECT_GT(empty, 0);
}

TEST(Les, LesOnNonFreeSpaces) {
  for (const auto& d : support::c2_data("Q8")) {
    const CheckList cl = les_verify(support::flipped_triangle(), d);
    for (const auto& c : cl.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  }
}

TEST(Bundles, ReductionsCountGaugesToTrivial) {
  for (const auto& p : fixtures::default_grid()) {
    if (!p.data.c_trivial()) continue;
    const CohomologySet h = h1_twisted(p.x, p.data);
    for (const auto& rep : h.reps) {
      const TwistedCocycle e = deserialize(p.x, rep);
      const ReductionSet r = reductions_to_subgroup(p.x, p.data, e, {0});
      // brute: gauges that make the cocycle trivial
      long long count = 0;
      const int nv = p.x.nerve.vertices, ng = p.data.G().order;
      const TwistedCocycle triv = trivial_cocycle(p.x, p.data.G());
      std::vector<int> g(nv, 0);
      while (true) {
        count += gauge(p.x, p.data.action, e, g) == triv;
        int k = 0;
        while (k < nv && ++g[k] == ng) g[k++] = 0;
        if (k == nv) break;
      }
      EXPECT_EQ(static_cast<long long>(r.reductions.size()), count) << p.name;
    }
  }
}

TEST(Bundles, MapCoefficientsToQuotient) {
  for (const auto& p : fixtures::default_grid()) {
    const LesContext ctx = les_context(p.x, p.data);
    if (!p.data.c_trivial()) continue;
    for (const auto& rep : h1_twisted(p.x, p.data).reps) {
      const TwistedCocycle e = deserialize(p.x, rep);
      const TwistedCocycle q = project_cocycle(ctx, e);
      EXPECT_TRUE(is_twisted_cocycle(p.x, trivial_data(ctx.q_act), q).ok);
      const MappedCocycle m = map_coefficients(p.x, p.data, e, GroupHom{p.data.action.g, ctx.q.group, ctx.q.proj}, ctx.q_act);
      EXPECT_EQ(m.cocycle, q);
    }
  }
}

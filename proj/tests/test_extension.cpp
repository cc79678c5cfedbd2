#include <gtest/gtest.h>

#include "support.hpp"
#include "twc/extension.hpp"

using namespace twc;

namespace {

std::vector<GammaAction> modules() {
  const GroupPtr c2 = builtin_group("C2"), c4 = builtin_group("C4"), v4 = builtin_group("C2xC2");
  std::vector<GammaAction> out{trivial_action(c2, c2), trivial_action(c2, c4), fixtures::theta_inv(c4),
                               trivial_action(c4, c2), trivial_action(v4, c2), trivial_action(cyclic_group(3, "C3"), c2)};
  // C2 swapping the two generators of C2xC2
  std::vector<int> swap(4);
  for (int x = 0; x < 4; ++x) swap[x] = x;
  swap[1] = 2;
  swap[2] = 1;
  if (is_hom(*v4, *v4, swap)) out.push_back(cyclic_action(c2, v4, swap));
  return out;
}

bool accepted(const GammaAction& act, const std::vector<int>& c) {
  try {
    check_cocycle(act, c);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

TEST(Extension, CheckCocycleMatchesOracle) {
  for (const auto& act : modules()) {
    const oracle::Module m = support::module(act);
    for (const auto& c : oracle::all_cochains(m)) {
      const bool want = oracle::normalized(m, c) && oracle::two_cocycle(m, c);
      EXPECT_EQ(accepted(act, c), want);
    }
  }
}

TEST(Extension, ProductTableMatchesOracle) {
  for (const auto& act : modules()) {
    const oracle::Module m = support::module(act);
    for (const auto& c : oracle::all_cochains(m)) {
      const Table t = twisted_product_table(act, c);
      ASSERT_EQ(t, oracle::twisted_product(m.z, m.gamma, m.theta, c));
      // the product is associative exactly when the cocycle identity holds
      EXPECT_EQ(oracle::associative(t), oracle::two_cocycle(m, c));
    }
  }
}

TEST(Extension, SecondCohomologyMatchesOracle) {
  for (const auto& act : modules()) {
    const auto want = oracle::h2_classes(support::module(act));
    const H2Gamma h2 = second_cohomology(act);
    ASSERT_EQ(h2.size(), static_cast<int>(want.size())) << act.gamma->label << " on " << act.g->label;
    EXPECT_TRUE(std::all_of(h2.reps[0].begin(), h2.reps[0].end(), [](int v) { return v == 0; }));
    for (const auto& cls : want) {
      const int id = h2.class_of(cls.front());
      for (const auto& c : cls) EXPECT_EQ(h2.class_of(c), id);
      EXPECT_EQ(h2.reps[id], cls.front());  // lexicographically minimal
    }
  }
}

TEST(Extension, C2OnC4ByInversion) {
  const GammaAction act = fixtures::theta_inv(builtin_group("C4"));
  const H2Gamma h2 = second_cohomology(act);
  ASSERT_EQ(h2.size(), 2);
  const auto d4 = build_twisted_product(check_cocycle(act, h2.reps[0]));
  const auto q8 = build_twisted_product(check_cocycle(act, h2.reps[1]));
  EXPECT_TRUE(oracle::isomorphic(support::grp(*d4->group), support::grp(*builtin_group("D4"))));
  EXPECT_TRUE(oracle::isomorphic(support::grp(*q8->group), support::grp(*builtin_group("Q8"))));
}

TEST(Extension, TwistedProductStructure) {
  for (const auto& p : fixtures::default_grid()) {
    const auto hat = build_twisted_product(p.data);
    const FiniteGroup& h = *hat->group;
    EXPECT_EQ(h.order, p.data.G().order * p.data.Gamma().order);
    check_hom(hat->q);
    for (int x = 0; x < p.data.G().order; ++x) EXPECT_EQ(hat->q(hat->embed_g[x]), 0);
    for (int a = 0; a < p.data.Gamma().order; ++a) {
      EXPECT_EQ(hat->q(hat->s[a]), a);
      // s(γ) g s(γ)^-1 = θ_γ(g)
      for (int x = 0; x < p.data.G().order; ++x)
        EXPECT_EQ(h.op(h.op(hat->s[a], hat->embed_g[x]), h.inv[hat->s[a]]), hat->embed_g[p.data.action.apply(a, x)]);
      // s(γ)s(γ') = c(γ,γ') s(γγ')
      for (int b = 0; b < p.data.Gamma().order; ++b)
        EXPECT_EQ(h.op(hat->s[a], hat->s[b]),
                  h.op(hat->embed_g[p.data.cc(a, b)], hat->s[p.data.Gamma().op(a, b)]));
    }
  }
}

TEST(Extension, ExtractRoundTrip) {
  for (const auto& p : fixtures::default_grid()) {
    const auto hat = build_twisted_product(p.data);
    const ExtractedData ex = extract_twisted_data(hat->group, hat->embed_g, hat->s);
    check_hom(ex.iso);
    EXPECT_TRUE(is_bijection(ex.iso.map, hat->group->order));
    EXPECT_EQ(ex.data.Gamma().order, p.data.Gamma().order);
  }
}

TEST(Extension, CohomologousIsoIsIsomorphism) {
  const GammaAction act = trivial_action(builtin_group("C2"), builtin_group("C4"));
  const TwistedData d = trivial_data(act);
  for (int v = 0; v < 4; ++v) {
    const CohomologousIso ci = cohomologous_iso(d, {0, v});
    check_hom(ci.iso);
    EXPECT_TRUE(is_bijection(ci.iso.map, 8));
  }
}

TEST(Extension, RecocyclingIsoIsIsomorphism) {
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& s : admissible_recocyclings(p.data)) {
      const Recocycling r = recocycle(p.data, s);
      const auto from = build_twisted_product(r.from), to = build_twisted_product(r.to);
      const GroupHom iso = recocycle_iso(r, from, to);
      check_hom(iso);
      EXPECT_TRUE(is_bijection(iso.map, from->group->order));
      EXPECT_EQ(iso.source, to->group);
    }
  }
}

TEST(Extension, Errors) {
  const GammaAction act = trivial_action(builtin_group("C2"), builtin_group("S3"));
  try {
    check_cocycle(act, std::vector<int>{0, 0, 0, 1});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), "ValueNotCentral");
  }
  try {
    check_cocycle(act, std::vector<int>{1, 0, 0, 0});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), "NotNormalized");
  }
  EXPECT_THROW(make_action(builtin_group("C2"), builtin_group("C4"), {{0, 1, 2, 3}, {0, 2, 1, 3}}), ValidationError);
}

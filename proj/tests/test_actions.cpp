#include <gtest/gtest.h>

#include "support.hpp"
#include "twc/verify.hpp"

using namespace twc;

namespace {

// Axioms checked directly on tables, right side:
// (m·g)·h = m·(gh), (m·γ)·γ' = (m·c(γ,γ'))·(γγ'), (m·g)·γ = (m·γ)·θ_γ^-1(g).
bool right_axioms(const TwistedGSet& m) {
  const FiniteGroup& g = m.data.G();
  const FiniteGroup& gm = m.data.Gamma();
  for (int p = 0; p < m.size; ++p) {
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y)
        if (m.g_act[y][m.g_act[x][p]] != m.g_act[g.op(x, y)][p]) return false;
    for (int a = 0; a < gm.order; ++a)
      for (int b = 0; b < gm.order; ++b)
        if (m.gamma_act[b][m.gamma_act[a][p]] != m.gamma_act[gm.op(a, b)][m.g_act[m.data.cc(a, b)][p]]) return false;
    for (int x = 0; x < g.order; ++x)
      for (int a = 0; a < gm.order; ++a)
        if (m.gamma_act[a][m.g_act[x][p]] != m.g_act[m.data.action.apply_inv(a, x)][m.gamma_act[a][p]]) return false;
  }
  return true;
}

}  // namespace

TEST(Actions, FixturesSatisfyAxioms) {
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const TwistedGSet m = ns.set.side == Side::Right ? ns.set : convert_side(ns.set);
      EXPECT_TRUE(right_axioms(m)) << p.name << " " << ns.name;
    }
  }
}

// (iii) with c moved past γγ' by (ii): (m·γ)·γ' = (m·γγ')·θ_{γγ'}^-1(c(γ,γ')).
TEST(Actions, RewrittenAxiomThreeHolds) {
  int sets = 0;
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const TwistedGSet m = ns.set.side == Side::Right ? ns.set : convert_side(ns.set);
      const FiniteGroup& gm = m.data.Gamma();
      for (int q = 0; q < m.size; ++q)
        for (int a = 0; a < gm.order; ++a)
          for (int b = 0; b < gm.order; ++b) {
            const int ab = gm.op(a, b);
            EXPECT_EQ(m.gamma_act[b][m.gamma_act[a][q]],
                      m.g_act[m.data.action.apply_inv(ab, m.data.cc(a, b))][m.gamma_act[ab][q]])
                << p.name << " " << ns.name;
          }
      ++sets;
    }
  }
  EXPECT_GT(sets, 100);
}

TEST(Actions, RoundTripsOnGrid) {
  for (const auto& p : fixtures::default_grid()) {
    const CheckList cl = verify_action_roundtrips(p.data);
    for (const auto& c : cl.checks) EXPECT_TRUE(c.pass) << p.name << ": " << c.name;
  }
}

TEST(Actions, GhatActionIsAnAction) {
  for (const auto& p : fixtures::default_grid()) {
    const auto hat = build_twisted_product(p.data);
    const FiniteGroup& h = *hat->group;
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const GhatSet n = to_ghat(ns.set, hat);
      for (int m = 0; m < n.size; ++m)
        for (int x = 0; x < h.order; ++x)
          for (int y = 0; y < h.order; ++y) {
            const int lhs = n.side == Side::Right ? n.act[y][n.act[x][m]] : n.act[x][n.act[y][m]];
            ASSERT_EQ(lhs, n.act[h.op(x, y)][m]) << p.name << " " << ns.name;
          }
    }
  }
}

TEST(Actions, ValidationCatchesBrokenTables) {
  const auto p = fixtures::filter_grid(fixtures::default_grid(), "X_HEX,C4,inv,cQ").front();
  const auto hat = build_twisted_product(p.data);
  const TwistedGSet m = regular_right(*hat);
  Table gamma_act = m.gamma_act;
  std::swap(gamma_act[1][0], gamma_act[1][1]);
  EXPECT_THROW(validate_twisted_action(p.data, m.size, m.g_act, gamma_act, Side::Right), ValidationError);
  Table g_act = m.g_act;
  std::swap(g_act[1][0], g_act[1][1]);
  EXPECT_THROW(validate_twisted_action(p.data, m.size, g_act, m.gamma_act, Side::Right), ValidationError);
}

TEST(Actions, QuotientByG) {
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const GammaQuotient q = quotient_by_G(ns.set);
      for (int m = 0; m < ns.set.size; ++m)
        for (int x = 0; x < p.data.G().order; ++x) EXPECT_EQ(q.proj[ns.set.g_act[x][m]], q.proj[m]);
      for (int a = 0; a < p.data.Gamma().order; ++a)
        for (int m = 0; m < ns.set.size; ++m) EXPECT_EQ(q.proj[ns.set.gamma_act[a][m]], q.gamma_act[a][q.proj[m]]);
    }
  }
}

TEST(Actions, HomogeneousSpaceRight) {
  const auto p = fixtures::filter_grid(fixtures::default_grid(), "X_HEX,S3,conj,triv").front();
  for (const auto& h : std::vector<std::vector<int>>{{0}, center(p.data.G()).elements}) {
    const HomogeneousSpace hs = homogeneous_space_right(p.data, h);
    EXPECT_EQ(hs.set.size * static_cast<int>(h.size()), p.data.G().order);
    EXPECT_TRUE(right_axioms(hs.set));
    for (int k = 0; k < hs.set.size; ++k) EXPECT_EQ(hs.coset_of[hs.coset_rep[k]], k);
  }
}

// Independent count: maps f: E -> M with f(x·e) = x·f(e) for every Ĝ element x.
long long ghat_maps(const GhatSet& e, const GhatSet& m) {
  long long count = 0;
  std::vector<int> f(e.size, 0);
  while (true) {
    bool ok = true;
    for (int p = 0; p < e.size && ok; ++p)
      for (size_t x = 0; x < e.act.size() && ok; ++x) ok = f[e.act[x][p]] == m.act[x][f[p]];
    count += ok;
    int k = 0;
    while (k < e.size && ++f[k] == m.size) f[k++] = 0;
    if (k == e.size) break;
  }
  return count;
}

TEST(Actions, EquivariantSectionsLemma) {
  int cases = 0;
  for (const auto& p : fixtures::default_grid()) {
    if (p.space != "X_HEX" || p.data.G().order > 4) continue;
    const auto hat = build_twisted_product(p.data);
    const TwistedGSet e = regular_right(*hat);
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const TwistedGSet m = ns.set.side == Side::Right ? ns.set : convert_side(ns.set);
      if (m.size > 4) continue;
      const LemmaCount r = equivariant_sections_lemma(e, m);
      EXPECT_EQ(r.disagreements, 0) << p.name << " " << ns.name;
      EXPECT_EQ(r.ghat_equivariant, r.gamma_sections);
      EXPECT_EQ(r.ghat_equivariant, ghat_maps(to_ghat(e, hat), to_ghat(m, hat)));
      EXPECT_LE(r.ghat_equivariant, r.g_maps);
      ++cases;
    }
  }
  EXPECT_GT(cases, 10);
  // E must be G-free
  const auto p = fixtures::default_grid()[4];
  EXPECT_THROW(equivariant_sections_lemma(point_set(p.data), point_set(p.data)), ValidationError);
}

TEST(Actions, TransportUnderRecocycling) {
  for (const auto& p : fixtures::default_grid()) {
    for (const auto& s : admissible_recocyclings(p.data)) {
      const Recocycling r = recocycle(p.data, s);
      for (const auto& ns : twisted_set_fixtures(p.data)) {
        const TwistedGSet t = transport(ns.set, r);
        EXPECT_EQ(t.size, ns.set.size);
        EXPECT_EQ(t.g_act, ns.set.g_act);
        const TwistedGSet right = t.side == Side::Right ? t : convert_side(t);
        EXPECT_TRUE(right_axioms(right)) << p.name << " " << ns.name;
      }
    }
  }
}

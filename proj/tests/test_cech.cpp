#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "twc/cech.hpp"

using namespace twc;

namespace {

struct Case {
  std::string name;
  GammaNerve x;
  TwistedData d;
};

std::vector<Case> small_cases(double max_cost) {
  std::vector<Case> out;
  const std::vector<std::pair<std::string, GammaNerve>> spaces{{"square", support::square()},
                                                               {"hex", fixtures::x_hex()},
                                                               {"tri3", support::rotated_triangle()},
                                                               {"tri2", support::flipped_triangle()},
                                                               {"point", fixtures::nerve_by_name("POINT_C2")}};
  for (const auto& [name, x] : spaces)
    for (const std::string g : {"C2", "C4", "S3", "Q8"}) {
      std::vector<TwistedData> ds;
      if (x.gamma->order == 2)
        ds = support::c2_data(g);
      else
        ds.push_back(trivial_data(trivial_action(x.gamma, builtin_group(g))));
      for (const auto& d : ds) {
        const double cost = std::pow(d.G().order, x.nerve.edges.size() + (x.gamma->order - 1) * x.nerve.vertices);
        if (cost <= max_cost) out.push_back({name + "/" + g + (d.c_trivial() ? "" : "/c"), x, d});
      }
    }
  return out;
}

TwistedCocycle random_gauge(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c, std::mt19937& rng) {
  std::vector<int> h(x.nerve.vertices);
  for (auto& v : h) v = static_cast<int>(rng() % d.G().order);
  return gauge(x, d.action, c, h);
}

GammaNerve tetra_c2() {
  return validate_gamma_nerve(nerve_from_maximal(4, {{0, 1, 2, 3}}), builtin_group("C2"), {{0, 1, 2, 3}, {1, 0, 2, 3}});
}

}  // namespace

TEST(Cech, H1MatchesBruteForce) {
  int checked = 0;
  for (const auto& c : small_cases(3e6)) {
    const CohomologySet h = h1_twisted(c.x, c.d);
    EXPECT_EQ(h.size(), oracle::twisted_h1(support::space(c.x), support::twist(c.d))) << c.name;
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(Cech, RepresentativesAreCocycles) {
  for (const auto& c : small_cases(1e9)) {
    const CohomologySet h = h1_twisted(c.x, c.d);
    std::set<std::vector<int>> keys;
    for (const auto& rep : h.reps) {
      const TwistedCocycle t = deserialize(c.x, rep);
      EXPECT_TRUE(is_twisted_cocycle(c.x, c.d, t).ok) << c.name;
      EXPECT_EQ(serialize(t), rep);
      keys.insert(h1_key(c.x, c.d.action, t));
    }
    EXPECT_EQ(static_cast<int>(keys.size()), h.size());
    if (c.d.c_trivial() && h.size() > 0) {
      EXPECT_EQ(h.distinguished, h.class_of(serialize(trivial_cocycle(c.x, c.d.G()))));
    } else {
      EXPECT_EQ(h.distinguished, -1);
    }
  }
}

TEST(Cech, GaugeInvariance) {
  std::mt19937 rng(11);
  for (const auto& p : fixtures::default_grid()) {
    const CohomologySet h = h1_twisted(p.x, p.data);
    for (const auto& rep : h.reps) {
      const TwistedCocycle t = deserialize(p.x, rep);
      for (int k = 0; k < 5; ++k) {
        const TwistedCocycle moved = random_gauge(p.x, p.data, t, rng);
        ASSERT_TRUE(is_twisted_cocycle(p.x, p.data, moved).ok) << p.name;
        EXPECT_EQ(h1_key(p.x, p.data.action, moved), h1_key(p.x, p.data.action, t));
        EXPECT_EQ(h.class_of(serialize(moved)), h.class_of(rep));
      }
      std::vector<int> g_used;
      const TwistedCocycle n = forest_normalize(p.x, p.data.action, t, &g_used);
      EXPECT_EQ(gauge(p.x, p.data.action, t, g_used), n);
      const Forest f = spanning_forest(p.x.nerve);
      for (size_t e = 0; e < n.a.size(); ++e)
        if (f.is_tree_edge[e]) EXPECT_EQ(n.a[e], 0);
    }
  }
}

TEST(Cech, GaugeIsAnAction) {
  std::mt19937 rng(5);
  for (const auto& p : fixtures::default_grid()) {
    const CohomologySet h = h1_twisted(p.x, p.data);
    if (h.size() == 0) continue;
    const TwistedCocycle t = deserialize(p.x, h.reps.back());
    const FiniteGroup& g = p.data.G();
    std::vector<int> h1(p.x.nerve.vertices), h2(p.x.nerve.vertices), h12(p.x.nerve.vertices);
    for (int v = 0; v < p.x.nerve.vertices; ++v) {
      h1[v] = static_cast<int>(rng() % g.order);
      h2[v] = static_cast<int>(rng() % g.order);
      h12[v] = g.op(h1[v], h2[v]);
    }
    const auto& act = p.data.action;
    EXPECT_EQ(gauge(p.x, act, gauge(p.x, act, t, h1), h2), gauge(p.x, act, t, h12)) << p.name;
  }
}

TEST(Cech, DSquaredIsTrivial) {
  std::mt19937 rng(3);
  const GroupPtr c4 = builtin_group("C4"), v4 = builtin_group("C2xC2");
  const std::vector<GammaAction> acts{trivial_action(builtin_group("C2"), c4), fixtures::theta_inv(c4),
                                      trivial_action(builtin_group("C2"), v4)};
  for (const auto& x : {tetra_c2(), support::flipped_triangle(), fixtures::x_hex()}) {
    for (const auto& act : acts) {
      for (int trial = 0; trial < 50; ++trial) {
        TwistedCocycle c = trivial_cocycle(x, *act.g);
        for (auto& v : c.a) v = static_cast<int>(rng() % act.g->order);
        for (size_t gm = 1; gm < c.phi.size(); ++gm)
          for (auto& v : c.phi[gm]) v = static_cast<int>(rng() % act.g->order);
        EXPECT_TRUE(is_trivial(d2(x, act, d1(x, act, c))));
      }
    }
  }
}

TEST(Cech, D1DetectsCocycles) {
  for (const auto& c : small_cases(1e9)) {
    const CohomologySet h = h1_twisted(c.x, c.d);
    for (const auto& rep : h.reps) EXPECT_EQ(d1(c.x, c.d.action, deserialize(c.x, rep)), cocycle_target(c.x, c.d));
  }
}

TEST(Cech, ReducedIsQuotient) {
  for (const auto& p : fixtures::default_grid()) {
    const CohomologySet h = h1_twisted(p.x, p.data);
    const CohomologySet r = h1_reduced(p.x, p.data);
    EXPECT_LE(r.size(), h.size());
    const int zg = static_cast<int>(gamma_center(p.data.Gamma()).size());
    EXPECT_GE(r.size() * zg, h.size()) << p.name;
  }
  const auto hex = fixtures::filter_grid(fixtures::default_grid(), "X_HEX,C4,inv,triv").front();
  EXPECT_EQ(h1_reduced(hex.x, hex.data).size(), 2);
}

TEST(Cech, EmptyH1) {
  const GammaNerve pt = fixtures::nerve_by_name("POINT_C2");
  const TwistedData d = fixtures::c2_cocycle(trivial_action(builtin_group("C2"), builtin_group("C2")), 1);
  EXPECT_EQ(h1_twisted(pt, d).size(), 0);
  EXPECT_EQ(oracle::twisted_h1(support::space(pt), support::twist(d)), 0);
  EXPECT_FALSE(existence_check(pt, d).exists);
}

TEST(Cech, Budget) {
  const auto p = fixtures::filter_grid(fixtures::default_grid(), "TWO_TRI,Q8,triv,triv").front();
  EXPECT_THROW(h1_twisted(p.x, p.data, EnumBudget{10}), BudgetExceeded);
}

TEST(Cech, H0) {
  for (const auto& p : fixtures::default_grid()) {
    const H0Group h0 = h0_twisted(p.x, p.data.action);
    // brute: h with h_{vγ} = θ_γ^-1(h_v) and h constant on components
    long long count = 0;
    const int nv = p.x.nerve.vertices, ng = p.data.G().order;
    std::vector<int> h(nv, 0);
    while (true) {
      bool ok = true;
      for (const auto& e : p.x.nerve.edges) ok = ok && h[e[0]] == h[e[1]];
      for (int a = 0; a < p.x.gamma->order && ok; ++a)
        for (int v = 0; v < nv && ok; ++v) ok = h[p.x.v(v, a)] == p.data.action.apply_inv(a, h[v]);
      count += ok;
      int k = 0;
      while (k < nv && ++h[k] == ng) h[k++] = 0;
      if (k == nv) break;
    }
    EXPECT_EQ(static_cast<long long>(h0.elements.size()), count) << p.name;
  }
}

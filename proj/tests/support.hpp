// Converters from library types to oracle inputs, plus small extra fixtures.
#pragma once

#include <set>

#include "oracle.hpp"
#include "twc/extension.hpp"
#include "twc/fixtures.hpp"

namespace support {

inline oracle::Grp grp(const twc::FiniteGroup& g) {
  oracle::Grp o{g.order, oracle::Table(g.order, std::vector<int>(g.order)), 0};
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) o.mul[a][b] = g.op(a, b);
  return o;
}

inline oracle::Space space(const twc::GammaNerve& x) {
  oracle::Space s;
  s.vertices = x.nerve.vertices;
  for (const auto& e : x.nerve.edges) s.edges.push_back({e[0], e[1]});
  for (const auto& t : x.nerve.tris) s.tris.push_back(t);
  s.act = x.act;
  return s;
}

inline oracle::Twist twist(const twc::TwistedData& d) {
  return {grp(d.G()), grp(d.Gamma()), d.action.theta, d.c};
}

inline oracle::Module module(const twc::GammaAction& act) { return {grp(*act.gamma), grp(*act.g), act.theta}; }

// 4-cycle with C2 acting by v -> v+2.
inline twc::GammaNerve square() {
  const twc::Nerve n = twc::nerve_from_maximal(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  return twc::validate_gamma_nerve(n, twc::builtin_group("C2"), {{0, 1, 2, 3}, {2, 3, 0, 1}}, true);
}

// Filled triangle rotated by C3; the 2-simplex is fixed.
inline twc::GammaNerve rotated_triangle() {
  const twc::Nerve n = twc::nerve_from_maximal(3, {{0, 1, 2}});
  return twc::validate_gamma_nerve(n, twc::cyclic_group(3, "C3"), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// Filled triangle with C2 swapping 0 and 1 and fixing 2.
inline twc::GammaNerve flipped_triangle() {
  const twc::Nerve n = twc::nerve_from_maximal(3, {{0, 1, 2}});
  return twc::validate_gamma_nerve(n, twc::builtin_group("C2"), {{0, 1, 2}, {1, 0, 2}});
}

// Every (θ, c) over Γ = C2 used by the grid, for a given G.
inline std::vector<twc::TwistedData> c2_data(const std::string& g_name) {
  std::vector<twc::TwistedData> out;
  for (const auto& p : twc::fixtures::default_grid())
    if (p.space == "X_HEX" && p.group == g_name) out.push_back(p.data);
  return out;
}

// Classes of H¹(Y, Ĝ) lying over the class of the cover, by brute force on Y_TRI.
inline int brute_fiber(const twc::CoverDescent& ds, const twc::TwistedProductPtr& hat) {
  const twc::Nerve& y = ds.down;
  const oracle::Grp h = support::grp(*hat->group), gm = support::grp(hat->data.Gamma());
  const int ne = static_cast<int>(y.edges.size()), nv = y.vertices;
  auto gauge_y = [&](const oracle::Grp& g, const std::vector<int>& x, const std::vector<int>& k) {
    std::vector<int> out(ne);
    for (int e = 0; e < ne; ++e) out[e] = g.op(g.op(g.inv(k[y.edges[e][0]]), x[e]), k[y.edges[e][1]]);
    return out;
  };
  auto all = [](int n, int base) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(n, 0);
    while (true) {
      out.push_back(v);
      int i = 0;
      while (i < n && ++v[i] == base) v[i++] = 0;
      if (i == n) break;
    }
    return out;
  };
  std::set<std::vector<int>> target;
  for (const auto& k : all(nv, gm.n)) target.insert(gauge_y(gm, ds.transitions.x, k));
  std::set<std::vector<int>> seen;
  int count = 0;
  const auto gauges = all(nv, h.n);
  for (const auto& x : all(ne, h.n)) {  // Y_TRI has no triangles, so every assignment is a cocycle
    if (seen.count(x)) continue;
    for (const auto& k : gauges) seen.insert(gauge_y(h, x, k));
    std::vector<int> q(ne);
    for (int e = 0; e < ne; ++e) q[e] = hat->gamma_part(x[e]);
    count += target.count(q) > 0;
  }
  return count;
}

}  // namespace support

#include <cmath>

#include "twc/cech.hpp"

namespace twc {

MappedCocycle map_coefficients(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c, const GroupHom& psi,
                               const GammaAction& target_action) {
  check_hom(psi);
  const FiniteGroup& g = d.G();
  for (int a = 0; a < x.gamma->order; ++a)
    for (int y = 0; y < g.order; ++y)
      if (psi(d.action.apply(a, y)) != target_action.apply(a, psi(y)))
        throw ValidationError("NotEquivariant", "psi does not intertwine the actions", {a, y});
  const FiniteGroup& t = *target_action.g;
  std::vector<int> c2(d.c.size());
  for (size_t k = 0; k < d.c.size(); ++k) {
    c2[k] = psi(d.c[k]);
    for (int y = 0; y < t.order; ++y)
      if (t.op(c2[k], y) != t.op(y, c2[k]))
        throw ValidationError("ImageCocycleNotCentral", "psi(c) is not central in the target",
                              {static_cast<int>(k) / x.gamma->order, static_cast<int>(k) % x.gamma->order});
  }
  MappedCocycle r{check_cocycle(target_action, c2), c};
  for (auto& v : r.cocycle.a) v = psi(v);
  for (auto& row : r.cocycle.phi)
    for (auto& v : row) v = psi(v);
  const CocycleCheck chk = is_twisted_cocycle(x, r.data, r.cocycle);
  if (!chk.ok) throw InternalError("mapped cocycle fails in component " + chk.component, chk.witness);
  return r;
}

std::vector<std::vector<int>> sections_of_associated(const GammaNerve& x, const TwistedData& d,
                                                     const TwistedCocycle& e, const TwistedGSet& m_in,
                                                     long long max_enum) {
  require_cocycle(x, d, e);
  const TwistedGSet m = m_in.side == Side::Right ? m_in : convert_side(m_in);
  const Nerve& n = x.nerve;
  const FiniteGroup& g = d.G();
  if (std::pow(static_cast<double>(m.size), n.component_count) > static_cast<double>(max_enum))
    throw BudgetExceeded("section enumeration exceeds the budget", {m.size, n.component_count});
  const Forest f = spanning_forest(n);
  std::vector<std::vector<int>> out;
  if (m.size == 0) return out;
  std::vector<int> roots(n.component_count, 0);
  while (true) {
    std::vector<int> s(n.vertices, -1);
    for (int c = 0; c < n.component_count; ++c) s[f.roots[c]] = roots[c];
    for (int v : f.order)
      if (f.parent[v] >= 0) s[v] = m.g_act[edge_value(n, g, e.a, f.parent[v], v)][s[f.parent[v]]];
    bool ok = true;
    for (const auto& ed : n.edges)
      if (s[ed[1]] != m.g_act[edge_value(n, g, e.a, ed[0], ed[1])][s[ed[0]]]) ok = false;
    for (int a = 0; a < x.gamma->order && ok; ++a)
      for (int v = 0; v < n.vertices && ok; ++v)
        if (s[x.v(v, a)] != m.g_act[g.inv[e.phi[a][v]]][m.gamma_act[a][s[v]]]) ok = false;
    if (ok) out.push_back(s);
    int k = 0;
    while (k < n.component_count && ++roots[k] == m.size) roots[k++] = 0;
    if (k >= n.component_count) break;
  }
  return out;
}

ReductionSet reductions_to_subgroup(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& e,
                                    const std::vector<int>& h) {
  const HomogeneousSpace hs = homogeneous_space_right(d, h);
  ReductionSet r;
  r.h = make_subgroup(d.G(), h, d.G().label + "_H");
  const GammaAction h_act = restrict_action(d.action, r.h);
  std::vector<int> ch(d.c.size());
  for (size_t k = 0; k < d.c.size(); ++k) ch[k] = r.h.index_of(d.c[k]);
  r.h_data = check_cocycle(h_act, ch);
  for (const auto& sec : sections_of_associated(x, d, e, hs.set)) {
    Reduction red;
    red.section = sec;
    for (int v : sec) red.gauge_used.push_back(hs.coset_rep[v]);
    TwistedCocycle w = gauge(x, d.action, e, red.gauge_used);
    for (auto& v : w.a) v = r.h.index_of(v);
    for (auto& row : w.phi)
      for (auto& v : row) v = r.h.index_of(v);
    bool inside = true;
    for (int v : w.a) inside = inside && v >= 0;
    for (const auto& row : w.phi)
      for (int v : row) inside = inside && v >= 0;
    if (!inside) throw InternalError("reduction witness leaves the subgroup", sec);
    const CocycleCheck chk = is_twisted_cocycle(x, r.h_data, w);
    if (!chk.ok) throw InternalError("reduction witness fails in component " + chk.component, chk.witness);
    red.witness = std::move(w);
    r.reductions.push_back(std::move(red));
  }
  return r;
}

TwistedCocycle transport_cocycle(const GammaNerve& x, const Recocycling& r, const TwistedCocycle& c) {
  const FiniteGroup& g = r.from.G();
  TwistedCocycle out = c;
  for (int a = 0; a < x.gamma->order; ++a)
    for (auto& v : out.phi[a]) v = g.op(v, r.from.action.apply_inv(a, r.s[a]));
  return out;
}

}  // namespace twc

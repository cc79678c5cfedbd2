#include "twc/cech.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace twc {

int edge_value(const Nerve& n, const FiniteGroup& g, const std::vector<int>& a, int i, int j) {
  const int e = n.edge_index(i, j);
  if (e < 0) throw InternalError("edge lookup failed", {i, j});
  return i < j ? a[e] : g.inv[a[e]];
}

TwistedCocycle trivial_cocycle(const GammaNerve& x, const FiniteGroup&) {
  return TwistedCocycle{std::vector<int>(x.nerve.edges.size(), 0),
                        Table(x.gamma->order, std::vector<int>(x.nerve.vertices, 0))};
}

std::vector<int> serialize(const TwistedCocycle& c) {
  std::vector<int> key = c.a;
  for (size_t gm = 1; gm < c.phi.size(); ++gm) key.insert(key.end(), c.phi[gm].begin(), c.phi[gm].end());
  return key;
}

TwistedCocycle deserialize(const GammaNerve& x, const std::vector<int>& key) {
  const size_t ne = x.nerve.edges.size();
  const int nv = x.nerve.vertices, ng = x.gamma->order;
  if (key.size() != ne + static_cast<size_t>(ng - 1) * nv) throw ValidationError("InvalidCochain", "serialized cocycle has wrong length");
  TwistedCocycle c{std::vector<int>(key.begin(), key.begin() + ne), Table(ng, std::vector<int>(nv, 0))};
  for (int gm = 1; gm < ng; ++gm)
    for (int v = 0; v < nv; ++v) c.phi[gm][v] = key[ne + static_cast<size_t>(gm - 1) * nv + v];
  return c;
}

CochainTriple d1(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c, Fault fault) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  const FiniteGroup& gm = *x.gamma;
  const int ng = gm.order;
  const bool flip = fault == Fault::SignFlip;
  CochainTriple t;
  t.u.resize(n.tris.size());
  for (size_t k = 0; k < n.tris.size(); ++k) {
    const auto& tr = n.tris[k];
    t.u[k] = g.op(g.op(edge_value(n, g, c.a, tr[0], tr[1]), edge_value(n, g, c.a, tr[1], tr[2])),
                  g.inv[edge_value(n, g, c.a, tr[0], tr[2])]);
  }
  t.v.assign(ng, std::vector<int>(n.edges.size()));
  for (int a = 0; a < ng; ++a)
    for (size_t e = 0; e < n.edges.size(); ++e) {
      const int i = n.edges[e][0], j = n.edges[e][1];
      const int moved = edge_value(n, g, c.a, x.v(i, a), x.v(j, a));
      const int th = act.apply_inv(a, c.a[e]);
      t.v[a][e] = g.op(g.op(g.op(g.inv[c.phi[a][i]], moved), c.phi[a][j]), flip ? th : g.inv[th]);
    }
  t.w.assign(static_cast<size_t>(ng) * ng, std::vector<int>(n.vertices));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (int i = 0; i < n.vertices; ++i) {
        // γ = a, γ' = b
        const int th = act.apply_inv(a, c.phi[b][i]);
        t.w[a * ng + b][i] =
            g.op(g.op(c.phi[a][x.v(i, b)], flip ? g.inv[th] : th), g.inv[c.phi[gm.op(b, a)][i]]);
      }
  return t;
}

CochainTriple cocycle_target(const GammaNerve& x, const TwistedData& d) {
  const Nerve& n = x.nerve;
  const FiniteGroup& gm = *x.gamma;
  const int ng = gm.order;
  CochainTriple t;
  t.u.assign(n.tris.size(), 0);
  t.v.assign(ng, std::vector<int>(n.edges.size(), 0));
  t.w.assign(static_cast<size_t>(ng) * ng, std::vector<int>(n.vertices, 0));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      const int val = d.action.apply_inv(gm.op(b, a), d.cc(b, a));
      for (int i = 0; i < n.vertices; ++i) t.w[a * ng + b][i] = val;
    }
  return t;
}

CochainQuad d2(const GammaNerve& x, const GammaAction& act, const CochainTriple& t) {
  const Nerve& n = x.nerve;
  const FiniteGroup& z = *act.g;
  const FiniteGroup& gm = *x.gamma;
  const int ng = gm.order;
  auto mul = [&](int p, int q) { return z.op(p, q); };
  auto inv = [&](int p) { return z.inv[p]; };
  auto u_at = [&](int i, int j, int k) {
    std::vector<int> s{i, j, k};
    int sign = 1;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        if (s[p] > s[q]) sign = -sign;
    const int idx = n.tri_index({i, j, k});
    if (idx < 0) throw InternalError("triangle lookup failed", {i, j, k});
    return sign > 0 ? t.u[idx] : inv(t.u[idx]);
  };
  auto v_at = [&](int a, int i, int j) { return edge_value(n, z, t.v[a], i, j); };
  auto w_at = [&](int a, int b, int i) { return t.w[a * ng + b][i]; };

  CochainQuad q;
  q.t1.resize(n.tets.size());
  for (size_t k = 0; k < n.tets.size(); ++k) {
    const auto& s = n.tets[k];
    q.t1[k] = mul(mul(u_at(s[0], s[1], s[2]), u_at(s[0], s[2], s[3])),
                  inv(mul(u_at(s[0], s[1], s[3]), u_at(s[1], s[2], s[3]))));
  }
  q.t2.assign(ng, std::vector<int>(n.tris.size()));
  for (int a = 0; a < ng; ++a)
    for (size_t k = 0; k < n.tris.size(); ++k) {
      const auto& s = n.tris[k];
      const int moved = u_at(x.v(s[0], a), x.v(s[1], a), x.v(s[2], a));
      q.t2[a][k] = mul(mul(mul(inv(moved), act.apply_inv(a, t.u[k])), mul(v_at(a, s[0], s[1]), v_at(a, s[1], s[2]))),
                       inv(v_at(a, s[0], s[2])));
    }
  q.t3.assign(static_cast<size_t>(ng) * ng, std::vector<int>(n.edges.size()));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (size_t e = 0; e < n.edges.size(); ++e) {
        const int i = n.edges[e][0], j = n.edges[e][1];
        // γ = a, γ' = b
        const int val = mul(mul(v_at(a, x.v(i, b), x.v(j, b)), act.apply_inv(a, t.v[b][e])),
                            inv(t.v[gm.op(b, a)][e]));
        q.t3[a * ng + b][e] = mul(mul(val, w_at(a, b, i)), inv(w_at(a, b, j)));
      }
  q.t4.assign(static_cast<size_t>(ng) * ng * ng, std::vector<int>(n.vertices));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (int c = 0; c < ng; ++c)
        for (int i = 0; i < n.vertices; ++i) {
          // γ = a, γ' = b, γ'' = c
          const int lhs = mul(act.apply_inv(a, w_at(b, c, i)), w_at(a, gm.op(c, b), i));
          const int rhs = mul(w_at(gm.op(b, a), c, i), w_at(a, b, x.v(i, c)));
          q.t4[(a * ng + b) * ng + c][i] = mul(lhs, inv(rhs));
        }
  return q;
}

bool is_trivial(const CochainQuad& q) {
  auto zero = [](const std::vector<int>& r) { return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }); };
  if (!zero(q.t1)) return false;
  for (const auto* t : {&q.t2, &q.t3, &q.t4})
    for (const auto& r : *t)
      if (!zero(r)) return false;
  return true;
}

CocycleCheck is_twisted_cocycle(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c) {
  const Nerve& n = x.nerve;
  const int ng = x.gamma->order, go = d.G().order;
  CocycleCheck r;
  auto fail = [&](const std::string& comp, std::vector<int> w) {
    r.ok = false;
    r.component = comp;
    r.witness = std::move(w);
    return r;
  };
  if (c.a.size() != n.edges.size() || static_cast<int>(c.phi.size()) != ng) return fail("shape", {});
  for (int v : c.a)
    if (v < 0 || v >= go) return fail("shape", {v});
  for (const auto& row : c.phi) {
    if (static_cast<int>(row.size()) != n.vertices) return fail("shape", {});
    for (int v : row)
      if (v < 0 || v >= go) return fail("shape", {v});
  }
  for (int v = 0; v < n.vertices; ++v)
    if (c.phi[0][v] != 0) return fail("phi1", {v});
  const CochainTriple t = d1(x, d.action, c);
  const CochainTriple target = cocycle_target(x, d);
  for (size_t k = 0; k < t.u.size(); ++k)
    if (t.u[k] != target.u[k]) return fail("u", {n.tris[k][0], n.tris[k][1], n.tris[k][2]});
  for (int a = 0; a < ng; ++a)
    for (size_t e = 0; e < n.edges.size(); ++e)
      if (t.v[a][e] != target.v[a][e]) return fail("v", {a, n.edges[e][0], n.edges[e][1]});
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (int i = 0; i < n.vertices; ++i)
        if (t.w[a * ng + b][i] != target.w[a * ng + b][i]) return fail("w", {a, b, i});
  return r;
}

void require_cocycle(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c) {
  const CocycleCheck r = is_twisted_cocycle(x, d, c);
  if (!r.ok) throw ValidationError("NotACocycle", "cocycle condition fails in component " + r.component, r.witness);
}

TwistedCocycle gauge(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c, const std::vector<int>& h) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  TwistedCocycle r = c;
  for (size_t e = 0; e < n.edges.size(); ++e) r.a[e] = g.op(g.op(g.inv[h[n.edges[e][0]]], c.a[e]), h[n.edges[e][1]]);
  for (int a = 0; a < x.gamma->order; ++a)
    for (int i = 0; i < n.vertices; ++i)
      r.phi[a][i] = g.op(g.op(g.inv[h[x.v(i, a)]], c.phi[a][i]), act.apply_inv(a, h[i]));
  return r;
}

TwistedCocycle gauge_reduced(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c,
                             const std::vector<int>& h, int lambda) {
  const FiniteGroup& gm = *x.gamma;
  for (int y = 0; y < gm.order; ++y)
    if (gm.op(lambda, y) != gm.op(y, lambda))
      throw ValidationError("NotCentral", "lambda is not central in Gamma", {lambda});
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  TwistedCocycle r = c;
  for (size_t e = 0; e < n.edges.size(); ++e) {
    const int i = x.v(n.edges[e][0], lambda), j = x.v(n.edges[e][1], lambda);
    r.a[e] = g.op(g.op(g.inv[h[i]], edge_value(n, g, c.a, i, j)), h[j]);
  }
  for (int a = 0; a < gm.order; ++a)
    for (int i = 0; i < n.vertices; ++i) {
      const int il = x.v(i, lambda);
      r.phi[a][i] = g.op(g.op(g.inv[h[x.v(il, a)]], c.phi[a][il]), act.apply_inv(a, h[il]));
    }
  return r;
}

TwistedCocycle multiply_central(const FiniteGroup& g, const TwistedCocycle& c, const TwistedCocycle& z) {
  TwistedCocycle r = c;
  for (size_t e = 0; e < c.a.size(); ++e) r.a[e] = g.op(c.a[e], z.a[e]);
  for (size_t a = 0; a < c.phi.size(); ++a)
    for (size_t i = 0; i < c.phi[a].size(); ++i) r.phi[a][i] = g.op(c.phi[a][i], z.phi[a][i]);
  return r;
}

int CohomologySet::class_of(const std::vector<int>& element) const {
  auto it = index.find(canon ? canon(element) : element);
  return it == index.end() ? -1 : it->second;
}

void CohomologySet::finish(std::vector<std::vector<int>> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  reps = std::move(keys);
  index.clear();
  for (size_t k = 0; k < reps.size(); ++k) index[reps[k]] = static_cast<int>(k);
}

TwistedCocycle forest_normalize(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c,
                                std::vector<int>* h_out) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  const Forest f = spanning_forest(n);
  std::vector<int> h(n.vertices, 0);
  for (int v : f.order)
    if (f.parent[v] >= 0) h[v] = g.op(g.inv[edge_value(n, g, c.a, f.parent[v], v)], h[f.parent[v]]);
  if (h_out) *h_out = h;
  return gauge(x, act, c, h);
}

namespace {

// Calls visit(h) for each gauge that is constant on components.
template <class Visit>
void for_each_constant_gauge(const Nerve& n, int group_order, Visit visit) {
  std::vector<int> vals(n.component_count, 0);
  std::vector<int> h(n.vertices, 0);
  while (true) {
    for (int v = 0; v < n.vertices; ++v) h[v] = vals[n.component[v]];
    visit(h);
    int k = 0;
    while (k < n.component_count && ++vals[k] == group_order) vals[k++] = 0;
    if (k >= n.component_count) break;
  }
}

double ipow(double b, long long e) { return std::pow(b, static_cast<double>(e)); }

}  // namespace

std::vector<int> h1_key(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c) {
  const TwistedCocycle norm = forest_normalize(x, act, c);
  std::vector<int> best;
  for_each_constant_gauge(x.nerve, act.g->order, [&](const std::vector<int>& h) {
    auto k = serialize(gauge(x, act, norm, h));
    if (best.empty() || k < best) best = std::move(k);
  });
  return best;
}

std::vector<TwistedCocycle> enumerate_z1(const GammaNerve& x, const TwistedData& d, const EnumBudget& b) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = d.G();
  const FiniteGroup& gm = *x.gamma;
  const int ng = gm.order, go = g.order;
  const Forest f = spanning_forest(n);
  std::vector<int> free_edges;
  for (size_t e = 0; e < n.edges.size(); ++e)
    if (!f.is_tree_edge[e]) free_edges.push_back(static_cast<int>(e));
  const std::vector<int> gens = ng > 1 ? generating_set(gm) : std::vector<int>{};
  const long long free_phi = static_cast<long long>(gens.size()) * n.component_count;
  const double total = ipow(go, static_cast<long long>(free_edges.size())) + ipow(go, free_phi);
  const double product = ipow(go, static_cast<long long>(free_edges.size()) + free_phi);
  if (total > static_cast<double>(b.max_enum) || product > 50.0 * static_cast<double>(b.max_enum))
    throw BudgetExceeded("Z1 enumeration needs |G|^" + std::to_string(free_edges.size() + free_phi) + " candidates",
                         {go, static_cast<int>(free_edges.size()), static_cast<int>(free_phi)});

  // edge part: forest edges 1, free edges enumerated, then (A) on triangles
  std::vector<std::vector<int>> edge_parts;
  {
    std::vector<int> a(n.edges.size(), 0);
    std::vector<int> vals(free_edges.size(), 0);
    while (true) {
      for (size_t k = 0; k < free_edges.size(); ++k) a[free_edges[k]] = vals[k];
      bool ok = true;
      for (const auto& t : n.tris) {
        if (g.op(edge_value(n, g, a, t[0], t[1]), edge_value(n, g, a, t[1], t[2])) != edge_value(n, g, a, t[0], t[2])) {
          ok = false;
          break;
        }
      }
      if (ok) edge_parts.push_back(a);
      size_t k = 0;
      while (k < vals.size() && ++vals[k] == go) vals[k++] = 0;
      if (k >= vals.size()) break;
    }
  }
  if (static_cast<double>(edge_parts.size()) * ipow(go, free_phi) > static_cast<double>(b.max_enum))
    throw BudgetExceeded("Z1 enumeration exceeds the budget after the edge pass",
                         {go, static_cast<int>(edge_parts.size())});

  std::vector<TwistedCocycle> out;
  for (const auto& a : edge_parts) {
    std::vector<int> roots(free_phi, 0);
    while (true) {
      TwistedCocycle c{a, Table(ng, std::vector<int>(n.vertices, -1))};
      std::fill(c.phi[0].begin(), c.phi[0].end(), 0);
      std::vector<char> known(ng, 0);
      known[0] = 1;
      for (size_t k = 0; k < gens.size(); ++k) {
        const int gmk = gens[k];
        auto& ph = c.phi[gmk];
        for (int ci = 0; ci < n.component_count; ++ci) ph[f.roots[ci]] = roots[k * n.component_count + ci];
        for (int v : f.order) {
          const int p = f.parent[v];
          if (p < 0) continue;
          // φ_γj = a_{iγ,jγ}^-1 φ_γi θ_γ^-1(a_ij)
          const int moved = edge_value(n, g, a, x.v(p, gmk), x.v(v, gmk));
          ph[v] = g.op(g.op(g.inv[moved], ph[p]), d.action.apply_inv(gmk, edge_value(n, g, a, p, v)));
        }
        known[gmk] = 1;
      }
      // φ_{γ'γ,i} = θ_{γ'γ}^-1(c(γ',γ))^-1 φ_{γ,iγ'} θ_γ^-1(φ_{γ',i})
      std::vector<int> queue;
      for (int y = 0; y < ng; ++y)
        if (known[y]) queue.push_back(y);
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int bp = queue[qi];
        for (int gmk : gens) {
          const int prod = gm.op(bp, gmk);
          if (known[prod]) continue;
          const int cinv = g.inv[d.action.apply_inv(prod, d.cc(bp, gmk))];
          for (int i = 0; i < n.vertices; ++i)
            c.phi[prod][i] =
                g.op(g.op(cinv, c.phi[gmk][x.v(i, bp)]), d.action.apply_inv(gmk, c.phi[bp][i]));
          known[prod] = 1;
          queue.push_back(prod);
        }
      }
      if (is_twisted_cocycle(x, d, c).ok) out.push_back(std::move(c));
      size_t k = 0;
      while (k < roots.size() && ++roots[k] == go) roots[k++] = 0;
      if (k >= roots.size()) break;
    }
  }
  return out;
}

CohomologySet h1_twisted(const GammaNerve& x, const TwistedData& d, const EnumBudget& b) {
  const auto z1 = enumerate_z1(x, d, b);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> keys;
  for (const auto& c : z1) {
    auto k0 = serialize(c);
    if (seen.count(k0)) continue;
    std::vector<int> best;
    for_each_constant_gauge(x.nerve, d.G().order, [&](const std::vector<int>& h) {
      auto k = serialize(gauge(x, d.action, c, h));
      if (best.empty() || k < best) best = k;
      seen.insert(std::move(k));
    });
    keys.push_back(best);
  }
  CohomologySet s;
  s.kind = "H1";
  s.finish(keys);
  const GammaNerve xc = x;
  const GammaAction act = d.action;
  s.canon = [xc, act](const std::vector<int>& e) { return h1_key(xc, act, deserialize(xc, e)); };
  if (d.c_trivial()) s.distinguished = s.class_of(serialize(trivial_cocycle(x, d.G())));
  return s;
}

std::vector<int> gamma_center(const FiniteGroup& gamma) { return center(gamma).elements; }

CohomologySet h1_reduced(const GammaNerve& x, const TwistedData& d, const EnumBudget& b) {
  const CohomologySet full = h1_twisted(x, d, b);
  const std::vector<int> lambdas = gamma_center(*x.gamma);
  const GammaNerve xc = x;
  const GammaAction act = d.action;
  auto canon = [xc, act, lambdas](const std::vector<int>& e) {
    const TwistedCocycle c = deserialize(xc, e);
    const std::vector<int> one(xc.nerve.vertices, 0);
    std::vector<int> best;
    for (int l : lambdas) {
      auto k = h1_key(xc, act, gauge_reduced(xc, act, c, one, l));
      if (best.empty() || k < best) best = std::move(k);
    }
    return best;
  };
  std::vector<std::vector<int>> keys;
  for (const auto& r : full.reps) keys.push_back(canon(r));
  CohomologySet s;
  s.kind = "H1_reduced";
  s.finish(keys);
  s.canon = canon;
  if (d.c_trivial()) s.distinguished = s.class_of(serialize(trivial_cocycle(x, d.G())));
  return s;
}

int H0Group::index_of(const std::vector<int>& h) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), h);
  if (it == elements.end() || *it != h) return -1;
  return static_cast<int>(it - elements.begin());
}

H0Group h0_twisted(const GammaNerve& x, const GammaAction& act) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  H0Group r;
  for_each_constant_gauge(n, g.order, [&](const std::vector<int>& h) {
    for (int a = 0; a < x.gamma->order; ++a)
      for (int i = 0; i < n.vertices; ++i)
        if (h[x.v(i, a)] != act.apply_inv(a, h[i])) return;
    r.elements.push_back(h);
  });
  std::sort(r.elements.begin(), r.elements.end());
  const int m = static_cast<int>(r.elements.size());
  Table t(m, std::vector<int>(m));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      std::vector<int> prod(n.vertices);
      for (int i = 0; i < n.vertices; ++i) prod[i] = g.op(r.elements[p][i], r.elements[q][i]);
      t[p][q] = r.index_of(prod);
      if (t[p][q] < 0) throw InternalError("H0 is not closed under multiplication");
    }
  r.group = make_group(t, "H0");
  return r;
}

std::vector<std::vector<int>> stabilizer(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c) {
  const Nerve& n = x.nerve;
  const FiniteGroup& g = *act.g;
  const Forest f = spanning_forest(n);
  std::vector<std::vector<int>> out;
  for_each_constant_gauge(n, g.order, [&](const std::vector<int>& roots) {
    std::vector<int> h = roots;
    for (int v : f.order) {
      const int p = f.parent[v];
      if (p < 0) continue;
      const int a = edge_value(n, g, c.a, p, v);
      h[v] = g.op(g.op(g.inv[a], h[p]), a);
    }
    if (gauge(x, act, c, h) == c) out.push_back(h);
  });
  std::sort(out.begin(), out.end());
  return out;
}

GammaAction quotient_action(const GammaAction& act, const Quotient& q) {
  const int m = q.group->order;
  Table theta(act.gamma->order, std::vector<int>(m));
  for (int a = 0; a < act.gamma->order; ++a)
    for (int k = 0; k < m; ++k) {
      theta[a][k] = q.proj[act.apply(a, q.lift[k])];
      for (int y = 0; y < act.g->order; ++y)
        if (q.proj[y] == k && q.proj[act.apply(a, y)] != theta[a][k])
          throw ValidationError("SubgroupNotInvariant", "theta does not preserve the normal subgroup", {a});
    }
  return make_action(act.gamma, q.group, theta);
}

}  // namespace twc

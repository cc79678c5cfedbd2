#include "twc/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace twc {

FramedSystem plain_system(const Nerve& y, const GroupPtr& h) {
  std::vector<int> id(h->order);
  for (int k = 0; k < h->order; ++k) id[k] = k;
  return FramedSystem{y, h, Table(y.edges.size(), id), std::vector<int>(y.tris.size(), 0)};
}

bool framed_is_cocycle(const FramedSystem& s, const std::vector<int>& b, std::vector<int>* witness) {
  const Nerve& y = s.y;
  const FiniteGroup& h = *s.h;
  if (b.size() != y.edges.size()) {
    if (witness) *witness = {};
    return false;
  }
  for (int v : b)
    if (v < 0 || v >= h.order) {
      if (witness) *witness = {v};
      return false;
    }
  for (size_t t = 0; t < y.tris.size(); ++t) {
    const auto& tr = y.tris[t];
    const int ij = y.edge_index(tr[0], tr[1]), jk = y.edge_index(tr[1], tr[2]), ik = y.edge_index(tr[0], tr[2]);
    if (h.op(h.op(b[ij], s.alpha[ij][b[jk]]), s.c_tri[t]) != b[ik]) {
      if (witness) *witness = {tr[0], tr[1], tr[2]};
      return false;
    }
  }
  return true;
}

std::vector<int> framed_gauge(const FramedSystem& s, const std::vector<int>& b, const std::vector<int>& g) {
  const FiniteGroup& h = *s.h;
  std::vector<int> r(b.size());
  for (size_t e = 0; e < b.size(); ++e)
    r[e] = h.op(h.op(h.inv[g[s.y.edges[e][0]]], b[e]), s.alpha[e][g[s.y.edges[e][1]]]);
  return r;
}

namespace {

// Propagates root values along the forest so that tree edges of b stay (or become) 1.
std::vector<int> propagate(const FramedSystem& s, const Forest& f, const std::vector<int>& b,
                           const std::vector<int>& root_values, const Table& alpha_inv) {
  const FiniteGroup& h = *s.h;
  std::vector<int> g(s.y.vertices, 0);
  for (int c = 0; c < s.y.component_count; ++c) g[f.roots[c]] = root_values[c];
  for (int v : f.order) {
    const int p = f.parent[v];
    if (p < 0) continue;
    const int e = f.parent_edge[v];
    if (p < v) g[v] = alpha_inv[e][h.op(h.inv[b[e]], g[p])];
    else g[v] = h.op(b[e], s.alpha[e][g[p]]);
  }
  return g;
}

Table inverses(const FramedSystem& s) {
  Table r;
  for (const auto& a : s.alpha) r.push_back(invert_perm(a));
  return r;
}

template <class Visit>
void for_each_root_choice(const Nerve& y, int order, Visit visit) {
  std::vector<int> vals(y.component_count, 0);
  while (true) {
    visit(vals);
    int k = 0;
    while (k < y.component_count && ++vals[k] == order) vals[k++] = 0;
    if (k >= y.component_count) break;
  }
}

}  // namespace

std::vector<int> framed_normalize(const FramedSystem& s, const std::vector<int>& b, std::vector<int>* g_out) {
  const Forest f = spanning_forest(s.y);
  const auto g = propagate(s, f, b, std::vector<int>(s.y.component_count, 0), inverses(s));
  if (g_out) *g_out = g;
  return framed_gauge(s, b, g);
}

std::vector<std::vector<int>> framed_z1(const FramedSystem& s, const EnumBudget& b) {
  const Forest f = spanning_forest(s.y);
  std::vector<int> free_edges;
  for (size_t e = 0; e < s.y.edges.size(); ++e)
    if (!f.is_tree_edge[e]) free_edges.push_back(static_cast<int>(e));
  const int ho = s.h->order;
  if (std::pow(static_cast<double>(ho), static_cast<double>(free_edges.size())) > static_cast<double>(b.max_enum))
    throw BudgetExceeded("framed Z1 enumeration needs |H|^" + std::to_string(free_edges.size()) + " candidates",
                         {ho, static_cast<int>(free_edges.size())});
  std::vector<std::vector<int>> out;
  std::vector<int> cur(s.y.edges.size(), 0), vals(free_edges.size(), 0);
  while (true) {
    for (size_t k = 0; k < free_edges.size(); ++k) cur[free_edges[k]] = vals[k];
    if (framed_is_cocycle(s, cur)) out.push_back(cur);
    size_t k = 0;
    while (k < vals.size() && ++vals[k] == ho) vals[k++] = 0;
    if (k >= vals.size()) break;
  }
  return out;
}

std::vector<int> framed_key(const FramedSystem& s, const std::vector<int>& b) {
  const Forest f = spanning_forest(s.y);
  const Table ainv = inverses(s);
  const auto norm = framed_gauge(s, b, propagate(s, f, b, std::vector<int>(s.y.component_count, 0), ainv));
  std::vector<int> best;
  for_each_root_choice(s.y, s.h->order, [&](const std::vector<int>& roots) {
    auto k = framed_gauge(s, norm, propagate(s, f, norm, roots, ainv));
    if (best.empty() || k < best) best = std::move(k);
  });
  return best;
}

CohomologySet framed_h1(const FramedSystem& s, const EnumBudget& b) {
  const Forest f = spanning_forest(s.y);
  const Table ainv = inverses(s);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> keys;
  for (const auto& z : framed_z1(s, b)) {
    if (seen.count(z)) continue;
    std::vector<int> best;
    for_each_root_choice(s.y, s.h->order, [&](const std::vector<int>& roots) {
      auto k = framed_gauge(s, z, propagate(s, f, z, roots, ainv));
      if (best.empty() || k < best) best = k;
      seen.insert(std::move(k));
    });
    keys.push_back(best);
  }
  CohomologySet out;
  out.kind = "H1";
  out.finish(keys);
  out.canon = [s](const std::vector<int>& e) { return framed_key(s, e); };
  const std::vector<int> one(s.y.edges.size(), 0);
  if (framed_is_cocycle(s, one)) out.distinguished = out.class_of(one);
  return out;
}

CohomologySet plain_h1(const Nerve& y, const GroupPtr& h, const EnumBudget& b) { return framed_h1(plain_system(y, h), b); }

FramedSystem c_twisted_system(const CoverDescent& descent, const TwistedData& d) {
  const Nerve& y = descent.down;
  FramedSystem s{y, d.action.g, {}, {}};
  for (const auto& e : y.edges) s.alpha.push_back(d.action.theta[descent.gamma_ij(e[0], e[1])]);
  for (const auto& t : y.tris) s.c_tri.push_back(d.cc(descent.gamma_ij(t[0], t[1]), descent.gamma_ij(t[1], t[2])));
  return s;
}

CTwistedCocycleY descend(const CoverDescent& descent, const TwistedData& d, const TwistedCocycle& e) {
  const GammaNerve& x = descent.up;
  if (!x.free) throw ValidationError("NotFree", "descent needs a free action");
  require_cocycle(x, d, e);
  const FiniteGroup& g = d.G();
  CTwistedCocycleY r{descent, d, {}};
  for (const auto& ed : descent.down.edges) {
    const int gm = descent.gamma_ij(ed[0], ed[1]);
    const int si = descent.section[ed[0]], sj = descent.section[ed[1]];
    const int val = g.op(g.inv[e.phi[gm][si]], edge_value(x.nerve, g, e.a, x.v(si, gm), sj));
    r.k.push_back(d.action.apply(gm, val));
  }
  std::vector<int> w;
  if (!framed_is_cocycle(c_twisted_system(descent, d), r.k, &w))
    throw InternalError("descended cocycle violates the twisted law", w);
  return r;
}

TwistedCocycle ascend(const CTwistedCocycleY& y) {
  const CoverDescent& ds = y.descent;
  const GammaNerve& x = ds.up;
  if (!x.free) throw ValidationError("NotFree", "ascent needs a free action");
  const TwistedData& d = y.data;
  const FiniteGroup& g = d.G();
  const FiniteGroup& gm = d.Gamma();
  std::vector<int> w;
  if (!framed_is_cocycle(c_twisted_system(ds, d), y.k, &w))
    throw ValidationError("NotACocycle", "c-twisted law fails on a triangle", w);
  TwistedCocycle e = trivial_cocycle(x, g);
  for (int a = 0; a < gm.order; ++a)
    for (int v = 0; v < x.nerve.vertices; ++v) {
      const int off = ds.lift_offset[v];
      e.phi[a][v] = d.action.apply_inv(gm.op(off, a), d.cc(off, a));
    }
  std::vector<char> set(x.nerve.edges.size(), 0);
  for (size_t k = 0; k < ds.down.edges.size(); ++k) {
    const int i = ds.down.edges[k][0], j = ds.down.edges[k][1];
    const int gij = ds.gamma_ij(i, j);
    const int v0 = x.v(ds.section[i], gij), w0 = ds.section[j];
    const int a0 = d.action.apply_inv(gij, y.k[k]);
    for (int b = 0; b < gm.order; ++b) {
      const int v = x.v(v0, b), wv = x.v(w0, b);
      const int val = g.op(g.op(e.phi[b][v0], d.action.apply_inv(b, a0)), g.inv[e.phi[b][w0]]);
      const int idx = x.nerve.edge_index(v, wv);
      if (idx < 0) throw InternalError("translated edge missing from the cover", {v, wv});
      e.a[idx] = v < wv ? val : g.inv[val];
      set[idx] = 1;
    }
  }
  if (std::find(set.begin(), set.end(), 0) != set.end()) throw InternalError("ascent left an edge unassigned");
  const CocycleCheck chk = is_twisted_cocycle(x, d, e);
  if (!chk.ok) throw ValidationError("NotACocycle", "ascended cocycle fails in component " + chk.component, chk.witness);
  return e;
}

GhatCocycleY to_ghat_cocycle(const CTwistedCocycleY& y, const TwistedProductPtr& ghat) {
  GhatCocycleY r{ghat, {}};
  for (size_t k = 0; k < y.k.size(); ++k) {
    const auto& e = y.descent.down.edges[k];
    r.x.push_back(ghat->index(y.k[k], y.descent.gamma_ij(e[0], e[1])));
  }
  std::vector<int> w;
  if (!framed_is_cocycle(plain_system(y.descent.down, ghat->group), r.x, &w))
    throw InternalError("Ghat cocycle law fails", w);
  return r;
}

InducedGamma induced_gamma_class(const Nerve& y, const GhatCocycleY& x) {
  InducedGamma r;
  r.gamma.gamma = x.ghat->data.action.gamma;
  for (int v : x.x) r.gamma.x.push_back(x.ghat->gamma_part(v));
  r.monodromy = monodromy(y, r.gamma);
  return r;
}

FiberResult fiber_over_cover(const Nerve& y, const TwistedProductPtr& ghat, const CoverDescent& target,
                             const EnumBudget& b) {
  if (target.down.edges != y.edges || target.down.vertices != y.vertices)
    throw ValidationError("BaseMismatch", "target cover lies over a different base");
  FiberResult r;
  r.ghat_classes = plain_h1(y, ghat->group, b);
  const CohomologySet gamma_classes = plain_h1(y, ghat->data.action.gamma, b);
  const int target_class = gamma_classes.class_of(target.transitions.x);
  for (int k = 0; k < r.ghat_classes.size(); ++k) {
    GhatCocycleY c{ghat, r.ghat_classes.reps[k]};
    const InducedGamma ig = induced_gamma_class(y, c);
    const CoverDescent cover = build_cover(y, ig.gamma);
    const bool by_iso = find_equivariant_iso(cover.up, target.up, 5'000'000, cover.orbit, target.orbit).has_value();
    const bool by_class = gamma_classes.class_of(ig.gamma.x) == target_class;
    if (by_iso != by_class) r.criteria_agree = false;
    if (by_iso) {
      r.members.push_back(k);
      r.monodromy.push_back(ig.monodromy);
    }
  }
  return r;
}

GrothendieckFiber grothendieck_fiber(const Nerve& y, const GhatCocycleY& base, const CohomologySet& ghat_classes,
                                     const EnumBudget& b) {
  const TwistedProductGroup& gh = *base.ghat;
  const FiniteGroup& hat = *gh.group;
  const FiniteGroup& gm = gh.data.Gamma();
  const int go = gh.data.G().order;
  FramedSystem s{y, gh.data.action.g, {}, std::vector<int>(y.tris.size(), 0)};
  for (size_t e = 0; e < y.edges.size(); ++e) {
    std::vector<int> perm(go);
    const int x0 = base.x[e];
    for (int g = 0; g < go; ++g) {
      const int conj = hat.op(hat.op(x0, gh.embed_g[g]), hat.inv[x0]);
      if (gh.gamma_part(conj) != 0) throw InternalError("G is not normal in Ghat");
      perm[g] = gh.g_part(conj);
    }
    s.alpha.push_back(perm);
  }
  GrothendieckFiber r;
  r.twisted_form = framed_h1(s, b);

  // H⁰(Y, E₀/G(Γ)): u_i = γ⁰_ij u_j γ⁰_ij^-1
  std::vector<int> g0;
  for (int v : base.x) g0.push_back(gh.gamma_part(v));
  const Forest f = spanning_forest(y);
  std::vector<std::vector<int>> h0;
  for_each_root_choice(y, gm.order, [&](const std::vector<int>& roots) {
    std::vector<int> u(y.vertices, 0);
    for (int c = 0; c < y.component_count; ++c) u[f.roots[c]] = roots[c];
    for (int v : f.order) {
      const int p = f.parent[v];
      if (p < 0) continue;
      const int gv = g0[f.parent_edge[v]];
      u[v] = p < v ? gm.op(gm.op(gm.inv[gv], u[p]), gv) : gm.op(gm.op(gv, u[p]), gm.inv[gv]);
    }
    for (size_t e = 0; e < y.edges.size(); ++e)
      if (u[y.edges[e][0]] != gm.op(gm.op(g0[e], u[y.edges[e][1]]), gm.inv[g0[e]])) return;
    h0.push_back(u);
  });
  r.h0_size = static_cast<long long>(h0.size());

  auto to_ghat = [&](const std::vector<int>& bv) {
    std::vector<int> x(bv.size());
    for (size_t e = 0; e < bv.size(); ++e) x[e] = hat.op(gh.embed_g[bv[e]], base.x[e]);
    return x;
  };
  const int n = r.twisted_form.size();
  std::vector<int> parent(n);
  for (int k = 0; k < n; ++k) parent[k] = k;
  std::function<int(int)> find = [&](int k) { return parent[k] == k ? k : parent[k] = find(parent[k]); };
  for (int k = 0; k < n; ++k) {
    const auto& rep = r.twisted_form.reps[k];
    const auto big = to_ghat(rep);
    for (const auto& u : h0) {
      std::vector<int> moved(rep.size());
      for (size_t e = 0; e < rep.size(); ++e) {
        const int ui = gh.s[u[y.edges[e][0]]], uj = gh.s[u[y.edges[e][1]]];
        const int val = hat.op(hat.op(hat.op(hat.inv[ui], big[e]), uj), hat.inv[base.x[e]]);
        if (gh.gamma_part(val) != 0) throw InternalError("H0 action leaves G", {static_cast<int>(e)});
        moved[e] = gh.g_part(val);
      }
      const int other = r.twisted_form.class_of(moved);
      if (other < 0) throw InternalError("H0 action leaves the cocycle set", {k});
      parent[find(other)] = find(k);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < n; ++k) groups[find(k)].push_back(k);
  for (auto& [root, members] : groups) {
    (void)root;
    std::set<int> imgs;
    for (int k : members) imgs.insert(ghat_classes.class_of(to_ghat(r.twisted_form.reps[k])));
    if (imgs.size() != 1) r.map_constant_on_orbits = false;
    r.orbits.push_back(members);
    r.image.push_back(*imgs.begin());
  }
  std::vector<size_t> order(r.orbits.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t c) { return r.orbits[a] < r.orbits[c]; });
  GrothendieckFiber sorted = r;
  for (size_t k = 0; k < order.size(); ++k) {
    sorted.orbits[k] = r.orbits[order[k]];
    sorted.image[k] = r.image[order[k]];
  }
  return sorted;
}

ConnectedReduction connected_reduction(const Nerve& y, const GhatCocycleY& x) {
  if (y.component_count != 1) throw ValidationError("Disconnected", "connected reduction needs a connected base");
  const TwistedProductGroup& gh = *x.ghat;
  const FiniteGroup& hat = *gh.group;
  const FiniteGroup& gm = gh.data.Gamma();
  const Forest f = spanning_forest(y);
  std::vector<int> delta(y.vertices, 0);
  for (int v : f.order) {
    const int p = f.parent[v];
    if (p < 0) continue;
    const int gv = gh.gamma_part(x.x[f.parent_edge[v]]);
    delta[v] = p < v ? gm.op(gm.inv[gv], delta[p]) : gm.op(gv, delta[p]);
  }
  ConnectedReduction r;
  r.reduced.ghat = x.ghat;
  for (int v = 0; v < y.vertices; ++v) r.gauge.push_back(gh.s[delta[v]]);
  for (size_t e = 0; e < y.edges.size(); ++e)
    r.reduced.x.push_back(hat.op(hat.op(hat.inv[r.gauge[y.edges[e][0]]], x.x[e]), r.gauge[y.edges[e][1]]));
  std::vector<int> parts;
  for (int v : r.reduced.x) parts.push_back(gh.gamma_part(v));
  r.gamma_prime = make_subgroup(gm, generated_subgroup(gm, parts), gm.label + "'");
  for (int z = 0; z < hat.order; ++z)
    if (r.gamma_prime.contains(gh.gamma_part(z))) r.ghat_prime.push_back(z);
  GammaCocycleY sub{r.gamma_prime.group, {}};
  for (int p : parts) sub.x.push_back(r.gamma_prime.index_of(p));
  r.cover_components = build_cover(y, sub).up.nerve.component_count;
  return r;
}

CheckList normalizer_embedding_check(const Nerve& y, const TwistedProductPtr& ghat, const std::vector<int>& gamma_prime,
                                     const EnumBudget& b) {
  const TwistedProductGroup& gh = *ghat;
  const FiniteGroup& hat = *gh.group;
  const FiniteGroup& gm = gh.data.Gamma();
  CheckList out;
  const Subgroup gp = make_subgroup(gm, gamma_prime, gm.label + "'");
  std::vector<int> elems;
  for (int z = 0; z < hat.order; ++z)
    if (gp.contains(gh.gamma_part(z))) elems.push_back(z);
  const Subgroup sub = make_subgroup(hat, elems, hat.label + "'");
  std::vector<int> normaliser;
  for (int n = 0; n < gm.order; ++n) {
    bool ok = true;
    for (int z : gp.elements) ok = ok && gp.contains(gm.op(gm.op(gm.inv[n], z), n));
    if (ok) normaliser.push_back(n);
  }
  const CohomologySet sub_classes = plain_h1(y, sub.group, b);
  const CohomologySet big_classes = plain_h1(y, ghat->group, b);

  auto to_big = [&](const std::vector<int>& v) {
    std::vector<int> r;
    for (int z : v) r.push_back(sub.elements[z]);
    return r;
  };
  auto mono_group = [&](const std::vector<int>& big) {
    GammaCocycleY c{gh.data.action.gamma, {}};
    for (int z : big) c.x.push_back(gh.gamma_part(z));
    return monodromy(y, c).image.elements;
  };
  std::vector<int> full;
  for (int k = 0; k < sub_classes.size(); ++k)
    if (mono_group(to_big(sub_classes.reps[k])) == gp.elements) full.push_back(k);
  const std::set<int> full_set(full.begin(), full.end());

  // N acts by Int_{(1,n)^-1}
  bool preserved = true;
  std::map<int, std::set<int>> orbit_of;
  for (int k : full) {
    for (int n : normaliser) {
      const int sn = gh.s[n];
      std::vector<int> moved;
      for (int z : to_big(sub_classes.reps[k])) moved.push_back(sub.index_of(hat.op(hat.op(hat.inv[sn], z), sn)));
      const int other = sub_classes.class_of(moved);
      if (!full_set.count(other)) preserved = false;
      orbit_of[k].insert(other);
    }
  }
  std::set<std::set<int>> orbits;
  for (auto& [k, o] : orbit_of) {
    (void)k;
    orbits.insert(o);
  }
  bool constant = true, injective = true;
  std::map<int, int> image_owner;
  std::set<int> image;
  int idx = 0;
  for (const auto& o : orbits) {
    std::set<int> imgs;
    for (int k : o) imgs.insert(big_classes.class_of(to_big(sub_classes.reps[k])));
    if (imgs.size() != 1) constant = false;
    for (int c : imgs) {
      if (image_owner.count(c) && image_owner[c] != idx) injective = false;
      image_owner[c] = idx;
      image.insert(c);
    }
    ++idx;
  }
  // Ĝ-classes whose monodromy group is conjugate to Γ'
  std::set<int> stratum;
  for (int k = 0; k < big_classes.size(); ++k) {
    const auto m = mono_group(big_classes.reps[k]);
    for (int g = 0; g < gm.order; ++g) {
      std::vector<int> conj;
      for (int z : m) conj.push_back(gm.op(gm.op(gm.inv[g], z), g));
      std::sort(conj.begin(), conj.end());
      if (conj == gp.elements) {
        stratum.insert(k);
        break;
      }
    }
  }
  out.counts["subgroup classes"] = sub_classes.size();
  out.counts["full monodromy classes"] = static_cast<long long>(full.size());
  out.counts["normaliser order"] = static_cast<long long>(normaliser.size());
  out.counts["orbits"] = static_cast<long long>(orbits.size());
  out.add("normaliser preserves full monodromy", preserved);
  out.add("extension constant on normaliser orbits", constant);
  out.add("extension injective on normaliser orbits", injective);
  out.add("image is the monodromy stratum", image == stratum);
  return out;
}

}  // namespace twc

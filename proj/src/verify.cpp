#include "twc/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace twc {

namespace {

std::string pair_detail(long long a, long long b) { return std::to_string(a) + " vs " + std::to_string(b); }

void merge(CheckList& out, const CheckList& in, const std::string& prefix) {
  for (const auto& c : in.checks) out.add(prefix + c.name, c.pass, c.detail, c.witness);
  for (const auto& [k, v] : in.counts) out.counts[prefix + k] = v;
}

}  // namespace

std::vector<NamedSet> twisted_set_fixtures(const TwistedData& d, int max_carrier) {
  std::vector<NamedSet> out;
  out.push_back({"point/right", point_set(d, Side::Right)});
  out.push_back({"point/left", point_set(d, Side::Left)});
  const auto ghat = build_twisted_product(d);
  if (ghat->group->order <= max_carrier) {
    out.push_back({"ghat/right", regular_right(*ghat)});
    out.push_back({"ghat/left", regular_left(*ghat)});
  }
  const Subgroup z = center(d.G());
  const HomogeneousSpace gz = homogeneous_space_right(d, z.elements);
  if (gz.set.size <= max_carrier) out.push_back({"G/Z/right", gz.set});
  return out;
}

LemmaCount equivariant_sections_lemma(const TwistedGSet& e, const TwistedGSet& m) {
  if (e.side != Side::Right || m.side != Side::Right) throw ValidationError("SideMismatch", "right actions expected");
  const FiniteGroup& g = e.data.G();
  const FiniteGroup& gm = e.data.Gamma();
  for (int p = 0; p < e.size; ++p)
    for (int x = 1; x < g.order; ++x)
      if (e.g_act[x][p] == p) throw ValidationError("NotFree", "G does not act freely on E", {p, x});
  // E×M with the diagonal twisted action
  const int n = e.size * m.size;
  Table g_act(g.order, std::vector<int>(n)), gamma_act(gm.order, std::vector<int>(n));
  for (int p = 0; p < e.size; ++p)
    for (int q = 0; q < m.size; ++q) {
      for (int x = 0; x < g.order; ++x) g_act[x][p * m.size + q] = e.g_act[x][p] * m.size + m.g_act[x][q];
      for (int a = 0; a < gm.order; ++a) gamma_act[a][p * m.size + q] = e.gamma_act[a][p] * m.size + m.gamma_act[a][q];
    }
  const TwistedGSet prod = validate_twisted_action(e.data, n, g_act, gamma_act, Side::Right);
  const GammaQuotient qe = quotient_by_G(e), qp = quotient_by_G(prod);
  const auto ghat = build_twisted_product(e.data);
  const GhatSet he = to_ghat(e, ghat), hm = to_ghat(m, ghat);

  LemmaCount r;
  std::vector<int> f(e.size, 0);
  while (true) {
    bool gmap = true;
    for (int p = 0; p < e.size && gmap; ++p)
      for (int x = 0; x < g.order && gmap; ++x) gmap = f[e.g_act[x][p]] == m.g_act[x][f[p]];
    if (gmap) {
      ++r.g_maps;
      bool hat_eq = true;
      for (int p = 0; p < e.size && hat_eq; ++p)
        for (int x = 0; x < ghat->group->order && hat_eq; ++x) hat_eq = f[he.act[x][p]] == hm.act[x][f[p]];
      std::vector<int> sigma(qe.size, -1);
      for (int p = 0; p < e.size; ++p) sigma[qe.proj[p]] = qp.proj[p * m.size + f[p]];
      bool sec_eq = true;
      for (int o = 0; o < qe.size && sec_eq; ++o)
        for (int a = 0; a < gm.order && sec_eq; ++a) sec_eq = sigma[qe.gamma_act[a][o]] == qp.gamma_act[a][sigma[o]];
      r.ghat_equivariant += hat_eq;
      r.gamma_sections += sec_eq;
      if (hat_eq != sec_eq || hat_eq != is_twisted_equivariant(f, e, m)) ++r.disagreements;
    }
    int k = 0;
    while (k < e.size && ++f[k] == m.size) f[k++] = 0;
    if (k >= e.size) break;
  }
  return r;
}

std::vector<std::vector<int>> ghat_sections(const Nerve& y, const GhatCocycleY& x, const GhatSet& m) {
  if (m.side != Side::Right) throw ValidationError("SideMismatch", "right action expected");
  const FiniteGroup& hat = *x.ghat->group;
  const Forest f = spanning_forest(y);
  std::vector<std::vector<int>> out;
  std::vector<int> roots(y.component_count, 0);
  while (m.size > 0) {
    std::vector<int> n(y.vertices, 0);
    for (int c = 0; c < y.component_count; ++c) n[f.roots[c]] = roots[c];
    for (int v : f.order) {
      const int p = f.parent[v];
      if (p < 0) continue;
      const int e = f.parent_edge[v];
      n[v] = p < v ? m.act[x.x[e]][n[p]] : m.act[hat.inv[x.x[e]]][n[p]];
    }
    bool ok = true;
    for (size_t e = 0; e < y.edges.size() && ok; ++e) ok = n[y.edges[e][1]] == m.act[x.x[e]][n[y.edges[e][0]]];
    if (ok) out.push_back(n);
    int k = 0;
    while (k < y.component_count && ++roots[k] == m.size) roots[k++] = 0;
    if (k >= y.component_count) break;
  }
  return out;
}

CheckList verify_action_roundtrips(const TwistedData& d) {
  CheckList out;
  int sets = 0;
  bool ghat_rt = true, side_rt = true, flip = true, regular = true;
  std::vector<int> witness;
  for (const auto& ns : twisted_set_fixtures(d)) {
    ++sets;
    const TwistedGSet& m = ns.set;
    const auto ghat = build_twisted_product(m.data);
    const GhatSet h = to_ghat(m, ghat);
    validate_ghat_set(h);
    const TwistedGSet back = from_ghat(h);
    if (back.g_act != m.g_act || back.gamma_act != m.gamma_act || back.side != m.side) ghat_rt = false;
    const TwistedGSet twice = convert_side(convert_side(m));
    if (twice.g_act != m.g_act || twice.gamma_act != m.gamma_act || twice.side != m.side) side_rt = false;
    const GhatSet a = to_ghat(convert_side(m), ghat), b = flip_ghat_side(h);
    if (a.act != b.act || a.side != b.side) flip = false;
    if (ns.name == "ghat/right") {
      for (int x = 0; x < ghat->group->order; ++x)
        for (int p = 0; p < m.size; ++p)
          if (h.act[x][p] != ghat->group->op(p, x)) regular = false;
    }
  }
  out.counts["twisted sets"] = sets;
  out.add("from_ghat after to_ghat is the identity", ghat_rt);
  out.add("convert_side is an involution", side_rt);
  out.add("convert_side matches the Ghat side flip", flip);
  out.add("regular right set is group multiplication", regular);
  return out;
}

CheckList verify_les(const fixtures::GridPoint& p, const EnumBudget& b, unsigned seed, Fault fault) {
  CheckList out = les_verify(p.x, p.data, b, fault, seed);
  const CohomologySet h1 = h1_twisted(p.x, p.data, b);
  const ExistenceResult ex = existence_check(p.x, p.data, b);
  out.counts["H1_theta_c(G)"] = h1.size();
  out.add("existence criterion agrees with H1", ex.exists == (h1.size() > 0),
          std::string(ex.exists ? "exists" : "none") + ", |H1| = " + std::to_string(h1.size()));
  if (ex.witness) out.add("existence witness is a cocycle", is_twisted_cocycle(p.x, p.data, *ex.witness).ok);
  return out;
}

CheckList verify_correspondence(const fixtures::GridPoint& p, const EnumBudget& b, unsigned seed) {
  (void)seed;
  CheckList out;
  const CoverDescent ds = quotient(p.x);
  const Nerve& y = ds.down;
  const auto ghat = build_twisted_product(p.data);
  const FiniteGroup& hat = *ghat->group;
  const CohomologySet h1 = h1_twisted(p.x, p.data, b);
  const CohomologySet h1r = h1_reduced(p.x, p.data, b);
  const FramedSystem sys = c_twisted_system(ds, p.data);
  const CohomologySet hc = framed_h1(sys, b);
  const FiberResult fib = fiber_over_cover(y, ghat, ds, b);
  const std::set<int> members(fib.members.begin(), fib.members.end());
  out.counts["H1"] = h1.size();
  out.counts["H1_reduced"] = h1r.size();
  out.counts["H1_c(Y)"] = hc.size();
  out.counts["H1(Y,Ghat)"] = fib.ghat_classes.size();
  out.counts["fiber"] = static_cast<long long>(fib.members.size());

  // descent and the Ĝ image
  std::set<int> down;
  std::set<int> ghat_image;
  std::map<int, int> reduced_to_ghat;
  bool reduced_map_ok = true, cover_ok = true, product_ok = true;
  for (const auto& rep : h1.reps) {
    const TwistedCocycle e = deserialize(p.x, rep);
    const CTwistedCocycleY yc = descend(ds, p.data, e);
    down.insert(hc.class_of(yc.k));
    const GhatCocycleY gc = to_ghat_cocycle(yc, ghat);
    const int gcl = fib.ghat_classes.class_of(gc.x);
    ghat_image.insert(gcl);
    const int rc = h1r.class_of(rep);
    if (reduced_to_ghat.count(rc) && reduced_to_ghat[rc] != gcl) reduced_map_ok = false;
    reduced_to_ghat[rc] = gcl;
    const InducedGamma ig = induced_gamma_class(y, gc);
    if (ig.gamma.x != ds.transitions.x) cover_ok = false;
    // q and the product law on pairs of edge values
    const TwistedData& d = p.data;
    const FiniteGroup& g = d.G();
    for (int u : gc.x)
      for (int v : gc.x) {
        const int prod = hat.op(u, v);
        const int g1 = ghat->g_part(u), c1 = ghat->gamma_part(u), g2 = ghat->g_part(v), c2 = ghat->gamma_part(v);
        const int want = ghat->index(g.op(g.op(g1, d.action.apply(c1, g2)), d.cc(c1, c2)), d.Gamma().op(c1, c2));
        if (prod != want || ghat->gamma_part(prod) != d.Gamma().op(c1, c2)) product_ok = false;
      }
  }
  std::set<int> reduced_images;
  for (const auto& [rc, gcl] : reduced_to_ghat) {
    (void)rc;
    reduced_images.insert(gcl);
  }
  out.add("H1 equals the c-twisted H1 of the quotient", h1.size() == hc.size(), pair_detail(h1.size(), hc.size()));
  out.add("descend is a bijection on classes", static_cast<int>(down.size()) == hc.size() && !down.count(-1));
  out.add("fibre criteria agree", fib.criteria_agree);
  out.add("reduced H1 equals the fibre over the cover", h1r.size() == static_cast<int>(fib.members.size()),
          pair_detail(h1r.size(), fib.members.size()));
  out.add("Ghat image of H1 is the fibre", ghat_image == members);
  out.add("reduced classes inject into the fibre",
          reduced_map_ok && static_cast<int>(reduced_images.size()) == h1r.size() && reduced_images == members);
  out.add("induced Gamma cocycle is the cover transition", cover_ok);
  out.add("q pushes the Ghat product to the twisted product", product_ok);

  // Grothendieck fibre from every base point of the fibre
  {
    bool ok = true;
    std::string detail;
    for (int m : fib.members) {
      const GrothendieckFiber gf = grothendieck_fiber(y, GhatCocycleY{ghat, fib.ghat_classes.reps[m]}, fib.ghat_classes, b);
      const std::set<int> imgs(gf.image.begin(), gf.image.end());
      if (gf.orbits.size() != fib.members.size() || imgs != members || imgs.size() != gf.image.size() ||
          !gf.map_constant_on_orbits) {
        ok = false;
        detail = "base " + std::to_string(m) + ": " + pair_detail(gf.orbits.size(), fib.members.size());
      }
      if (m == fib.members.front()) {
        out.counts["grothendieck_fiber"] = static_cast<long long>(gf.orbits.size());
        out.counts["H1(Y,E0(G))"] = gf.twisted_form.size();
        out.counts["H0(Y,E0/G(Gamma))"] = gf.h0_size;
      }
    }
    out.add("Grothendieck fibre matches from every base", ok && !fib.members.empty(), detail);
  }

  // sections: X-side law against the Ĝ-side oracle
  {
    bool ok = true;
    long long total = 0;
    std::string detail;
    for (const auto& ns : twisted_set_fixtures(p.data)) {
      const TwistedGSet m = ns.set.side == Side::Right ? ns.set : convert_side(ns.set);
      const GhatSet hm = to_ghat(m, ghat);
      for (const auto& rep : h1.reps) {
        const TwistedCocycle e = deserialize(p.x, rep);
        const auto up = sections_of_associated(p.x, p.data, e, m);
        const auto dn = ghat_sections(y, to_ghat_cocycle(descend(ds, p.data, e), ghat), hm);
        std::set<std::vector<int>> restricted;
        for (const auto& s : up) {
          std::vector<int> r;
          for (int v : ds.section) r.push_back(s[v]);
          restricted.insert(r);
        }
        const std::set<std::vector<int>> oracle(dn.begin(), dn.end());
        total += static_cast<long long>(up.size());
        if (restricted != oracle || restricted.size() != up.size()) {
          ok = false;
          detail = ns.name + ": " + pair_detail(up.size(), dn.size());
        }
      }
    }
    out.counts["sections checked"] = total;
    out.add("sections agree with the Ghat-side oracle", ok, detail);
  }

  // connected reduction
  {
    bool valid = true, same = true, connected = true, mono = true;
    const FramedSystem plain = plain_system(y, ghat->group);
    for (int m : fib.members) {
      const GhatCocycleY x{ghat, fib.ghat_classes.reps[m]};
      const ConnectedReduction cr = connected_reduction(y, x);
      for (int v : cr.reduced.x)
        if (!std::binary_search(cr.ghat_prime.begin(), cr.ghat_prime.end(), v)) valid = false;
      if (!framed_is_cocycle(plain, cr.reduced.x)) valid = false;
      if (fib.ghat_classes.class_of(cr.reduced.x) != m) same = false;
      if (cr.cover_components != 1) connected = false;
      const auto img = induced_gamma_class(y, x).monodromy.image.elements;
      if (img.size() != cr.gamma_prime.elements.size()) mono = false;
    }
    out.add("connected reduction lands in the subgroup", valid);
    out.add("connected reduction keeps the class", same);
    out.add("reduced cover is connected", connected);
    out.add("reduction group is the monodromy group", mono);
  }

  // normaliser embedding for Γ' = Γ and Γ' = 1
  {
    std::vector<int> all(p.data.Gamma().order);
    for (int k = 0; k < p.data.Gamma().order; ++k) all[k] = k;
    merge(out, normalizer_embedding_check(y, ghat, all, b), "full: ");
    if (p.data.Gamma().order > 1) merge(out, normalizer_embedding_check(y, ghat, {0}, b), "trivial: ");
  }
  return out;
}

CheckList verify_roundtrips(const fixtures::GridPoint& p, const EnumBudget& b, unsigned seed) {
  CheckList out;
  std::mt19937 rng(seed);
  const CoverDescent ds = quotient(p.x);
  const auto ghat = build_twisted_product(p.data);
  const CohomologySet h1 = h1_twisted(p.x, p.data, b);
  const CohomologySet hc = framed_h1(c_twisted_system(ds, p.data), b);

  bool up_rt = true, down_rt = true, gauge_ok = true, cover_ok = true;
  for (const auto& rep : h1.reps) {
    const TwistedCocycle e = deserialize(p.x, rep);
    const CTwistedCocycleY yc = descend(ds, p.data, e);
    if (h1.class_of(serialize(ascend(yc))) != h1.class_of(rep)) up_rt = false;
    for (int s = 0; s < 8; ++s) {
      std::vector<int> h(p.x.nerve.vertices);
      for (auto& v : h) v = static_cast<int>(rng() % p.data.G().order);
      const CTwistedCocycleY moved = descend(ds, p.data, gauge(p.x, p.data.action, e, h));
      if (hc.class_of(moved.k) != hc.class_of(yc.k)) gauge_ok = false;
    }
    const InducedGamma ig = induced_gamma_class(ds.down, to_ghat_cocycle(yc, ghat));
    const CoverDescent rebuilt = build_cover(ds.down, ig.gamma);
    if (!find_equivariant_iso(rebuilt.up, p.x, 5'000'000, rebuilt.orbit, ds.orbit)) cover_ok = false;
  }
  for (const auto& k : hc.reps) {
    const CTwistedCocycleY yc{ds, p.data, k};
    const CTwistedCocycleY again = descend(ds, p.data, ascend(yc));
    if (again.k != k) down_rt = false;
  }
  out.add("ascend after descend is the identity on classes", up_rt);
  out.add("descend after ascend is the identity", down_rt);
  out.add("descend commutes with gauge", gauge_ok);
  out.add("induced class of the Ghat cocycle rebuilds the cover", cover_ok);

  merge(out, verify_action_roundtrips(p.data), "");

  // recocycling
  {
    bool counts = true, bijective = true, transported = true;
    const auto ss = admissible_recocyclings(p.data);
    for (const auto& s : ss) {
      const Recocycling r = recocycle(p.data, s);
      const CohomologySet h1s = h1_twisted(p.x, r.to, b);
      if (h1s.size() != h1.size()) counts = false;
      std::set<int> img;
      for (const auto& rep : h1.reps) {
        const TwistedCocycle t = transport_cocycle(p.x, r, deserialize(p.x, rep));
        if (!is_twisted_cocycle(p.x, r.to, t).ok) bijective = false;
        img.insert(h1s.class_of(serialize(t)));
      }
      if (static_cast<int>(img.size()) != h1s.size() || img.count(-1)) bijective = false;
      for (const auto& ns : twisted_set_fixtures(p.data)) {
        try {
          const TwistedGSet t = transport(ns.set, r);
          validate_twisted_action(t.data, t.size, t.g_act, t.gamma_act, t.side);
        } catch (const ValidationError&) {
          transported = false;
        }
      }
    }
    out.counts["recocyclings"] = static_cast<long long>(ss.size());
    out.add("recocycling preserves |H1|", counts);
    out.add("recocycling transport is a class bijection", bijective);
    out.add("transported twisted sets are valid", transported);
  }
  return out;
}

}  // namespace twc

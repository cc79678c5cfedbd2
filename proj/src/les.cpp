#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "twc/cech.hpp"

namespace twc {

LesContext les_context(const GammaNerve& x, const TwistedData& d) {
  LesContext ctx{x, d, {}, {}, {}, {}};
  ctx.z_act = center_action(d.action, &ctx.z);
  ctx.q = quotient_group(d.G(), ctx.z.elements, d.G().label + "/Z");
  ctx.q_act = quotient_action(d.action, ctx.q);
  return ctx;
}

TwistedCocycle project_cocycle(const LesContext& ctx, const TwistedCocycle& c) {
  TwistedCocycle r = c;
  for (auto& v : r.a) v = ctx.q.proj[v];
  for (auto& row : r.phi)
    for (auto& v : row) v = ctx.q.proj[v];
  return r;
}

TwistedCocycle include_cocycle(const LesContext& ctx, const TwistedCocycle& zc) {
  TwistedCocycle r = zc;
  for (auto& v : r.a) v = ctx.z.elements[v];
  for (auto& row : r.phi)
    for (auto& v : row) v = ctx.z.elements[v];
  return r;
}

namespace {

// Maps G-values into Z indices; returns false on the first non-central value.
bool to_z(const LesContext& ctx, std::vector<int>& row, std::vector<int>& bad) {
  for (size_t k = 0; k < row.size(); ++k) {
    const int z = ctx.z.index_of(row[k]);
    if (z < 0) {
      bad = {static_cast<int>(k), row[k]};
      return false;
    }
    row[k] = z;
  }
  return true;
}

CochainTriple target_in_z(const LesContext& ctx) {
  CochainTriple t = cocycle_target(ctx.x, ctx.data);
  for (auto& row : t.w)
    for (auto& v : row) v = ctx.z.index_of(v);
  return t;
}

}  // namespace

DeltaResult delta_h0(const LesContext& ctx, const std::vector<int>& gbar, const std::vector<int>& lift, Fault fault) {
  const GammaNerve& x = ctx.x;
  const FiniteGroup& g = ctx.data.G();
  std::vector<int> h = lift;
  if (h.empty())
    for (int v : gbar) h.push_back(ctx.q.lift[v]);
  for (int v = 0; v < x.nerve.vertices; ++v)
    if (ctx.q.proj[h[v]] != gbar[v]) throw ValidationError("LiftMismatch", "lift does not project to the class", {v});
  DeltaResult r;
  TwistedCocycle c = gauge(x, ctx.data.action, trivial_cocycle(x, g), h);
  if (fault == Fault::SignFlip)
    for (int a = 0; a < x.gamma->order; ++a)
      for (int i = 0; i < x.nerve.vertices; ++i)
        c.phi[a][i] = g.op(g.inv[h[x.v(i, a)]], g.inv[ctx.data.action.apply_inv(a, h[i])]);
  std::vector<int> bad;
  if (!to_z(ctx, c.a, bad)) {
    r.ok = false;
    r.problem = "edge value outside the centre";
    r.witness = bad;
    return r;
  }
  for (int a = 0; a < x.gamma->order; ++a)
    if (!to_z(ctx, c.phi[a], bad)) {
      r.ok = false;
      r.problem = "phi value outside the centre";
      r.witness = {a, bad[0], bad[1]};
      return r;
    }
  r.z_cocycle = c;
  return r;
}

DeltaResult delta_h1(const LesContext& ctx, const TwistedCocycle& xbar, const TwistedCocycle* lift, Fault fault) {
  const GammaNerve& x = ctx.x;
  TwistedCocycle l;
  if (lift) {
    l = *lift;
    if (!(project_cocycle(ctx, l) == xbar)) throw ValidationError("LiftMismatch", "lift does not project to the cocycle");
  } else {
    l = xbar;
    for (auto& v : l.a) v = ctx.q.lift[v];
    for (auto& row : l.phi)
      for (auto& v : row) v = ctx.q.lift[v];
  }
  DeltaResult r;
  CochainTriple t = d1(x, ctx.data.action, l, fault);
  std::vector<int> bad;
  if (!to_z(ctx, t.u, bad)) {
    r.ok = false;
    r.problem = "u outside the centre";
    r.witness = bad;
    return r;
  }
  for (auto* tab : {&t.v, &t.w})
    for (size_t k = 0; k < tab->size(); ++k)
      if (!to_z(ctx, (*tab)[k], bad)) {
        r.ok = false;
        r.problem = tab == &t.v ? "v outside the centre" : "w outside the centre";
        r.witness = {static_cast<int>(k), bad[0], bad[1]};
        return r;
      }
  r.triple = t;
  return r;
}

ExistenceResult existence_check(const GammaNerve& x, const TwistedData& d, const EnumBudget& b) {
  const LesContext ctx = les_context(x, d);
  const CohomologySet hq = h1_twisted(x, trivial_data(ctx.q_act), b);
  const H2Engine eng(x, ctx.z_act);
  const CochainTriple target = target_in_z(ctx);
  const auto want = eng.key(target);
  const FiniteGroup& z = *ctx.z.group;
  ExistenceResult res;
  for (int k = 0; k < hq.size(); ++k) {
    const TwistedCocycle xbar = deserialize(x, hq.reps[k]);
    const DeltaResult dr = delta_h1(ctx, xbar);
    if (!dr.ok) throw InternalError("connecting map left the centre: " + dr.problem, dr.witness);
    if (eng.key(dr.triple) != want) continue;
    // ζ with d1(ζ) = d1(lift)·target^-1; then lift·ζ^-1 hits the target
    CochainTriple diff = dr.triple;
    for (size_t i = 0; i < diff.u.size(); ++i) diff.u[i] = z.op(diff.u[i], z.inv[target.u[i]]);
    for (size_t a = 0; a < diff.v.size(); ++a)
      for (size_t i = 0; i < diff.v[a].size(); ++i) diff.v[a][i] = z.op(diff.v[a][i], z.inv[target.v[a][i]]);
    for (size_t a = 0; a < diff.w.size(); ++a)
      for (size_t i = 0; i < diff.w[a].size(); ++i) diff.w[a][i] = z.op(diff.w[a][i], z.inv[target.w[a][i]]);
    const auto zeta = eng.preimage(diff);
    if (!zeta) throw InternalError("class matched but no preimage was found", {k});
    TwistedCocycle zinv = *zeta;
    for (auto& v : zinv.a) v = z.inv[v];
    for (auto& row : zinv.phi)
      for (auto& v : row) v = z.inv[v];
    TwistedCocycle lift = xbar;
    for (auto& v : lift.a) v = ctx.q.lift[v];
    for (auto& row : lift.phi)
      for (auto& v : row) v = ctx.q.lift[v];
    TwistedCocycle w = multiply_central(d.G(), lift, include_cocycle(ctx, zinv));
    const CocycleCheck chk = is_twisted_cocycle(x, d, w);
    if (!chk.ok) throw InternalError("existence witness fails in component " + chk.component, chk.witness);
    res.exists = true;
    res.witness = w;
    res.quotient_class = k;
    return res;
  }
  return res;
}

CheckList les_verify(const GammaNerve& x, const TwistedData& d, const EnumBudget& b, Fault fault, unsigned seed) {
  CheckList out;
  std::mt19937 rng(seed);
  const TwistedData dt = trivial_data(d.action);
  const LesContext ctx = les_context(x, dt);
  const FiniteGroup& g = d.G();
  const FiniteGroup& z = *ctx.z.group;
  const FiniteGroup& q = *ctx.q.group;
  const int nv = x.nerve.vertices;
  const int ng = x.gamma->order;

  const H0Group h0z = h0_twisted(x, ctx.z_act);
  const H0Group h0g = h0_twisted(x, d.action);
  const H0Group h0q = h0_twisted(x, ctx.q_act);
  const TwistedData zd = trivial_data(ctx.z_act);
  const CohomologySet h1z = h1_twisted(x, zd, b);
  const CohomologySet h1g = h1_twisted(x, dt, b);
  const CohomologySet h1q = h1_twisted(x, trivial_data(ctx.q_act), b);
  const H2Engine eng(x, ctx.z_act);
  const CohomologySet h2z = eng.classes(b);
  out.counts["H0(Z)"] = static_cast<long long>(h0z.elements.size());
  out.counts["H0(G)"] = static_cast<long long>(h0g.elements.size());
  out.counts["H0(G/Z)"] = static_cast<long long>(h0q.elements.size());
  out.counts["H1(Z)"] = h1z.size();
  out.counts["H1(G)"] = h1g.size();
  out.counts["H1(G/Z)"] = h1q.size();
  out.counts["H2(Z)"] = h2z.size();

  auto include0 = [&](const std::vector<int>& hz) {
    std::vector<int> r(nv);
    for (int i = 0; i < nv; ++i) r[i] = ctx.z.elements[hz[i]];
    return r;
  };
  auto project0 = [&](const std::vector<int>& hg) {
    std::vector<int> r(nv);
    for (int i = 0; i < nv; ++i) r[i] = ctx.q.proj[hg[i]];
    return r;
  };

  // H0(Z) -> H0(G)
  {
    std::set<std::vector<int>> imgs;
    bool ok = true;
    for (const auto& h : h0z.elements) {
      const auto img = include0(h);
      if (h0g.index_of(img) < 0) ok = false;
      imgs.insert(img);
    }
    out.add("H0(Z)->H0(G) injective", ok && imgs.size() == h0z.elements.size());
    std::set<std::vector<int>> kernel;
    for (const auto& h : h0g.elements)
      if (project0(h) == std::vector<int>(nv, 0)) kernel.insert(h);
    out.add("exact at H0(G)", kernel == imgs);
  }

  // fibres of H0(G) -> H0(G/Z) are H0(Z)-cosets
  {
    bool ok = true;
    std::map<std::vector<int>, std::set<std::vector<int>>> fibre;
    for (const auto& h : h0g.elements) fibre[project0(h)].insert(h);
    for (const auto& h : h0g.elements) {
      std::set<std::vector<int>> coset;
      for (const auto& hz : h0z.elements) {
        auto p = include0(hz);
        for (int i = 0; i < nv; ++i) p[i] = g.op(h[i], p[i]);
        coset.insert(p);
      }
      if (coset != fibre[project0(h)]) ok = false;
    }
    out.add("H0(G)->H0(G/Z) fibres are H0(Z)-cosets", ok);
  }

  // δ0
  std::vector<int> delta0(h0q.elements.size(), -1);
  std::vector<TwistedCocycle> delta0_cocycles(h0q.elements.size());
  bool delta0_ok = false;
  {
    bool lands = true, independent = true;
    std::string detail;
    std::vector<int> witness;
    const double lift_count = std::pow(static_cast<double>(z.order), nv);
    for (size_t k = 0; k < h0q.elements.size() && lands; ++k) {
      const auto& gbar = h0q.elements[k];
      const DeltaResult r = delta_h0(ctx, gbar, {}, fault);
      if (!r.ok) {
        lands = false;
        detail = r.problem;
        witness = r.witness;
        break;
      }
      if (!is_twisted_cocycle(x, zd, r.z_cocycle).ok) {
        lands = false;
        detail = "delta0 output is not a cocycle";
        witness = {static_cast<int>(k)};
        break;
      }
      delta0_cocycles[k] = r.z_cocycle;
      delta0[k] = h1z.class_of(serialize(r.z_cocycle));
      auto check_lift = [&](const std::vector<int>& zs) {
        std::vector<int> lift(nv);
        for (int i = 0; i < nv; ++i) lift[i] = g.op(ctx.q.lift[gbar[i]], ctx.z.elements[zs[i]]);
        const DeltaResult r2 = delta_h0(ctx, gbar, lift, fault);
        if (!r2.ok) {
          lands = false;
          detail = r2.problem;
          witness = r2.witness;
          return;
        }
        if (h1z.class_of(serialize(r2.z_cocycle)) != delta0[k]) {
          independent = false;
          witness = {static_cast<int>(k)};
        }
      };
      if (lift_count <= 4096) {
        std::vector<int> zs(nv, 0);
        while (lands) {
          check_lift(zs);
          int p = 0;
          while (p < nv && ++zs[p] == z.order) zs[p++] = 0;
          if (p >= nv) break;
        }
      } else {
        for (int s = 0; s < 64 && lands; ++s) {
          std::vector<int> zs(nv);
          for (auto& v : zs) v = static_cast<int>(rng() % z.order);
          check_lift(zs);
        }
      }
    }
    out.add("delta0 lands in Z1(Z)", lands, detail, witness);
    out.add("delta0 independent of lift", lands && independent, {}, lands ? witness : std::vector<int>{});
    delta0_ok = lands;
    if (!lands) {
      out.add("exact at H0(G/Z)", false, "not evaluated");
      out.add("delta0 fibres are H0(G)-orbits", false, "not evaluated");
    } else {
      // exact at H0(G/Z)
      std::set<int> img;
      for (const auto& h : h0g.elements) img.insert(h0q.index_of(project0(h)));
      std::set<int> ker;
      for (size_t k = 0; k < delta0.size(); ++k)
        if (delta0[k] == h1z.distinguished) ker.insert(static_cast<int>(k));
      out.add("exact at H0(G/Z)", img == ker);
      // fibres of δ0 are H0(G)-orbits by left multiplication
      bool ok = true;
      for (size_t k = 0; k < h0q.elements.size(); ++k) {
        std::set<int> orbit, fibre;
        for (const auto& h : h0g.elements) {
          auto p = project0(h);
          for (int i = 0; i < nv; ++i) p[i] = q.op(p[i], h0q.elements[k][i]);
          orbit.insert(h0q.index_of(p));
        }
        for (size_t m = 0; m < delta0.size(); ++m)
          if (delta0[m] == delta0[k]) fibre.insert(static_cast<int>(m));
        if (orbit != fibre) ok = false;
      }
      out.add("delta0 fibres are H0(G)-orbits", ok);
    }
  }

  // H1(Z) -> H1(G)
  std::vector<int> i1(h1z.size());
  for (int k = 0; k < h1z.size(); ++k) i1[k] = h1g.class_of(serialize(include_cocycle(ctx, deserialize(x, h1z.reps[k]))));
  if (!delta0_ok) {
    out.add("exact at H1(Z)", false, "not evaluated");
    out.add("H1(Z)->H1(G) fibres are delta0 orbits", false, "not evaluated");
  } else {
    std::set<int> img(delta0.begin(), delta0.end()), ker;
    for (int k = 0; k < h1z.size(); ++k)
      if (i1[k] == h1g.distinguished) ker.insert(k);
    out.add("exact at H1(Z)", img == ker);
    bool ok = true;
    for (int k = 0; k < h1z.size(); ++k) {
      const TwistedCocycle zc = deserialize(x, h1z.reps[k]);
      std::set<int> orbit, fibre;
      for (const auto& dz : delta0_cocycles) orbit.insert(h1z.class_of(serialize(multiply_central(z, zc, dz))));
      for (int m = 0; m < h1z.size(); ++m)
        if (i1[m] == i1[k]) fibre.insert(m);
      if (orbit != fibre) ok = false;
    }
    out.add("H1(Z)->H1(G) fibres are delta0 orbits", ok);
  }

  // H1(G) -> H1(G/Z)
  std::vector<int> p1(h1g.size());
  for (int k = 0; k < h1g.size(); ++k) p1[k] = h1q.class_of(serialize(project_cocycle(ctx, deserialize(x, h1g.reps[k]))));
  {
    std::set<int> img(i1.begin(), i1.end()), ker;
    for (int k = 0; k < h1g.size(); ++k)
      if (p1[k] == h1q.distinguished) ker.insert(k);
    out.add("exact at H1(G)", img == ker);
    bool ok = true;
    for (int k = 0; k < h1g.size(); ++k) {
      const TwistedCocycle c = deserialize(x, h1g.reps[k]);
      std::set<int> orbit, fibre;
      for (const auto& zk : h1z.reps)
        orbit.insert(h1g.class_of(serialize(multiply_central(g, c, include_cocycle(ctx, deserialize(x, zk))))));
      for (int m = 0; m < h1g.size(); ++m)
        if (p1[m] == p1[k]) fibre.insert(m);
      if (orbit != fibre) ok = false;
    }
    out.add("H1(G)->H1(G/Z) fibres are H1(Z)-orbits", ok);
  }

  // δ1
  {
    bool lands = true, kernel = true, lift_ok = true, gauge_ok = true;
    std::string detail;
    std::vector<int> witness;
    std::vector<std::vector<int>> delta1(h1q.size());
    auto random_lift = [&](const TwistedCocycle& xbar) {
      TwistedCocycle l = xbar;
      auto pick = [&](int v) { return g.op(ctx.q.lift[v], ctx.z.elements[rng() % z.order]); };
      for (auto& v : l.a) v = pick(v);
      for (int a = 1; a < ng; ++a)
        for (auto& v : l.phi[a]) v = pick(v);
      return l;
    };
    for (int k = 0; k < h1q.size() && lands && kernel; ++k) {
      const TwistedCocycle xbar = deserialize(x, h1q.reps[k]);
      const DeltaResult r = delta_h1(ctx, xbar, nullptr, fault);
      if (!r.ok) {
        lands = false;
        detail = r.problem;
        witness = r.witness;
        break;
      }
      if (!eng.in_kernel(r.triple)) {
        kernel = false;
        witness = {k};
        break;
      }
      delta1[k] = eng.key(r.triple);
      for (int s = 0; s < 16; ++s) {
        const TwistedCocycle l = random_lift(xbar);
        const DeltaResult r2 = delta_h1(ctx, xbar, &l, fault);
        if (!r2.ok || !eng.in_kernel(r2.triple) || eng.key(r2.triple) != delta1[k]) {
          lift_ok = false;
          witness = {k, s};
        }
      }
      for (int s = 0; s < 16; ++s) {
        std::vector<int> hb(nv);
        for (auto& v : hb) v = static_cast<int>(rng() % q.order);
        const TwistedCocycle moved = gauge(x, ctx.q_act, xbar, hb);
        const DeltaResult r2 = delta_h1(ctx, moved, nullptr, fault);
        if (!r2.ok || !eng.in_kernel(r2.triple) || eng.key(r2.triple) != delta1[k]) {
          gauge_ok = false;
          witness = {k, s};
        }
      }
    }
    out.add("delta1 values are central", lands, detail, lands ? std::vector<int>{} : witness);
    out.add("delta1 lands in ker d2", lands && kernel);
    out.add("delta1 independent of lift", lands && kernel && lift_ok);
    out.add("delta1 independent of gauge", lands && kernel && gauge_ok);
    std::set<int> img(p1.begin(), p1.end()), ker;
    if (lands && kernel) {
      const auto zero = eng.key(CochainTriple{std::vector<int>(x.nerve.tris.size(), 0),
                                              Table(ng, std::vector<int>(x.nerve.edges.size(), 0)),
                                              Table(static_cast<size_t>(ng) * ng, std::vector<int>(nv, 0))});
      for (int k = 0; k < h1q.size(); ++k)
        if (delta1[k] == zero) ker.insert(k);
      out.add("exact at H1(G/Z)", img == ker);
    } else {
      out.add("exact at H1(G/Z)", false, "not evaluated");
    }

    const CochainTriple target = target_in_z(les_context(x, d));
    const bool target_ok = eng.in_kernel(target);
    out.add("theta^-1 c lies in ker d2", target_ok);
    if (!d.c_trivial()) {
      bool ok = false;
      if (lands && kernel && target_ok) {
        const auto want = eng.key(target);
        const CohomologySet h1c = h1_twisted(x, d, b);
        out.counts["H1_c(G)"] = h1c.size();
        std::set<int> image, pre;
        for (const auto& rep : h1c.reps) image.insert(h1q.class_of(serialize(project_cocycle(ctx, deserialize(x, rep)))));
        for (int k = 0; k < h1q.size(); ++k)
          if (delta1[k] == want) pre.insert(k);
        ok = image == pre;
      }
      out.add("image of H1_c(G) is the delta1 fibre over theta^-1 c", ok);
    }
  }
  return out;
}

}  // namespace twc

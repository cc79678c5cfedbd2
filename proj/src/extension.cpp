#include "twc/extension.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace twc {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool is_central(const FiniteGroup& g, int x) {
  for (int y = 0; y < g.order; ++y)
    if (g.op(x, y) != g.op(y, x)) return false;
  return true;
}

}  // namespace

GammaAction make_action(const GroupPtr& gamma, const GroupPtr& g, const Table& theta) {
  const int n = gamma->order;
  if (static_cast<int>(theta.size()) != n) throw ValidationError("InvalidAction", "theta needs one row per gamma element");
  GammaAction act{gamma, g, theta, {}};
  for (int gm = 0; gm < n; ++gm) {
    if (!is_bijection(theta[gm], g->order) || !is_hom(*g, *g, theta[gm]))
      throw ValidationError("NotAnAutomorphism", "theta[" + std::to_string(gm) + "] is not an automorphism", {gm});
    act.theta_inv.push_back(invert_perm(theta[gm]));
  }
  for (int x = 0; x < g->order; ++x)
    if (theta[0][x] != x) throw ValidationError("NotNormalized", "theta of the identity is not the identity", {0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (compose(theta[a], theta[b]) != theta[gamma->op(a, b)])
        throw ValidationError("NotAHomomorphism", "theta" + pair_str(a, b) + " breaks composition", {a, b});
  return act;
}

GammaAction trivial_action(const GroupPtr& gamma, const GroupPtr& g) {
  std::vector<int> id(g->order);
  for (int x = 0; x < g->order; ++x) id[x] = x;
  return make_action(gamma, g, Table(gamma->order, id));
}

GammaAction cyclic_action(const GroupPtr& gamma, const GroupPtr& g, const std::vector<int>& generator_aut) {
  const auto gens = generating_set(*gamma);
  if (gens.size() > 1) throw ValidationError("InvalidAction", "gamma is not cyclic");
  Table theta(gamma->order);
  std::vector<int> cur(g->order);
  for (int x = 0; x < g->order; ++x) cur[x] = x;
  int gm = 0;
  for (int k = 0; k < gamma->order; ++k) {
    theta[gm] = cur;
    if (!gens.empty()) {
      cur = compose(generator_aut, cur);
      gm = gamma->op(gm, gens[0]);
    }
  }
  return make_action(gamma, g, theta);
}

GammaAction restrict_action(const GammaAction& act, const Subgroup& sub) {
  Table theta(act.gamma->order, std::vector<int>(sub.elements.size()));
  for (int gm = 0; gm < act.gamma->order; ++gm)
    for (size_t k = 0; k < sub.elements.size(); ++k) {
      const int idx = sub.index_of(act.apply(gm, sub.elements[k]));
      if (idx < 0) throw ValidationError("SubgroupNotInvariant", "theta moves the subgroup", {gm});
      theta[gm][k] = idx;
    }
  return make_action(act.gamma, sub.group, theta);
}

bool TwistedData::c_trivial() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

TwistedData check_cocycle(const GammaAction& act, const std::vector<int>& c) {
  const int n = act.gamma->order;
  const FiniteGroup& g = *act.g;
  if (static_cast<int>(c.size()) != n * n) throw ValidationError("InvalidCocycle", "c needs |Gamma|^2 entries");
  for (int x : c)
    if (x < 0 || x >= g.order) throw ValidationError("InvalidCocycle", "c value out of range", {x});
  auto at = [&](int a, int b) { return c[static_cast<size_t>(a) * n + b]; };
  for (int gm = 0; gm < n; ++gm)
    if (at(gm, 0) != 0 || at(0, gm) != 0)
      throw ValidationError("NotNormalized", "c(γ,1) or c(1,γ) is not 1 for γ=" + std::to_string(gm), {gm});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_central(g, at(a, b)))
        throw ValidationError("ValueNotCentral", "c" + pair_str(a, b) + " is not central", {a, b});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = g.op(act.apply(x, at(y, z)), at(x, act.gamma->op(y, z)));
        const int rhs = g.op(at(x, y), at(act.gamma->op(x, y), z));
        if (lhs != rhs)
          throw ValidationError("CocycleViolation",
                                "cocycle identity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                    std::to_string(z) + ")",
                                {x, y, z});
      }
  return TwistedData{act, c};
}

TwistedData check_cocycle(const GammaAction& act, const Table& c) {
  std::vector<int> flat;
  for (const auto& row : c) {
    if (static_cast<int>(row.size()) != act.gamma->order)
      throw ValidationError("InvalidCocycle", "c rows need |Gamma| entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return check_cocycle(act, flat);
}

TwistedData trivial_data(const GammaAction& act) {
  return TwistedData{act, std::vector<int>(static_cast<size_t>(act.gamma->order) * act.gamma->order, 0)};
}

Table c_table(const TwistedData& d) {
  const int n = d.Gamma().order;
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = d.cc(a, b);
  return t;
}

std::vector<int> multiply_cochains(const FiniteGroup& g, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = g.op(x[i], y[i]);
  return r;
}

TwistedData coboundary(const GammaAction& act, const std::vector<int>& a) {
  const int n = act.gamma->order;
  const FiniteGroup& g = *act.g;
  if (static_cast<int>(a.size()) != n) throw ValidationError("InvalidCochain", "a needs one value per gamma element");
  if (a[0] != 0) throw ValidationError("NotNormalized", "a(1) is not 1", {0});
  for (int gm = 0; gm < n; ++gm)
    if (!is_central(g, a[gm])) throw ValidationError("ValueNotCentral", "a value is not central", {gm});
  std::vector<int> c(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      c[static_cast<size_t>(x) * n + y] = g.op(g.op(act.apply(x, a[y]), g.inv[a[act.gamma->op(x, y)]]), a[x]);
  try {
    return check_cocycle(act, c);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("coboundary is not a cocycle: ") + e.what(), e.witness());
  }
}

std::vector<int> H2Gamma::canonical(const std::vector<int>& c) const {
  std::vector<int> best;
  for (const auto& b : coboundaries) {
    auto prod = multiply_cochains(*action.g, c, b);
    if (best.empty() || prod < best) best = std::move(prod);
  }
  return best;
}

int H2Gamma::class_of(const std::vector<int>& c) const {
  check_cocycle(action, c);
  return rep_index.at(canonical(c));
}

H2Gamma second_cohomology(const GammaAction& act, long long budget) {
  const FiniteGroup& z = *act.g;
  if (!is_abelian(z)) throw ValidationError("NotAbelian", "coefficient group must be abelian");
  const int n = act.gamma->order;
  const int free_entries = (n - 1) * (n - 1);
  const double total = std::pow(static_cast<double>(z.order), free_entries);
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("second_cohomology needs " + std::to_string(static_cast<long long>(total)) + " cochains",
                         {z.order, n});

  H2Gamma h{act, {}, {}, {}, 0};

  std::set<std::vector<int>> bset;
  std::vector<int> a(n, 0);
  while (true) {
    bset.insert(coboundary(act, a).c);
    int k = 1;
    while (k < n && ++a[k] == z.order) a[k++] = 0;
    if (k >= n) break;
  }
  h.coboundaries.assign(bset.begin(), bset.end());

  std::vector<int> c(static_cast<size_t>(n) * n, 0);
  std::vector<int> slots;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) slots.push_back(x * n + y);
  std::set<std::vector<int>> reps;
  while (true) {
    bool ok = true;
    try {
      check_cocycle(act, c);
    } catch (const ValidationError&) {
      ok = false;
    }
    if (ok) {
      ++h.cocycle_count;
      reps.insert(h.canonical(c));
    }
    size_t k = 0;
    while (k < slots.size() && ++c[slots[k]] == z.order) c[slots[k++]] = 0;
    if (k >= slots.size()) break;
  }
  h.reps.assign(reps.begin(), reps.end());
  for (size_t i = 0; i < h.reps.size(); ++i) h.rep_index[h.reps[i]] = static_cast<int>(i);
  return h;
}

GammaAction center_action(const GammaAction& act, Subgroup* z_out) {
  Subgroup z = center(*act.g);
  GammaAction r = restrict_action(act, z);
  if (z_out) *z_out = z;
  return r;
}

std::vector<int> c_in_center(const TwistedData& d, const Subgroup& z) {
  std::vector<int> r(d.c.size());
  for (size_t i = 0; i < d.c.size(); ++i) {
    r[i] = z.index_of(d.c[i]);
    if (r[i] < 0) throw ValidationError("ValueNotCentral", "c value outside the centre", {static_cast<int>(i)});
  }
  return r;
}

Table twisted_product_table(const GammaAction& act, const std::vector<int>& c) {
  const int ng = act.g->order, n = act.gamma->order;
  const FiniteGroup& g = *act.g;
  const FiniteGroup& gm = *act.gamma;
  Table t(ng * n, std::vector<int>(ng * n));
  for (int x = 0; x < ng * n; ++x)
    for (int y = 0; y < ng * n; ++y) {
      const int g1 = x % ng, c1 = x / ng, g2 = y % ng, c2 = y / ng;
      const int gg = g.op(g.op(g1, act.apply(c1, g2)), c[static_cast<size_t>(c1) * n + c2]);
      t[x][y] = gg + ng * gm.op(c1, c2);
    }
  return t;
}

TwistedProductPtr build_twisted_product(const TwistedData& d) {
  auto p = std::make_shared<TwistedProductGroup>();
  p->data = d;
  const int ng = d.G().order, n = d.Gamma().order;
  const std::string label = d.G().label + "x_" + d.Gamma().label;
  std::vector<std::string> names;
  for (int x = 0; x < ng * n; ++x)
    names.push_back("(" + d.G().element_name(x % ng) + "," + d.Gamma().element_name(x / ng) + ")");
  ValidatedGroup vg;
  try {
    vg = validate_group(twisted_product_table(d.action, d.c), label, names);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("twisted product is not a group: ") + e.what(), e.witness());
  }
  if (vg.relabel[0] != 0) throw InternalError("twisted product identity is not (1,1)");
  p->group = vg.group;
  p->embed_g.resize(ng);
  for (int g = 0; g < ng; ++g) p->embed_g[g] = g;
  std::vector<int> qmap(ng * n);
  for (int x = 0; x < ng * n; ++x) qmap[x] = x / ng;
  p->q = GroupHom{p->group, d.action.gamma, qmap};
  p->s.resize(n);
  for (int gm = 0; gm < n; ++gm) p->s[gm] = ng * gm;
  return p;
}

GammaHat gamma_hat(const TwistedData& d, const TwistedProductGroup& ghat) {
  GammaHat r;
  GammaAction za = center_action(d.action, &r.z);
  TwistedData zd{za, c_in_center(d, r.z)};
  r.hat = build_twisted_product(zd);
  const int nz = r.z.group->order;
  r.into_ghat.resize(r.hat->group->order);
  for (int x = 0; x < r.hat->group->order; ++x) r.into_ghat[x] = ghat.index(r.z.elements[x % nz], x / nz);
  if (!is_hom(*r.hat->group, *ghat.group, r.into_ghat))
    throw InternalError("gamma_hat does not embed in the twisted product");
  return r;
}

CohomologousIso cohomologous_iso(const TwistedData& d, const std::vector<int>& a) {
  TwistedData db = coboundary(d.action, a);
  TwistedData d2 = check_cocycle(d.action, multiply_cochains(d.G(), d.c, db.c));
  CohomologousIso r;
  r.source = build_twisted_product(d);
  r.target = build_twisted_product(d2);
  const int ng = d.G().order;
  std::vector<int> map(r.source->group->order);
  for (int x = 0; x < static_cast<int>(map.size()); ++x) {
    const int g = x % ng, gm = x / ng;
    map[x] = r.target->index(d.G().op(g, d.G().inv[a[gm]]), gm);
  }
  r.iso = GroupHom{r.source->group, r.target->group, map};
  if (!is_bijection(map, r.target->group->order) || !is_hom(*r.source->group, *r.target->group, map))
    throw InternalError("cohomologous_iso map is not an isomorphism");
  return r;
}

ExtractedData extract_twisted_data(const GroupPtr& ghat, const std::vector<int>& normal,
                                   const std::vector<int>& section) {
  const FiniteGroup& gh = *ghat;
  ExtractedData r;
  r.g = make_subgroup(gh, normal, "G");
  if (!is_normal(gh, r.g.elements)) throw ValidationError("NotNormal", "G is not normal in the extension");
  r.gamma = quotient_group(gh, r.g.elements, "Gamma");
  const int n = r.gamma.group->order;
  if (static_cast<int>(section.size()) != n)
    throw ValidationError("SectionNotNormalised", "section needs one element per coset");
  r.s.assign(n, -1);
  for (int x : section) {
    if (x < 0 || x >= gh.order) throw ValidationError("SectionNotNormalised", "section element out of range", {x});
    const int cls = r.gamma.proj[x];
    if (r.s[cls] >= 0) throw ValidationError("SectionNotNormalised", "two section elements in one coset", {x});
    r.s[cls] = x;
  }
  if (r.s[0] != 0) throw ValidationError("SectionNotNormalised", "s(1) is not the identity", {r.s[0]});

  const FiniteGroup& g = *r.g.group;
  Table theta(n, std::vector<int>(g.order));
  for (int gm = 0; gm < n; ++gm)
    for (int k = 0; k < g.order; ++k) {
      const int conj = gh.op(gh.op(r.s[gm], r.g.elements[k]), gh.inv[r.s[gm]]);
      const int idx = r.g.index_of(conj);
      if (idx < 0) throw ValidationError("SectionNotNormalised", "Ad_s(γ) does not preserve G", {gm});
      theta[gm][k] = idx;
    }
  std::vector<int> c(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = r.gamma.group->op(a, b);
      const int val = gh.op(gh.op(r.s[a], r.s[b]), gh.inv[r.s[ab]]);
      const int idx = r.g.index_of(val);
      if (idx < 0) throw InternalError("s(a)s(b)s(ab)^-1 outside G");
      if (!is_central(g, idx))
        throw ValidationError("CocycleNotCentral", "c" + pair_str(a, b) + " is not central in G", {a, b});
      c[static_cast<size_t>(a) * n + b] = idx;
    }
  GammaAction act;
  try {
    act = make_action(r.gamma.group, r.g.group, theta);
    r.data = check_cocycle(act, c);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("extracted data invalid: ") + e.what(), e.witness());
  }
  auto prod = build_twisted_product(r.data);
  std::vector<int> map(prod->group->order);
  for (int x = 0; x < prod->group->order; ++x)
    map[x] = gh.op(r.g.elements[prod->g_part(x)], r.s[prod->gamma_part(x)]);
  r.iso = GroupHom{prod->group, ghat, map};
  if (!is_bijection(map, gh.order) || !is_hom(*prod->group, gh, map))
    throw InternalError("extraction isomorphism failed");
  return r;
}

Recocycling recocycle(const TwistedData& d, const std::vector<int>& s) {
  const FiniteGroup& g = d.G();
  const FiniteGroup& gm = d.Gamma();
  const int n = gm.order;
  if (static_cast<int>(s.size()) != n) throw ValidationError("InvalidCochain", "s needs one value per gamma element");
  if (s[0] != 0) throw ValidationError("NotNormalized", "s(1) is not 1", {0});
  Table theta(n, std::vector<int>(g.order));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < g.order; ++x) theta[a][x] = g.op(g.op(s[a], d.action.apply(a, x)), g.inv[s[a]]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (compose(theta[a], theta[b]) != theta[gm.op(a, b)])
        throw ValidationError("NotAOneCocycle", "Int_s∘θ is not a homomorphism at " + pair_str(a, b), {a, b});
  std::vector<int> c(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int cs = g.op(g.op(s[a], d.action.apply(a, s[b])), g.inv[s[gm.op(a, b)]]);
      if (!is_central(g, cs)) throw ValidationError("CsNotCentral", "c_s" + pair_str(a, b) + " is not central", {a, b});
      c[static_cast<size_t>(a) * n + b] = g.op(d.cc(a, b), cs);
    }
  Recocycling r;
  r.from = d;
  r.s = s;
  try {
    r.to = check_cocycle(make_action(d.action.gamma, d.action.g, theta), c);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("recocycled data invalid: ") + e.what(), e.witness());
  }
  return r;
}

GroupHom recocycle_iso(const Recocycling& r, const TwistedProductPtr& from_hat, const TwistedProductPtr& to_hat) {
  const FiniteGroup& g = r.from.G();
  std::vector<int> map(to_hat->group->order);
  for (int x = 0; x < to_hat->group->order; ++x) {
    const int gm = to_hat->gamma_part(x);
    map[x] = from_hat->index(g.op(to_hat->g_part(x), r.s[gm]), gm);
  }
  GroupHom h{to_hat->group, from_hat->group, map};
  if (!is_bijection(map, from_hat->group->order) || !is_hom(*h.source, *h.target, map))
    throw InternalError("recocycle_iso is not an isomorphism");
  return h;
}

std::vector<std::vector<int>> admissible_recocyclings(const TwistedData& d, long long budget) {
  const int n = d.Gamma().order, ng = d.G().order;
  if (std::pow(static_cast<double>(ng), n - 1) > static_cast<double>(budget))
    throw BudgetExceeded("too many recocycling maps", {ng, n});
  std::vector<std::vector<int>> out;
  std::vector<int> s(n, 0);
  while (true) {
    try {
      recocycle(d, s);
      out.push_back(s);
    } catch (const ValidationError&) {
    }
    int k = 1;
    while (k < n && ++s[k] == ng) s[k++] = 0;
    if (k >= n) break;
  }
  return out;
}

}  // namespace twc

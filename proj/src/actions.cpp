#include "twc/actions.hpp"

#include <algorithm>

namespace twc {

namespace {

void check_shape(int size, const Table& t, int rows, const char* what) {
  if (static_cast<int>(t.size()) != rows) throw ValidationError("InvalidAction", std::string(what) + " has wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != size) throw ValidationError("InvalidAction", std::string(what) + " row has wrong length");
    for (int x : row)
      if (x < 0 || x >= size) throw ValidationError("InvalidAction", std::string(what) + " entry out of range", {x});
  }
}

}  // namespace

TwistedGSet validate_twisted_action(const TwistedData& d, int size, const Table& g_act, const Table& gamma_act,
                                    Side side) {
  const FiniteGroup& g = d.G();
  const FiniteGroup& gm = d.Gamma();
  if (size <= 0) throw ValidationError("InvalidAction", "empty carrier");
  check_shape(size, g_act, g.order, "g_act");
  check_shape(size, gamma_act, gm.order, "gamma_act");
  const bool right = side == Side::Right;

  for (int m = 0; m < size; ++m) {
    if (g_act[0][m] != m) throw ValidationError("AxiomI", "identity of G moves a point", {m});
    if (gamma_act[0][m] != m) throw ValidationError("AxiomI", "identity of Gamma moves a point", {m});
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y) {
        // right: (m·x)·y = m·(xy); left: x·(y·m) = (xy)·m
        const int lhs = right ? g_act[y][g_act[x][m]] : g_act[x][g_act[y][m]];
        if (lhs != g_act[g.op(x, y)][m]) throw ValidationError("AxiomI", "G-action law fails", {m, x, y});
      }
  }
  for (int m = 0; m < size; ++m)
    for (int a = 0; a < gm.order; ++a)
      for (int x = 0; x < g.order; ++x) {
        const int tx = d.action.apply(a, x);
        // right: (m·θ_γ(g))·γ = (m·γ)·g ; left: γ·(g·m) = θ_γ(g)·(γ·m)
        const int lhs = right ? gamma_act[a][g_act[tx][m]] : gamma_act[a][g_act[x][m]];
        const int rhs = right ? g_act[x][gamma_act[a][m]] : g_act[tx][gamma_act[a][m]];
        if (lhs != rhs) throw ValidationError("AxiomII", "twisted commutation fails", {m, a, x});
      }
  for (int m = 0; m < size; ++m)
    for (int a = 0; a < gm.order; ++a)
      for (int b = 0; b < gm.order; ++b) {
        const int ab = gm.op(a, b);
        // right: (m·γ1)·γ2 = (m·c(γ1,γ2))·(γ1γ2) ; left: γ1·(γ2·m) = c(γ1,γ2)·(γ1γ2·m)
        const int lhs = right ? gamma_act[b][gamma_act[a][m]] : gamma_act[a][gamma_act[b][m]];
        const int rhs = right ? gamma_act[ab][g_act[d.cc(a, b)][m]] : g_act[d.cc(a, b)][gamma_act[ab][m]];
        if (lhs != rhs) throw ValidationError("AxiomIII", "cocycle twist fails", {m, a, b});
      }
  return TwistedGSet{d, size, g_act, gamma_act, side};
}

void validate_ghat_set(const GhatSet& n) {
  const FiniteGroup& gh = *n.group->group;
  check_shape(n.size, n.act, gh.order, "act");
  for (int m = 0; m < n.size; ++m) {
    if (n.act[0][m] != m) throw ValidationError("NotAnAction", "identity moves a point", {m});
    for (int x = 0; x < gh.order; ++x)
      for (int y = 0; y < gh.order; ++y) {
        const int lhs = n.side == Side::Right ? n.act[y][n.act[x][m]] : n.act[x][n.act[y][m]];
        if (lhs != n.act[gh.op(x, y)][m]) throw ValidationError("NotAnAction", "action law fails", {m, x, y});
      }
  }
}

GhatSet to_ghat(const TwistedGSet& m, const TwistedProductPtr& ghat) {
  GhatSet n{ghat, m.size, Table(ghat->group->order, std::vector<int>(m.size)), m.side};
  for (int x = 0; x < ghat->group->order; ++x) {
    const int g = ghat->g_part(x), gm = ghat->gamma_part(x);
    for (int p = 0; p < m.size; ++p)
      n.act[x][p] = m.side == Side::Right ? m.gamma_act[gm][m.g_act[g][p]] : m.g_act[g][m.gamma_act[gm][p]];
  }
  return n;
}

TwistedGSet from_ghat(const GhatSet& n) {
  const auto& hat = *n.group;
  TwistedGSet m{hat.data, n.size, {}, {}, n.side};
  for (int g = 0; g < hat.data.G().order; ++g) m.g_act.push_back(n.act[hat.index(g, 0)]);
  for (int gm = 0; gm < hat.data.Gamma().order; ++gm) m.gamma_act.push_back(n.act[hat.s[gm]]);
  return m;
}

TwistedGSet convert_side(const TwistedGSet& m) {
  const FiniteGroup& g = m.data.G();
  const FiniteGroup& gm = m.data.Gamma();
  TwistedGSet r{m.data, m.size, Table(g.order), Table(gm.order), m.side == Side::Right ? Side::Left : Side::Right};
  for (int x = 0; x < g.order; ++x) r.g_act[x] = m.g_act[g.inv[x]];
  for (int a = 0; a < gm.order; ++a) {
    const int ai = gm.inv[a];
    const int cinv = g.inv[m.data.cc(ai, a)];
    r.gamma_act[a].resize(m.size);
    for (int p = 0; p < m.size; ++p) {
      // left from right: γ·m = (m·c(γ^-1,γ)^-1)·γ^-1 ; right from left: m·γ = c(γ^-1,γ)^-1·(γ^-1·m)
      r.gamma_act[a][p] = m.side == Side::Right ? m.gamma_act[ai][m.g_act[cinv][p]] : m.g_act[cinv][m.gamma_act[ai][p]];
    }
  }
  return r;
}

GhatSet flip_ghat_side(const GhatSet& n) {
  const FiniteGroup& gh = *n.group->group;
  GhatSet r{n.group, n.size, Table(gh.order), n.side == Side::Right ? Side::Left : Side::Right};
  for (int x = 0; x < gh.order; ++x) r.act[x] = n.act[gh.inv[x]];
  return r;
}

bool is_twisted_equivariant(const std::vector<int>& f, const TwistedGSet& m, const TwistedGSet& n) {
  if (m.side != n.side || m.data.c != n.data.c || m.data.action.theta != n.data.action.theta ||
      m.data.G().order != n.data.G().order || static_cast<int>(f.size()) != m.size)
    throw ValidationError("CarrierMismatch", "sets are not over the same data and side");
  for (int v : f)
    if (v < 0 || v >= n.size) throw ValidationError("CarrierMismatch", "map value out of range", {v});
  for (int p = 0; p < m.size; ++p) {
    for (int x = 0; x < m.data.G().order; ++x)
      if (f[m.g_act[x][p]] != n.g_act[x][f[p]]) return false;
    for (int a = 0; a < m.data.Gamma().order; ++a)
      if (f[m.gamma_act[a][p]] != n.gamma_act[a][f[p]]) return false;
  }
  return true;
}

GammaQuotient quotient_by_G(const TwistedGSet& m) {
  GammaQuotient q;
  q.proj.assign(m.size, -1);
  for (int p = 0; p < m.size; ++p) {
    if (q.proj[p] >= 0) continue;
    for (int x = 0; x < m.data.G().order; ++x) q.proj[m.g_act[x][p]] = q.size;
    ++q.size;
  }
  q.gamma_act.assign(m.data.Gamma().order, std::vector<int>(q.size, -1));
  for (int a = 0; a < m.data.Gamma().order; ++a)
    for (int p = 0; p < m.size; ++p) {
      const int img = q.proj[m.gamma_act[a][p]];
      int& slot = q.gamma_act[a][q.proj[p]];
      if (slot >= 0 && slot != img) throw InternalError("Gamma-action on M/G is not well defined", {a, p});
      slot = img;
    }
  return q;
}

namespace {

HomogeneousSpace cosets(const FiniteGroup& g, const std::vector<int>& h) {
  HomogeneousSpace hs;
  hs.coset_of.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (hs.coset_of[x] >= 0) continue;
    const int id = static_cast<int>(hs.coset_rep.size());
    hs.coset_rep.push_back(x);
    for (int y : h) hs.coset_of[g.op(x, y)] = id;
  }
  return hs;
}

}  // namespace

HomogeneousSpace homogeneous_space(const GammaAction& act, const std::vector<int>& h) {
  const FiniteGroup& g = *act.g;
  Subgroup sub = make_subgroup(g, h);
  for (int a = 0; a < act.gamma->order; ++a)
    for (int y : sub.elements)
      if (!sub.contains(act.apply(a, y)))
        throw ValidationError("SubgroupNotInvariant", "theta_γ moves H for γ=" + std::to_string(a), {a});
  HomogeneousSpace hs = cosets(g, sub.elements);
  const int k = static_cast<int>(hs.coset_rep.size());
  Table g_act(g.order, std::vector<int>(k)), gamma_act(act.gamma->order, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < g.order; ++x) g_act[x][i] = hs.coset_of[g.op(x, hs.coset_rep[i])];
    for (int a = 0; a < act.gamma->order; ++a) gamma_act[a][i] = hs.coset_of[act.apply(a, hs.coset_rep[i])];
  }
  hs.set = validate_twisted_action(trivial_data(act), k, g_act, gamma_act, Side::Left);
  return hs;
}

HomogeneousSpace homogeneous_space_right(const TwistedData& d, const std::vector<int>& h) {
  HomogeneousSpace left = homogeneous_space(d.action, h);
  Subgroup sub = make_subgroup(d.G(), h);
  for (size_t i = 0; i < d.c.size(); ++i)
    if (!sub.contains(d.c[i]))
      throw ValidationError("CocycleNotInSubgroup", "c takes a value outside H", {static_cast<int>(i)});
  const FiniteGroup& g = d.G();
  const int k = left.set.size;
  Table g_act(g.order, std::vector<int>(k)), gamma_act(d.Gamma().order, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < g.order; ++x) g_act[x][i] = left.coset_of[g.op(g.inv[x], left.coset_rep[i])];
    for (int a = 0; a < d.Gamma().order; ++a) gamma_act[a][i] = left.coset_of[d.action.apply_inv(a, left.coset_rep[i])];
  }
  left.set = validate_twisted_action(d, k, g_act, gamma_act, Side::Right);
  return left;
}

TwistedGSet transport(const TwistedGSet& m, const Recocycling& r) {
  if (m.side == Side::Left) return convert_side(transport(convert_side(m), r));
  TwistedGSet out = m;
  out.data = r.to;
  for (int a = 0; a < m.data.Gamma().order; ++a)
    for (int p = 0; p < m.size; ++p) out.gamma_act[a][p] = m.gamma_act[a][m.g_act[r.s[a]][p]];
  try {
    return validate_twisted_action(out.data, out.size, out.g_act, out.gamma_act, out.side);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("transported action invalid: ") + e.what(), e.witness());
  }
}

TwistedGSet regular_right(const TwistedProductGroup& ghat) {
  const FiniteGroup& gh = *ghat.group;
  Table g_act, gamma_act;
  for (int g = 0; g < ghat.data.G().order; ++g) {
    std::vector<int> row(gh.order);
    for (int m = 0; m < gh.order; ++m) row[m] = gh.op(m, ghat.index(g, 0));
    g_act.push_back(row);
  }
  for (int a = 0; a < ghat.data.Gamma().order; ++a) {
    std::vector<int> row(gh.order);
    for (int m = 0; m < gh.order; ++m) row[m] = gh.op(m, ghat.s[a]);
    gamma_act.push_back(row);
  }
  return validate_twisted_action(ghat.data, gh.order, g_act, gamma_act, Side::Right);
}

TwistedGSet regular_left(const TwistedProductGroup& ghat) {
  const FiniteGroup& gh = *ghat.group;
  Table g_act, gamma_act;
  for (int g = 0; g < ghat.data.G().order; ++g) {
    std::vector<int> row(gh.order);
    for (int m = 0; m < gh.order; ++m) row[m] = gh.op(ghat.index(g, 0), m);
    g_act.push_back(row);
  }
  for (int a = 0; a < ghat.data.Gamma().order; ++a) {
    std::vector<int> row(gh.order);
    for (int m = 0; m < gh.order; ++m) row[m] = gh.op(ghat.s[a], m);
    gamma_act.push_back(row);
  }
  return validate_twisted_action(ghat.data, gh.order, g_act, gamma_act, Side::Left);
}

TwistedGSet point_set(const TwistedData& d, Side side) {
  return validate_twisted_action(d, 1, Table(d.G().order, std::vector<int>{0}),
                                 Table(d.Gamma().order, std::vector<int>{0}), side);
}

}  // namespace twc

#include "twc/nerve.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace twc {

namespace {

std::string simplex_str(const std::vector<int>& s) {
  std::string r = "{";
  for (size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

void finalize(Nerve& n, const std::set<std::vector<int>>& all) {
  n.edges.clear();
  n.tris.clear();
  n.tets.clear();
  for (const auto& s : all) {
    if (s.size() == 2) n.edges.push_back({s[0], s[1]});
    if (s.size() == 3) n.tris.push_back({s[0], s[1], s[2]});
    if (s.size() == 4) n.tets.push_back({s[0], s[1], s[2], s[3]});
  }
  std::sort(n.edges.begin(), n.edges.end());
  std::sort(n.tris.begin(), n.tris.end());
  std::sort(n.tets.begin(), n.tets.end());
  n.edge_lookup.assign(static_cast<size_t>(n.vertices) * n.vertices, -1);
  for (size_t e = 0; e < n.edges.size(); ++e) {
    n.edge_lookup[n.edges[e][0] * n.vertices + n.edges[e][1]] = static_cast<int>(e);
    n.edge_lookup[n.edges[e][1] * n.vertices + n.edges[e][0]] = static_cast<int>(e);
  }
  n.tri_lookup.clear();
  for (size_t t = 0; t < n.tris.size(); ++t) n.tri_lookup[n.tris[t]] = static_cast<int>(t);
  n.tet_lookup.clear();
  for (size_t t = 0; t < n.tets.size(); ++t) n.tet_lookup[n.tets[t]] = static_cast<int>(t);

  n.component.assign(n.vertices, -1);
  n.component_count = 0;
  for (int v = 0; v < n.vertices; ++v) {
    if (n.component[v] >= 0) continue;
    std::vector<int> stack{v};
    n.component[v] = n.component_count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : n.neighbours(u))
        if (n.component[w] < 0) {
          n.component[w] = n.component_count;
          stack.push_back(w);
        }
    }
    ++n.component_count;
  }
}

std::vector<int> checked_simplex(int vertices, std::vector<int> s) {
  if (s.empty()) throw ValidationError("InvalidSimplex", "empty simplex");
  for (int v : s)
    if (v < 0 || v >= vertices) throw ValidationError("InvalidSimplex", "vertex out of range in " + simplex_str(s), s);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ValidationError("InvalidSimplex", "repeated vertex in " + simplex_str(s), s);
  return s;
}

}  // namespace

int Nerve::edge_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= vertices || j >= vertices) return -1;
  return edge_lookup[static_cast<size_t>(i) * vertices + j];
}

int Nerve::tri_index(Tri t) const {
  std::sort(t.begin(), t.end());
  auto it = tri_lookup.find(t);
  return it == tri_lookup.end() ? -1 : it->second;
}

int Nerve::tet_index(Tet t) const {
  std::sort(t.begin(), t.end());
  auto it = tet_lookup.find(t);
  return it == tet_lookup.end() ? -1 : it->second;
}

std::vector<int> Nerve::neighbours(int v) const {
  std::vector<int> r;
  for (int w = 0; w < vertices; ++w)
    if (w != v && edge_lookup[static_cast<size_t>(v) * vertices + w] >= 0) r.push_back(w);
  return r;
}

Nerve nerve_from_maximal(int vertices, const std::vector<std::vector<int>>& simplices) {
  if (vertices <= 0) throw ValidationError("InvalidSimplex", "nerve needs at least one vertex");
  std::set<std::vector<int>> all;
  for (const auto& raw : simplices) {
    const auto s = checked_simplex(vertices, raw);
    const int k = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> face;
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(s[b]);
      if (face.size() >= 2 && face.size() <= 4) all.insert(face);
    }
  }
  Nerve n;
  n.vertices = vertices;
  finalize(n, all);
  return n;
}

Nerve validate_nerve(int vertices, const std::vector<std::vector<int>>& simplices) {
  if (vertices <= 0) throw ValidationError("InvalidSimplex", "nerve needs at least one vertex");
  std::set<std::vector<int>> all;
  for (const auto& raw : simplices) {
    auto s = checked_simplex(vertices, raw);
    if (s.size() > 4) throw ValidationError("InvalidSimplex", "dimension above 3: " + simplex_str(s), s);
    if (s.size() >= 2) all.insert(s);
  }
  for (const auto& s : all)
    for (size_t drop = 0; drop < s.size() && s.size() > 2; ++drop) {
      std::vector<int> face;
      for (size_t b = 0; b < s.size(); ++b)
        if (b != drop) face.push_back(s[b]);
      if (!all.count(face)) throw ValidationError("NotClosed", "missing face " + simplex_str(face) + " of " + simplex_str(s), s);
    }
  Nerve n;
  n.vertices = vertices;
  finalize(n, all);
  return n;
}

std::vector<std::vector<int>> maximal_simplices(const Nerve& n) {
  std::vector<std::vector<int>> out;
  std::vector<char> edge_used(n.edges.size(), 0), tri_used(n.tris.size(), 0), vert_used(n.vertices, 0);
  for (const auto& t : n.tets) {
    out.push_back({t[0], t[1], t[2], t[3]});
    for (int d = 0; d < 4; ++d) {
      Tri f{};
      int k = 0;
      for (int b = 0; b < 4; ++b)
        if (b != d) f[k++] = t[b];
      tri_used[n.tri_index(f)] = 1;
    }
  }
  for (size_t i = 0; i < n.tris.size(); ++i) {
    const auto& t = n.tris[i];
    if (!tri_used[i]) out.push_back({t[0], t[1], t[2]});
    edge_used[n.edge_index(t[0], t[1])] = edge_used[n.edge_index(t[1], t[2])] = edge_used[n.edge_index(t[0], t[2])] = 1;
  }
  for (size_t e = 0; e < n.edges.size(); ++e) {
    if (!edge_used[e]) out.push_back({n.edges[e][0], n.edges[e][1]});
    vert_used[n.edges[e][0]] = vert_used[n.edges[e][1]] = 1;
  }
  for (int v = 0; v < n.vertices; ++v)
    if (!vert_used[v]) out.push_back({v});
  std::sort(out.begin(), out.end());
  return out;
}

Forest spanning_forest(const Nerve& n) {
  Forest f;
  f.parent.assign(n.vertices, -1);
  f.parent_edge.assign(n.vertices, -1);
  f.is_tree_edge.assign(n.edges.size(), 0);
  std::vector<char> seen(n.vertices, 0);
  for (int r = 0; r < n.vertices; ++r) {
    if (seen[r]) continue;
    f.roots.push_back(r);
    seen[r] = 1;
    const size_t start = f.order.size();
    f.order.push_back(r);
    for (size_t q = start; q < f.order.size(); ++q) {
      const int u = f.order[q];
      for (int w : n.neighbours(u))
        if (!seen[w]) {
          seen[w] = 1;
          f.parent[w] = u;
          f.parent_edge[w] = n.edge_index(u, w);
          f.is_tree_edge[f.parent_edge[w]] = 1;
          f.order.push_back(w);
        }
    }
  }
  return f;
}

namespace {

int perm_sign(std::vector<int> v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace

GammaNerve validate_gamma_nerve(const Nerve& n, const GroupPtr& gamma, const Table& act, bool require_free) {
  const FiniteGroup& gm = *gamma;
  if (static_cast<int>(act.size()) != gm.order) throw ValidationError("InvalidAction", "act needs one row per gamma element");
  for (int a = 0; a < gm.order; ++a)
    if (!is_bijection(act[a], n.vertices))
      throw ValidationError("InvalidAction", "act row is not a vertex permutation", {a});
  for (int v = 0; v < n.vertices; ++v)
    if (act[0][v] != v) throw ValidationError("NotAnAction", "identity moves a vertex", {0, 0});
  for (int a = 0; a < gm.order; ++a)
    for (int b = 0; b < gm.order; ++b)
      for (int v = 0; v < n.vertices; ++v)
        if (act[gm.op(a, b)][v] != act[b][act[a][v]])
          throw ValidationError("NotAnAction", "v·(ab) != (v·a)·b at v=" + std::to_string(v), {a, b});

  GammaNerve x;
  x.nerve = n;
  x.gamma = gamma;
  x.act = act;
  const int ng = gm.order;
  x.edge_img.assign(ng, std::vector<int>(n.edges.size()));
  x.edge_flip.assign(ng, std::vector<int>(n.edges.size()));
  x.tri_img.assign(ng, std::vector<int>(n.tris.size()));
  x.tri_sign.assign(ng, std::vector<int>(n.tris.size()));
  x.tet_img.assign(ng, std::vector<int>(n.tets.size()));
  x.tet_sign.assign(ng, std::vector<int>(n.tets.size()));
  for (int a = 0; a < ng; ++a) {
    for (size_t e = 0; e < n.edges.size(); ++e) {
      const int i = act[a][n.edges[e][0]], j = act[a][n.edges[e][1]];
      const int idx = n.edge_index(i, j);
      if (idx < 0) throw ValidationError("NotSimplicial", "edge image missing", {a, 1, static_cast<int>(e)});
      x.edge_img[a][e] = idx;
      x.edge_flip[a][e] = i > j ? 1 : 0;
    }
    for (size_t t = 0; t < n.tris.size(); ++t) {
      std::vector<int> im{act[a][n.tris[t][0]], act[a][n.tris[t][1]], act[a][n.tris[t][2]]};
      const int idx = n.tri_index({im[0], im[1], im[2]});
      if (idx < 0) throw ValidationError("NotSimplicial", "triangle image missing", {a, 2, static_cast<int>(t)});
      x.tri_img[a][t] = idx;
      x.tri_sign[a][t] = perm_sign(im);
    }
    for (size_t t = 0; t < n.tets.size(); ++t) {
      std::vector<int> im{act[a][n.tets[t][0]], act[a][n.tets[t][1]], act[a][n.tets[t][2]], act[a][n.tets[t][3]]};
      const int idx = n.tet_index({im[0], im[1], im[2], im[3]});
      if (idx < 0) throw ValidationError("NotSimplicial", "tetrahedron image missing", {a, 3, static_cast<int>(t)});
      x.tet_img[a][t] = idx;
      x.tet_sign[a][t] = perm_sign(im);
    }
  }
  x.free = action_is_free(x);
  if (require_free && !x.free) {
    for (int a = 1; a < ng; ++a) {
      for (int v = 0; v < n.vertices; ++v)
        if (act[a][v] == v) throw ValidationError("NotFree", "vertex fixed", {a, 0, v});
      for (size_t e = 0; e < n.edges.size(); ++e)
        if (x.edge_img[a][e] == static_cast<int>(e)) throw ValidationError("NotFree", "edge fixed", {a, 1, static_cast<int>(e)});
      for (size_t t = 0; t < n.tris.size(); ++t)
        if (x.tri_img[a][t] == static_cast<int>(t)) throw ValidationError("NotFree", "triangle fixed", {a, 2, static_cast<int>(t)});
      for (size_t t = 0; t < n.tets.size(); ++t)
        if (x.tet_img[a][t] == static_cast<int>(t)) throw ValidationError("NotFree", "tetrahedron fixed", {a, 3, static_cast<int>(t)});
    }
  }
  return x;
}

bool action_is_free(const GammaNerve& x) {
  for (int a = 1; a < x.gamma->order; ++a) {
    for (int v = 0; v < x.nerve.vertices; ++v)
      if (x.act[a][v] == v) return false;
    for (size_t e = 0; e < x.nerve.edges.size(); ++e)
      if (x.edge_img[a][e] == static_cast<int>(e)) return false;
    for (size_t t = 0; t < x.nerve.tris.size(); ++t)
      if (x.tri_img[a][t] == static_cast<int>(t)) return false;
    for (size_t t = 0; t < x.nerve.tets.size(); ++t)
      if (x.tet_img[a][t] == static_cast<int>(t)) return false;
  }
  return true;
}

GammaNerve trivial_gamma_nerve(const Nerve& n) {
  std::vector<int> id(n.vertices);
  for (int v = 0; v < n.vertices; ++v) id[v] = v;
  return validate_gamma_nerve(n, trivial_group(), Table{id}, false);
}

std::vector<int> reduce_word(const std::vector<int>& word) {
  std::vector<int> out;
  for (int l : word) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Pi1Presentation pi1(const Nerve& n, int base) {
  if (base < 0 || base >= n.vertices) throw ValidationError("InvalidVertex", "basepoint out of range", {base});
  Pi1Presentation p;
  p.base = base;
  std::vector<int> parent(n.vertices, -2), parent_edge(n.vertices, -1);
  std::vector<int> queue{base};
  parent[base] = -1;
  std::vector<char> tree(n.edges.size(), 0);
  for (size_t q = 0; q < queue.size(); ++q)
    for (int w : n.neighbours(queue[q]))
      if (parent[w] == -2) {
        parent[w] = queue[q];
        parent_edge[w] = n.edge_index(queue[q], w);
        tree[parent_edge[w]] = 1;
        p.tree_edges.push_back(parent_edge[w]);
        queue.push_back(w);
      }
  std::sort(p.tree_edges.begin(), p.tree_edges.end());
  auto path_to = [&](int v) {
    std::vector<int> path;
    for (int u = v; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  };
  std::vector<int> gen_of(n.edges.size(), -1);
  for (size_t e = 0; e < n.edges.size(); ++e) {
    if (tree[e] || parent[n.edges[e][0]] == -2) continue;
    gen_of[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(static_cast<int>(e));
    auto loop = path_to(n.edges[e][0]);
    auto back = path_to(n.edges[e][1]);
    std::reverse(back.begin(), back.end());
    loop.insert(loop.end(), back.begin(), back.end());
    p.loop_of.push_back(loop);
  }
  auto letter = [&](int i, int j) {
    const int e = n.edge_index(i, j);
    if (gen_of[e] < 0) return 0;
    return i < j ? gen_of[e] + 1 : -(gen_of[e] + 1);
  };
  for (const auto& t : n.tris) {
    if (parent[t[0]] == -2) continue;
    std::vector<int> w;
    for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (l != 0) w.push_back(l);
    w = reduce_word(w);
    if (!w.empty()) p.relations.push_back(w);
  }
  return p;
}

int GammaCocycleY::at(const Nerve& y, int i, int j) const {
  const int e = y.edge_index(i, j);
  if (e < 0) throw ValidationError("InvalidEdge", "no edge between the vertices", {i, j});
  return i < j ? x[e] : gamma->inv[x[e]];
}

CoverDescent quotient(const GammaNerve& x, const std::vector<int>& section) {
  if (!x.free) throw ValidationError("NotFree", "quotient needs a free action");
  const Nerve& n = x.nerve;
  const FiniteGroup& gm = *x.gamma;
  CoverDescent d;
  d.up = x;
  d.orbit.assign(n.vertices, -1);
  std::vector<int> mins;
  for (int v = 0; v < n.vertices; ++v) {
    if (d.orbit[v] >= 0) continue;
    for (int a = 0; a < gm.order; ++a) d.orbit[x.v(v, a)] = static_cast<int>(mins.size());
    mins.push_back(v);
  }
  const int ny = static_cast<int>(mins.size());
  if (section.empty()) {
    d.section = mins;
  } else {
    if (static_cast<int>(section.size()) != ny) throw ValidationError("SectionInvalid", "section needs one vertex per orbit");
    for (int k = 0; k < ny; ++k)
      if (section[k] < 0 || section[k] >= n.vertices || d.orbit[section[k]] != k)
        throw ValidationError("SectionInvalid", "section vertex not in its orbit", {k});
    d.section = section;
  }
  d.lift_offset.assign(n.vertices, -1);
  for (int k = 0; k < ny; ++k)
    for (int a = 0; a < gm.order; ++a) d.lift_offset[x.v(d.section[k], a)] = a;

  std::vector<std::vector<int>> simplices;
  auto push_image = [&](const std::vector<int>& s) {
    std::vector<int> im;
    for (int v : s) im.push_back(d.orbit[v]);
    std::sort(im.begin(), im.end());
    if (std::adjacent_find(im.begin(), im.end()) != im.end())
      throw ValidationError("NotACover", "a simplex meets an orbit twice", s);
    simplices.push_back(im);
  };
  for (const auto& e : n.edges) push_image({e[0], e[1]});
  for (const auto& t : n.tris) push_image({t[0], t[1], t[2]});
  for (const auto& t : n.tets) push_image({t[0], t[1], t[2], t[3]});
  d.down = validate_nerve(ny, simplices);

  d.transitions.gamma = x.gamma;
  d.transitions.x.assign(d.down.edges.size(), -1);
  for (size_t e = 0; e < d.down.edges.size(); ++e) {
    const int i = d.down.edges[e][0], j = d.down.edges[e][1];
    int found = -1;
    for (int a = 0; a < gm.order; ++a)
      if (n.edge_index(x.v(d.section[i], a), d.section[j]) >= 0) {
        if (found >= 0) throw ValidationError("NotACover", "two lifts of an edge meet the section", {i, j});
        found = a;
      }
    if (found < 0) throw ValidationError("NotACover", "edge has no lift at the section", {i, j});
    d.transitions.x[e] = found;
  }
  for (const auto& t : d.down.tris) {
    const int ij = d.gamma_ij(t[0], t[1]), jk = d.gamma_ij(t[1], t[2]), ik = d.gamma_ij(t[0], t[2]);
    if (gm.op(ij, jk) != ik) throw ValidationError("NotACover", "transition cocycle fails on a triangle", {t[0], t[1], t[2]});
  }
  return d;
}

CoverDescent build_cover(const Nerve& y, const GammaCocycleY& x) {
  const FiniteGroup& gm = *x.gamma;
  const int ng = gm.order;
  if (x.x.size() != y.edges.size()) throw ValidationError("InvalidCochain", "one Gamma value per edge expected");
  for (const auto& t : y.tris)
    if (gm.op(x.at(y, t[0], t[1]), x.at(y, t[1], t[2])) != x.at(y, t[0], t[2]))
      throw ValidationError("CocycleViolation", "Gamma cocycle fails on a triangle", {t[0], t[1], t[2]});
  std::vector<std::vector<int>> simplices;
  auto lift = [&](const std::vector<int>& s) {
    const int last = s.back();
    for (int b = 0; b < ng; ++b) {
      std::vector<int> up;
      for (int v : s) {
        const int off = v == last ? b : gm.op(x.at(y, v, last), b);
        up.push_back(v * ng + off);
      }
      simplices.push_back(up);
    }
  };
  for (int v = 0; v < y.vertices; ++v) lift({v});
  for (const auto& e : y.edges) lift({e[0], e[1]});
  for (const auto& t : y.tris) lift({t[0], t[1], t[2]});
  for (const auto& t : y.tets) lift({t[0], t[1], t[2], t[3]});
  Nerve xn = nerve_from_maximal(y.vertices * ng, simplices);
  Table act(ng, std::vector<int>(xn.vertices));
  for (int a = 0; a < ng; ++a)
    for (int v = 0; v < xn.vertices; ++v) act[a][v] = (v / ng) * ng + gm.op(v % ng, a);
  GammaNerve gx = validate_gamma_nerve(xn, x.gamma, act, true);
  CoverDescent d = quotient(gx);
  if (d.down.edges != y.edges || d.down.tris != y.tris || d.down.tets != y.tets || d.transitions.x != x.x)
    throw InternalError("build_cover does not descend to its input");
  return d;
}

MonodromyRep monodromy(const Nerve& y, const GammaCocycleY& x, int base) {
  if (y.component_count != 1) throw ValidationError("Disconnected", "monodromy needs a connected base");
  const FiniteGroup& gm = *x.gamma;
  const Pi1Presentation p = pi1(y, base);
  MonodromyRep m;
  for (const auto& loop : p.loop_of) {
    int h = 0;
    for (size_t k = 0; k + 1 < loop.size(); ++k) h = gm.op(h, x.at(y, loop[k], loop[k + 1]));
    m.values.push_back(h);
  }
  m.canonical = m.values;
  for (int g = 0; g < gm.order; ++g) {
    std::vector<int> conj;
    for (int v : m.values) conj.push_back(gm.op(gm.op(gm.inv[g], v), g));
    m.canonical = std::min(m.canonical, conj);
  }
  m.image = make_subgroup(gm, generated_subgroup(gm, m.values));
  return m;
}

MonodromyRep monodromy(const CoverDescent& d) { return monodromy(d.down, d.transitions); }

GammaCocycleY cocycle_from_monodromy(const Nerve& y, const GroupPtr& gamma, const std::vector<int>& values, int base) {
  if (y.component_count != 1) throw ValidationError("Disconnected", "monodromy needs a connected base");
  const Pi1Presentation p = pi1(y, base);
  if (values.size() != p.generators.size())
    throw ValidationError("InvalidMonodromy", "one value per pi1 generator expected");
  GammaCocycleY x{gamma, std::vector<int>(y.edges.size(), 0)};
  for (size_t k = 0; k < p.generators.size(); ++k) x.x[p.generators[k]] = values[k];
  for (const auto& t : y.tris)
    if (gamma->op(x.at(y, t[0], t[1]), x.at(y, t[1], t[2])) != x.at(y, t[0], t[2]))
      throw ValidationError("RelationViolation", "monodromy values violate a relation", {t[0], t[1], t[2]});
  return x;
}

std::optional<std::vector<int>> find_equivariant_iso(const GammaNerve& a, const GammaNerve& b, long long max_steps,
                                                     const std::vector<int>& colour_a, const std::vector<int>& colour_b) {
  const Nerve& na = a.nerve;
  const Nerve& nb = b.nerve;
  if (a.gamma->order != b.gamma->order || a.gamma->mul != b.gamma->mul) return std::nullopt;
  if (na.vertices != nb.vertices || na.edges.size() != nb.edges.size() || na.tris.size() != nb.tris.size() ||
      na.tets.size() != nb.tets.size())
    return std::nullopt;
  const int nv = na.vertices, ng = a.gamma->order;
  const bool coloured = !colour_a.empty();
  if (coloured && (static_cast<int>(colour_a.size()) != nv || static_cast<int>(colour_b.size()) != nv))
    throw ValidationError("InvalidColouring", "one colour per vertex expected");
  std::vector<int> f(nv, -1), used(nv, 0);
  long long steps = 0;

  auto edges_ok = [&](int v) {
    for (int w : na.neighbours(v))
      if (f[w] >= 0 && nb.edge_index(f[v], f[w]) < 0) return false;
    return true;
  };
  auto finish_ok = [&]() {
    for (const auto& t : na.tris)
      if (nb.tri_index({f[t[0]], f[t[1]], f[t[2]]}) < 0) return false;
    for (const auto& t : na.tets)
      if (nb.tet_index({f[t[0]], f[t[1]], f[t[2]], f[t[3]]}) < 0) return false;
    return true;
  };
  std::function<bool(int)> rec = [&](int v) -> bool {
    while (v < nv && f[v] >= 0) ++v;
    if (v == nv) return finish_ok();
    for (int t = 0; t < nv; ++t) {
      if (used[t]) continue;
      if (++steps > max_steps) throw BudgetExceeded("equivariant isomorphism search exceeded step limit");
      std::vector<int> assigned;
      bool ok = true;
      for (int g = 0; g < ng && ok; ++g) {
        const int src = a.v(v, g), dst = b.v(t, g);
        if (f[src] >= 0) {
          ok = f[src] == dst;
        } else if (used[dst] || (coloured && colour_a[src] != colour_b[dst])) {
          ok = false;
        } else {
          f[src] = dst;
          used[dst] = 1;
          assigned.push_back(src);
        }
      }
      for (size_t k = 0; k < assigned.size() && ok; ++k) ok = edges_ok(assigned[k]);
      if (ok && rec(v + 1)) return true;
      for (int s : assigned) {
        used[f[s]] = 0;
        f[s] = -1;
      }
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

}  // namespace twc

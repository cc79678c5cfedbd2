#include "twc/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace twc {

std::string FiniteGroup::element_name(int x) const {
  if (x >= 0 && x < static_cast<int>(names.size())) return names[x];
  return std::to_string(x);
}

ValidatedGroup validate_group(const Table& table, const std::string& label,
                              const std::vector<std::string>& names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("InvalidTable", "empty table");
  if (n > 255) throw ValidationError("InvalidTable", "order above 255", {n});
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw ValidationError("InvalidTable", "row " + std::to_string(r) + " has wrong length", {r});
    for (int c = 0; c < n; ++c)
      if (table[r][c] < 0 || table[r][c] >= n)
        throw ValidationError("InvalidTable", "entry out of range", {r, c});
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw ValidationError("InvalidTable", "names length differs from order");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = table[x][y];
      for (int z = 0; z < n; ++z)
        if (table[xy][z] != table[x][table[y][z]])
          throw ValidationError("NotAssociative",
                                "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" + std::to_string(z) +
                                    " != " + std::to_string(x) + "*(" + std::to_string(y) + "*" +
                                    std::to_string(z) + ")",
                                {x, y, z});
    }

  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw ValidationError("NoIdentity", "no two-sided identity");

  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y) found = table[x][y] == e && table[y][x] == e;
    if (!found) throw ValidationError("NoInverse", "element " + std::to_string(x) + " has no inverse", {x});
  }

  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);  // relabel is its own inverse
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->label = label;
  g->mul.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g->mul[static_cast<size_t>(relabel[x]) * n + relabel[y]] = relabel[table[x][y]];
  g->inv.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g->op(x, y) == 0) g->inv[x] = y;
  if (!names.empty()) {
    g->names.resize(n);
    for (int x = 0; x < n; ++x) g->names[relabel[x]] = names[x];
  }
  return {g, relabel};
}

GroupPtr make_group(const Table& table, const std::string& label, const std::vector<std::string>& names) {
  return validate_group(table, label, names).group;
}

Table table_of(const FiniteGroup& g) {
  Table t(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) t[a][b] = g.op(a, b);
  return t;
}

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  for (int y = x; y != 0; y = g.op(y, x)) ++k;
  return k;
}

int power(const FiniteGroup& g, int x, int k) {
  const int o = element_order(g, x);
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (int i = 0; i < k; ++i) r = g.op(r, x);
  return r;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> stack{0};
  in[0] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int s : gens) {
      const int y = g.op(x, s);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < g.order) {
    int best = -1;
    size_t best_size = 0;
    for (int x = 1; x < g.order; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const size_t sz = generated_subgroup(g, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

int Subgroup::index_of(int x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements, const std::string& label) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0) throw ValidationError("NotASubgroup", "identity missing");
  Subgroup s;
  s.elements = elements;
  const int m = static_cast<int>(elements.size());
  Table t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int k = s.index_of(g.op(elements[a], elements[b]));
      if (k < 0) throw ValidationError("NotASubgroup", "not closed", {elements[a], elements[b]});
      t[a][b] = k;
    }
  std::vector<std::string> names;
  if (!g.names.empty())
    for (int x : elements) names.push_back(g.names[x]);
  s.group = make_group(t, label, names);
  return s;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elements) {
  std::set<int> h(elements.begin(), elements.end());
  for (int x = 0; x < g.order; ++x)
    for (int y : elements)
      if (!h.count(g.op(g.op(x, y), g.inv[x]))) return false;
  return true;
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal, const std::string& label) {
  if (!is_normal(g, normal)) throw ValidationError("NotNormal", "subgroup is not normal");
  Quotient q;
  q.proj.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (q.proj[x] >= 0) continue;
    const int id = static_cast<int>(q.lift.size());
    q.lift.push_back(x);
    for (int n : normal) q.proj[g.op(x, n)] = id;
  }
  const int m = static_cast<int>(q.lift.size());
  Table t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = q.proj[g.op(q.lift[a], q.lift[b])];
  std::vector<std::string> names;
  if (!g.names.empty())
    for (int x : q.lift) names.push_back("[" + g.names[x] + "]");
  q.group = make_group(t, label, names);
  return q;
}

bool is_hom(const FiniteGroup& s, const FiniteGroup& t, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != s.order) return false;
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      if (map[s.op(a, b)] != t.op(map[a], map[b])) return false;
  return true;
}

void check_hom(const GroupHom& h) {
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (static_cast<int>(h.map.size()) != s.order) throw ValidationError("NotAHomomorphism", "map has wrong size");
  for (int x : h.map)
    if (x < 0 || x >= t.order) throw ValidationError("NotAHomomorphism", "image out of range", {x});
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      if (h.map[s.op(a, b)] != t.op(h.map[a], h.map[b]))
        throw ValidationError("NotAHomomorphism", "map(xy) != map(x)map(y)", {a, b});
}

bool is_bijection(const std::vector<int>& map, int n) {
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : map) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Automorphism make_automorphism(const GroupPtr& g, std::vector<int> map) {
  if (!is_bijection(map, g->order)) throw ValidationError("NotABijection", "automorphism map is not a bijection");
  Automorphism a{GroupHom{g, g, std::move(map)}, {}};
  check_hom(a.hom);
  a.inverse = invert_perm(a.hom.map);
  return a;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y) central = g.op(x, y) == g.op(y, x);
    if (central) z.push_back(x);
  }
  return make_subgroup(g, z, g.label.empty() ? "Z" : "Z(" + g.label + ")");
}

std::optional<std::vector<int>> extend_from_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images) {
  std::vector<int> map(g.order, -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      const int y = g.op(x, gens[k]);
      const int v = h.op(map[x], images[k]);
      if (map[y] < 0) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  for (int v : map)
    if (v < 0) return std::nullopt;
  return map;
}

namespace {

// Visits every bijective hom g -> h in lexicographic generator-image order.
// The visitor returns false to stop.
template <class Visit>
void search_isos(const FiniteGroup& g, const FiniteGroup& h, const SearchBudget& budget, Visit visit) {
  if (g.order != h.order) return;
  if (g.order > budget.max_order)
    throw BudgetExceeded("group order " + std::to_string(g.order) + " above search limit", {g.order});
  const auto gens = generating_set(g);
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const int o = element_order(g, gens[k]);
    for (int y = 0; y < h.order; ++y)
      if (element_order(h, y) == o) cand[k].push_back(y);
    if (cand[k].empty()) return;
  }
  std::vector<size_t> pos(gens.size(), 0);
  std::vector<int> imgs(gens.size());
  long long steps = 0;
  while (true) {
    if (++steps > budget.max_steps) throw BudgetExceeded("isomorphism search exceeded step limit");
    for (size_t k = 0; k < gens.size(); ++k) imgs[k] = cand[k][pos[k]];
    auto m = extend_from_generators(g, h, gens, imgs);
    if (m && is_bijection(*m, h.order)) {
      if (!visit(*m)) return;
    }
    size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++pos[k] < cand[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (gens.empty()) return;
  }
}

}  // namespace

std::vector<Automorphism> automorphisms(const GroupPtr& g, const SearchBudget& budget) {
  std::vector<std::vector<int>> maps;
  if (g->order == 1) {
    maps.push_back({0});
  } else {
    search_isos(*g, *g, budget, [&](const std::vector<int>& m) {
      maps.push_back(m);
      return true;
    });
  }
  std::sort(maps.begin(), maps.end());
  std::vector<Automorphism> out;
  for (auto& m : maps) out.push_back(Automorphism{GroupHom{g, g, m}, invert_perm(m)});
  return out;
}

std::vector<Automorphism> inner_automorphisms(const GroupPtr& g) {
  std::set<std::vector<int>> maps;
  for (int x = 0; x < g->order; ++x) {
    std::vector<int> m(g->order);
    for (int y = 0; y < g->order; ++y) m[y] = g->op(g->op(x, y), g->inv[x]);
    maps.insert(m);
  }
  std::vector<Automorphism> out;
  for (const auto& m : maps) out.push_back(Automorphism{GroupHom{g, g, m}, invert_perm(m)});
  return out;
}

std::vector<std::vector<int>> outer_classes(const GroupPtr& g, const SearchBudget& budget) {
  const auto aut = automorphisms(g, budget);
  const auto inn = inner_automorphisms(g);
  std::map<std::vector<int>, int> index;
  for (size_t k = 0; k < aut.size(); ++k) index[aut[k].hom.map] = static_cast<int>(k);
  std::vector<int> cls(aut.size(), -1);
  std::vector<std::vector<int>> out;
  for (size_t k = 0; k < aut.size(); ++k) {
    if (cls[k] >= 0) continue;
    std::vector<int> coset;
    for (const auto& i : inn) {
      const int j = index.at(compose(aut[k].hom.map, i.hom.map));
      if (cls[j] < 0) {
        cls[j] = static_cast<int>(out.size());
        coset.push_back(j);
      }
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(coset);
  }
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> c;
    for (int y = 0; y < g.order; ++y) {
      const int z = g.op(g.op(y, x), g.inv[y]);
      if (cls[z] < 0) {
        cls[z] = static_cast<int>(out.size());
        c.push_back(z);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

std::optional<GroupHom> find_isomorphism(const GroupPtr& g, const GroupPtr& h, const SearchBudget& budget) {
  if (g->order != h->order) return std::nullopt;
  if (g->order == 1) return GroupHom{g, h, {0}};
  std::optional<GroupHom> found;
  search_isos(*g, *h, budget, [&](const std::vector<int>& m) {
    found = GroupHom{g, h, m};
    return false;
  });
  return found;
}

GroupPtr cyclic_group(int n, const std::string& label) {
  Table t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return make_group(t, label.empty() ? "C" + std::to_string(n) : label, names);
}

GroupPtr trivial_group() { return cyclic_group(1, "C1"); }

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const std::string& label) {
  const int n = a.order * b.order;
  Table t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.element_name(x % a.order) + "," + b.element_name(x / a.order) + ")");
    for (int y = 0; y < n; ++y) {
      const int l = a.op(x % a.order, y % a.order);
      const int r = b.op(x / a.order, y / a.order);
      t[x][y] = l + a.order * r;
    }
  }
  return make_group(t, label.empty() ? a.label + "x" + b.label : label, names);
}

namespace {

GroupPtr make_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  Table t(n, std::vector<int>(n));
  // (p*q)(i) = p(q(i))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> r{};
      for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return make_group(t, "S3", {"()", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

GroupPtr make_d4() {
  // index a + 4b stands for r^a s^b, with s r s = r^-1
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      const int e = ((a + (b ? -c : c)) % 4 + 4) % 4;
      t[x][y] = e + 4 * ((b + d) % 2);
    }
  return make_group(t, "D4", {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

GroupPtr make_q8() {
  // unit quaternions: 1,-1,i,-i,j,-j,k,-k; basis index u in {1,i,j,k}
  static const int basis_mul[4][4][2] = {
      // {result basis, sign}
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sx = x % 2 ? -1 : 1, sy = y % 2 ? -1 : 1;
      const int w = basis_mul[u][v][0];
      const int s = basis_mul[u][v][1] * sx * sy;
      t[x][y] = 2 * w + (s < 0 ? 1 : 0);
    }
  return make_group(t, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

GroupPtr builtin_group(const std::string& name) {
  if (name == "C1" || name == "trivial") return trivial_group();
  if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string::npos) {
    const std::string digits = name.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 255) return cyclic_group(n);
    }
  }
  if (name == "V4" || name == "C2xC2") {
    auto c2 = cyclic_group(2);
    return direct_product(*c2, *c2, "C2xC2");
  }
  if (name == "S3") return make_s3();
  if (name == "D4") return make_d4();
  if (name == "Q8") return make_q8();
  throw ValidationError("UnknownGroup", "no built-in group named '" + name + "'");
}

bool has_builtin_group(const std::string& name) {
  try {
    builtin_group(name);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

std::vector<std::string> builtin_group_names() { return {"C1", "C2", "C4", "C8", "C2xC2", "S3", "D4", "Q8"}; }

}  // namespace twc

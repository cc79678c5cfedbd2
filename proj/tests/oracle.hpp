// Brute-force reference computations on plain tables. Nothing here calls
// the library. Every group has its identity at index 0.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

struct Grp {
  int n = 0;
  Table mul;  // mul[a][b]
  int e = 0;  // always 0

  int op(int a, int b) const { return mul[a][b]; }
  int inv(int a) const {
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == e) return b;
    return -1;
  }
};

inline Grp cyclic(int n) {
  Grp g{n, Table(n, std::vector<int>(n)), 0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

inline bool associative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline bool is_group(const Table& t) {
  const int n = static_cast<int>(t.size());
  if (!associative(t)) return false;
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n; ++y) ok = ok && t[x][y] == y && t[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) return false;
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n; ++y) found = found || (t[x][y] == e && t[y][x] == e);
    if (!found) return false;
  }
  return true;
}

inline int conjugacy_class_count(const Grp& g) {
  std::vector<int> seen(g.n, 0);
  int count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (seen[x]) continue;
    ++count;
    for (int y = 0; y < g.n; ++y) seen[g.op(g.op(y, x), g.inv(y))] = 1;
  }
  return count;
}

inline bool is_hom_map(const Grp& a, const Grp& b, const std::vector<int>& f) {
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
  return true;
}

// All bijections, for orders up to 8.
inline long long automorphism_count(const Grp& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    count += is_hom_map(g, g, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const Grp& a, const Grp& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_hom_map(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Γ acting on an abelian Z; theta[γ][z].
struct Module {
  Grp gamma, z;
  Table theta;
};

inline bool two_cocycle(const Module& m, const std::vector<int>& c) {
  const int n = m.gamma.n;
  auto at = [&](int a, int b) { return c[a * n + b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (m.z.op(m.theta[x][at(y, w)], at(x, m.gamma.op(y, w))) != m.z.op(at(x, y), at(m.gamma.op(x, y), w)))
          return false;
  return true;
}

inline bool normalized(const Module& m, const std::vector<int>& c) {
  for (int a = 0; a < m.gamma.n; ++a)
    if (c[a * m.gamma.n] != m.z.e || c[a] != m.z.e) return false;
  return true;
}

// Every function Γ×Γ -> Z.
inline std::vector<std::vector<int>> all_cochains(const Module& m) {
  const int k = m.gamma.n * m.gamma.n;
  std::vector<std::vector<int>> out;
  std::vector<int> c(k, 0);
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < k && ++c[i] == m.z.n) c[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Classes of normalized 2-cocycles modulo coboundaries of normalized 1-cochains,
// each given by its sorted member list.
inline std::vector<std::vector<std::vector<int>>> h2_classes(const Module& m) {
  const int n = m.gamma.n;
  std::vector<std::vector<int>> cocycles;
  for (const auto& c : all_cochains(m))
    if (normalized(m, c) && two_cocycle(m, c)) cocycles.push_back(c);
  std::set<std::vector<int>> bounds;
  std::vector<int> a(n, 0);
  while (true) {
    std::vector<int> d(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        d[x * n + y] = m.z.op(m.z.op(m.theta[x][a[y]], m.z.inv(a[m.gamma.op(x, y)])), a[x]);
    bounds.insert(d);
    int i = 1;
    while (i < n && ++a[i] == m.z.n) a[i++] = 0;
    if (i >= n) break;
  }
  std::vector<std::vector<std::vector<int>>> classes;
  std::set<std::vector<int>> used;
  for (const auto& c : cocycles) {
    if (used.count(c)) continue;
    std::vector<std::vector<int>> cls;
    for (const auto& b : bounds) {
      std::vector<int> p(c.size());
      for (size_t k = 0; k < c.size(); ++k) p[k] = m.z.op(c[k], b[k]);
      if (!used.count(p)) {
        used.insert(p);
        cls.push_back(p);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(cls);
  }
  return classes;
}

// (g,γ)(h,γ') = (g θ_γ(h) c(γ,γ'), γγ') on g + |G|γ.
inline Table twisted_product(const Grp& g, const Grp& gamma, const Table& theta, const std::vector<int>& c) {
  const int n = g.n * gamma.n;
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int g1 = x % g.n, a = x / g.n, g2 = y % g.n, b = y / g.n;
      t[x][y] = g.op(g.op(g1, theta[a][g2]), c[a * gamma.n + b]) + g.n * gamma.op(a, b);
    }
  return t;
}

// A simplicial complex up to dimension 2 with a right Γ-action on vertices.
struct Space {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // i < j
  std::vector<std::array<int, 3>> tris;    // sorted
  Table act;                               // act[γ][v]
};

inline int edge_of(const Space& s, int i, int j) {
  for (size_t e = 0; e < s.edges.size(); ++e)
    if (s.edges[e] == std::make_pair(std::min(i, j), std::max(i, j))) return static_cast<int>(e);
  return -1;
}

// Ordinary nonabelian H¹ of a complex: count of gauge classes of x_ij x_jk = x_ik.
inline int plain_h1(const Space& s, const Grp& h) {
  const int ne = static_cast<int>(s.edges.size());
  auto val = [&](const std::vector<int>& x, int i, int j) {
    const int e = edge_of(s, i, j);
    return i < j ? x[e] : h.inv(x[e]);
  };
  std::set<std::vector<int>> cocycles;
  std::vector<int> x(ne, 0);
  while (true) {
    bool ok = true;
    for (const auto& t : s.tris) ok = ok && h.op(val(x, t[0], t[1]), val(x, t[1], t[2])) == val(x, t[0], t[2]);
    if (ok) cocycles.insert(x);
    int i = 0;
    while (i < ne && ++x[i] == h.n) x[i++] = 0;
    if (i == ne) break;
  }
  std::set<std::vector<int>> seen;
  int classes = 0;
  for (const auto& c : cocycles) {
    if (seen.count(c)) continue;
    ++classes;
    std::vector<int> g(s.vertices, 0);
    while (true) {
      std::vector<int> y(ne);
      for (int e = 0; e < ne; ++e) y[e] = h.op(h.op(h.inv(g[s.edges[e].first]), c[e]), g[s.edges[e].second]);
      seen.insert(y);
      int i = 0;
      while (i < s.vertices && ++g[i] == h.n) g[i++] = 0;
      if (i == s.vertices) break;
    }
  }
  return classes;
}

// Twisted data over a group G with Γ acting by theta and central c.
struct Twist {
  Grp g, gamma;
  Table theta;           // theta[γ][x]
  std::vector<int> c;    // c[γ·|Γ| + γ']
  int theta_inv(int gm, int x) const {
    for (int y = 0; y < g.n; ++y)
      if (theta[gm][y] == x) return y;
    return -1;
  }
};

// Raw (a, φ) with φ[γ][v]; a on sorted edges.
struct Cocycle {
  std::vector<int> a;
  Table phi;
  bool operator<(const Cocycle& o) const { return std::tie(a, phi) < std::tie(o.a, o.phi); }
};

inline bool twisted_cocycle(const Space& s, const Twist& d, const Cocycle& k) {
  const Grp& g = d.g;
  auto a = [&](int i, int j) {
    const int e = edge_of(s, i, j);
    return i < j ? k.a[e] : g.inv(k.a[e]);
  };
  for (int v = 0; v < s.vertices; ++v)
    if (k.phi[0][v] != 0) return false;
  for (const auto& t : s.tris)
    if (g.op(a(t[0], t[1]), a(t[1], t[2])) != a(t[0], t[2])) return false;
  for (int gm = 0; gm < d.gamma.n; ++gm)
    for (const auto& [i, j] : s.edges) {
      const int lhs = g.op(g.op(g.inv(k.phi[gm][i]), a(s.act[gm][i], s.act[gm][j])), k.phi[gm][j]);
      if (lhs != d.theta_inv(gm, a(i, j))) return false;
    }
  for (int gm = 0; gm < d.gamma.n; ++gm)
    for (int gp = 0; gp < d.gamma.n; ++gp)
      for (int i = 0; i < s.vertices; ++i) {
        const int prod = d.gamma.op(gp, gm);
        const int lhs =
            g.op(g.op(k.phi[gm][s.act[gp][i]], d.theta_inv(gm, k.phi[gp][i])), g.inv(k.phi[prod][i]));
        if (lhs != d.theta_inv(prod, d.c[gp * d.gamma.n + gm])) return false;
      }
  return true;
}

inline Cocycle twisted_gauge(const Space& s, const Twist& d, const Cocycle& k, const std::vector<int>& h) {
  const Grp& g = d.g;
  Cocycle out = k;
  for (size_t e = 0; e < s.edges.size(); ++e)
    out.a[e] = g.op(g.op(g.inv(h[s.edges[e].first]), k.a[e]), h[s.edges[e].second]);
  for (int gm = 0; gm < d.gamma.n; ++gm)
    for (int i = 0; i < s.vertices; ++i)
      out.phi[gm][i] = g.op(g.op(g.inv(h[s.act[gm][i]]), k.phi[gm][i]), d.theta_inv(gm, h[i]));
  return out;
}

// Counts gauge classes of all (a, φ), enumerated without any normalization.
inline int twisted_h1(const Space& s, const Twist& d) {
  const int ne = static_cast<int>(s.edges.size());
  const int free_phi = (d.gamma.n - 1) * s.vertices;
  const int k = ne + free_phi;
  std::vector<int> vals(k, 0);
  std::set<Cocycle> cocycles;
  while (true) {
    Cocycle c{std::vector<int>(vals.begin(), vals.begin() + ne), Table(d.gamma.n, std::vector<int>(s.vertices, 0))};
    for (int gm = 1; gm < d.gamma.n; ++gm)
      for (int v = 0; v < s.vertices; ++v) c.phi[gm][v] = vals[ne + (gm - 1) * s.vertices + v];
    if (twisted_cocycle(s, d, c)) cocycles.insert(c);
    int i = 0;
    while (i < k && ++vals[i] == d.g.n) vals[i++] = 0;
    if (i == k) break;
  }
  std::set<Cocycle> seen;
  int classes = 0;
  for (const auto& c : cocycles) {
    if (seen.count(c)) continue;
    ++classes;
    std::vector<int> h(s.vertices, 0);
    while (true) {
      seen.insert(twisted_gauge(s, d, c, h));
      int i = 0;
      while (i < s.vertices && ++h[i] == d.g.n) h[i++] = 0;
      if (i == s.vertices) break;
    }
  }
  return classes;
}

}  // namespace oracle

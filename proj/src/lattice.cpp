#include "twc/lattice.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace twc::abelian {

namespace {

long long mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// s·a + t·b = g = gcd(a, b) >= 0
long long ext_gcd(long long a, long long b, long long& s, long long& t) {
  long long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    const long long q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

bool builds_group(const FiniteGroup& g, const std::vector<int>& gens, const std::vector<long long>& orders,
                  Table& coords) {
  coords.assign(g.order, {});
  std::vector<long long> e(gens.size(), 0);
  int count = 0;
  while (true) {
    int x = 0;
    for (size_t k = 0; k < gens.size(); ++k) x = g.op(x, power(g, gens[k], static_cast<int>(e[k])));
    if (!coords[x].empty() || (x == 0 && count > 0)) return false;
    coords[x].assign(e.begin(), e.end());
    ++count;
    size_t k = 0;
    while (k < gens.size() && ++e[k] == orders[k]) e[k++] = 0;
    if (k == gens.size()) break;
  }
  return count == g.order;
}

}  // namespace

int Coords::element(const std::vector<long long>& exps) const {
  int x = 0;
  for (size_t k = 0; k < gens.size(); ++k) x = z->op(x, power(*z, gens[k], static_cast<int>(mod(exps[k], orders[k]))));
  return x;
}

Coords decompose(const GroupPtr& z) {
  const FiniteGroup& g = *z;
  if (!is_abelian(g)) throw ValidationError("NotAbelian", "coordinates need an abelian group");
  Coords c;
  c.z = z;
  if (g.order == 1) {
    c.coords.assign(1, {});
    return c;
  }
  // greedy: largest order first, keeping the generated subgroups independent
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < g.order) {
    int best = -1, best_order = 0;
    for (int x = 1; x < g.order; ++x) {
      const int o = element_order(g, x);
      if (o <= best_order) continue;
      const auto cyc = generated_subgroup(g, {x});
      std::vector<int> meet;
      std::set_intersection(cyc.begin(), cyc.end(), current.begin(), current.end(), std::back_inserter(meet));
      if (meet.size() == 1) {
        best = x;
        best_order = o;
      }
    }
    if (best < 0) break;
    c.gens.push_back(best);
    c.orders.push_back(best_order);
    auto all = c.gens;
    current = generated_subgroup(g, all);
  }
  if (builds_group(g, c.gens, c.orders, c.coords)) return c;

  // fallback: exhaustive search over generator tuples of increasing length
  for (size_t len = 1; len <= 8; ++len) {
    std::vector<int> pick(len, 1);
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
      if (k == len) {
        std::vector<long long> orders;
        for (int x : pick) orders.push_back(element_order(g, x));
        long long prod = 1;
        for (auto o : orders) prod *= o;
        if (prod != g.order) return false;
        if (builds_group(g, pick, orders, c.coords)) {
          c.gens = pick;
          c.orders = orders;
          return true;
        }
        return false;
      }
      for (int x = 1; x < g.order; ++x) {
        pick[k] = x;
        if (rec(k + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return c;
  }
  throw InternalError("abelian decomposition failed");
}

EchelonLattice::EchelonLattice(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  const int n = columns();
  rows_.assign(n, std::vector<long long>(n, 0));
  for (int c = 0; c < n; ++c) {
    if (moduli_[c] <= 0) throw InternalError("lattice modulus must be positive");
    rows_[c][c] = moduli_[c];
  }
}

void EchelonLattice::normalise(std::vector<long long>& v, int from) const {
  for (int c = from; c < columns(); ++c) v[c] = mod(v[c], moduli_[c]);
}

void EchelonLattice::insert(std::vector<long long> v) {
  const int n = columns();
  normalise(v, 0);
  for (int c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    auto& p = rows_[c];
    const long long a = v[c], d = p[c];
    long long s, t;
    const long long g = ext_gcd(a, d, s, t);
    std::vector<long long> np(n, 0), rest(n, 0);
    for (int k = c; k < n; ++k) {
      np[k] = s * v[k] + t * p[k];
      rest[k] = (d / g) * v[k] - (a / g) * p[k];
    }
    normalise(np, c + 1);
    np[c] = g;
    p = np;
    normalise(rest, c + 1);
    rest[c] = 0;
    v = rest;
  }
}

std::vector<long long> EchelonLattice::reduce(std::vector<long long> v) const {
  std::vector<long long> used;
  return reduce_tracked(std::move(v), used);
}

std::vector<long long> EchelonLattice::reduce_tracked(std::vector<long long> v, std::vector<long long>& used) const {
  const int n = columns();
  used.assign(n, 0);
  normalise(v, 0);
  for (int c = 0; c < n; ++c) {
    const long long d = rows_[c][c];
    const long long q = (v[c] - mod(v[c], d)) / d;
    if (q != 0) {
      used[c] = q;
      for (int k = c; k < n; ++k) v[k] -= q * rows_[c][k];
      normalise(v, c + 1);
    }
    v[c] = mod(v[c], d);
  }
  return v;
}

}  // namespace twc::abelian

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "twc/cech.hpp"

namespace twc {

namespace {

using abelian::EchelonLattice;

std::vector<long long> concat(std::vector<long long> a, const std::vector<long long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool all_zero(const std::vector<long long>& v, size_t from, size_t to) {
  for (size_t k = from; k < to; ++k)
    if (v[k] != 0) return false;
  return true;
}

}  // namespace

H2Engine::H2Engine(const GammaNerve& x, const GammaAction& act_z)
    : x_(x), act_(act_z), co_(abelian::decompose(act_z.g)) {
  const Nerve& n = x_.nerve;
  const long long r = co_.rank();
  const long long ng = x_.gamma->order;
  const long long V = n.vertices, E = n.edges.size(), T = n.tris.size(), K = n.tets.size();
  n1_ = static_cast<int>((E + (ng - 1) * V) * r);
  n2_ = static_cast<int>((T + (ng - 1) * E + (ng - 1) * (ng - 1) * V) * r);
  nq_ = static_cast<int>((K + ng * T + ng * ng * E + ng * ng * ng * V) * r);

  auto moduli = [&](int count) {
    std::vector<long long> m;
    for (int k = 0; k < count / std::max<long long>(r, 1); ++k) m.insert(m.end(), co_.orders.begin(), co_.orders.end());
    return m;
  };
  const auto m1 = moduli(n1_), m2 = moduli(n2_), mq = moduli(nq_);

  // image of d1, carrying the D1 coordinates along
  image_ = EchelonLattice(concat(m2, m1));
  const int entries1 = r == 0 ? 0 : n1_ / static_cast<int>(r);
  for (int p = 0; p < entries1; ++p)
    for (int j = 0; j < r; ++j) {
      TwistedCocycle e = trivial_cocycle(x_, *act_.g);
      const int val = co_.gens[j];
      if (p < E) e.a[p] = val;
      else e.phi[1 + (p - E) / V][(p - E) % V] = val;
      std::vector<long long> tail(n1_, 0);
      tail[p * r + j] = 1;
      image_.insert(concat(flatten2(d1(x_, act_, e)), tail));
    }

  // kernel of d2, carrying the D2 coordinates along
  EchelonLattice ker(concat(mq, m2));
  const int entries2 = r == 0 ? 0 : n2_ / static_cast<int>(r);
  for (int p = 0; p < entries2; ++p)
    for (int j = 0; j < r; ++j) {
      std::vector<long long> tail(n2_, 0);
      tail[p * r + j] = 1;
      const CochainTriple t = unflatten2(tail);
      ker.insert(concat(flatten_quad(d2(x_, act_, t)), tail));
    }
  for (int c = nq_; c < nq_ + n2_; ++c) {
    const auto& row = ker.row(c);
    std::vector<long long> g(row.begin() + nq_, row.end());
    if (!all_zero(image_.reduce(concat(g, std::vector<long long>(n1_, 0))), 0, n2_)) kernel_gens_.push_back(std::move(g));
  }
}

std::vector<long long> H2Engine::flatten2(const CochainTriple& t) const {
  const Nerve& n = x_.nerve;
  const int ng = x_.gamma->order;
  std::vector<long long> out;
  out.reserve(n2_);
  auto push = [&](int z) {
    for (int j = 0; j < co_.rank(); ++j) out.push_back(co_.coords[z][j]);
  };
  for (int z : t.u) push(z);
  for (int e = 0; e < static_cast<int>(n.edges.size()); ++e)
    if (t.v[0][e] != 0) throw InternalError("triple is not normalized (v at the identity)", {e});
  for (int a = 1; a < ng; ++a)
    for (int z : t.v[a]) push(z);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      if (a != 0 && b != 0) continue;
      for (int i = 0; i < n.vertices; ++i)
        if (t.w[a * ng + b][i] != 0) throw InternalError("triple is not normalized (w at the identity)", {a, b, i});
    }
  for (int a = 1; a < ng; ++a)
    for (int b = 1; b < ng; ++b)
      for (int z : t.w[a * ng + b]) push(z);
  return out;
}

std::vector<long long> H2Engine::flatten_quad(const CochainQuad& q) const {
  std::vector<long long> out;
  out.reserve(nq_);
  auto push = [&](int z) {
    for (int j = 0; j < co_.rank(); ++j) out.push_back(co_.coords[z][j]);
  };
  for (int z : q.t1) push(z);
  for (const auto* t : {&q.t2, &q.t3, &q.t4})
    for (const auto& row : *t)
      for (int z : row) push(z);
  return out;
}

CochainTriple H2Engine::unflatten2(const std::vector<long long>& v) const {
  const Nerve& n = x_.nerve;
  const int ng = x_.gamma->order;
  const int r = co_.rank();
  CochainTriple t;
  t.u.assign(n.tris.size(), 0);
  t.v.assign(ng, std::vector<int>(n.edges.size(), 0));
  t.w.assign(static_cast<size_t>(ng) * ng, std::vector<int>(n.vertices, 0));
  size_t pos = 0;
  auto take = [&]() {
    std::vector<long long> e(v.begin() + pos, v.begin() + pos + r);
    pos += r;
    return co_.element(e);
  };
  for (auto& z : t.u) z = take();
  for (int a = 1; a < ng; ++a)
    for (auto& z : t.v[a]) z = take();
  for (int a = 1; a < ng; ++a)
    for (int b = 1; b < ng; ++b)
      for (auto& z : t.w[a * ng + b]) z = take();
  return t;
}

bool H2Engine::in_kernel(const CochainTriple& t) const { return is_trivial(d2(x_, act_, t)); }

std::vector<int> H2Engine::key(const CochainTriple& t) const {
  if (!in_kernel(t)) throw ValidationError("NotACocycle", "triple is not in the kernel of d2");
  const auto red = image_.reduce(concat(flatten2(t), std::vector<long long>(n1_, 0)));
  return std::vector<int>(red.begin(), red.begin() + n2_);
}

std::optional<TwistedCocycle> H2Engine::preimage(const CochainTriple& t) const {
  std::vector<long long> used;
  const auto red = image_.reduce_tracked(concat(flatten2(t), std::vector<long long>(n1_, 0)), used);
  if (!all_zero(red, 0, n2_)) return std::nullopt;
  const Nerve& n = x_.nerve;
  const int r = co_.rank();
  const int E = static_cast<int>(n.edges.size()), V = n.vertices;
  TwistedCocycle c = trivial_cocycle(x_, *act_.g);
  const int entries1 = r == 0 ? 0 : n1_ / r;
  for (int p = 0; p < entries1; ++p) {
    std::vector<long long> e(r);
    for (int j = 0; j < r; ++j) e[j] = -red[n2_ + p * r + j];
    const int z = co_.element(e);
    if (p < E) c.a[p] = z;
    else c.phi[1 + (p - E) / V][(p - E) % V] = z;
  }
  if (!(d1(x_, act_, c) == t)) throw InternalError("preimage does not map to the requested triple");
  return c;
}

CohomologySet H2Engine::classes(const EnumBudget& b) const {
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  const std::vector<long long> zero(n2_ + n1_, 0);
  auto red = [&](const std::vector<long long>& v) {
    auto full = image_.reduce(v);
    std::fill(full.begin() + n2_, full.end(), 0);
    return full;
  };
  queue.push_back(red(zero));
  seen.insert(queue.back());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : kernel_gens_) {
      auto next = queue[qi];
      for (int k = 0; k < n2_; ++k) next[k] += g[k];
      next = red(next);
      if (seen.insert(next).second) {
        queue.push_back(next);
        if (static_cast<long long>(queue.size()) > b.max_enum)
          throw BudgetExceeded("H2 class enumeration exceeds the budget", {static_cast<int>(queue.size())});
      }
    }
  }
  std::vector<std::vector<int>> keys;
  for (const auto& q : queue) keys.emplace_back(q.begin(), q.begin() + n2_);
  CohomologySet s;
  s.kind = "H2";
  s.finish(keys);
  auto self = std::make_shared<H2Engine>(*this);
  s.canon = [self](const std::vector<int>& flat) {
    std::vector<long long> v(flat.begin(), flat.end());
    return self->key(self->unflatten2(v));
  };
  s.distinguished = s.class_of(std::vector<int>(n2_, 0));
  return s;
}

CohomologySet h2(const GammaNerve& x, const GammaAction& act_z, const EnumBudget& b) {
  return H2Engine(x, act_z).classes(b);
}

}  // namespace twc

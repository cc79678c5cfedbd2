#include "twc/fixtures.hpp"

namespace twc::fixtures {

GammaAction theta_inv(const GroupPtr& g) {
  if (!is_abelian(*g)) throw ValidationError("NotAbelian", "inversion is an automorphism only for abelian groups");
  return cyclic_action(builtin_group("C2"), g, g->inv);
}

GammaAction theta_conj(const GroupPtr& g, int x) {
  std::vector<int> aut(g->order);
  for (int y = 0; y < g->order; ++y) aut[y] = g->op(g->op(x, y), g->inv[x]);
  return cyclic_action(builtin_group("C2"), g, aut);
}

GammaAction theta_q8_swap(const GroupPtr& q8) {
  // 1,-1,i,-i,j,-j,k,-k
  return cyclic_action(builtin_group("C2"), q8, {0, 1, 4, 5, 2, 3, 7, 6});
}

TwistedData c2_cocycle(const GammaAction& act, int z) {
  if (act.gamma->order != 2) throw ValidationError("InvalidCocycle", "c2_cocycle needs Gamma = C2");
  return check_cocycle(act, Table{{0, 0}, {0, z}});
}

int order_two_central(const FiniteGroup& g) {
  int found = -1;
  for (int x = 1; x < g.order; ++x) {
    if (g.op(x, x) != 0) continue;
    bool central = true;
    for (int y = 0; y < g.order && central; ++y) central = g.op(x, y) == g.op(y, x);
    if (!central) continue;
    if (found >= 0) return -1;
    found = x;
  }
  return found;
}

Nerve y_tri() { return nerve_from_maximal(3, {{0, 1}, {1, 2}, {0, 2}}); }

GammaNerve x_hex() {
  Nerve n = nerve_from_maximal(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  return validate_gamma_nerve(n, builtin_group("C2"), {{0, 1, 2, 3, 4, 5}, {3, 4, 5, 0, 1, 2}}, true);
}

GammaNerve two_triangles() {
  Nerve n = nerve_from_maximal(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  return validate_gamma_nerve(n, builtin_group("C2"), {{0, 1, 2, 3, 4, 5}, {3, 4, 5, 0, 1, 2}}, true);
}

GammaNerve circle_cover(int k) {
  const int nv = 3 * k;
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < nv; ++v) edges.push_back({v, (v + 1) % nv});
  Nerve n = nerve_from_maximal(nv, edges);
  GroupPtr gm = cyclic_group(k);
  Table act(k, std::vector<int>(nv));
  for (int a = 0; a < k; ++a)
    for (int v = 0; v < nv; ++v) act[a][v] = (v + 3 * a) % nv;
  return validate_gamma_nerve(n, gm, act, true);
}

GammaNerve nerve_by_name(const std::string& name) {
  if (name == "Y_TRI") return trivial_gamma_nerve(y_tri());
  if (name == "X_HEX") return x_hex();
  if (name == "TWO_TRI") return two_triangles();
  if (name == "POINT") return trivial_gamma_nerve(nerve_from_maximal(1, {{0}}));
  if (name == "POINT_C2") return validate_gamma_nerve(nerve_from_maximal(1, {{0}}), builtin_group("C2"), {{0}, {0}});
  throw ValidationError("UnknownFixture", "no nerve fixture named '" + name + "'");
}

namespace {

void add_points(std::vector<GridPoint>& grid, const std::string& space, const GammaNerve& x) {
  auto push = [&](const std::string& gname, const std::string& tname, const GammaAction& act) {
    grid.push_back({space + "," + gname + "," + tname + ",triv", space, gname, tname, "triv", x, trivial_data(act)});
    const int z = order_two_central(*act.g);
    if (z >= 0) grid.push_back({space + "," + gname + "," + tname + ",cQ", space, gname, tname, "cQ", x, c2_cocycle(act, z)});
  };
  const GroupPtr c2g = builtin_group("C2");
  auto c2 = builtin_group("C2"), c4 = builtin_group("C4"), s3 = builtin_group("S3"), q8 = builtin_group("Q8");
  push("C2", "triv", trivial_action(c2g, c2));
  push("C4", "triv", trivial_action(c2g, c4));
  push("C4", "inv", theta_inv(c4));
  push("S3", "triv", trivial_action(c2g, s3));
  push("S3", "conj", theta_conj(s3, 2));
  push("Q8", "triv", trivial_action(c2g, q8));
  push("Q8", "outer", theta_q8_swap(q8));
}

}  // namespace

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  const GammaNerve y = trivial_gamma_nerve(y_tri());
  for (const std::string g : {"C2", "C4", "S3", "Q8"}) {
    const GroupPtr gp = builtin_group(g);
    grid.push_back({"Y_TRI," + g + ",triv,triv", "Y_TRI", g, "triv", "triv", y,
                    trivial_data(trivial_action(trivial_group(), gp))});
  }
  add_points(grid, "X_HEX", x_hex());
  add_points(grid, "TWO_TRI", two_triangles());
  return grid;
}

std::vector<GridPoint> filter_grid(const std::vector<GridPoint>& grid, const std::string& only) {
  if (only.empty()) return grid;
  // names contain commas, so whole entries are separated by ';'
  std::vector<GridPoint> out;
  for (const auto& p : grid) {
    size_t pos = only.find(p.name);
    while (pos != std::string::npos) {
      const size_t end = pos + p.name.size();
      const bool left_ok = pos == 0 || only[pos - 1] == ';' || only[pos - 1] == ' ';
      const bool right_ok = end == only.size() || only[end] == ';' || only[end] == ' ';
      if (left_ok && right_ok) {
        out.push_back(p);
        break;
      }
      pos = only.find(p.name, pos + 1);
    }
  }
  if (out.empty()) throw ValidationError("UnknownFixture", "no grid point matches '" + only + "'");
  return out;
}

}  // namespace twc::fixtures

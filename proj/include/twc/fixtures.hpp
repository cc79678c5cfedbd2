#pragma once

#include <string>
#include <vector>

#include "twc/extension.hpp"
#include "twc/nerve.hpp"

namespace twc::fixtures {

// Γ = C2 acting on an abelian group by inversion.
GammaAction theta_inv(const GroupPtr& g);
// Γ = C2 acting by conjugation with `x` (must square to a central element).
GammaAction theta_conj(const GroupPtr& g, int x);
// Γ = C2 acting on Q8 by i <-> j, k -> -k.
GammaAction theta_q8_swap(const GroupPtr& q8);
// The normalized C2-cochain with c(γ,γ) = z.
TwistedData c2_cocycle(const GammaAction& act, int z);
// The unique central element of order 2, or -1.
int order_two_central(const FiniteGroup& g);

Nerve y_tri();
GammaNerve x_hex();         // 6-cycle, C2 acting by v -> v+3
GammaNerve two_triangles();  // hollow triangles {0,1,2}, {3,4,5} swapped by C2
GammaNerve circle_cover(int gamma_order);  // Y_TRI covered by a 3n-cycle with Cn rotation

struct GridPoint {
  std::string name;  // e.g. "X_HEX,C4,inv,cQ"
  std::string space, group, theta, cocycle;
  GammaNerve x;
  TwistedData data;
};
std::vector<GridPoint> default_grid();
// Semicolon-separated names; an empty filter keeps everything.
std::vector<GridPoint> filter_grid(const std::vector<GridPoint>& grid, const std::string& only);

// Y_TRI, X_HEX, TWO_TRI, POINT, and POINT_C2 (one vertex fixed by C2).
GammaNerve nerve_by_name(const std::string& name);

}  // namespace twc::fixtures

#pragma once

#include <optional>
#include <vector>

#include "twc/cech.hpp"

namespace twc {

// Edge data b on sorted edges of Y with b_ij·α_ij(b_jk)·c_ijk = b_ik on sorted
// triangles and gauge action g_i^-1·b_ij·α_ij(g_j).
struct FramedSystem {
  Nerve y;
  GroupPtr h;
  Table alpha;             // per sorted edge, an automorphism of h
  std::vector<int> c_tri;  // per sorted triangle, central in h
};
FramedSystem plain_system(const Nerve& y, const GroupPtr& h);

bool framed_is_cocycle(const FramedSystem& s, const std::vector<int>& b, std::vector<int>* witness = nullptr);
std::vector<int> framed_gauge(const FramedSystem& s, const std::vector<int>& b, const std::vector<int>& g);
// Gauges b so that spanning-forest edges carry 1.
std::vector<int> framed_normalize(const FramedSystem& s, const std::vector<int>& b, std::vector<int>* g_out = nullptr);
std::vector<std::vector<int>> framed_z1(const FramedSystem& s, const EnumBudget& b = {});
std::vector<int> framed_key(const FramedSystem& s, const std::vector<int>& b);
CohomologySet framed_h1(const FramedSystem& s, const EnumBudget& b = {});

// Ordinary nonabelian H¹(Y, H).
CohomologySet plain_h1(const Nerve& y, const GroupPtr& h, const EnumBudget& b = {});

// c-twisted cocycle on the quotient, framed by the section of the descent.
struct CTwistedCocycleY {
  CoverDescent descent;
  TwistedData data;
  std::vector<int> k;  // per sorted Y-edge
};
// α_ij = θ_{γij}, c_ijk = c(γij, γjk).
FramedSystem c_twisted_system(const CoverDescent& descent, const TwistedData& d);
// k_ij = θ_{γij}(φ_{γij,s_i}^-1 · a_{s_i γij, s_j}).
CTwistedCocycleY descend(const CoverDescent& descent, const TwistedData& d, const TwistedCocycle& e);
// Rebuilds (a, φ) with φ_{γ, s_i γ'} = θ_{γ'γ}^-1(c(γ',γ)). Throws NotACocycle.
TwistedCocycle ascend(const CTwistedCocycleY& y);

// Ĝ-valued cocycle on sorted edges of Y.
struct GhatCocycleY {
  TwistedProductPtr ghat;
  std::vector<int> x;
};
GhatCocycleY to_ghat_cocycle(const CTwistedCocycleY& y, const TwistedProductPtr& ghat);

struct InducedGamma {
  GammaCocycleY gamma;
  MonodromyRep monodromy;
};
InducedGamma induced_gamma_class(const Nerve& y, const GhatCocycleY& x);

struct FiberResult {
  CohomologySet ghat_classes;              // plain H¹(Y, Ĝ)
  std::vector<int> members;                // indices into ghat_classes lying over the target
  std::vector<MonodromyRep> monodromy;     // per member
  bool criteria_agree = true;              // cover isomorphism search vs H¹(Y,Γ) class equality
};
FiberResult fiber_over_cover(const Nerve& y, const TwistedProductPtr& ghat, const CoverDescent& target,
                             const EnumBudget& b = {});

// H¹(Y, E₀(G)) modulo H⁰(Y, E₀/G(Γ)), with the map into H¹(Y, Ĝ).
struct GrothendieckFiber {
  CohomologySet twisted_form;
  long long h0_size = 0;
  std::vector<std::vector<int>> orbits;  // class indices of twisted_form, sorted
  std::vector<int> image;                // per orbit, class in ghat_classes
  bool map_constant_on_orbits = true;
};
GrothendieckFiber grothendieck_fiber(const Nerve& y, const GhatCocycleY& base, const CohomologySet& ghat_classes,
                                     const EnumBudget& b = {});

struct ConnectedReduction {
  Subgroup gamma_prime;
  std::vector<int> ghat_prime;  // sorted Ĝ elements over Γ'
  GhatCocycleY reduced;         // values in Ĝ, all over Γ'
  std::vector<int> gauge;       // per vertex, Ĝ element
  int cover_components = 0;
};
// Throws Disconnected for a disconnected Y.
ConnectedReduction connected_reduction(const Nerve& y, const GhatCocycleY& x);

CheckList normalizer_embedding_check(const Nerve& y, const TwistedProductPtr& ghat, const std::vector<int>& gamma_prime,
                                     const EnumBudget& b = {});

}  // namespace twc

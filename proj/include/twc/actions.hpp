#pragma once

#include <vector>

#include "twc/extension.hpp"

namespace twc {

enum class Side { Left, Right };

// A (θ,c)-twisted (G,Γ)-action on {0..size-1}.
// Right: m·g = g_act[g][m], m·γ = gamma_act[γ][m]. Left: the same tables read as g·m, γ·m.
struct TwistedGSet {
  TwistedData data;
  int size = 0;
  Table g_act;
  Table gamma_act;
  Side side = Side::Right;
};

// Throws AxiomI, AxiomII, AxiomIII with a witness (m, g or γ, ...).
TwistedGSet validate_twisted_action(const TwistedData& d, int size, const Table& g_act, const Table& gamma_act,
                                    Side side);

struct GhatSet {
  TwistedProductPtr group;
  int size = 0;
  Table act;  // act[x][m]
  Side side = Side::Right;
};

// Throws NotAnAction with a witness.
void validate_ghat_set(const GhatSet& n);
GhatSet to_ghat(const TwistedGSet& m, const TwistedProductPtr& ghat);
TwistedGSet from_ghat(const GhatSet& n);
TwistedGSet convert_side(const TwistedGSet& m);
// The plain left/right flip of a Ĝ-set: m·x = x^-1·m.
GhatSet flip_ghat_side(const GhatSet& n);

// Throws CarrierMismatch when M and N are not comparable.
bool is_twisted_equivariant(const std::vector<int>& f, const TwistedGSet& m, const TwistedGSet& n);

struct GammaQuotient {
  int size = 0;
  Table gamma_act;        // genuine Γ-action on orbits, same side as M
  std::vector<int> proj;  // point -> orbit
};
GammaQuotient quotient_by_G(const TwistedGSet& m);

// Left cosets gH with g1·(gH) = (g1 g)H and γ·(gH) = θ_γ(g)H; trivial cocycle.
// Throws SubgroupNotInvariant(γ).
struct HomogeneousSpace {
  TwistedGSet set;
  std::vector<int> coset_of;   // element -> coset index
  std::vector<int> coset_rep;  // coset index -> minimal element
};
HomogeneousSpace homogeneous_space(const GammaAction& act, const std::vector<int>& h);
// G/H as a right (θ,c)-twisted set: m·g = g^-1 m, m·γ = θ_γ^-1(g)H.
// Needs c to take values in H (CocycleNotInSubgroup otherwise).
HomogeneousSpace homogeneous_space_right(const TwistedData& d, const std::vector<int>& h);

// m*γ = (m·s(γ))·γ for right actions; left sets are converted, moved, and converted back.
TwistedGSet transport(const TwistedGSet& m, const Recocycling& r);

// Standard fixtures.
TwistedGSet regular_right(const TwistedProductGroup& ghat);  // Ĝ on itself by right multiplication
TwistedGSet regular_left(const TwistedProductGroup& ghat);
TwistedGSet point_set(const TwistedData& d, Side side = Side::Right);

}  // namespace twc

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "twc/group.hpp"

namespace twc {

// A homomorphism gamma -> Aut(g), stored as permutation tables.
struct GammaAction {
  GroupPtr gamma;
  GroupPtr g;
  Table theta;      // theta[γ][x]
  Table theta_inv;  // theta_inv[γ] is the inverse permutation of theta[γ]

  int apply(int gm, int x) const { return theta[gm][x]; }
  int apply_inv(int gm, int x) const { return theta_inv[gm][x]; }
};

// Throws NotAnAutomorphism(γ), NotNormalized, NotAHomomorphism(γ,γ').
GammaAction make_action(const GroupPtr& gamma, const GroupPtr& g, const Table& theta);
GammaAction trivial_action(const GroupPtr& gamma, const GroupPtr& g);
// Action of gamma on g by a fixed automorphism for each generator image:
// theta[γ] for γ of order 2 etc. is produced by extending along a cyclic gamma.
GammaAction cyclic_action(const GroupPtr& gamma, const GroupPtr& g, const std::vector<int>& generator_aut);
// Restricts to a theta-invariant subgroup; throws SubgroupNotInvariant(γ).
GammaAction restrict_action(const GammaAction& act, const Subgroup& sub);

// (θ, c) with c(γ,γ') an element of g lying in Z(g).
struct TwistedData {
  GammaAction action;
  std::vector<int> c;  // c[γ * |Γ| + γ'], indices into g

  const FiniteGroup& G() const { return *action.g; }
  const FiniteGroup& Gamma() const { return *action.gamma; }
  int cc(int a, int b) const { return c[static_cast<size_t>(a) * action.gamma->order + b]; }
  bool c_trivial() const;
};
using TwoCocycle = TwistedData;

// Throws NotNormalized(γ), ValueNotCentral(γ,γ'), CocycleViolation(γ0,γ1,γ2).
TwistedData check_cocycle(const GammaAction& act, const Table& c);
TwistedData check_cocycle(const GammaAction& act, const std::vector<int>& c_flat);
TwistedData trivial_data(const GammaAction& act);
Table c_table(const TwistedData& d);

// δa(γ0,γ1) = θ_γ0(a(γ1)) a(γ0γ1)^-1 a(γ0); a must be central with a(1) = 1.
TwistedData coboundary(const GammaAction& act, const std::vector<int>& a);
// Pointwise product of two central cochains.
std::vector<int> multiply_cochains(const FiniteGroup& g, const std::vector<int>& x, const std::vector<int>& y);

// H²_θ(Γ, Z) for an abelian g = Z.
struct H2Gamma {
  GammaAction action;
  std::vector<std::vector<int>> reps;        // lexicographically minimal per class, trivial first
  std::vector<std::vector<int>> coboundaries;  // sorted, distinct
  std::map<std::vector<int>, int> rep_index;
  long long cocycle_count = 0;

  int size() const { return static_cast<int>(reps.size()); }
  // Class id of a cocycle; throws CocycleViolation for non-cocycles.
  int class_of(const std::vector<int>& c) const;
  std::vector<int> canonical(const std::vector<int>& c) const;
};
H2Gamma second_cohomology(const GammaAction& act_on_z, long long budget = 10'000'000);

// The action of Γ on the centre of g.
GammaAction center_action(const GammaAction& act, Subgroup* z_out = nullptr);
// The cocycle of d expressed in the centre's own indices.
std::vector<int> c_in_center(const TwistedData& d, const Subgroup& z);

// Ĝ = G ×_{θ,c} Γ on indices g + |G|·γ.
struct TwistedProductGroup {
  TwistedData data;
  GroupPtr group;
  std::vector<int> embed_g;  // G -> Ĝ
  GroupHom q;                // Ĝ -> Γ
  std::vector<int> s;        // s(γ) = (1,γ)

  int index(int g, int gm) const { return g + action_g_order() * gm; }
  int g_part(int x) const { return x % action_g_order(); }
  int gamma_part(int x) const { return x / action_g_order(); }
  int action_g_order() const { return data.action.g->order; }
};
using TwistedProductPtr = std::shared_ptr<const TwistedProductGroup>;

// Raw product table for arbitrary c (no cocycle check).
Table twisted_product_table(const GammaAction& act, const std::vector<int>& c_flat);
TwistedProductPtr build_twisted_product(const TwistedData& d);

struct GammaHat {
  TwistedProductPtr hat;      // Z(G) ×_{θ,c} Γ
  Subgroup z;
  std::vector<int> into_ghat;  // Γ̂ -> Ĝ
};
GammaHat gamma_hat(const TwistedData& d, const TwistedProductGroup& ghat);

// Isomorphism G×_{θ,c}Γ -> G×_{θ,c·δa}Γ given by (g,γ) -> (g a(γ)^-1, γ).
struct CohomologousIso {
  TwistedProductPtr source;
  TwistedProductPtr target;
  GroupHom iso;
};
CohomologousIso cohomologous_iso(const TwistedData& d, const std::vector<int>& a);

struct ExtractedData {
  TwistedData data;
  Subgroup g;          // the normal subgroup with its own table
  Quotient gamma;      // Ĝ/G
  std::vector<int> s;  // section, indexed by quotient element
  GroupHom iso;        // build_twisted_product(data) -> Ĝ, (g,γ) -> g s(γ)
};
// `section` lists one Ĝ element per coset (any order); must contain the identity.
// Throws SectionNotNormalised, CocycleNotCentral.
ExtractedData extract_twisted_data(const GroupPtr& ghat, const std::vector<int>& normal,
                                   const std::vector<int>& section);

struct Recocycling {
  TwistedData from;
  TwistedData to;
  std::vector<int> s;  // Γ -> G, s(1) = 1
};
// θ' = Int_s∘θ, c' = c·c_s. Throws NotNormalized, NotAOneCocycle(γ,γ'), CsNotCentral(γ,γ').
Recocycling recocycle(const TwistedData& d, const std::vector<int>& s);
// Isomorphism G×_{θ',c'}Γ -> G×_{θ,c}Γ, (g,γ) -> (g s(γ), γ).
GroupHom recocycle_iso(const Recocycling& r, const TwistedProductPtr& from_hat, const TwistedProductPtr& to_hat);

// All s with s(1)=1 for which recocycle succeeds.
std::vector<std::vector<int>> admissible_recocyclings(const TwistedData& d, long long budget = 1'000'000);

}  // namespace twc

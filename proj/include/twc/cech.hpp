#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twc/actions.hpp"
#include "twc/extension.hpp"
#include "twc/lattice.hpp"
#include "twc/nerve.hpp"
#include "twc/report.hpp"

namespace twc {

// (a, φ): a on sorted edges (a_ji = a_ij^-1), φ[γ][v] with φ[1] ≡ 1.
struct TwistedCocycle {
  std::vector<int> a;
  Table phi;
  bool operator==(const TwistedCocycle& o) const { return a == o.a && phi == o.phi; }
};

int edge_value(const Nerve& n, const FiniteGroup& g, const std::vector<int>& a, int i, int j);
TwistedCocycle trivial_cocycle(const GammaNerve& x, const FiniteGroup& g);

// Serialization: a on sorted edges, then φ[γ][v] for γ = 1..|Γ|-1.
std::vector<int> serialize(const TwistedCocycle& c);
TwistedCocycle deserialize(const GammaNerve& x, const std::vector<int>& key);

// Triples on (2-simplices, Γ × edges, Γ² × vertices); w is indexed by γ·|Γ|+γ'.
struct CochainTriple {
  std::vector<int> u;
  Table v;
  Table w;
  bool operator==(const CochainTriple& o) const { return u == o.u && v == o.v && w == o.w; }
};
// d2 output: (Γ^0 × 3-simplices, Γ × 2-simplices, Γ² × edges, Γ³ × vertices).
struct CochainQuad {
  std::vector<int> t1;
  Table t2, t3, t4;
};

enum class Fault { None, SignFlip };

// (a_ij a_jk a_ik^-1, φ_γi^-1 a_{iγ,jγ} φ_γj θ_γ^-1(a_ij)^-1, φ_{γ,iγ'} θ_γ^-1(φ_γ'i) φ_{γ'γ,i}^-1)
CochainTriple d1(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c, Fault fault = Fault::None);
// (1, 1, θ^-1(c)) with θ^-1(c)(γ,γ') = θ_{γ'γ}^-1(c(γ',γ)).
CochainTriple cocycle_target(const GammaNerve& x, const TwistedData& d);
// Only for abelian coefficient groups.
CochainQuad d2(const GammaNerve& x, const GammaAction& act, const CochainTriple& t);
bool is_trivial(const CochainQuad& q);

struct CocycleCheck {
  bool ok = true;
  std::string component;  // "shape", "u", "v", "w", "phi1"
  std::vector<int> witness;
};
CocycleCheck is_twisted_cocycle(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c);
// Throws NotACocycle with the failing component and witness.
void require_cocycle(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c);

// (h_i^-1 a_ij h_j, h_{iγ}^-1 φ_γi θ_γ^-1(h_i))
TwistedCocycle gauge(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c, const std::vector<int>& h);
// (h_{iλ}^-1 a_{iλ,jλ} h_{jλ}, h_{iλγ}^-1 φ_{γ,iλ} θ_γ^-1(h_{iλ})). Throws NotCentral(λ).
TwistedCocycle gauge_reduced(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c,
                             const std::vector<int>& h, int lambda);
// Pointwise product with a cocycle valued in the centre.
TwistedCocycle multiply_central(const FiniteGroup& g, const TwistedCocycle& c, const TwistedCocycle& z);

// A finite set of classes with canonical keys.
struct CohomologySet {
  std::string kind;
  std::vector<std::vector<int>> reps;  // canonical keys, sorted
  std::map<std::vector<int>, int> index;
  std::function<std::vector<int>(const std::vector<int>&)> canon;
  int distinguished = -1;

  int size() const { return static_cast<int>(reps.size()); }
  int class_of(const std::vector<int>& element) const;  // -1 if not a known class
  void finish(std::vector<std::vector<int>> keys);
};

struct EnumBudget {
  long long max_enum = 20'000'000;
};

// Gauges a so that spanning-forest edges carry 1; h_out receives the gauge used.
TwistedCocycle forest_normalize(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c,
                                std::vector<int>* h_out = nullptr);
// Every forest-normalized cocycle. Throws BudgetExceeded.
std::vector<TwistedCocycle> enumerate_z1(const GammaNerve& x, const TwistedData& d, const EnumBudget& b = {});
// Canonical key of the gauge class of a cocycle.
std::vector<int> h1_key(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c);

CohomologySet h1_twisted(const GammaNerve& x, const TwistedData& d, const EnumBudget& b = {});
CohomologySet h1_reduced(const GammaNerve& x, const TwistedData& d, const EnumBudget& b = {});
std::vector<int> gamma_center(const FiniteGroup& gamma);

// Γ-equivariant G-valued functions constant on components: h_{iγ} = θ_γ^-1(h_i).
struct H0Group {
  std::vector<std::vector<int>> elements;  // per-vertex values, sorted, identity first
  GroupPtr group;
  int index_of(const std::vector<int>& h) const;
};
H0Group h0_twisted(const GammaNerve& x, const GammaAction& act);
// Gauges fixing a cocycle.
std::vector<std::vector<int>> stabilizer(const GammaNerve& x, const GammaAction& act, const TwistedCocycle& c);

// Induced action on G/N for a θ-invariant normal N.
GammaAction quotient_action(const GammaAction& act, const Quotient& q);

// H² machinery for an abelian coefficient group with Γ-action.
class H2Engine {
 public:
  H2Engine(const GammaNerve& x, const GammaAction& act_z);

  // Canonical class key of a normalized triple lying in ker d2.
  std::vector<int> key(const CochainTriple& t) const;
  bool in_kernel(const CochainTriple& t) const;
  // A Z-valued (a, φ) with d1 = t, when t lies in the image.
  std::optional<TwistedCocycle> preimage(const CochainTriple& t) const;
  CohomologySet classes(const EnumBudget& b = {}) const;

  const GammaNerve& nerve() const { return x_; }
  const GammaAction& action() const { return act_; }

 private:
  std::vector<long long> flatten2(const CochainTriple& t) const;
  std::vector<long long> flatten_quad(const CochainQuad& q) const;
  CochainTriple unflatten2(const std::vector<long long>& v) const;

  GammaNerve x_;
  GammaAction act_;
  abelian::Coords co_;
  int n1_ = 0, n2_ = 0, nq_ = 0;  // coordinate counts
  abelian::EchelonLattice image_{std::vector<long long>{}};
  std::vector<std::vector<long long>> kernel_gens_;
};
CohomologySet h2(const GammaNerve& x, const GammaAction& act_z, const EnumBudget& b = {});

// Coefficient data for the sequence Z -> G -> G/Z.
struct LesContext {
  GammaNerve x;
  TwistedData data;
  Subgroup z;
  Quotient q;
  GammaAction z_act, q_act;
};
LesContext les_context(const GammaNerve& x, const TwistedData& d);

struct DeltaResult {
  bool ok = true;
  std::string problem;
  std::vector<int> witness;
  TwistedCocycle z_cocycle;  // δ0 output, values in Z (own indices)
  CochainTriple triple;      // δ1 output, values in Z (own indices)
};
// gbar: per-vertex elements of G/Z; lift: per-vertex lifts (empty = minimal coset representatives).
DeltaResult delta_h0(const LesContext& ctx, const std::vector<int>& gbar, const std::vector<int>& lift = {},
                     Fault fault = Fault::None);
// xbar: a cocycle with values in G/Z; lift given as a G-valued cochain (empty a = minimal representatives).
DeltaResult delta_h1(const LesContext& ctx, const TwistedCocycle& xbar, const TwistedCocycle* lift = nullptr,
                     Fault fault = Fault::None);
TwistedCocycle project_cocycle(const LesContext& ctx, const TwistedCocycle& c);
TwistedCocycle include_cocycle(const LesContext& ctx, const TwistedCocycle& zc);

CheckList les_verify(const GammaNerve& x, const TwistedData& d, const EnumBudget& b = {}, Fault fault = Fault::None,
                     unsigned seed = 1);

struct ExistenceResult {
  bool exists = false;
  std::optional<TwistedCocycle> witness;
  int quotient_class = -1;
};
ExistenceResult existence_check(const GammaNerve& x, const TwistedData& d, const EnumBudget& b = {});

// ψ: G -> G' equivariant for θ, θ'. Throws NotEquivariant(γ), ImageCocycleNotCentral.
struct MappedCocycle {
  TwistedData data;
  TwistedCocycle cocycle;
};
MappedCocycle map_coefficients(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& c, const GroupHom& psi,
                               const GammaAction& target_action);

// Families m_v with m_w = m_v·a_vw and m_{vγ} = (m_v·γ)·φ_γv^-1.
std::vector<std::vector<int>> sections_of_associated(const GammaNerve& x, const TwistedData& d,
                                                     const TwistedCocycle& e, const TwistedGSet& m,
                                                     long long max_enum = 5'000'000);

// (a, φ_γ·θ_γ^-1(s(γ))): a cocycle for r.from becomes one for r.to.
TwistedCocycle transport_cocycle(const GammaNerve& x, const Recocycling& r, const TwistedCocycle& c);

struct Reduction {
  std::vector<int> section;     // coset per vertex
  TwistedCocycle witness;       // H-valued, in H's own indices
  std::vector<int> gauge_used;  // per-vertex G elements
};
struct ReductionSet {
  TwistedData h_data;
  Subgroup h;
  std::vector<Reduction> reductions;
};
// Throws SubgroupNotInvariant, CocycleNotInSubgroup.
ReductionSet reductions_to_subgroup(const GammaNerve& x, const TwistedData& d, const TwistedCocycle& e,
                                    const std::vector<int>& h);

}  // namespace twc

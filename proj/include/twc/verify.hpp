#pragma once

#include <string>
#include <vector>

#include "twc/correspondence.hpp"
#include "twc/fixtures.hpp"

namespace twc {

struct NamedSet {
  std::string name;
  TwistedGSet set;
};
// Point sets, regular Ĝ-sets and G/Z for the given data, carriers up to max_carrier.
std::vector<NamedSet> twisted_set_fixtures(const TwistedData& d, int max_carrier = 16);

// Counts for the section lemma: G-maps f: E -> M, those that are Ĝ-equivariant,
// those whose induced section E/G -> (E×M)/G is Γ-equivariant, and mismatches.
struct LemmaCount {
  long long g_maps = 0;
  long long ghat_equivariant = 0;
  long long gamma_sections = 0;
  long long disagreements = 0;
};
// E must have a free G-action; both sets on the right.
LemmaCount equivariant_sections_lemma(const TwistedGSet& e, const TwistedGSet& m);

// Sections of the associated bundle on the quotient: n_j = n_i·x_ij.
std::vector<std::vector<int>> ghat_sections(const Nerve& y, const GhatCocycleY& x, const GhatSet& m);

CheckList verify_action_roundtrips(const TwistedData& d);
CheckList verify_les(const fixtures::GridPoint& p, const EnumBudget& b = {}, unsigned seed = 1, Fault fault = Fault::None);
CheckList verify_correspondence(const fixtures::GridPoint& p, const EnumBudget& b = {}, unsigned seed = 1);
CheckList verify_roundtrips(const fixtures::GridPoint& p, const EnumBudget& b = {}, unsigned seed = 1);

}  // namespace twc

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twc/errors.hpp"

namespace twc {

// A finite group stored as a dense multiplication table. Element 0 is
// always the identity.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;  // mul[a * order + b] = a*b
  std::vector<int> inv;
  std::string label;
  std::vector<std::string> names;  // optional, one per element

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int identity() const { return 0; }
  std::string element_name(int x) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using Table = std::vector<std::vector<int>>;

struct ValidatedGroup {
  GroupPtr group;
  std::vector<int> relabel;  // relabel[old index] = new index
};

// Checks a square table and returns a group with the identity moved to 0.
// Throws ValidationError: InvalidTable, NotAssociative, NoIdentity, NoInverse.
ValidatedGroup validate_group(const Table& table, const std::string& label = "",
                              const std::vector<std::string>& names = {});
GroupPtr make_group(const Table& table, const std::string& label = "",
                    const std::vector<std::string>& names = {});

Table table_of(const FiniteGroup& g);

int element_order(const FiniteGroup& g, int x);
int power(const FiniteGroup& g, int x, int k);
bool is_abelian(const FiniteGroup& g);

// Sorted element list of the subgroup generated by `gens`.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
// Deterministic small generating set (greedy, largest growth first).
std::vector<int> generating_set(const FiniteGroup& g);

// A subgroup with its own table; group element k corresponds to elements[k].
struct Subgroup {
  std::vector<int> elements;  // sorted ascending, elements[0] == 0
  GroupPtr group;
  int index_of(int x) const;  // -1 if x is not in the subgroup
  bool contains(int x) const { return index_of(x) >= 0; }
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements, const std::string& label = "");
bool is_normal(const FiniteGroup& g, const std::vector<int>& elements);

struct Quotient {
  GroupPtr group;
  std::vector<int> proj;  // element of g -> coset index
  std::vector<int> lift;  // coset index -> minimal representative
};
// Cosets are ordered by their minimal element.
Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal, const std::string& label = "");

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
};

// Throws ValidationError NotAHomomorphism with the failing pair.
void check_hom(const GroupHom& h);
bool is_hom(const FiniteGroup& s, const FiniteGroup& t, const std::vector<int>& map);
bool is_bijection(const std::vector<int>& map, int n);

struct Automorphism {
  GroupHom hom;
  std::vector<int> inverse;
};

Automorphism make_automorphism(const GroupPtr& g, std::vector<int> map);
std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> invert_perm(const std::vector<int>& p);

struct SearchBudget {
  int max_order = 64;
  long long max_steps = 2'000'000;
};

Subgroup center(const FiniteGroup& g);
std::vector<Automorphism> automorphisms(const GroupPtr& g, const SearchBudget& budget = {});
std::vector<Automorphism> inner_automorphisms(const GroupPtr& g);
// Cosets of Int(G) in Aut(G), as index lists into automorphisms(g).
std::vector<std::vector<int>> outer_classes(const GroupPtr& g, const SearchBudget& budget = {});
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
std::optional<GroupHom> find_isomorphism(const GroupPtr& g, const GroupPtr& h, const SearchBudget& budget = {});

// Extends generator images to a homomorphism, or nullopt on conflict.
std::optional<std::vector<int>> extend_from_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images);

GroupPtr cyclic_group(int n, const std::string& label = "");
GroupPtr trivial_group();
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const std::string& label = "");

// Catalogue: C1, C2, C3, C4, C8, V4 (alias C2xC2), S3, D4, Q8.
GroupPtr builtin_group(const std::string& name);
bool has_builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

}  // namespace twc

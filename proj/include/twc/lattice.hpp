#pragma once

#include <vector>

#include "twc/group.hpp"

namespace twc::abelian {

// Coordinates of a finite abelian group as a product of cyclic factors.
struct Coords {
  GroupPtr z;
  std::vector<int> gens;
  std::vector<long long> orders;
  Table coords;  // element -> exponents

  int rank() const { return static_cast<int>(gens.size()); }
  int element(const std::vector<long long>& exps) const;
};
// Throws NotAbelian.
Coords decompose(const GroupPtr& z);

// A full-rank sublattice of Z^n that contains moduli[c]·e_c for every column,
// kept as an echelon basis with one pivot row per column.
class EchelonLattice {
 public:
  explicit EchelonLattice(std::vector<long long> moduli);
  void insert(std::vector<long long> v);
  // Canonical representative of v modulo the lattice; each entry lands in [0, pivot).
  std::vector<long long> reduce(std::vector<long long> v) const;
  // Like reduce, also returning the integer combination of pivot rows that was subtracted.
  std::vector<long long> reduce_tracked(std::vector<long long> v, std::vector<long long>& used) const;
  const std::vector<long long>& row(int c) const { return rows_[c]; }
  long long pivot(int c) const { return rows_[c][c]; }
  int columns() const { return static_cast<int>(moduli_.size()); }
  const std::vector<long long>& moduli() const { return moduli_; }

 private:
  void normalise(std::vector<long long>& v, int from) const;
  std::vector<long long> moduli_;
  std::vector<std::vector<long long>> rows_;
};

}  // namespace twc::abelian

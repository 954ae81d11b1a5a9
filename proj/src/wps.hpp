#pragma once

#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "linalg.hpp"

namespace fanohyp::wps {

// P(1^units, heavy_1, ..., heavy_l): a weighted projective space with at
// least one weight-one coordinate. Heavy weights are >= 2 and kept sorted.
struct WeightedSpace {
  WeightedSpace(int units, std::vector<long long> heavy);
  int units;
  std::vector<long long> heavy;
  int dim() const { return units + static_cast<int>(heavy.size()) - 1; }
  std::string to_string() const;
  bool operator==(const WeightedSpace&) const = default;
};

// Exponent vector: unit coordinates s_1..s_k first, then heavy t_1..t_l.
using Monomial = std::vector<long long>;

// Monomial bases of the graded sections rings, cached per degree. Monomials
// are ordered so that a pure power of s_1 comes first; ties between heavy
// variables break toward the later (heavier) one, matching the elimination
// arguments the surjectivity proofs use.
class GradedRing {
 public:
  explicit GradedRing(WeightedSpace space);
  const WeightedSpace& space() const { return space_; }
  int vars() const { return space_.units + static_cast<int>(space_.heavy.size()); }
  long long degree_of(const Monomial& m) const;
  const std::vector<Monomial>& basis(long long d);
  long long h0(long long d) { return static_cast<long long>(basis(d).size()); }
  int index_of(long long d, const Monomial& m);

 private:
  WeightedSpace space_;
  std::map<long long, std::vector<Monomial>> bases_;
  std::map<long long, std::map<Monomial, int>> index_;
};

// Rows spanning the sections of O(d) vanishing at the base point
// p = [1:0:...:0 | 1:...:1] of the dense orbit, over the basis(d) indices.
// Every row has at most two entries, both +-1.
std::vector<linalg::SparseVec> vanishing_subspace(GradedRing& ring,
                                                  long long d);

struct SectionDominationReport {
  WeightedSpace space;
  long long d = 0, a = 0;
  bool surjective = false;
  long long rank = 0;
  long long target_dim = 0;
};

// Exact test of whether O(d) is section-dominating for O(a) on the dense
// orbit: multiply the p-vanishing sections of O(d) by all of H^0(O(a-d))
// and compare the span with the p-vanishing subspace of O(a).
SectionDominationReport section_dominating_check(const WeightedSpace& sp,
                                                 long long d, long long a);

struct TheoremBound {
  bool applicable = false;
  long long d = 0;      // lcm of the heavy weights (1 when there are none)
  long long a_min = 0;  // smallest degree covered: max(d, l*d - sum + 1)
};

// Guaranteed section-domination range: needs at least two unit weights,
// and either at most one heavy weight or lcm distinct from the largest one.
TheoremBound theorem_bound(const WeightedSpace& sp);

struct CoinPair {
  long long alpha = 0, beta = 0;  // alpha*x + beta*y == x*y - 1
};

// For coprime x, y >= 2: the (unique) positive representation of xy - 1.
CoinPair coin_lemma(long long x, long long y);

struct OptimalityWitness {
  long long d = 0;      // lcm of the two heavy weights
  long long a = 0;      // 2d - a1 - a2, one below the guaranteed bound
  Monomial section;     // t1^{a2-1} t2^{a1-1}, offset against s1^a
  bool in_image = false;
};

// For two coprime heavy weights: the explicit p-vanishing section of O(a)
// that escapes the image of the multiplication map, showing the bound of
// theorem_bound is sharp.
OptimalityWitness optimality_witness(const WeightedSpace& sp);

// Dimension of the cokernel of H^0(O(d1)) (x) H^0(O(d2)) -> H^0(O(d1+d2)).
long long multiplication_cokernel_dim(const WeightedSpace& sp, long long d1,
                                      long long d2);

struct IdealGenerationReport {
  long long m = 0, t = 0;
  long long sym2_dim = 0, rank2 = 0, k2 = 0;
  long long symt_dim = 0, rankt = 0, kt = 0;
  long long span_rank = 0;
  bool generated = false;  // span_rank == kt
};

// For the image of the space under the degree-m linear system: does the
// degree-2 part of the homogeneous ideal generate the degree-t part?
IdealGenerationReport ideal_generation_check(const WeightedSpace& sp,
                                             long long m, long long t);

}  // namespace fanohyp::wps

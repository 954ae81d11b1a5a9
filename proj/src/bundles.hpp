#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "weights.hpp"

namespace fanohyp::bundles {

struct Grassmannian {
  Grassmannian(int k, int n);
  int k;  // rank of the tautological subbundle
  int n;  // dimension of the ambient vector space
  int dim() const { return k * (n - k); }
  int quot_rank() const { return n - k; }
  bool operator==(const Grassmannian&) const = default;
  auto operator<=>(const Grassmannian&) const = default;
  std::string to_string() const;
};

// Irreducible homogeneous bundle on Gr(k,n) in normal form:
//   K_u(U*) (x) K_q(Q*) (x) O(t)
// where U is the tautological subbundle, Q the quotient, u and q are
// partitions with fewer than k (resp. n-k) rows, and O(1) = det U*.
// Determinant factors are absorbed into the twist, so equal bundles
// compare equal.
class BundleSymbol {
 public:
  // u may have up to k entries (q up to n-k); negative entries are allowed
  // when the vector is given at full length. Determinant parts move into
  // the twist.
  static BundleSymbol make(const Grassmannian& g, const weights::Weight& u,
                           const weights::Weight& q, long long twist);

  const Grassmannian& space() const { return space_; }
  const weights::Partition& u() const { return u_; }
  const weights::Partition& q() const { return q_; }
  long long twist() const { return twist_; }

  Int rank() const;
  BundleSymbol dual() const;
  BundleSymbol twisted(long long dt) const;

  // Weight of the inducing representation, length n: the u block, then the
  // q block with the twist folded in.
  weights::Weight to_alpha() const;

  std::string to_string() const;

  bool operator==(const BundleSymbol&) const = default;
  auto operator<=>(const BundleSymbol&) const = default;

 private:
  BundleSymbol(Grassmannian g, weights::Partition u, weights::Partition q,
               long long twist);
  Grassmannian space_;
  weights::Partition u_;
  weights::Partition q_;
  long long twist_;
};

struct Cohomology {
  bool vanishes = true;
  int degree = -1;  // the unique degree with nonzero cohomology
  Int dim = 0;
};

Cohomology cohomology(const BundleSymbol& s);

// dim H^i(s); zero unless i is the unique nonvanishing degree.
Int h(const BundleSymbol& s, int i);

// Formal nonnegative combination of symbols on one space. Terms are kept
// in a canonical order so sums built in different ways compare equal.
class BundleSum {
 public:
  explicit BundleSum(const Grassmannian& g) : space_(g) {}
  static BundleSum of(const BundleSymbol& s, long long mult = 1);

  void add(const BundleSymbol& s, long long mult = 1);
  void add(const BundleSum& other, long long mult = 1);

  const Grassmannian& space() const { return space_; }
  const std::map<BundleSymbol, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Int rank() const;
  long long rank_ll() const;

  BundleSum dual() const;
  BundleSum twisted(long long dt) const;
  std::string to_string() const;

  bool operator==(const BundleSum&) const = default;

 private:
  Grassmannian space_;
  std::map<BundleSymbol, long long> terms_;
};

Int h(const BundleSum& s, int i);
Int euler_characteristic(const BundleSum& s);
Int euler_characteristic(const BundleSymbol& s);

// Littlewood-Richardson coefficients c^nu_{a,b} for all nu with at most
// cap_rows rows. Memoized.
std::map<weights::Partition, long long> lr_tensor(const weights::Partition& a,
                                                  const weights::Partition& b,
                                                  int cap_rows);

BundleSum tensor(const BundleSymbol& a, const BundleSymbol& b);
BundleSum tensor(const BundleSum& a, const BundleSum& b);

enum class PowerKind { Exterior, Symmetric };

// Decomposition of the p-th exterior or symmetric power of an irreducible
// symbol, computed from its character.
BundleSum power(const BundleSymbol& s, int p, PowerKind kind);

// All exterior powers of a sum at once: result[i] = Lambda^i(e), for
// i = 0 .. rank(e).
std::vector<BundleSum> exterior_powers_of_sum(const BundleSum& e);

// Content vectors (as exponent tuples of length m) of all semistandard
// tableaux of the given shape with entries in 1..m; listed with
// multiplicity. Memoized.
const std::vector<std::vector<int>>& ssyt_contents(
    const weights::Partition& shape, int m);

}  // namespace fanohyp::bundles

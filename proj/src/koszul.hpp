#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bundles.hpp"

namespace fanohyp::koszul {

using bundles::BundleSum;
using bundles::BundleSymbol;
using bundles::Grassmannian;

struct ScanRegion {
  int i_max = 0;
  long long n_min = 0;
  long long n_max = 0;
};

struct ScanHit {
  int i = 0;
  long long N = 0;
  Int dim = 0;
  bool operator==(const ScanHit&) const = default;
};

struct ScanReport {
  Grassmannian space;
  weights::Partition u, q;
  ScanRegion region;
  std::vector<ScanHit> hits;  // ordered by N (one degree per twist at most)
};

// Twist sweep of the irreducible bundle K_u(U*) (x) K_q(Q*): for each
// N in [n_min, n_max] record the nonvanishing degree of H^*( ... (-N))
// when that degree is <= i_max.
ScanReport scan(const Grassmannian& g, const weights::Partition& u,
                const weights::Partition& q, const ScanRegion& region);

struct NonvanishingWitness {
  BundleSymbol summand;
  int koszul_index = 0;
  int degree = 0;
  Int dim = 0;
};

// Koszul criterion for surjectivity of the restriction map
// H^0(target) -> H^0(target|_Z) onto the zero locus Z of a regular section
// of f: it is enough that H^i(Lambda^i(f*) (x) target) = 0 for
// 1 <= i <= rank f. Returns the first failing summand, or nothing when the
// criterion holds.
std::optional<NonvanishingWitness> restriction_obstruction(
    const BundleSum& f, const BundleSymbol& target);

inline bool restriction_surjective(const BundleSum& f,
                                   const BundleSymbol& target) {
  return !restriction_obstruction(f, target).has_value();
}

struct CurveObstruction {
  BundleSymbol target;
  NonvanishingWitness witness;  // koszul_index 0: H^0(target) itself
};

// Vanishing of H^0 of each target on a curve cut out by a regular section
// of e, via the Koszul resolution of the curve: needs H^0(target) = 0 and,
// for every 1 <= i <= rank e and every summand S of Lambda^i(e*) (x) target,
// H^{i-1}(S) = H^i(S) = 0. The last condition degenerates the spectral
// sequence onto the diagonal, so nothing survives to H^0 on the curve.
std::optional<CurveObstruction> curve_obstruction(
    const BundleSum& e, const std::vector<BundleSymbol>& targets);

// Closed-form description of H^*(K_w(U*)(-d)) (side Sub, d >= 1) and
// H^*(K_w(Q*)(-d)) (side Quot, d >= 0): at most one degree is nonzero, and
// in the distinguished boundary cases the dimension is pinned to 1.
enum class Side { Sub, Quot };

struct ClosedForm {
  bool nonzero = false;
  int degree = -1;
  bool dim_one = false;
};

ClosedForm closed_form(const Grassmannian& g, const weights::Partition& w,
                       long long d, Side side);

// Exhaustive comparison of closed_form against the direct computation over
// every admissible weight on g and every d up to d_max (including the
// pinned dimensions). Returns the number of disagreements.
long long closed_form_mismatches(const Grassmannian& g, long long d_max);

// Vanishing claims and twist sweeps backing the three Grassmannian
// families with curve-level cohomology tables.

struct VanishingRow {
  weights::Partition u, q;
  int i_max = 0;
  long long n_min = 0;
  // (degree, bound): for that degree the vanishing is only claimed from
  // the larger bound on.
  std::vector<std::pair<int, long long>> caveats;
};

struct ExceptionRow {
  weights::Partition u, q;
  std::vector<std::pair<int, long long>> expected;  // (degree, twist) hits
};

struct FamilyTables {
  std::string id;
  Grassmannian space;
  ScanRegion region;  // sweep used for the exception rows
  std::vector<VanishingRow> vanishing;
  std::vector<ExceptionRow> exceptions;
};

const FamilyTables& fano_scan_tables(const std::string& id);
const std::vector<std::string>& fano_table_ids();

struct RowViolation {
  std::size_t row = 0;
  ScanHit hit;
};

// Check every vanishing row by sweeping twists up to n_max; any hit inside
// a claimed-vanishing region is returned.
std::vector<RowViolation> verify_vanishing_rows(const FamilyTables& t,
                                                long long n_max);

// Recompute the hit set of each exception row over t.region.
std::vector<std::vector<ScanHit>> compute_exception_rows(const FamilyTables& t);

// Structural bundle (everything except the O(a) and O(d) summands) and
// curve-level targets of one of the table families.
struct CurveCheckData {
  Grassmannian space;
  BundleSum structural;
  std::vector<BundleSymbol> targets;
};

const CurveCheckData& curve_check_data(const std::string& id);

// Full curve check for the family at surface degree a and curve class d.
std::optional<CurveObstruction> run_curve_check(const std::string& id,
                                                long long a, long long d);

}  // namespace fanohyp::koszul

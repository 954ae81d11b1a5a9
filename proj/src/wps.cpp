#include "wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fanohyp::wps {

WeightedSpace::WeightedSpace(int units_, std::vector<long long> heavy_)
    : units(units_), heavy(std::move(heavy_)) {
  if (units < 1)
    throw std::invalid_argument("need at least one weight-one coordinate");
  std::sort(heavy.begin(), heavy.end());
  for (long long a : heavy)
    if (a < 2) throw std::invalid_argument("heavy weights must be >= 2");
}

std::string WeightedSpace::to_string() const {
  std::string out = "P(1";
  if (units > 1) out += "^" + std::to_string(units);
  for (long long a : heavy) out += "," + std::to_string(a);
  return out + ")";
}

namespace {

// Ascending lexicographic comparison of the reversed exponent tuples: the
// pure s_1 power is minimal and heavier variables dominate.
bool term_less(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                      b.rend());
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

GradedRing::GradedRing(WeightedSpace space) : space_(std::move(space)) {}

long long GradedRing::degree_of(const Monomial& m) const {
  long long d = 0;
  for (int i = 0; i < space_.units; ++i) d += m[i];
  for (std::size_t j = 0; j < space_.heavy.size(); ++j)
    d += m[space_.units + j] * space_.heavy[j];
  return d;
}

const std::vector<Monomial>& GradedRing::basis(long long d) {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;

  std::vector<Monomial> out;
  if (d >= 0) {
    int nv = vars();
    Monomial cur(nv, 0);
    // Free coordinates are s_2..s_k and the t's; s_1 takes the remainder.
    auto dfs = [&](auto&& self, int pos, long long left) -> void {
      if (pos == nv) {
        cur[0] = left;
        out.push_back(cur);
        cur[0] = 0;
        return;
      }
      long long w = pos < space_.units ? 1 : space_.heavy[pos - space_.units];
      for (long long e = 0; e * w <= left; ++e) {
        cur[pos] = e;
        self(self, pos + 1, left - e * w);
      }
      cur[pos] = 0;
    };
    dfs(dfs, 1, d);
    std::sort(out.begin(), out.end(), term_less);
  }

  auto& slot = bases_[d];
  slot = std::move(out);
  auto& idx = index_[d];
  for (int i = 0; i < static_cast<int>(slot.size()); ++i) idx[slot[i]] = i;
  return slot;
}

int GradedRing::index_of(long long d, const Monomial& m) {
  basis(d);
  const auto& idx = index_[d];
  auto it = idx.find(m);
  if (it == idx.end())
    throw std::logic_error("monomial is not in the basis of its degree");
  return it->second;
}

std::vector<linalg::SparseVec> vanishing_subspace(GradedRing& ring,
                                                  long long d) {
  const auto& b = ring.basis(d);
  std::vector<linalg::SparseVec> rows;
  if (b.empty()) return rows;
  Monomial s1d(ring.vars(), 0);
  s1d[0] = d;
  int base = ring.index_of(d, s1d);
  const auto& sp = ring.space();
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    bool unit_free = true;
    for (int s = 1; s < sp.units; ++s)
      if (b[i][s] != 0) unit_free = false;
    if (!unit_free) {
      rows.push_back({{i, Rat(1)}});
    } else if (i != base) {
      linalg::SparseVec row = {{base, Rat(-1)}, {i, Rat(1)}};
      if (base > i) std::swap(row[0], row[1]);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SectionDominationReport section_dominating_check(const WeightedSpace& sp,
                                                 long long d, long long a) {
  if (d < 1 || a < 1)
    throw std::invalid_argument("degrees must be positive");
  GradedRing ring(sp);
  auto vrows = vanishing_subspace(ring, d);
  const auto& db = ring.basis(d);
  const auto& wb = ring.basis(a - d);
  ring.basis(a);
  linalg::RowReducer red;
  for (const auto& row : vrows) {
    for (const auto& w : wb) {
      linalg::SparseVec prod;
      for (const auto& [col, coef] : row)
        prod.emplace_back(ring.index_of(a, mono_mul(db[col], w)), coef);
      if (prod.size() == 2 && prod[0].first > prod[1].first)
        std::swap(prod[0], prod[1]);
      red.add_row(std::move(prod));
    }
  }
  SectionDominationReport rep{sp};
  rep.d = d;
  rep.a = a;
  rep.rank = red.rank();
  rep.target_dim = ring.h0(a) - 1;
  rep.surjective = rep.rank == rep.target_dim;
  return rep;
}

TheoremBound theorem_bound(const WeightedSpace& sp) {
  TheoremBound tb;
  long long l = static_cast<long long>(sp.heavy.size());
  tb.d = 1;
  for (long long a : sp.heavy) tb.d = std::lcm(tb.d, a);
  long long sum = 0;
  for (long long a : sp.heavy) sum += a;
  tb.a_min = std::max(tb.d, l * tb.d - sum + 1);
  tb.applicable = sp.units >= 2 && (l <= 1 || tb.d != sp.heavy.back());
  return tb;
}

CoinPair coin_lemma(long long x, long long y) {
  if (x < 2 || y < 2 || std::gcd(x, y) != 1)
    throw std::invalid_argument("coin lemma needs coprime integers >= 2");
  auto inv_mod = [](long long u, long long mod) {
    long long r0 = mod, r1 = u % mod, s0 = 0, s1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      s0 -= q * s1;
      std::swap(s0, s1);
    }
    return ((s0 % mod) + mod) % mod;
  };
  CoinPair cp{y - inv_mod(x, y), x - inv_mod(y, x)};
  if (cp.alpha * x + cp.beta * y != x * y - 1)
    throw std::logic_error("coin lemma identity failed");
  return cp;
}

OptimalityWitness optimality_witness(const WeightedSpace& sp) {
  if (sp.heavy.size() != 2 || std::gcd(sp.heavy[0], sp.heavy[1]) != 1)
    throw std::invalid_argument(
        "sharpness witness needs exactly two coprime heavy weights");
  long long a1 = sp.heavy[0], a2 = sp.heavy[1];
  OptimalityWitness ow;
  ow.d = a1 * a2;
  ow.a = 2 * ow.d - a1 - a2;

  GradedRing ring(sp);
  auto vrows = vanishing_subspace(ring, ow.d);
  const auto& db = ring.basis(ow.d);
  const auto& wb = ring.basis(ow.a - ow.d);
  ring.basis(ow.a);
  linalg::RowReducer red;
  for (const auto& row : vrows) {
    for (const auto& w : wb) {
      linalg::SparseVec prod;
      for (const auto& [col, coef] : row)
        prod.emplace_back(ring.index_of(ow.a, mono_mul(db[col], w)), coef);
      if (prod.size() == 2 && prod[0].first > prod[1].first)
        std::swap(prod[0], prod[1]);
      red.add_row(std::move(prod));
    }
  }

  ow.section = Monomial(ring.vars(), 0);
  ow.section[sp.units] = a2 - 1;
  ow.section[sp.units + 1] = a1 - 1;
  Monomial s1a(ring.vars(), 0);
  s1a[0] = ow.a;
  linalg::SparseVec wrow = {{ring.index_of(ow.a, s1a), Rat(-1)},
                            {ring.index_of(ow.a, ow.section), Rat(1)}};
  if (wrow[0].first > wrow[1].first) std::swap(wrow[0], wrow[1]);
  ow.in_image = !red.add_row(std::move(wrow));
  return ow;
}

long long multiplication_cokernel_dim(const WeightedSpace& sp, long long d1,
                                      long long d2) {
  GradedRing ring(sp);
  const auto& b1 = ring.basis(d1);
  const auto& b2 = ring.basis(d2);
  std::set<int> image;
  for (const auto& u : b1)
    for (const auto& v : b2)
      image.insert(ring.index_of(d1 + d2, mono_mul(u, v)));
  return ring.h0(d1 + d2) - static_cast<long long>(image.size());
}

namespace {

// Nondecreasing index tuples of the given length over [0, m): the monomial
// basis of a symmetric power.
std::vector<std::vector<int>> sym_basis(int m, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int pos, int lo) -> void {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i < m; ++i) {
      cur.push_back(i);
      self(self, pos + 1, i);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

}  // namespace

IdealGenerationReport ideal_generation_check(const WeightedSpace& sp,
                                             long long m, long long t) {
  if (m < 1 || t < 2)
    throw std::invalid_argument("need m >= 1 and t >= 2");
  GradedRing ring(sp);
  const auto& W = ring.basis(m);
  int M = static_cast<int>(W.size());

  auto collapse = [&](const std::vector<int>& tuple) {
    Monomial prod(ring.vars(), 0);
    for (int i : tuple) prod = mono_mul(prod, W[i]);
    return ring.index_of(m * static_cast<long long>(tuple.size()), prod);
  };

  IdealGenerationReport rep;
  rep.m = m;
  rep.t = t;

  auto sym2 = sym_basis(M, 2);
  rep.sym2_dim = static_cast<long long>(sym2.size());
  std::map<int, std::vector<int>> fibers;  // collapsed monomial -> tuples
  for (int x = 0; x < static_cast<int>(sym2.size()); ++x)
    fibers[collapse(sym2[x])].push_back(x);
  rep.rank2 = static_cast<long long>(fibers.size());
  rep.k2 = rep.sym2_dim - rep.rank2;

  auto symt = sym_basis(M, static_cast<int>(t));
  rep.symt_dim = static_cast<long long>(symt.size());
  std::map<std::vector<int>, int> symt_idx;
  for (int i = 0; i < static_cast<int>(symt.size()); ++i) symt_idx[symt[i]] = i;
  {
    std::set<int> image;
    for (const auto& tuple : symt) image.insert(collapse(tuple));
    rep.rankt = static_cast<long long>(image.size());
  }
  rep.kt = rep.symt_dim - rep.rankt;

  auto merge = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };

  auto symr = sym_basis(M, static_cast<int>(t) - 2);
  linalg::RowReducer red;
  long long quadrics = 0;
  for (const auto& [img, fiber] : fibers) {
    const auto& rep_tuple = sym2[fiber.front()];
    for (std::size_t j = 1; j < fiber.size(); ++j) {
      ++quadrics;
      const auto& x_tuple = sym2[fiber[j]];
      for (const auto& w : symr) {
        linalg::SparseVec row = {{symt_idx.at(merge(rep_tuple, w)), Rat(-1)},
                                 {symt_idx.at(merge(x_tuple, w)), Rat(1)}};
        if (row[0].first > row[1].first) std::swap(row[0], row[1]);
        red.add_row(std::move(row));
      }
    }
  }
  if (quadrics != rep.k2)
    throw std::logic_error("quadric fiber count disagrees with kernel rank");
  rep.span_rank = red.rank();
  rep.generated = rep.span_rank == rep.kt;
  return rep;
}

}  // namespace fanohyp::wps

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "arith.hpp"
#include "bundles.hpp"
#include "weights.hpp"

using fanohyp::binomial;
using fanohyp::Int;
using namespace fanohyp::bundles;
using fanohyp::weights::Partition;
using fanohyp::weights::Weight;

namespace {

// Weight multiset of the inducing GL(k) x GL(n-k) representation, twist
// folded into the quotient block the same way to_alpha does it.
std::vector<Weight> character(const BundleSymbol& s) {
  const auto& cu = ssyt_contents(s.u(), s.space().k);
  const auto& cq = ssyt_contents(s.q(), s.space().quot_rank());
  std::vector<Weight> out;
  for (const auto& a : cu)
    for (const auto& b : cq) {
      Weight w;
      for (int x : a) w.push_back(x);
      for (int y : b) w.push_back(y - s.twist());
      out.push_back(w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> character(const BundleSum& e) {
  std::vector<Weight> out;
  for (const auto& [s, mult] : e.terms()) {
    auto c = character(s);
    for (long long i = 0; i < mult; ++i)
      out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The normal form may shift a term's weights by a multiple of (1,...,1)
// when it absorbs determinant factors (det U* (x) det Q* is trivial as a
// bundle). Gauge-fix by translating each weight's coordinate sum into
// [0, n): isomorphic-mod-determinant multisets then compare equal.
std::vector<Weight> normalized(std::vector<Weight> ws) {
  for (auto& w : ws) {
    long long n = static_cast<long long>(w.size());
    long long total = 0;
    for (auto x : w) total += x;
    long long r = ((total % n) + n) % n;
    long long shift = (total - r) / n;
    for (auto& x : w) x -= shift;
  }
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::vector<Weight> pairwise_sums(const std::vector<Weight>& a,
                                  const std::vector<Weight>& b) {
  std::vector<Weight> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Weight w(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) w[i] = x[i] + y[i];
      out.push_back(w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Character of the p-th exterior or symmetric power, straight from the
// definition: sums over p-subsets (resp. p-multisets) of the weight list.
std::vector<Weight> power_oracle(const std::vector<Weight>& base, int p,
                                 PowerKind kind) {
  std::vector<Weight> out;
  std::vector<int> idx;
  int r = static_cast<int>(base.size());
  std::size_t len = base.empty() ? 0 : base[0].size();
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == p) {
      Weight sum(len, 0);
      for (int i : idx)
        for (std::size_t j = 0; j < len; ++j) sum[j] += base[i][j];
      out.push_back(sum);
      return;
    }
    for (int i = start; i < r; ++i) {
      idx.push_back(i);
      self(self, kind == PowerKind::Exterior ? i + 1 : i);
      idx.pop_back();
    }
  };
  if (p == 0) {
    out.emplace_back(len, 0);
  } else if (r > 0) {
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("normal form absorbs determinant factors") {
  Grassmannian g(3, 6);
  CHECK(BundleSymbol::make(g, {1, 1, 1}, {}, 0) ==
        BundleSymbol::make(g, {}, {}, 1));
  CHECK(BundleSymbol::make(g, {}, {1, 1, 1}, 0) ==
        BundleSymbol::make(g, {}, {}, -1));

  Grassmannian h(2, 5);
  CHECK(BundleSymbol::make(h, {3, 1}, {2, 2, 2}, 0) ==
        BundleSymbol::make(h, {2}, {}, -1));
  CHECK(BundleSymbol::make(h, {0, -1}, {}, 0) ==
        BundleSymbol::make(h, {1}, {}, -1));

  auto s = BundleSymbol::make(g, {2, 1}, {1}, -3);
  CHECK(s.u() == Partition({2, 1}));
  CHECK(s.q() == Partition({1}));
  CHECK(s.twist() == -3);
}

TEST_CASE("to_alpha and to_string") {
  Grassmannian g(3, 6);
  auto s = BundleSymbol::make(g, {1, 1}, {}, -1);
  CHECK(s.to_alpha() == Weight({1, 1, 0, 1, 1, 1}));
  CHECK(s.to_string() == "K(1,1)U∨ ⊗ O(-1)");
  CHECK(BundleSymbol::make(g, {}, {}, 2).to_string() == "O(2)");
  CHECK(BundleSymbol::make(g, {1}, {2, 2}, 0).to_string() ==
        "U∨ ⊗ K(2,2)Q∨");
  CHECK(BundleSymbol::make(g, {}, {1}, 0).to_string() == "Q∨");
}

TEST_CASE("duals pin down and involute") {
  Grassmannian g(3, 6);
  CHECK(BundleSymbol::make(g, {1, 1}, {}, 0).dual() ==
        BundleSymbol::make(g, {1}, {}, -1));

  Grassmannian h(2, 7);
  CHECK(BundleSymbol::make(h, {}, {1}, 1).dual() ==
        BundleSymbol::make(h, {}, {1, 1, 1, 1}, 0));

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kd(1, 3), extra(1, 4), ent(-3, 4),
      tw(-5, 5);
  for (int it = 0; it < 200; ++it) {
    int k = kd(rng), n = k + extra(rng);
    Grassmannian gg(k, n);
    Weight u(k), q(n - k);
    for (auto& x : u) x = ent(rng);
    for (auto& x : q) x = ent(rng);
    std::sort(u.rbegin(), u.rend());
    std::sort(q.rbegin(), q.rend());
    auto s = BundleSymbol::make(gg, u, q, tw(rng));
    CHECK(s.dual().dual() == s);
    CHECK(s.dual().rank() == s.rank());
    auto c = character(s);
    for (auto& w : c)
      for (auto& x : w) x = -x;
    CHECK(normalized(character(s.dual())) == normalized(c));
  }
}

TEST_CASE("Littlewood-Richardson against the character oracle") {
  std::vector<Partition> shapes = {Partition(Weight{}), Partition({1}),
                                   Partition({2}),    Partition({1, 1}),
                                   Partition({2, 1}), Partition({2, 2}),
                                   Partition({3, 1})};
  auto lhs_terms = [](const std::map<Partition, long long>& dec, int m) {
    std::vector<Weight> out;
    for (const auto& [nu, c] : dec) {
      const auto& cv = ssyt_contents(nu, m);
      for (long long i = 0; i < c; ++i)
        for (const auto& v : cv) out.emplace_back(v.begin(), v.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int m = 2; m <= 4; ++m)
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        std::vector<Weight> ca, cb;
        for (const auto& v : ssyt_contents(a, m)) ca.emplace_back(v.begin(), v.end());
        for (const auto& v : ssyt_contents(b, m)) cb.emplace_back(v.begin(), v.end());
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        CHECK(lhs_terms(lr_tensor(a, b, m), m) == pairwise_sums(ca, cb));
      }

  auto dec = lr_tensor(Partition({1, 1}), Partition({1, 1}), 3);
  std::map<Partition, long long> expect = {{Partition({2, 2}), 1},
                                           {Partition({2, 1, 1}), 1}};
  CHECK(dec == expect);
}

TEST_CASE("tensor products preserve characters and ranks") {
  Grassmannian g(2, 5);
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> ue(0, 3), qe(0, 2), tw(-3, 3);
  for (int it = 0; it < 60; ++it) {
    auto mk = [&]() {
      Weight u = {ue(rng), 0};
      Weight q = {qe(rng), qe(rng), 0};
      std::sort(u.rbegin(), u.rend());
      std::sort(q.rbegin(), q.rend());
      return BundleSymbol::make(g, u, q, tw(rng));
    };
    auto a = mk(), b = mk();
    auto prod = tensor(a, b);
    CHECK(prod.rank() == a.rank() * b.rank());
    CHECK(normalized(character(prod)) ==
          normalized(pairwise_sums(character(a), character(b))));
  }
}

TEST_CASE("exterior and symmetric powers match the subset oracle") {
  Grassmannian g(3, 6);
  Grassmannian h(2, 5);
  std::vector<BundleSymbol> symbols = {
      BundleSymbol::make(g, {1}, {}, 0),  BundleSymbol::make(g, {1, 1}, {}, 0),
      BundleSymbol::make(g, {}, {1}, -1), BundleSymbol::make(h, {1}, {}, 1),
      BundleSymbol::make(h, {}, {1}, 0),  BundleSymbol::make(h, {}, {1, 1}, 0),
  };
  for (const auto& s : symbols)
    for (int p = 0; p <= 3; ++p)
      for (auto kind : {PowerKind::Exterior, PowerKind::Symmetric}) {
        auto pw = power(s, p, kind);
        CHECK(normalized(character(pw)) ==
              normalized(power_oracle(character(s), p, kind)));
      }

  CHECK(power(BundleSymbol::make(g, {1}, {}, 0), 3, PowerKind::Exterior) ==
        BundleSum::of(BundleSymbol::make(g, {}, {}, 1)));
  CHECK(power(BundleSymbol::make(g, {1}, {}, 0), 2, PowerKind::Exterior) ==
        BundleSum::of(BundleSymbol::make(g, {1, 1}, {}, 0)));
  CHECK(power(BundleSymbol::make(g, {}, {}, 2), 5, PowerKind::Symmetric) ==
        BundleSum::of(BundleSymbol::make(g, {}, {}, 10)));
  CHECK(power(BundleSymbol::make(g, {}, {}, 2), 2, PowerKind::Exterior).empty());
}

TEST_CASE("exterior powers of a sum") {
  Grassmannian g(2, 5);
  BundleSum e(g);
  e.add(BundleSymbol::make(g, {1}, {}, 0));
  e.add(BundleSymbol::make(g, {}, {}, 1));
  auto powers = exterior_powers_of_sum(e);
  REQUIRE(powers.size() == 4);

  auto base = character(e);
  Int total = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(normalized(character(powers[i])) ==
          normalized(power_oracle(base, i, PowerKind::Exterior)));
    CHECK(powers[i].rank() == binomial(3, i));
    total += powers[i].rank();
  }
  CHECK(total == 8);
}

TEST_CASE("line bundles on projective space match binomials") {
  for (int n = 1; n <= 6; ++n) {
    Grassmannian g(1, n + 1);
    for (long long d = -12; d <= 12; ++d) {
      auto c = cohomology(BundleSymbol::make(g, {}, {}, d));
      if (d >= 0) {
        REQUIRE_FALSE(c.vanishes);
        CHECK(c.degree == 0);
        CHECK(c.dim == binomial(n + d, n));
      } else if (d >= -n) {
        CHECK(c.vanishes);
      } else {
        REQUIRE_FALSE(c.vanishes);
        CHECK(c.degree == n);
        CHECK(c.dim == binomial(-d - 1, n));
      }
    }
  }
}

TEST_CASE("pinned cohomology values") {
  CHECK(h(BundleSymbol::make(Grassmannian(1, 4), {}, {}, 2), 0) == 10);
  CHECK(h(BundleSymbol::make(Grassmannian(2, 5), {}, {}, 0), 0) == 1);
  CHECK(h(BundleSymbol::make(Grassmannian(3, 6), {}, {}, 1), 0) == 20);

  auto c = cohomology(BundleSymbol::make(Grassmannian(3, 6), {1, 1}, {}, -1));
  CHECK(c.vanishes);

  c = cohomology(BundleSymbol::make(Grassmannian(3, 6), {3, 3}, {}, -4));
  REQUIRE_FALSE(c.vanishes);
  CHECK(c.degree == 3);
  CHECK(c.dim == 1);

  c = cohomology(BundleSymbol::make(Grassmannian(3, 6), {1}, {2, 2}, -5));
  REQUIRE_FALSE(c.vanishes);
  CHECK(c.degree == 8);
  CHECK(c.dim == 15);
}

TEST_CASE("Serre duality and the one-degree dichotomy") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> kd(1, 4), extra(1, 4), ent(-4, 6),
      tw(-8, 8);
  for (int it = 0; it < 2000; ++it) {
    int k = kd(rng), n = k + extra(rng);
    Grassmannian g(k, n);
    Weight u(k), q(n - k);
    for (auto& x : u) x = ent(rng);
    for (auto& x : q) x = ent(rng);
    std::sort(u.rbegin(), u.rend());
    std::sort(q.rbegin(), q.rend());
    auto s = BundleSymbol::make(g, u, q, tw(rng));
    auto c = cohomology(s);
    auto cd = cohomology(s.dual().twisted(-n));
    CHECK(c.vanishes == cd.vanishes);
    if (!c.vanishes) {
      CHECK(c.degree + cd.degree == g.dim());
      CHECK(c.dim == cd.dim);
      CHECK(c.degree >= 0);
      CHECK(c.degree <= g.dim());
      CHECK(c.dim > 0);
      CHECK(h(s, c.degree) == c.dim);
      CHECK(h(s, (c.degree + 1) % (g.dim() + 1)) == 0);
    } else {
      for (int i = 0; i <= g.dim(); ++i) CHECK(h(s, i) == 0);
    }
  }
}

TEST_CASE("Euler characteristic is additive across tautological sequences") {
  for (const auto& g : {Grassmannian(3, 6), Grassmannian(3, 7)}) {
    auto U = BundleSymbol::make(g, {1}, {}, 0).dual();
    auto Q = BundleSymbol::make(g, {}, {1}, 0).dual();
    for (long long t = -6; t <= 6; ++t) {
      auto O_t = BundleSymbol::make(g, {}, {}, t);
      Int chi_t = euler_characteristic(O_t);
      CHECK(euler_characteristic(BundleSum::of(U).twisted(t)) +
                euler_characteristic(BundleSum::of(Q).twisted(t)) ==
            Int(g.n) * chi_t);

      // second wedge of the trivial rank-n bundle, filtered by the sequence
      Int lhs = euler_characteristic(power(U, 2, PowerKind::Exterior).twisted(t)) +
                euler_characteristic(tensor(U, Q).twisted(t)) +
                euler_characteristic(power(Q, 2, PowerKind::Exterior).twisted(t));
      CHECK(lhs == binomial(g.n, 2) * chi_t);

      auto Ud = BundleSymbol::make(g, {1}, {}, 0);
      Int lhs2 = euler_characteristic(tensor(BundleSum::of(Ud), BundleSum::of(U)).twisted(t)) +
                 euler_characteristic(tensor(BundleSum::of(Ud), BundleSum::of(Q)).twisted(t));
      CHECK(lhs2 == Int(g.n) * euler_characteristic(BundleSum::of(Ud).twisted(t)));
    }
  }
}

TEST_CASE("bundle sums keep canonical order") {
  Grassmannian g(2, 5);
  BundleSum a(g), b(g);
  auto s1 = BundleSymbol::make(g, {1}, {}, 0);
  auto s2 = BundleSymbol::make(g, {}, {1}, 2);
  a.add(s1);
  a.add(s2, 2);
  b.add(s2);
  b.add(s1);
  b.add(s2);
  CHECK(a == b);
  CHECK(a.rank() == s1.rank() + 2 * s2.rank());
  CHECK(a.rank_ll() == 8);
  CHECK(a.dual().dual() == a);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bundles.hpp"
#include "koszul.hpp"
#include "weights.hpp"

using fanohyp::Int;
using namespace fanohyp::bundles;
using namespace fanohyp::koszul;
using fanohyp::weights::Partition;
using fanohyp::weights::Weight;

TEST_CASE("twist scans pin the known hits") {
  {
    auto rep = scan(Grassmannian(3, 6), Partition({1}), Partition({2, 2}),
                    {8, 0, 12});
    REQUIRE(rep.hits.size() == 1);
    CHECK(rep.hits[0] == ScanHit{8, 5, 15});
  }
  {
    auto rep = scan(Grassmannian(2, 7), Partition({2}),
                    Partition({1, 1, 1, 1}), {9, 0, 12});
    REQUIRE(rep.hits.size() == 1);
    CHECK(rep.hits[0] == ScanHit{9, 7, 7});
  }
  {
    auto rep = scan(Grassmannian(3, 6), Partition({1}), Partition({1}),
                    {6, 1, 12});
    CHECK(rep.hits.empty());
  }
}

TEST_CASE("scan agrees with the direct computation and stays sorted") {
  Grassmannian g(2, 6);
  std::vector<std::pair<Partition, Partition>> pairs = {
      {Partition({1}), Partition({1, 1})},
      {Partition({2}), Partition({2, 1})},
      {Partition(Weight{}), Partition({1})},
  };
  for (const auto& [u, q] : pairs) {
    ScanRegion region{g.dim(), -4, 14};
    auto rep = scan(g, u, q, region);
    long long last = region.n_min - 1;
    std::size_t found = 0;
    for (long long N = region.n_min; N <= region.n_max; ++N) {
      auto c = cohomology(BundleSymbol::make(g, u.parts(), q.parts(), -N));
      if (!c.vanishes && c.degree <= region.i_max) {
        REQUIRE(found < rep.hits.size());
        const auto& hit = rep.hits[found++];
        CHECK(hit.N == N);
        CHECK(hit.i == c.degree);
        CHECK(hit.dim == c.dim);
        CHECK(hit.N > last);
        last = hit.N;
      }
    }
    CHECK(found == rep.hits.size());
  }
}

TEST_CASE("closed form boundary cases") {
  Grassmannian g(2, 5);  // k=2, quotient rank 3

  SUBCASE("sub side, saturated one-row weight") {
    auto cf = closed_form(g, Partition({3}), 4, Side::Sub);
    CHECK(cf.nonzero);
    CHECK(cf.degree == 3);
    CHECK(cf.dim_one);
    for (long long d : {1, 2, 3, 5, 6, 7})
      CHECK_FALSE(closed_form(g, Partition({3}), d, Side::Sub).nonzero);
    cf = closed_form(g, Partition({3}), 8, Side::Sub);
    CHECK(cf.nonzero);
    CHECK(cf.degree == g.dim());
    CHECK_FALSE(cf.dim_one);
  }

  SUBCASE("sub side, empty weight is the canonical module") {
    auto cf = closed_form(g, Partition(Weight{}), 5, Side::Sub);
    CHECK(cf.nonzero);
    CHECK(cf.degree == g.dim());
    CHECK(cf.dim_one);
    for (long long d = 1; d <= 4; ++d)
      CHECK_FALSE(closed_form(g, Partition(Weight{}), d, Side::Sub).nonzero);
  }

  SUBCASE("quot side") {
    auto cf = closed_form(g, Partition({2, 2}), 2, Side::Quot);
    CHECK(cf.nonzero);
    CHECK(cf.degree == 4);
    CHECK(cf.dim_one);
    for (long long d : {0, 1, 3, 4})
      CHECK_FALSE(closed_form(g, Partition({2, 2}), d, Side::Quot).nonzero);
    cf = closed_form(g, Partition({2, 2}), 5, Side::Quot);
    CHECK(cf.nonzero);
    CHECK(cf.degree == g.dim());

    cf = closed_form(g, Partition(Weight{}), 0, Side::Quot);
    CHECK(cf.nonzero);
    CHECK(cf.degree == 0);
    CHECK(cf.dim_one);
  }

  SUBCASE("inputs outside the statement throw") {
    CHECK_THROWS_AS(closed_form(g, Partition({1}), 0, Side::Sub),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form(g, Partition({4}), 1, Side::Sub),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form(g, Partition({1, 1}), 1, Side::Sub),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form(g, Partition({1, 1, 1}), 1, Side::Quot),
                    std::invalid_argument);
  }
}

TEST_CASE("closed form matches the direct computation everywhere") {
  for (const auto& g : {Grassmannian(2, 5), Grassmannian(3, 6),
                        Grassmannian(2, 7), Grassmannian(3, 7),
                        Grassmannian(4, 8), Grassmannian(1, 5)}) {
    CAPTURE(g.k);
    CAPTURE(g.n);
    CHECK(closed_form_mismatches(g, g.n + g.quot_rank() + 2) == 0);
  }
}

TEST_CASE("restriction criterion") {
  SUBCASE("hyperplane section of a Grassmannian") {
    Grassmannian g(2, 5);
    auto f = BundleSum::of(BundleSymbol::make(g, {}, {}, 1));
    CHECK(restriction_surjective(f, BundleSymbol::make(g, {}, {}, 0)));
  }

  SUBCASE("two points on a line obstruct") {
    Grassmannian p1(1, 2);
    auto f = BundleSum::of(BundleSymbol::make(p1, {}, {}, 2));
    auto ob = restriction_obstruction(f, BundleSymbol::make(p1, {}, {}, 0));
    REQUIRE(ob.has_value());
    CHECK(ob->koszul_index == 1);
    CHECK(ob->degree == 1);
    CHECK(ob->dim == 1);
    CHECK(ob->summand == BundleSymbol::make(p1, {}, {}, -2));
  }

  SUBCASE("a point on the plane does not") {
    Grassmannian p2(1, 3);
    BundleSum f(p2);
    f.add(BundleSymbol::make(p2, {}, {}, 1), 2);
    CHECK(restriction_surjective(f, BundleSymbol::make(p2, {}, {}, 0)));
  }

  SUBCASE("structural bundles of the table families restrict onto O(a)") {
    for (const auto& id : fano_table_ids()) {
      const auto& data = curve_check_data(id);
      for (long long a = 1; a <= 4; ++a) {
        BundleSum e = data.structural;
        e.add(BundleSymbol::make(data.space, {}, {}, a));
        for (long long d = 0; d <= 5; ++d) {
          CAPTURE(id);
          CAPTURE(a);
          CAPTURE(d);
          CHECK(restriction_surjective(
              e, BundleSymbol::make(data.space, {}, {}, d)));
        }
      }
    }
  }
}

TEST_CASE("family tables verify against the sweep") {
  CHECK(fano_table_ids() ==
        std::vector<std::string>{"1-8", "1-9", "1-10"});

  const auto& t8 = fano_scan_tables("1-8");
  CHECK(t8.space == Grassmannian(3, 6));
  CHECK(t8.vanishing.size() == 6);
  CHECK(t8.exceptions.size() == 4);

  const auto& t9 = fano_scan_tables("1-9");
  CHECK(t9.space == Grassmannian(2, 7));
  CHECK(t9.vanishing.size() == 5);
  CHECK(t9.exceptions.size() == 4);

  const auto& t10 = fano_scan_tables("1-10");
  CHECK(t10.space == Grassmannian(3, 7));
  CHECK(t10.vanishing.size() == 20);
  CHECK(t10.exceptions.size() == 18);

  for (const auto& id : fano_table_ids()) {
    const auto& t = fano_scan_tables(id);
    CHECK(verify_vanishing_rows(t, 12).empty());
    auto rows = compute_exception_rows(t);
    REQUIRE(rows.size() == t.exceptions.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      CAPTURE(id);
      CAPTURE(r);
      REQUIRE(rows[r].size() == t.exceptions[r].expected.size());
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        CHECK(rows[r][j].i == t.exceptions[r].expected[j].first);
        CHECK(rows[r][j].N == t.exceptions[r].expected[j].second);
      }
    }
  }
}

TEST_CASE("exception hit dimensions, checked by hand") {
  auto dim_at = [](const Grassmannian& g, const Weight& u, const Weight& q,
                   long long N, int expect_deg) {
    auto c = cohomology(BundleSymbol::make(g, u, q, -N));
    REQUIRE_FALSE(c.vanishes);
    CHECK(c.degree == expect_deg);
    return c.dim;
  };
  Grassmannian g8(3, 6), g9(2, 7), g10(3, 7);
  CHECK(dim_at(g8, {1}, {2, 2}, 5, 8) == 15);
  CHECK(dim_at(g8, {1, 1}, {1}, 1, 1) == 1);
  CHECK(dim_at(g8, {1, 1}, {2, 2}, 4, 7) == 1);
  CHECK(dim_at(g9, {2}, {1, 1, 1, 1}, 7, 9) == 7);
  CHECK(dim_at(g9, {2}, {1, 1, 1}, 6, 8) == 1);
  CHECK(dim_at(g9, {2}, {1, 1}, 2, 2) == 1);
  CHECK(dim_at(g9, {2}, {1}, 1, 1) == 7);
  CHECK(dim_at(g10, {3}, {2, 2, 2}, 3, 6) == 1);
}

TEST_CASE("curve checks come back clean") {
  for (const auto& id : fano_table_ids())
    for (long long d = 1; d <= 2; ++d) {
      CAPTURE(id);
      CAPTURE(d);
      CHECK_FALSE(run_curve_check(id, 2, d).has_value());
    }
}

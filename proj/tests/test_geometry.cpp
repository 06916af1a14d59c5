#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tce/cohomology.hpp"
#include "tce/geometry.hpp"
#include "tce/membership.hpp"
#include "test_util.hpp"

using namespace tce;
using testutil::fermat_ring;
using testutil::poly_ring_xy;

namespace {

// second route for the Chern coefficients: direct series expansion of
// prod (1 - e_i t) * sum_j (m t)^j
std::vector<std::int64_t> chern_series_oracle(const std::vector<int>& e_list, int m) {
  std::size_t rank = e_list.empty() ? 0 : e_list.size() - 1;
  std::vector<std::int64_t> num(e_list.size() + 1, 0);
  num[0] = 1;
  for (int e : e_list)
    for (std::size_t i = num.size() - 1; i >= 1; --i)
      num[i] -= static_cast<std::int64_t>(e) * num[i - 1];
  std::vector<std::int64_t> out(rank + 1, 0);
  for (std::size_t k = 0; k <= rank; ++k) {
    std::int64_t acc = 0, mpow = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      std::size_t idx = k - j;
      if (idx < num.size()) acc += num[idx] * mpow;
      mpow *= m;
    }
    out[k] = acc;
  }
  return out;
}

bool chern_identity_holds(const std::vector<int>& e_list, int m) {
  std::vector<std::int64_t> c = chern_polynomial(e_list, m);
  std::vector<std::int64_t> num(e_list.size() + 1, 0);
  num[0] = 1;
  for (int e : e_list)
    for (std::size_t i = num.size() - 1; i >= 1; --i)
      num[i] -= static_cast<std::int64_t>(e) * num[i - 1];
  // (c(t) * (1 - m t))_k == num_k for k up to the rank
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::int64_t lhs = c[k] - (k >= 1 ? static_cast<std::int64_t>(m) * c[k - 1] : 0);
    std::int64_t rhs = k < num.size() ? num[k] : 0;
    if (lhs != rhs) return false;
  }
  return true;
}

} // namespace

TEST_CASE("leadno") {
  CHECK(leadno({2, 2, 2}, 3) == 0);
  CHECK(leadno({1, 1}, 3) == -1);
  CHECK(leadno({3, 5}, 8) == 0);
  CHECK_THROWS(leadno(std::vector<int>{2}, 1));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> d;
    int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) d.push_back(1 + static_cast<int>(rng() % 6));
    int d0 = 1 + static_cast<int>(rng() % 6);
    std::int64_t base = leadno(d, d0);
    std::sort(d.rbegin(), d.rend()); // permutation invariance
    CHECK(leadno(d, d0) == base);
  }
}

TEST_CASE("Chern coefficients") {
  SUBCASE("c1 = -sum e_i + m, always") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> e;
      int n = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng() % 11) - 5);
      int m = static_cast<int>(rng() % 11) - 5;
      auto c = chern_polynomial(e, m);
      REQUIRE(c.size() == static_cast<std::size_t>(n));
      CHECK(c[0] == 1);
      std::int64_t sum_e = 0;
      for (int x : e) sum_e += x;
      CHECK(c[1] == -sum_e + m);
    }
  }

  SUBCASE("rank-zero kernel collapses to 1") {
    auto c = chern_polynomial({4}, 4);
    CHECK(c == std::vector<std::int64_t>{1});
  }

  SUBCASE("division agrees with the direct series expansion") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> e;
      int n = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng() % 13) - 6);
      int m = static_cast<int>(rng() % 13) - 6;
      CHECK(chern_polynomial(e, m) == chern_series_oracle(e, m));
    }
  }

  SUBCASE("defining identity after re-multiplication, exact integers") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> e;
      int n = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng() % 15) - 7);
      int m = static_cast<int>(rng() % 15) - 7;
      CHECK(chern_identity_holds(e, m));
    }
  }
}

TEST_CASE("top self-intersection of the forcing divisor") {
  auto quartic = fermat_ring(5, 4);
  ForcingData neg(quartic, {quartic->parse("x"), quartic->parse("y")}, quartic->parse("z^3"));
  CHECK(self_intersection_top(neg, 4) == -4);

  auto p1 = poly_ring_xy(5);
  ForcingData zariski(p1, {p1->parse("x^4"), p1->parse("y^4"), p1->parse("x^4")},
                      p1->parse("x^3*y^3"));
  CHECK(self_intersection_top(zariski, 1) == 0);

  auto cubic = fermat_ring(7, 3);
  ForcingData steintwo(cubic, {cubic->parse("x"), cubic->parse("y")}, cubic->parse("z^2"));
  CHECK(self_intersection_top(steintwo, 3) == 0);

  // leadno never reads the twist
  ForcingData twisted(cubic, {cubic->parse("x"), cubic->parse("y")}, cubic->parse("z^2"), 7);
  CHECK(leadno(twisted) == leadno(steintwo));
}

TEST_CASE("nu and e bounds") {
  SUBCASE("parameter data with l <= 0 is exact") {
    auto cubic = fermat_ring(7, 3);
    ForcingData steintwo(cubic, {cubic->parse("x"), cubic->parse("y")}, cubic->parse("z^2"));
    EBounds b = e_bounds(steintwo, 3, false);
    CHECK(b.nu_exact);
    CHECK(b.nu_lo == 0);
    CHECK(b.e_exact);
    CHECK(*b.e_lo == 0);

    auto quartic = fermat_ring(5, 4);
    ForcingData neg(quartic, {quartic->parse("x"), quartic->parse("y")}, quartic->parse("z^3"));
    EBounds b2 = e_bounds(neg, 4, false);
    CHECK(b2.e_exact);
    CHECK(*b2.e_lo == 4); // e = -l degH = 4
  }

  SUBCASE("split parameter data pins nu = l degH") {
    auto cubic = fermat_ring(7, 3);
    ForcingData split(cubic, {cubic->parse("x"), cubic->parse("y^2")}, cubic->parse("x*y"));
    REQUIRE(in_ideal(split).has_value());
    EBounds b = e_bounds(split, 3, true);
    CHECK(b.nu_exact);
    CHECK(b.nu_lo == 3);
    CHECK(*b.e_lo == 3);
    // Lemma-style identity on the exact pair: e = 2 nu - l degH
    CHECK(*b.e_lo == 2 * b.nu_lo - leadno(split) * 3);
  }

  SUBCASE("strict upper bounds when f0 is outside the ideal") {
    auto cubic = fermat_ring(7, 3);
    ForcingData data(cubic, {cubic->parse("x^2"), cubic->parse("y^2")}, cubic->parse("x*y*z"));
    REQUIRE_FALSE(in_ideal(data).has_value());
    REQUIRE(leadno(data) == 1);
    EBounds b = e_bounds(data, 3, false);
    REQUIRE(b.nu_hi.has_value());
    CHECK(b.nu_lo == 0);
    CHECK(*b.nu_hi == 2); // l degH - 1
    CHECK_FALSE(b.nu_exact);
  }

  SUBCASE("balanced certified relation pins e = 0") {
    for (auto [p, m, d1, d2, d3] : std::vector<std::array<int, 5>>{
             {7, 3, 2, 2, 2}, {5, 4, 3, 3, 2}, {5, 4, 2, 3, 3}}) {
      auto ring = fermat_ring(p, m);
      std::vector<Poly> gens{ring->parse("x^" + std::to_string(d1)),
                             ring->parse("y^" + std::to_string(d2)),
                             ring->parse("z^" + std::to_string(d3))};
      ForcingData data(ring, gens,
                       ring->reduce(ring->parse("x*y") * ring->parse("z^" + std::to_string(m - 2))));
      auto search = find_primary_relation(*ring, gens, m, 500, 7);
      REQUIRE(search.outcome == RelationSearchOutcome::Found);
      EBounds b = e_bounds(data, m, false, &*search.certificate);
      CHECK(b.e_exact);
      CHECK(*b.e_lo == 0);
      CHECK(*b.e_hi == 0);
      // l = 0 here, so nu is pinned to l degH / 2 = 0
      CHECK(b.nu_exact);
      CHECK(b.nu_lo == 0);
    }
  }

  SUBCASE("certificates are verified, not trusted") {
    auto ring = fermat_ring(7, 3);
    std::vector<Poly> gens{ring->parse("x^2"), ring->parse("y^2"), ring->parse("z^2")};
    ForcingData data(ring, gens, ring->parse("x*y*z"));
    auto search = find_primary_relation(*ring, gens, 3, 100, 1);
    REQUIRE(search.outcome == RelationSearchOutcome::Found);
    PrimaryRelationCertificate tampered = *search.certificate;
    tampered.relation.components[0] = ring->parse("y"); // no longer a relation
    CHECK_THROWS(e_bounds(data, 3, false, &tampered));

    ForcingData pair(ring, {ring->parse("x"), ring->parse("y")}, ring->parse("z^2"));
    CHECK_THROWS(e_bounds(pair, 3, false, &*search.certificate));
  }

  SUBCASE("intervals contain the exact cohomology values") {
    auto cubic = fermat_ring(7, 3);
    std::vector<ForcingData> cases;
    cases.emplace_back(cubic, std::vector<Poly>{cubic->parse("x"), cubic->parse("y")},
                       cubic->parse("z^2"));
    cases.emplace_back(cubic, std::vector<Poly>{cubic->parse("x"), cubic->parse("y^2")},
                       cubic->parse("x*y"));
    cases.emplace_back(cubic,
                       std::vector<Poly>{cubic->parse("x^2"), cubic->parse("y^2"),
                                         cubic->parse("z^2")},
                       cubic->parse("x*y*z"));
    for (const ForcingData& data : cases) {
      bool in_i = in_ideal(data).has_value();
      EBounds b = e_bounds(data, 3, in_i);
      NormalizingNumber nn = normalizing_number_h(data);
      CHECK(b.nu_lo <= nn.nu_low);
      if (b.nu_hi && nn.nu_high) CHECK(*nn.nu_high <= *b.nu_hi);
      if (b.e_exact && nn.e_exact) CHECK(*b.e_lo == *nn.e_exact);
    }
  }
}

TEST_CASE("intersection report assembles the invariants") {
  auto quartic = fermat_ring(5, 4);
  ForcingData data(quartic, {quartic->parse("x"), quartic->parse("y")}, quartic->parse("z^3"));
  IntersectionReport rep = intersection_report(data, 4, false);
  CHECK(rep.m == 3);
  CHECK(rep.e_list == std::vector<int>{2, 2});
  CHECK(rep.e0 == 0);
  CHECK(rep.l == -1);
  CHECK(rep.z_top == -4);
  CHECK(rep.chern == std::vector<std::int64_t>{1, -1}); // c1 = -(2+2) + 3
  CHECK(default_degH(*quartic) == 4);
  CHECK(default_degH(*poly_ring_xy(5)) == 1);
}

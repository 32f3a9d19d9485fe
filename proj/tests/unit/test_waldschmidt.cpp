#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "planeval/waldschmidt.hpp"

using namespace planeval;

TEST_CASE("fibonacci seeds", "[waldschmidt]") {
  CHECK(fibonacci(-1) == 1);
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(3) == 2);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(11) == 89);
}

TEST_CASE("first fibonacci rows", "[waldschmidt]") {
  MuTable t = build_mu_table(9);
  auto v1 = mu_eval(t, QuadNum(Rat(3, 2)));
  REQUIRE(v1.has_value());
  CHECK(v1->value == QuadNum(Rat(3, 2)));  // value t on [1, 2]
  auto v2 = mu_eval(t, QuadNum(3));
  REQUIRE(v2.has_value());
  CHECK(v2->value == QuadNum(2));  // constant 2 on [2, 4]
}

TEST_CASE("table values from the known rows", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  CHECK(mu_eval(t, QuadNum(1))->value == QuadNum(1));
  CHECK(mu_eval(t, QuadNum(4))->value == QuadNum(2));
  CHECK(mu_eval(t, QuadNum(9))->value == QuadNum(3));
  CHECK(mu_eval(t, QuadNum(5))->value == QuadNum(Rat(5, 2)));
  CHECK(mu_eval(t, QuadNum(7))->value == QuadNum(Rat(8, 3)));
  CHECK(mu_eval(t, QuadNum(Rat(13, 2)))->value == QuadNum(Rat(13, 5)));
  CHECK_FALSE(mu_eval(t, QuadNum(Rat(17, 2))).has_value());  // gap before t = 9
  CHECK(mu_eval(t, QuadNum(400))->value == QuadNum(20));
  CHECK_THROWS_AS(mu_eval(t, QuadNum(Rat(1, 2))), Error);
}

TEST_CASE("special pair near 7 + 1/8", "[waldschmidt]") {
  MuTable t = build_mu_table(9);
  // the two pieces meet at 57/8 with the common value 1025/384
  auto v = mu_eval(t, QuadNum(Rat(57, 8)));
  REQUIRE(v.has_value());
  CHECK(v->value == QuadNum(Rat(1025, 384)));
  CHECK(QuadNum(Rat(17, 48)) * QuadNum(Rat(57, 8)) + QuadNum(Rat(7, 48)) ==
        QuadNum(Rat(1, 48)) * QuadNum(Rat(57, 8)) + QuadNum(Rat(121, 48)));
}

TEST_CASE("continuity at every shared endpoint", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  int shared = 0;
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = i + 1; j < t.rows.size(); ++j) {
      if (qn_cross_cmp(t.rows[i].hi, t.rows[j].lo) == 0) {
        ++shared;
        QuadNum a = t.rows[i].value_at(t.rows[i].hi);
        QuadNum b = t.rows[j].value_at(t.rows[j].lo);
        CHECK(qn_cross_cmp(a, b) == 0);
      }
    }
  CHECK(shared >= 20);  // every adjacent pair inside each family
}

TEST_CASE("golden ratio closure", "[waldschmidt]") {
  // (1 + phi^4)/3 = phi^2 exactly in Q(sqrt 5)
  QuadNum phi4(Rat(7, 2), Rat(3, 2), 5);
  QuadNum phi2(Rat(3, 2), Rat(1, 2), 5);
  CHECK((QuadNum(1) + phi4) * QuadNum(Rat(1, 3)) == phi2);
  CHECK(phi2 * phi2 == phi4);
  // Fibonacci constant values increase toward phi^2
  MuTable t = build_mu_table(21);
  Rat prev = 0;
  for (const auto& row : t.rows) {
    if (row.tag != MuRowTag::Fibonacci || row.slope != 0) continue;
    CHECK(row.intercept > prev);
    CHECK(QuadNum(row.intercept) < phi2);
    prev = row.intercept;
  }
}

TEST_CASE("sqrt contact at every flagged endpoint", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  std::set<long long> radicands;
  int flagged = 0;
  for (const auto& row : t.rows) {
    if (row.contact_lo) {
      ++flagged;
      QuadNum v = row.value_at(row.lo);
      CHECK(v * v == row.lo);
      if (!row.lo.is_rational()) radicands.insert(row.lo.k().convert_to<long long>());
    }
    if (row.contact_hi) {
      ++flagged;
      QuadNum v = row.value_at(row.hi);
      CHECK(v * v == row.hi);
      if (!row.hi.is_rational()) radicands.insert(row.hi.k().convert_to<long long>());
    }
  }
  CHECK(flagged > 30);
  CHECK(radicands == std::set<long long>{2, 5, 7, 22, 29, 87, 177, 179, 218, 455, 457, 877});
}

TEST_CASE("row interiors never overlap", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = i + 1; j < t.rows.size(); ++j) {
      bool overlap = qn_cross_cmp(t.rows[i].lo, t.rows[j].hi) < 0 &&
                     qn_cross_cmp(t.rows[j].lo, t.rows[i].hi) < 0;
      if (overlap)
        FAIL("rows " << t.rows[i].label << " and " << t.rows[j].label << " overlap");
    }
}

TEST_CASE("submaximal endpoints are maximal parameters", "[waldschmidt]") {
  MuTable table = build_mu_table(13);
  for (int i : {1, 3, 5, 7, 9}) {
    CurveDatum d = orevkov_datum(i);
    SubmaxInterval iv = submaximal_interval_from_pieces(legendre(d.polygon), d.degree);
    REQUIRE_FALSE(iv.empty);
    CHECK(*maximality_residual(table, iv.lo) == QuadNum(0));
    CHECK(*maximality_residual(table, iv.hi) == QuadNum(0));
  }
}

TEST_CASE("slopes lie in [0, 1] and the table is monotone", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  for (const auto& row : t.rows) {
    CHECK(row.slope >= 0);
    CHECK(row.slope <= 1);
  }
  // non-decreasing along the sorted rows
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    QuadNum left = t.rows[i].value_at(t.rows[i].hi);
    QuadNum right = t.rows[i + 1].value_at(t.rows[i + 1].lo);
    CHECK(qn_cross_cmp(left, right) <= 0);
  }
}

TEST_CASE("the table dominates sqrt(t)", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  std::mt19937_64 rng(67);
  int known = 0;
  for (int rep = 0; rep < 5000; ++rep) {
    Rat x(1 + static_cast<long long>(rng() % 3200), 1 + rng() % 400);
    if (x < 1 || x > 9) continue;
    auto v = mu_eval(t, QuadNum(x));
    if (!v) continue;
    ++known;
    CHECK(v->value * v->value >= QuadNum(x));
  }
  CHECK(known > 300);
}

TEST_CASE("maximality residual", "[waldschmidt]") {
  MuTable t = build_mu_table(9);
  CHECK(*maximality_residual(t, QuadNum(4)) == QuadNum(0));
  CHECK(*maximality_residual(t, QuadNum(5)) == QuadNum(Rat(5, 4)));  // 25/4 - 5
  CHECK(*maximality_residual(t, QuadNum(Rat(64, 9))) == QuadNum(0));
  CHECK_FALSE(maximality_residual(t, QuadNum(Rat(17, 2))).has_value());
}

TEST_CASE("orevkov data reproduce the fibonacci rows", "[waldschmidt]") {
  MuTable table = build_mu_table(13);
  for (int i : {1, 3, 5, 7, 9}) {
    CurveDatum d = orevkov_datum(i);
    CHECK(Rat(d.degree) == fibonacci(i));
    REQUIRE(d.polygon.vertices.size() == 2);
    CHECK(Rat(d.polygon.vertices[0].second) == fibonacci(i - 2));
    CHECK(Rat(d.polygon.vertices[1].first) == fibonacci(i + 2));
    Rat fm = fibonacci(i - 2), f = fibonacci(i), fp = fibonacci(i + 2);
    QuadNum lo(f * f / (fm * fm)), hi(fp * fp / (f * f));
    // bound equals the table on [F_i^2/F_{i-2}^2, F_{i+2}^2/F_i^2] ...
    std::mt19937_64 rng(71 + i);
    for (int probe = 0; probe < 60; ++probe) {
      Rat t(1 + static_cast<long long>(rng() % 800), 1 + rng() % 100);
      if (t < 1 || t > 9) continue;
      auto mv = mu_eval(table, QuadNum(t));
      if (!mv) continue;
      QuadNum bound = mu_lower_bound_from_polygon(d.polygon, d.degree, QuadNum(t));
      int cmp = qn_cmp(mv->value, bound);
      CHECK(cmp >= 0);  // ... and is a lower bound everywhere
      bool inside = QuadNum(t) >= lo && QuadNum(t) <= hi;
      if (inside)
        CHECK(cmp == 0);
      else
        CHECK(cmp > 0);
    }
    // submaximal interval is exactly the open fibonacci window
    SubmaxInterval iv = submaximal_interval_from_pieces(legendre(d.polygon), d.degree);
    REQUIRE_FALSE(iv.empty);
    CHECK(iv.lo == lo);
    CHECK(iv.hi == hi);
  }
}

TEST_CASE("curve bounds are only lower bounds", "[waldschmidt]") {
  MuTable t = build_mu_table(9);
  PlaneSeries xi = PlaneSeries::seeded(3);
  Poly2<Rat> x;
  x.add_term(1, 0, Rat(1));
  QuadNum bound = mu_lower_bound_from_curve(xi, x, QuadNum(4));
  CHECK(bound == QuadNum(1));
  CHECK(mu_eval(t, QuadNum(4))->value == QuadNum(2));  // strictly better
}

TEST_CASE("hr09 bounds", "[waldschmidt]") {
  auto [lo, up2] = hr09_bound(100);
  CHECK(lo == QuadNum(10));
  CHECK(up2 == QuadNum(Rat(250000, 2499)));
  for (long long n : {26, 27, 30, 64, 1000}) {
    auto [l, u2] = hr09_bound(n);
    CHECK(l * l == QuadNum(Rat(n)));
    CHECK(u2 > QuadNum(Rat(n)));  // strictly positive correction
  }
  // below n = 26 the stated denominator is nonpositive and the bound vacuous
  CHECK_THROWS_MATCHES(hr09_bound(10), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == Errc::InvalidParameter;
                       }));
  CHECK_THROWS_AS(hr09_bound(25), Error);
  CHECK_THROWS_AS(hr09_bound(9), Error);
}

TEST_CASE("alpha mu duality", "[waldschmidt]") {
  CHECK(alpha_mu_duality(QuadNum(2)) == QuadNum(Rat(1, 2)));
  CHECK(alpha_mu_duality(QuadNum(Rat(8, 3))) == QuadNum(Rat(3, 8)));
  CHECK(alpha_mu_duality(QuadNum(1)) == QuadNum(1));
  CHECK(alpha_mu_duality(*qn_sqrt(QuadNum(10))) == QuadNum(Rat(0), Rat(1, 10), 10));  // 1/sqrt(10)
  CHECK_THROWS_MATCHES(alpha_mu_duality(QuadNum(0)), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == Errc::DivisionByZero;
                       }));
}

TEST_CASE("sqrt lower bound representability on table endpoints", "[waldschmidt]") {
  MuTable t = build_mu_table(21);
  for (const auto& row : t.rows) {
    if (row.contact_lo) {
      auto r = sqrt_lower_bound(row.lo);
      REQUIRE(r.has_value());
      CHECK(*r == row.value_at(row.lo));
    }
    if (row.contact_hi) {
      auto r = sqrt_lower_bound(row.hi);
      REQUIRE(r.has_value());
      CHECK(*r == row.value_at(row.hi));
    }
  }
}

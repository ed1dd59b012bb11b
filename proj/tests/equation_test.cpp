#include <doctest.h>

#include <random>

#include "nagell/equation.hpp"
#include "nagell/solver.hpp"

using nagell::Integer;
using nagell::IntPoly;

TEST_CASE("IntPoly normalizes and evaluates") {
  const IntPoly p{-23, 8, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p.coeffs().size() == 2);
  CHECK(nagell::eval_poly(p, 4) == 9);  // 2^4 + 9 = 5^2
  CHECK(IntPoly{}.is_zero());
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(nagell::eval_poly(IntPoly{}, 12345) == 0);

  const IntPoly odd{2, 8, 12, 8};  // (2t+1)^3 + (2t+1)
  CHECK(odd(1) == 30);
  CHECK(nagell::pow_nat(3, 3) + odd(1) == 57);
}

TEST_CASE("IntPoly text format") {
  CHECK(IntPoly::parse("-23,8") == IntPoly{-23, 8});
  CHECK(IntPoly::parse(" -23 , 8 ") == IntPoly{-23, 8});
  CHECK(IntPoly::parse("\xE2\x88\x92" "23,8") == IntPoly{-23, 8});
  CHECK(IntPoly::parse("0") == IntPoly{});
  CHECK(IntPoly::parse("17").to_string() == "17");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK_THROWS_AS(IntPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("1;2"), std::invalid_argument);

  CHECK(IntPoly{-23, 8}.display("N") == "8N - 23");
  CHECK(IntPoly{0, 1, 0, 1}.display("N") == "N^3 + N");
  CHECK(IntPoly{0, -1, 0, -1}.display("N") == "-N^3 - N");
}

TEST_CASE("IntPoly text round trip on random polynomials") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<Integer> c(1 + rng() % 8);
    for (auto& v : c) v = Integer(static_cast<long>(rng() % 2001) - 1000) * Integer(static_cast<long>(rng() % 1000000));
    const IntPoly p(c);
    REQUIRE(IntPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("compose_linear, derivative and envelope") {
  const IntPoly g{-23, 8};
  CHECK(g.compose_linear(2, 1) == IntPoly{-15, 16});
  CHECK(g.compose_linear(2, 0) == IntPoly{-23, 16});
  CHECK(IntPoly{0, 1, 0, 1}.compose_linear(2, 1) == IntPoly{2, 8, 12, 8});
  CHECK(IntPoly{5, 3, 2}.derivative() == IntPoly{3, 4});
  CHECK(IntPoly{-15, 16}.abs_envelope() == IntPoly{15, 16});
}

TEST_CASE("triangular transform matches the small triangular numbers") {
  {
    auto [spec, map] = nagell::triangular_transform(+1);
    CHECK(spec.base() == 2);
    CHECK(spec.n_min() == 4);
    CHECK(spec.perturbation() == IntPoly{-23, 8});
    // 2^1 + 1 = 3 = T(2)
    auto [x, n] = map.forward(1, 2);
    CHECK(x == 5);
    CHECK(n == 4);
    CHECK(spec.rhs(4) == 25);
    // 2^2 + 2 = 6 = T(3)
    auto [x2, n2] = map.forward(2, 3);
    CHECK(x2 == 7);
    CHECK(n2 == 5);
    CHECK(spec.rhs(5) == 49);
  }
  {
    // 2^1 - 1 = 1 = T(1)
    auto [spec, map] = nagell::triangular_transform(-1);
    auto [x, n] = map.forward(1, 1);
    CHECK(x == 3);
    CHECK(n == 4);
    CHECK(spec.rhs(4) == 9);
    CHECK(map.backward(3, 4) == nagell::TriangularPoint{1, 1});
  }
  CHECK(nagell::triangular_transform(-1, 0).first.n_min() == 3);
  CHECK_THROWS_AS(nagell::triangular_transform(0), std::invalid_argument);
  CHECK_THROWS_AS(nagell::TriangularMap{1}.backward(4, 5), std::invalid_argument);
}

TEST_CASE("triangular map is a bijection") {
  std::mt19937_64 rng(17);
  for (int sign : {1, -1}) {
    const auto [spec, map] = nagell::triangular_transform(sign);
    for (int i = 0; i < 1000; ++i) {
      const long n = static_cast<long>(rng() % 5000);
      const Integer m(static_cast<unsigned long>(rng() % 1000000000));
      const auto [x, exponent] = map.forward(n, m);
      REQUIRE(map.backward(x, exponent) == nagell::TriangularPoint{n, m});
      REQUIRE(x * x == 8 * (m * (m + 1) / 2) + 1);
    }
  }
}

TEST_CASE("parity split") {
  SUBCASE("triangular plus") {
    const auto [spec, map] = nagell::triangular_transform(+1);
    const auto split = nagell::parity_split(spec);
    CHECK(split[1].parity == 1);
    CHECK(split[1].g_t == IntPoly{-15, 16});
    CHECK(split[1].t_min == 2);
    CHECK(split[0].g_t == IntPoly{-23, 16});
    CHECK(split[0].t_min == 2);
  }
  SUBCASE("zero perturbation") {
    const auto split = nagell::parity_split(nagell::EquationSpec(5, IntPoly{}, 0));
    CHECK(split[0].g_t.is_zero());
    CHECK(split[1].g_t.is_zero());
    CHECK(split[0].t_min == 0);
    CHECK(split[1].t_min == 0);
  }
  SUBCASE("base three") {
    const auto split = nagell::parity_split(nagell::EquationSpec(3, IntPoly{0, 1, 0, 1}, 1));
    CHECK(split[1].g_t == IntPoly{2, 8, 12, 8});
    CHECK(split[1].t_min == 0);
    CHECK(split[0].t_min == 1);
  }
  SUBCASE("t_min straddles the floor") {
    for (long n_min = 0; n_min < 20; ++n_min) {
      for (const auto& sc : nagell::parity_split(nagell::EquationSpec(2, IntPoly{1}, n_min))) {
        REQUIRE(sc.exponent(sc.t_min) >= n_min);
        if (sc.t_min > 0) REQUIRE(sc.exponent(sc.t_min - 1) < n_min);
      }
    }
  }
}

TEST_CASE("g_t agrees with G(2t + r) for random G") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Integer> c(1 + rng() % 7);
    for (auto& v : c) v = static_cast<long>(rng() % 201) - 100;
    const nagell::EquationSpec spec(2 + rng() % 10, IntPoly(c), 0);
    for (const auto& sc : nagell::parity_split(spec)) {
      const int points = std::max(sc.g_t.degree(), 0) + 1;
      for (long t = 0; t < points + 5; ++t) {
        REQUIRE(sc.g_t(t) == spec.perturbation()(2 * t + sc.parity));
        REQUIRE(sc.rhs(t) == spec.rhs(sc.exponent(t)));
      }
    }
  }
}

TEST_CASE("every solution lands in exactly one parity subcase") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const nagell::EquationSpec spec(2 + rng() % 4,
                                    IntPoly{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) - 4},
                                    static_cast<long>(rng() % 4));
    const auto split = nagell::parity_split(spec);
    for (const auto& s : nagell::brute_oracle(spec, 60)) {
      int hits = 0;
      for (const auto& sc : split) {
        if ((s.exponent - sc.parity) % 2 != 0) continue;
        const long t = (s.exponent - sc.parity) / 2;
        REQUIRE(t >= sc.t_min);
        REQUIRE(sc.rhs(t) == s.x * s.x);
        ++hits;
      }
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("equation spec validation") {
  CHECK_THROWS_AS(nagell::EquationSpec(1, IntPoly{1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(nagell::EquationSpec(2, IntPoly{1}, -1), std::invalid_argument);
  CHECK(nagell::EquationSpec(2, IntPoly{-7}, 1).display() == "x^2 = 2^N - 7");
  CHECK(nagell::EquationSpec(2, IntPoly{}, 1).display() == "x^2 = 2^N");
}

TEST_CASE("integer roots agree with brute force") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    // Product of linear factors, possibly repeated, times an irreducible-ish tail.
    IntPoly p = IntPoly::constant(static_cast<long>(rng() % 5) + 1);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) p = p * IntPoly::linear_factor(static_cast<long>(rng() % 121) - 60);
    if (rng() % 2) p = p * IntPoly{static_cast<long>(rng() % 7) + 1, 0, 1};
    if (rng() % 3 == 0) p = p + IntPoly{static_cast<long>(rng() % 5) - 2};
    if (p.is_zero()) continue;

    const Integer lo(static_cast<long>(rng() % 101) - 80);
    const Integer hi = lo + static_cast<long>(rng() % 150);
    std::vector<Integer> expected;
    for (Integer t = lo; t <= hi; ++t)
      if (p(t) == 0) expected.push_back(t);
    REQUIRE(nagell::integer_roots(p, lo, hi) == expected);
  }
}

TEST_CASE("integer roots far from the origin") {
  const IntPoly p = IntPoly::linear_factor(Integer("1000000007")) * IntPoly::linear_factor(-5) *
                    IntPoly{1, 0, 1};
  const auto roots = nagell::integer_roots_from(p, 0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Integer("1000000007"));
  CHECK(nagell::integer_roots_from(IntPoly{7}, 0).empty());
  CHECK_THROWS_AS(nagell::integer_roots_from(IntPoly{}, 0), std::invalid_argument);
}

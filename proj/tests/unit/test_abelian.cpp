#include <doctest.h>

#include "arset/abelian.hpp"
#include "arset/errors.hpp"
#include "arset/presentation.hpp"
#include "oracles.hpp"

using namespace arset;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

Integer abs_int(Integer const& x) {
  return x < 0 ? Integer(-x) : x;
}

void check_smith(IntMatrix const& a) {
  auto const s = smith_normal_form(a);
  REQUIRE(s.U * a * s.V == s.D);
  REQUIRE(abs_int(determinant(s.U)) == 1);
  REQUIRE(abs_int(determinant(s.V)) == 1);
  std::size_t const k = std::min(a.rows(), a.cols());
  REQUIRE(s.diag.size() == k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      REQUIRE(s.D(r, c) == (r == c ? s.diag[r] : Integer(0)));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    REQUIRE(s.diag[i] >= 0);
    if (i + 1 < k) {
      if (s.diag[i] == 0) {
        REQUIRE(s.diag[i + 1] == 0);
      } else {
        REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
      }
    }
  }
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("abelianization matrix examples") {
    auto const p = parse_presentation("gens: x1 x2\nrel: x1^2\nrel: x2^3");
    CHECK(abelianization_matrix(p) == IntMatrix{{2, 0}, {0, 3}});
    auto const free = parse_presentation("gens: x");
    auto const m    = abelianization_matrix(free);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 1);
    auto const de = parse_presentation("gens: d e\nrel: e d e^-1 d^-4");
    CHECK(abelianization_matrix(de) == IntMatrix{{-3, 0}});
  }

  TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diag == ints({1, 6}));
    CHECK(smith_normal_form(IntMatrix{{4, 0}, {0, 9}}).diag == ints({1, 36}));
    CHECK(smith_normal_form(IntMatrix{{0}}).diag == ints({0}));
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diag == ints({2, 6, 12}));
    auto const empty = smith_normal_form(IntMatrix(0, 3));
    CHECK(empty.diag.empty());
    CHECK(empty.V.rows() == 3);
  }

  TEST_CASE("smith invariants on random matrices") {
    gen::Rng rng(7);
    for (int t = 0; t < 300; ++t) {
      auto const rows = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      auto const cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      IntMatrix  a(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          a(r, c) = gen::uniform(rng, -30, 30);
        }
      }
      check_smith(a);
    }
  }

  TEST_CASE("smith handles entries beyond 64 bits") {
    IntMatrix a(2, 2);
    a(0, 0) = Integer("123456789012345678901234567890");
    a(0, 1) = Integer("987654321098765432109876543210");
    a(1, 0) = 7;
    a(1, 1) = 11;
    check_smith(a);
  }

  TEST_CASE("generator order examples") {
    auto const p  = parse_presentation("gens: x1 x2\nrel: x1^2\nrel: x2^3");
    auto const o  = generator_orders(p);
    REQUIRE(o.size() == 2);
    CHECK(*o[0] == 2);
    CHECK(*o[1] == 3);
    auto const f = generator_orders(parse_presentation("gens: x"));
    REQUIRE(f.size() == 1);
    CHECK_FALSE(f[0].has_value());
    auto const de = generator_orders(parse_presentation("gens: d e\nrel: e d e^-1 d^-4"));
    CHECK(*de[0] == 3);
    CHECK_FALSE(de[1].has_value());
    // y = x^-1 with coprime orders kills both.
    auto const tied = generator_orders(parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: x y"));
    CHECK(*tied[0] == 1);
    CHECK(*tied[1] == 1);
    auto const z6 = generator_orders(parse_presentation("gens: x y\nrel: x^6\nrel: x^2 y^-1"));
    CHECK(*z6[0] == 6);
    CHECK(*z6[1] == 3);
  }

  TEST_CASE("generator orders agree with the lattice oracle") {
    gen::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
      auto const n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
      auto const m = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
      std::vector<std::vector<long>> a(m, std::vector<long>(n));
      IntMatrix                      im(m, n);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          a[r][c]  = gen::uniform(rng, -6, 6);
          im(r, c) = a[r][c];
        }
      }
      auto const orders = generator_orders(im);
      REQUIRE(orders.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(orders[i].has_value() == !oracle::has_infinite_order(a, n, i));
      }
      if (m == n && oracle::cofactor_det(a) != 0) {
        auto const expected = oracle::square_orders(a);
        for (std::size_t i = 0; i < n; ++i) {
          REQUIRE(*orders[i] == expected[i]);
        }
      }
    }
  }

  TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(parse_presentation("gens: x1 x2\nrel: x1^2\nrel: x2^3")) == ints({6}));
    CHECK(abelian_invariants(parse_presentation("gens: x")) == ints({0}));
    CHECK(abelian_invariants(parse_presentation("gens: a b\nrel: a\nrel: b")).empty());
    CHECK(abelian_invariants(parse_presentation("gens: a b c\nrel: a^2\nrel: b^4")) == ints({2, 4, 0}));
  }

  TEST_CASE("extended gcd examples") {
    auto g = extended_gcd(ints({4, 9}));
    CHECK(g.gcd == 1);
    CHECK(g.coefficients == ints({-2, 1}));
    g = extended_gcd(ints({1}));
    CHECK(g.gcd == 1);
    CHECK(g.coefficients == ints({1}));
    g = extended_gcd(ints({6, 10, 15}));
    CHECK(g.gcd == 1);
    CHECK(6 * g.coefficients[0] + 10 * g.coefficients[1] + 15 * g.coefficients[2] == 1);
    g = extended_gcd(ints({12, 18}));
    CHECK(g.gcd == 6);
    CHECK_THROWS_AS(extended_gcd({}), PreconditionError);
    CHECK_THROWS_AS(extended_gcd(ints({3, 0})), PreconditionError);
  }

  TEST_CASE("extended gcd identity on random lists") {
    gen::Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
      std::vector<Integer> xs(static_cast<std::size_t>(gen::uniform(rng, 1, 6)));
      Integer              expected = 0;
      for (auto& x : xs) {
        x        = gen::uniform(rng, 1, 100000);
        expected = boost::multiprecision::gcd(expected, x);
      }
      auto const g   = extended_gcd(xs);
      Integer    sum = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        sum += g.coefficients[i] * xs[i];
      }
      REQUIRE(g.gcd == expected);
      REQUIRE(sum == expected);
    }
  }
}

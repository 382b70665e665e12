#include <doctest.h>

#include <algorithm>

#include "arset/errors.hpp"
#include "arset/quotients.hpp"
#include "oracles.hpp"

using namespace arset;

namespace {

Presentation pres(std::string_view text) {
  return parse_presentation(text);
}

CyclicFreeProduct c2c3() {
  return CyclicFreeProduct::standard({2, 3});
}

Word x(std::string_view text, CyclicFreeProduct const& g = c2c3()) {
  return parse_word(text, g.generators);
}

}  // namespace

TEST_SUITE("quotients") {
  TEST_CASE("targets are the expected groups") {
    CHECK(target(TargetName::S3).order() == 6);
    CHECK(target(TargetName::A4).order() == 12);
    CHECK(target(TargetName::S4).order() == 24);
    CHECK(target(TargetName::S5).order() == 120);
    for (auto t : {TargetName::S3, TargetName::A4, TargetName::S4, TargetName::S5}) {
      auto const& h = target(t);
      CHECK(h.is_group());
      auto const& id = h.element(h.identity());
      for (std::size_t i = 0; i < id.size(); ++i) {
        CHECK(id[i] == i);
      }
      CHECK(parse_target(to_string(t)) == t);
    }
    CHECK(to_string(TargetName::A4) == "a4");
    CHECK_THROWS_AS(parse_target("s6"), InputError);
  }

  TEST_CASE("hom-count examples") {
    auto const& s3 = target(TargetName::S3);
    CHECK(hom_count(pres("gens: a\nrel: a^2"), s3) == 4);
    CHECK(hom_count(pres("gens: a b"), s3) == 36);
    for (auto t : {TargetName::S3, TargetName::A4, TargetName::S4, TargetName::S5}) {
      CHECK(hom_count(pres("gens: a\nrel: a"), target(t)) == 1);
    }
    // Four images of order dividing 2 times three of order dividing 3.
    CHECK(hom_count(pres("gens: x1 x2\nrel: x1^2\nrel: x2^3"), s3) == 12);
    CHECK(oracle::hom_count(pres("gens: x1 x2\nrel: x1^2\nrel: x2^3"), oracle::s3_gens(), 3) == 12);
    CHECK(hom_count(Presentation({}, {}), s3) == 1);
  }

  TEST_CASE("hom-counts agree with brute force") {
    gen::Rng       rng(43);
    Alphabet const ab{"a", "b"};
    for (int t = 0; t < 40; ++t) {
      std::vector<Word> rels(static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
      for (auto& r : rels) {
        r = gen::word(rng, ab, 8);
      }
      Presentation const p(ab, rels);
      auto const         s3 = hom_count(p, target(TargetName::S3));
      REQUIRE(s3 == oracle::hom_count(p, oracle::s3_gens(), 3));
      REQUIRE(hom_count(p, target(TargetName::A4)) == oracle::hom_count(p, oracle::a4_gens(), 4));
      REQUIRE(hom_count(p, target(TargetName::S4)) == oracle::hom_count(p, oracle::s4_gens(), 4));
      REQUIRE(s3 >= 1);
      REQUIRE(hom_count(p, target(TargetName::S3), 3) == s3);

      auto shuffled = rels;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& r : shuffled) {
        if (!r.empty()) {
          r = invert(rotate(r, static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(r.size()) - 1))));
        }
      }
      REQUIRE(hom_count(Presentation(ab, shuffled), target(TargetName::S3)) == s3);
    }
  }

  TEST_CASE("threaded counting matches serial counting") {
    auto const p = pres("gens: a b c\nrel: a^2\nrel: b^3\nrel: (a b c)^2");
    auto const serial = hom_count(p, target(TargetName::S4), 1);
    CHECK(hom_count(p, target(TargetName::S4), 4) == serial);
    CHECK(hom_count(p, target(TargetName::S4), 64) == serial);
  }

  TEST_CASE("word problem examples") {
    CHECK(wp_cyclic_free_product(c2c3(), x("x1 x1")).trivial);
    auto const v = wp_cyclic_free_product(c2c3(), x("x1 x2"));
    CHECK_FALSE(v.trivial);
    CHECK(render(v.normal_form) == "x1 x2");
    CHECK(wp_cyclic_free_product(c2c3(), x("x2^-1 x1^2 x2")).trivial);
    CHECK(render(wp_cyclic_free_product(c2c3(), x("x2^2")).normal_form) == "x2^-1");
    CHECK(render(wp_cyclic_free_product(c2c3(), x("x1^-1")).normal_form) == "x1");
    CHECK(render(wp_cyclic_free_product(c2c3(), x("x2 x1 x1 x2")).normal_form) == "x2^-1");
    CHECK_THROWS_AS(wp_cyclic_free_product(c2c3(), Word::generator("y")), UnknownGenerator);

    auto const mixed = CyclicFreeProduct::standard({2, std::nullopt});
    CHECK(render(wp_cyclic_free_product(mixed, x("x2^5 x1^3", mixed)).normal_form) == "x2^5 x1");
    CHECK_THROWS_AS(CyclicFreeProduct::standard({1, 3}), PreconditionError);
  }

  TEST_CASE("word problem laws") {
    gen::Rng   rng(47);
    auto const g = CyclicFreeProduct::standard({2, 3, 5});
    std::map<std::string, long> orders{{"x1", 2}, {"x2", 3}, {"x3", 5}};
    for (int t = 0; t < 2000; ++t) {
      auto const u = gen::word(rng, g.generators, 14);
      auto const v = wp_cyclic_free_product(g, u);
      REQUIRE(v.trivial == oracle::cyclic_free_product_trivial({u.begin(), u.end()}, orders));
      REQUIRE(v.trivial == v.normal_form.empty());
      REQUIRE(wp_cyclic_free_product(g, concat(u, invert(u))).trivial);
      REQUIRE(wp_cyclic_free_product(g, v.normal_form).normal_form == v.normal_form);
      // u and its normal form agree, so u . nf^-1 is trivial.
      REQUIRE(wp_cyclic_free_product(g, concat(u, invert(v.normal_form))).trivial);
      auto const c = gen::word(rng, g.generators, 6);
      if (v.trivial) {
        REQUIRE(wp_cyclic_free_product(g, concat({c, u, invert(c)})).trivial);
        auto const other = concat(c, power(Word::generator("x2"), 3));
        REQUIRE(wp_cyclic_free_product(g, concat({u, other, invert(c)})).trivial);
      }
    }
  }

  TEST_CASE("recognizing free products of cyclic groups") {
    auto const g = CyclicFreeProduct::recognize(pres("gens: x1 x2\nrel: x1^2\nrel: x2^3"));
    REQUIRE(g);
    CHECK(g->orders == std::vector<std::optional<long>>{2, 3});
    auto const h = CyclicFreeProduct::recognize(pres("gens: a b c\nrel: a^4\nrel: b a^6 b^-1\nrel: c^-3"));
    REQUIRE(h);
    CHECK(h->orders == std::vector<std::optional<long>>{2, std::nullopt, 3});
    CHECK_FALSE(CyclicFreeProduct::recognize(pres("gens: a b\nrel: a b")));
    CHECK_FALSE(CyclicFreeProduct::recognize(pres("gens: a b\nrel: a^3\nrel: a^2")));
  }
}

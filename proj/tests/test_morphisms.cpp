#include <catch_amalgamated.hpp>

#include "artin/catalog.hpp"
#include "artin/oracle.hpp"
#include "artin/rng.hpp"

using namespace artin;

TEST_CASE("group tags round trip") {
  for (const std::string tag :
       {"A:3", "B:4", "AffA:5", "AffC:3", "I2:6", "F4", "A:3/Z", "B:3/Z", "Z"})
    REQUIRE(group_tag(parse_group_tag(tag)) == tag);
  REQUIRE_THROWS_AS(parse_group_tag("A:"), std::invalid_argument);
}

TEST_CASE("morphism application is letterwise substitution") {
  const Morphism embed = embed_b_in_a(3);
  REQUIRE(embed.apply({3}) == Word{3, 3});
  REQUIRE(embed.apply({1, 2}) == Word{1, 2});
  REQUIRE(embed.apply({-3}) == Word{-3, -3});
  REQUIRE(embed.apply({3, -3}) == Word{});
  REQUIRE_THROWS_AS(embed.apply({4}), std::invalid_argument);
}

TEST_CASE("composition agrees with sequential application") {
  const Morphism aff = affa_in_b(3);
  const Morphism embed = embed_b_in_a(3);
  const Morphism both = compose(aff, embed);
  REQUIRE(both.domain == aff.domain);
  REQUIRE(both.codomain == embed.codomain);
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = rng.random_word(3, 10);
    REQUIRE(both.apply(w) == embed.apply(aff.apply(w)));
  }
  REQUIRE_THROWS_AS(compose(embed, aff), std::invalid_argument);

  const Morphism id = identity_morphism(GroupRef::group(type_b(3)));
  const Morphism same = compose(aff, id);
  REQUIRE(same.images == aff.images);
}

TEST_CASE("verification passes the embeddings and catches a fake") {
  REQUIRE(verify_morphism(embed_b_in_a(3)).ok);
  REQUIRE(verify_morphism(embed_b_in_a(3)).checked == 3);
  REQUIRE(verify_morphism(embed_affc_in_a(4)).ok);
  REQUIRE(verify_morphism(identity_morphism(GroupRef::group(type_a(4)))).ok);

  // commuting images cannot satisfy a braid relation
  Morphism fake;
  fake.domain = GroupRef::group(type_i2(3));
  fake.codomain = GroupRef::group(type_a(3));
  fake.name = "fake";
  fake.images = {Word{1}, Word{3}};
  const VerifyReport r = verify_morphism(fake);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.failures == std::vector<std::size_t>{0});
}

TEST_CASE("verification needs a bound codomain oracle") {
  REQUIRE_THROWS_AS(verify_morphism(inversion(type_f4())), unsupported_error);
}

TEST_CASE("the full catalog verifies") {
  for (int n = 3; n <= 6; ++n) {
    REQUIRE(verify_morphism(embed_b_in_a(n)).ok);
    REQUIRE(verify_morphism(embed_affc_in_a(n)).ok);
    REQUIRE(verify_morphism(inversion(type_a(n))).ok);
    REQUIRE(verify_morphism(inversion(type_b(n))).ok);
    REQUIRE(verify_morphism(tau_b(n)).ok);
    REQUIRE(verify_morphism(affa_in_b(n)).ok);
    REQUIRE(verify_morphism(angular_projection(n)).ok);
    REQUIRE(verify_morphism(graph_rotation(n, 1)).ok);
    REQUIRE(verify_morphism(graph_rotation(n, 2)).ok);
    REQUIRE(verify_morphism(graph_reflection(n, 1)).ok);
  }
  for (int m = 3; m <= 8; ++m) {
    REQUIRE(verify_morphism(inversion(type_i2(m))).ok);
    REQUIRE(verify_morphism(gamma_i2(m)).ok);
    REQUIRE(verify_morphism(eta_i2(m)).ok == (m % 2 == 0));
  }
  REQUIRE(verify_morphism(t0_i2()).ok);
}

TEST_CASE("catalog images match their defining formulas") {
  const Morphism tau = tau_b(3);
  REQUIRE(tau.images[0] == Word{2});
  REQUIRE(tau.images[1] == Word{1});
  REQUIRE(tau.images[2] == Word{-1, -2, -3, -2, -1});

  const Morphism eta = eta_i2(6);
  REQUIRE(eta.images[0] == Word{1, 2, 1});
  REQUIRE(eta.images[1] == Word{-1});

  const Morphism t0 = t0_i2();
  REQUIRE(t0.images[0] == Word{1});
  REQUIRE(t0.images[1] == Word{-1, -2, -1});

  const Morphism aff = affa_in_b(3);
  REQUIRE(aff.images[0] == Word{1});
  REQUIRE(aff.images[1] == Word{1, 2, 3, 1, -3, -2, -1});
  REQUIRE(catalog_morphism("affA_in_B", 3).images == aff.images);
  REQUIRE_THROWS_AS(catalog_morphism("nonsense", 3), std::invalid_argument);
}

TEST_CASE("tau is an involution on the generators") {
  for (int n = 3; n <= 5; ++n) {
    const Morphism square = compose(tau_b(n), tau_b(n));
    const GroupRef b = GroupRef::group(type_b(n));
    for (int i = 1; i <= n; ++i)
      REQUIRE(group_equal(b, square.images[static_cast<std::size_t>(i - 1)],
                          Word{i}));
  }
}

TEST_CASE("abelianization splits generators into the two classes") {
  REQUIRE(abelianization(type_b(3), power(Word{1, 2, 3}, 3)) ==
          AbValue{true, 6, 3});
  REQUIRE(abelianization(type_b(3), Word{}) == AbValue{true, 0, 0});
  REQUIRE(abelianization(type_i2(6), power(Word{1, 2}, 3)) ==
          AbValue{true, 3, 3});
  REQUIRE(abelianization(type_a(3), Word{1, -2, 3}) == AbValue{false, 1, 0});
  REQUIRE(abelianization(type_i2(5), Word{1, 2, 1}) == AbValue{false, 3, 0});
  REQUIRE(abelianization(type_f4(), Word{1, 2, 3, 4}) == AbValue{true, 2, 2});
  REQUIRE(abelianization(type_aff_c(4), Word{1, 2, 3, 4}) ==
          AbValue{true, 2, 2});
}

TEST_CASE("length classes read off the generator images") {
  REQUIRE(length_class(inversion(type_a(3))) == LengthClass::reversing);
  REQUIRE(length_class(identity_morphism(GroupRef::group(type_a(3)))) ==
          LengthClass::preserving);
  const Morphism tau = tau_b(3);
  REQUIRE(length_class(tau) == LengthClass::neither);
  REQUIRE(exponent_sum(tau.images[2]) == -5);
  REQUIRE(exponent_sum(tau.images[0]) == 1);
}

TEST_CASE("inversion negates the length of any word") {
  SplitMix64 rng(42);
  const Morphism eps = inversion(type_b(4));
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = rng.random_word(4, 14);
    REQUIRE(exponent_sum(eps.apply(w)) == -exponent_sum(w));
  }
}

TEST_CASE("lift mod centre picks the unique length-corrected coset point") {
  // generators unchanged lift to the identity
  const Morphism id_lift =
      lift_mod_center(type_a(3), {{1}, {2}, {3}}, +1);
  REQUIRE(id_lift.images == std::vector<Word>{{1}, {2}, {3}});

  // a full twist on one image is stripped again
  const Word decorated = concat(Word{1}, full_twist_word(3));
  const Morphism stripped =
      lift_mod_center(type_a(3), {decorated, {2}, {3}}, +1);
  REQUIRE(stripped.images[0] == Word{1});

  REQUIRE_THROWS_AS(lift_mod_center(type_a(3), {{1, 2}, {2}, {3}}, +1),
                    not_liftable_error);
  REQUIRE_THROWS_AS(lift_mod_center(type_aff_a(3), {{1}, {2}, {3}}, +1),
                    std::invalid_argument);

  // inversion images lift back to the inversion under sense -1
  const CenterData c = center_data(type_b(3));
  std::vector<Word> images;
  for (int i = 1; i <= 3; ++i)
    images.push_back(freely_reduced(concat(Word{-i}, power(c.zeta, i % 2))));
  const Morphism eps_lift = lift_mod_center(type_b(3), images, -1);
  const GroupRef b = GroupRef::group(type_b(3));
  for (int i = 1; i <= 3; ++i)
    REQUIRE(group_equal(b, eps_lift.images[static_cast<std::size_t>(i - 1)],
                        Word{-i}));
}

TEST_CASE("group equality dispatches across the supported families") {
  REQUIRE(group_equal(GroupRef::group(type_b(3)), {2, 3, 2, 3}, {3, 2, 3, 2}));
  REQUIRE_FALSE(group_equal(GroupRef::group(type_b(3)), {3}, {1}));
  REQUIRE(group_equal(GroupRef::group(type_aff_c(3)), {1, 2, 1, 2},
                      {2, 1, 2, 1}));
  REQUIRE(group_equal(GroupRef::group(type_aff_a(3)), {1, 2, 1}, {2, 1, 2}));
  REQUIRE(group_equal(GroupRef::group(type_aff_a(3)), {3, 1, 3}, {1, 3, 1}));
  REQUIRE(group_equal(GroupRef::group(type_i2(5)),
                      {1, 2, 1, 2, 1}, {2, 1, 2, 1, 2}));
  REQUIRE(group_equal(GroupRef::integers(), {1, -1, 1}, {1}));
  REQUIRE_THROWS_AS(group_equal(GroupRef::group(type_f4()), {1}, {1}),
                    unsupported_error);
}

TEST_CASE("mod centre equality divides by the centre only") {
  const GroupRef a_mod = GroupRef::mod_center(type_a(3));
  REQUIRE(group_equal(a_mod, {1}, concat(Word{1}, full_twist_word(3))));
  REQUIRE_FALSE(group_equal(a_mod, {1}, {2}));

  const GroupRef b_mod = GroupRef::mod_center(type_b(3));
  const Word zeta_b = center_data(type_b(3)).zeta;
  REQUIRE(group_equal(b_mod, {1}, concat(Word{1}, zeta_b)));
  REQUIRE_FALSE(group_equal(b_mod, {1}, {2}));
  REQUIRE_THROWS_AS(
      group_equal(GroupRef::mod_center(type_aff_a(3)), {1}, {1}),
      unsupported_error);
}

TEST_CASE("conjugating the cycle generators by delta rotates them") {
  for (int n = 3; n <= 5; ++n) {
    const Morphism aff = affa_in_b(n);
    Word delta;
    for (int i = 1; i <= n; ++i) delta.push_back(i);
    const GroupRef b = GroupRef::group(type_b(n));
    for (int i = 1; i <= n; ++i) {
      const Word conj = freely_reduced(concat(
          concat(delta, aff.images[static_cast<std::size_t>(i - 1)]),
          inverse(delta)));
      REQUIRE(group_equal(b, conj,
                          aff.images[static_cast<std::size_t>(i % n)]));
    }
  }
}

TEST_CASE("morphism serialization round trips") {
  const Morphism f = embed_b_in_a(3);
  const std::string text = format_morphism(f);
  REQUIRE(text ==
          "morphism embed_B_in_A\n"
          "domain B:3\n"
          "codomain A:3\n"
          "image 1 : 1\n"
          "image 2 : 2\n"
          "image 3 : 3 3\n");
  const Morphism back = parse_morphism(text);
  REQUIRE(back.name == f.name);
  REQUIRE(back.domain == f.domain);
  REQUIRE(back.codomain == f.codomain);
  REQUIRE(back.images == f.images);

  const Morphism proj = angular_projection(3);
  const Morphism back2 = parse_morphism(format_morphism(proj));
  REQUIRE(back2.images == proj.images);
  REQUIRE(back2.codomain == GroupRef::integers());

  REQUIRE_THROWS_AS(parse_morphism("domain A:3\n"), std::invalid_argument);
}

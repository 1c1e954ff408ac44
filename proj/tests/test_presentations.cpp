#include <catch_amalgamated.hpp>

#include "artin/coxeter.hpp"

using namespace artin;

TEST_CASE("family diagrams carry the expected labels") {
  const CoxeterMatrix a3 = coxeter_matrix(type_a(3));
  REQUIRE(a3.rank == 3);
  REQUIRE(a3.at(1, 2) == 3);
  REQUIRE(a3.at(2, 3) == 3);
  REQUIRE(a3.at(1, 3) == 2);

  const CoxeterMatrix b3 = coxeter_matrix(type_b(3));
  REQUIRE(b3.at(1, 2) == 3);
  REQUIRE(b3.at(2, 3) == 4);
  REQUIRE(b3.at(1, 3) == 2);

  // rank 3 affine A is the triangle
  const CoxeterMatrix affa = coxeter_matrix(type_aff_a(3));
  REQUIRE(affa.at(1, 2) == 3);
  REQUIRE(affa.at(2, 3) == 3);
  REQUIRE(affa.at(1, 3) == 3);

  const CoxeterMatrix affa5 = coxeter_matrix(type_aff_a(5));
  REQUIRE(affa5.at(5, 1) == 3);
  REQUIRE(affa5.at(2, 5) == 2);

  const CoxeterMatrix affc = coxeter_matrix(type_aff_c(4));
  REQUIRE(affc.at(1, 2) == 4);
  REQUIRE(affc.at(2, 3) == 3);
  REQUIRE(affc.at(3, 4) == 4);
  REQUIRE(affc.at(1, 4) == 2);

  const CoxeterMatrix i2 = coxeter_matrix(type_i2(7));
  REQUIRE(i2.rank == 2);
  REQUIRE(i2.at(1, 2) == 7);

  const CoxeterMatrix f4 = coxeter_matrix(type_f4());
  REQUIRE(f4.at(1, 2) == 3);
  REQUIRE(f4.at(2, 3) == 4);
  REQUIRE(f4.at(3, 4) == 3);
  REQUIRE(f4.at(1, 3) == 2);
}

TEST_CASE("ranks below the family minimum are invalid") {
  REQUIRE_THROWS_AS(type_a(2), std::invalid_argument);
  REQUIRE_THROWS_AS(type_b(2), std::invalid_argument);
  REQUIRE_THROWS_AS(type_aff_a(2), std::invalid_argument);
  REQUIRE_THROWS_AS(type_aff_c(2), std::invalid_argument);
  REQUIRE_THROWS_AS(type_i2(2), std::invalid_argument);
}

TEST_CASE("type tags round trip") {
  for (const ArtinType& t : {type_a(3), type_b(5), type_aff_a(4),
                             type_aff_c(6), type_i2(7), type_f4()})
    REQUIRE(parse_type_tag(type_tag(t)) == t);
  REQUIRE_THROWS_AS(parse_type_tag("Q:3"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_type_tag("A:x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_type_tag("A:2"), std::invalid_argument);
}

TEST_CASE("artin relations alternate with the bond length") {
  const CoxeterMatrix b3 = coxeter_matrix(type_b(3));
  const Presentation p = artin_relations(b3);
  REQUIRE(p.relations.size() == 3);
  REQUIRE(p.relations[0] == std::pair(Word{1, 2, 1}, Word{2, 1, 2}));
  REQUIRE(p.relations[1] == std::pair(Word{1, 3}, Word{3, 1}));
  REQUIRE(p.relations[2] == std::pair(Word{2, 3, 2, 3}, Word{3, 2, 3, 2}));
}

TEST_CASE("relation count matches the number of finite bonds") {
  for (const ArtinType& t :
       {type_a(3), type_a(6), type_b(4), type_aff_a(5), type_aff_c(4),
        type_i2(5), type_i2(8), type_f4()}) {
    const CoxeterMatrix m = coxeter_matrix(t);
    const Presentation p = artin_relations(m);
    std::size_t bonds = 0;
    for (int i = 1; i <= m.rank; ++i)
      for (int j = i + 1; j <= m.rank; ++j)
        if (m.at(i, j) != infinite_bond) ++bonds;
    REQUIRE(p.relations.size() == bonds);
    for (const auto& [lhs, rhs] : p.relations) {
      const int label = m.at(lhs[0], rhs[0]);
      REQUIRE(lhs.size() == static_cast<std::size_t>(label));
      REQUIRE(rhs.size() == static_cast<std::size_t>(label));
      REQUIRE(lhs == alternating_word(lhs[0], rhs[0], label));
      REQUIRE(rhs == alternating_word(rhs[0], lhs[0], label));
    }
  }
}

TEST_CASE("infinite bonds are representable and produce no relation") {
  CoxeterMatrix m;
  m.rank = 2;
  m.entries = {1, infinite_bond, infinite_bond, 1};
  validate(m);
  REQUIRE(artin_relations(m).relations.empty());
}

TEST_CASE("bad matrices are rejected") {
  CoxeterMatrix m;
  m.rank = 2;
  m.entries = {1, 3, 2, 1};  // not symmetric
  REQUIRE_THROWS_AS(validate(m), std::invalid_argument);
  m.entries = {2, 3, 3, 1};  // bad diagonal
  REQUIRE_THROWS_AS(validate(m), std::invalid_argument);
  m.entries = {1, 1, 1, 1};  // off-diagonal below 2
  REQUIRE_THROWS_AS(validate(m), std::invalid_argument);
}

TEST_CASE("presentation serialization is stable") {
  const std::string text = format_presentation(presentation_of(type_b(3)));
  REQUIRE(text ==
          "rank 3\n"
          "relation 1 2 1 = 2 1 2\n"
          "relation 1 3 = 3 1\n"
          "relation 2 3 2 3 = 3 2 3 2\n");
}

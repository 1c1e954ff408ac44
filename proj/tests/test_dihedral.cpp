#include <catch_amalgamated.hpp>

#include "artin/braid.hpp"
#include "artin/center.hpp"
#include "artin/dihedral.hpp"
#include "artin/rng.hpp"

using namespace artin;

TEST_CASE("the alternating relation holds for every label") {
  for (int m = 3; m <= 8; ++m) {
    const Presentation p = presentation_of(type_i2(m));
    const auto& [lhs, rhs] = p.relations.front();
    REQUIRE(dihedral_equal(DihedralWord(m, lhs), DihedralWord(m, rhs)));
  }
  REQUIRE(dihedral_equal(DihedralWord(4, {1, 2, 1, 2}),
                         DihedralWord(4, {2, 1, 2, 1})));
}

TEST_CASE("free cancellation and label mismatch") {
  REQUIRE(dihedral_equal(DihedralWord(5, {1, -1}), DihedralWord(5, {})));
  REQUIRE_FALSE(dihedral_equal(DihedralWord(4, {1}), DihedralWord(4, {2})));
  REQUIRE_THROWS_AS(dihedral_equal(DihedralWord(4, {1}), DihedralWord(5, {1})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(DihedralWord(2, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(DihedralWord(4, {3}), std::invalid_argument);
}

TEST_CASE("the centre word commutes with both generators") {
  for (int m = 3; m <= 8; ++m) {
    const Word zeta = center_data(type_i2(m)).zeta;
    for (int g = 1; g <= 2; ++g) {
      const Word gen{g};
      REQUIRE(dihedral_equal(DihedralWord(m, concat(zeta, gen)),
                             DihedralWord(m, concat(gen, zeta))));
    }
  }
}

TEST_CASE("normal forms are stable under relator insertion") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = static_cast<int>(rng.between(3, 8));
    const Word a = rng.random_word(2, 12);
    Word b = a;
    Word relator;
    if (rng.next() % 2 == 0) {
      const Presentation p = presentation_of(type_i2(m));
      relator = concat(p.relations[0].first, inverse(p.relations[0].second));
    } else {
      const int g = static_cast<int>(rng.between(1, 2));
      relator = {g, -g};
    }
    const auto at = static_cast<Word::difference_type>(rng.below(b.size() + 1));
    b.insert(b.begin() + at, relator.begin(), relator.end());
    REQUIRE(dihedral_nf(DihedralWord(m, a)) == dihedral_nf(DihedralWord(m, b)));
  }
}

TEST_CASE("normal form factors obey the chain condition") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng.between(3, 8));
    const DihedralNF nf = dihedral_nf(DihedralWord(m, rng.random_word(2, 14)));
    for (std::size_t j = 0; j < nf.factors.size(); ++j) {
      const DihedralSimple& f = nf.factors[j];
      REQUIRE(f.len >= 1);
      REQUIRE(f.len <= m - 1);
      if (j + 1 < nf.factors.size()) {
        // the next factor must start with the letter this one ends with
        const int last = f.len % 2 == 1 ? f.first : (f.first == 1 ? 2 : 1);
        REQUIRE(nf.factors[j + 1].first == last);
      }
    }
  }
}

TEST_CASE("label three is the rank two braid group") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = rng.random_word(2, 12);
    const Word b = rng.random_word(2, 12);
    REQUIRE(dihedral_equal(DihedralWord(3, a), DihedralWord(3, b)) ==
            braid_equal(BraidWord(2, a), BraidWord(2, b)));
  }
}

TEST_CASE("alternating positive words are their own normal form") {
  for (int m = 3; m <= 8; ++m) {
    for (int start = 1; start <= 2; ++start) {
      for (int len = 1; len < m; ++len) {
        const DihedralNF nf = dihedral_nf(
            DihedralWord(m, dihedral_simple_word({len, start}, m)));
        REQUIRE(nf.inf == 0);
        REQUIRE(nf.factors.size() == 1);
        REQUIRE(nf.factors[0] == DihedralSimple{len, start});
      }
    }
    // both spellings of the half twist reduce to the Delta power alone
    const DihedralNF full =
        dihedral_nf(DihedralWord(m, alternating_word(1, 2, m)));
    REQUIRE(full.inf == 1);
    REQUIRE(full.factors.empty());
    REQUIRE(full == dihedral_nf(DihedralWord(m, alternating_word(2, 1, m))));
  }
}

TEST_CASE("simple factors spell back to alternating words") {
  REQUIRE(dihedral_simple_word({3, 2}, 5) == Word{2, 1, 2});
  REQUIRE(dihedral_simple_word({5, 0}, 5) == Word{1, 2, 1, 2, 1});
  REQUIRE(dihedral_simple_word({0, 0}, 5) == Word{});
}

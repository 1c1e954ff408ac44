#include <catch_amalgamated.hpp>

#include "artin/tables.hpp"

using namespace artin;

TEST_CASE("outer automorphism descriptors per family") {
  REQUIRE(reference_entry(type_a(3)).out_group == "C2");
  REQUIRE(reference_entry(type_a(3)).out_mod_center == "C2");
  REQUIRE(reference_entry(type_b(5)).out_group == "(Z x| C2) x C2");
  REQUIRE(reference_entry(type_b(5)).out_mod_center == "C2 x C2");
  REQUIRE(reference_entry(type_aff_a(4)).out_group == "D_8 x C2");
  REQUIRE(reference_entry(type_aff_a(3)).out_group == "D_6 x C2");
  REQUIRE(reference_entry(type_aff_c(5)).out_group == "Sym(3) x C2");
  REQUIRE(reference_entry(type_i2(5)).out_group == "C2");
  REQUIRE(reference_entry(type_i2(5)).out_mod_center == "units of Z/5Z");
  REQUIRE(reference_entry(type_i2(6)).out_group == "D_inf x C2");
}

TEST_CASE("subgroup indices follow the rank formulas") {
  REQUIRE(reference_entry(type_a(3)).mod_index == 10);
  REQUIRE(reference_entry(type_b(3)).mod_index == 40);
  REQUIRE(reference_entry(type_aff_c(3)).mod_index == 120);
  REQUIRE(reference_entry(type_aff_a(3)).mod_index == 120);
  for (int n = 3; n <= 8; ++n) {
    const long long nn = n;
    REQUIRE(reference_entry(type_a(n)).mod_index == 2 * (nn + 2));
    REQUIRE(reference_entry(type_b(n)).mod_index == 2 * (nn + 1) * (nn + 2));
    REQUIRE(reference_entry(type_aff_a(n)).mod_index ==
            2 * nn * (nn + 1) * (nn + 2));
    REQUIRE(reference_entry(type_aff_c(n)).mod_index ==
            2 * nn * (nn + 1) * (nn + 2));
  }
}

TEST_CASE("commensurator descriptors name the punctured sphere") {
  for (int n = 3; n <= 8; ++n) {
    const std::string sphere = "Mod(S_" + std::to_string(n + 2) + ")";
    REQUIRE(reference_entry(type_a(n)).comm == sphere);
    REQUIRE(reference_entry(type_b(n)).comm == sphere);
    REQUIRE(reference_entry(type_aff_a(n)).comm == sphere);
    REQUIRE(reference_entry(type_aff_c(n)).comm == sphere);
  }
}

TEST_CASE("the splitting caveat sits exactly at rank 2 mod 3") {
  for (int n = 3; n <= 8; ++n) {
    REQUIRE(reference_entry(type_aff_c(n)).splitting_caveat == (n % 3 == 2));
    REQUIRE_FALSE(reference_entry(type_a(n)).splitting_caveat);
    REQUIRE_FALSE(reference_entry(type_b(n)).splitting_caveat);
    REQUIRE_FALSE(reference_entry(type_aff_a(n)).splitting_caveat);
  }
  REQUIRE(reference_entry(type_aff_c(5)).splitting_caveat);
  REQUIRE(reference_entry(type_aff_c(8)).splitting_caveat);
  REQUIRE_FALSE(reference_entry(type_aff_c(3)).splitting_caveat);
  REQUIRE_FALSE(reference_entry(type_aff_c(4)).splitting_caveat);
  REQUIRE_FALSE(reference_entry(type_aff_c(6)).splitting_caveat);
}

TEST_CASE("transvection group descriptors") {
  REQUIRE(reference_entry(type_a(4)).tv_group == "trivial");
  REQUIRE(reference_entry(type_b(4)).tv_group == "Z");
  REQUIRE(reference_entry(type_f4()).tv_group == "Z");
  REQUIRE(reference_entry(type_i2(4)).tv_group == "D_inf");
  REQUIRE(reference_entry(type_i2(6)).tv_group == "Z");
  REQUIRE(reference_entry(type_i2(7)).tv_group == "trivial");
}

TEST_CASE("open ends are recorded as notes") {
  REQUIRE_FALSE(reference_entry(type_f4()).notes.empty());
  REQUIRE_FALSE(reference_entry(type_i2(4)).notes.empty());
  REQUIRE_FALSE(reference_entry(type_aff_c(5)).notes.empty());
  REQUIRE(reference_entry(type_aff_c(6)).notes.empty());
}

#pragma once

#include <string>

#include "artin/coxeter.hpp"

namespace artin {

// Structured reference data on automorphism and commensurator groups of the
// supported families. These are recorded results, not computations; the
// executable content of the toolkit stops at the word-level checks, and
// this table carries the group-theoretic context those checks live in.
//
// Notation: C2 the order-two group, D_k the dihedral group of order k,
// D_inf the infinite dihedral group, Sym(3) the symmetric group, x direct
// product, (Z x| C2) the semidirect product with C2 inverting Z,
// Mod(S_k) the mapping class group of the k-punctured sphere.
struct ReferenceEntry {
  ArtinType type;
  std::string out_group;       // Out(A)
  std::string out_mod_center;  // Out(A/Z), where it differs or is recorded
  std::string comm;            // abstract commensurator of A/Z (affine: of A)
  long long mod_index = 0;     // index of the realization inside Mod(S_{n+2})
  bool splitting_caveat = false;  // 1 -> Inn -> Aut -> Out -> 1 fails to split
  std::string tv_group;        // structure of the transvection group Tv(A)
  std::string notes;
};

inline ReferenceEntry reference_entry(const ArtinType& t) {
  ReferenceEntry e;
  e.type = t;
  const long long n = t.rank;
  const std::string sphere = "Mod(S_" + std::to_string(n + 2) + ")";
  switch (t.family) {
    case Family::A:
      e.out_group = "C2";
      e.out_mod_center = "C2";
      e.comm = sphere;
      e.mod_index = 2 * (n + 2);
      e.tv_group = "trivial";
      break;
    case Family::B:
      e.out_group = "(Z x| C2) x C2";
      e.out_mod_center = "C2 x C2";
      e.comm = sphere;
      e.mod_index = 2 * (n + 1) * (n + 2);
      e.tv_group = "Z";
      break;
    case Family::AffA:
      e.out_group = "D_" + std::to_string(2 * n) + " x C2";
      e.out_mod_center = e.out_group;  // trivial centre
      e.comm = sphere;
      e.mod_index = 2 * n * (n + 1) * (n + 2);
      e.tv_group = "trivial";
      break;
    case Family::AffC:
      e.out_group = "Sym(3) x C2";
      e.out_mod_center = e.out_group;  // trivial centre
      e.comm = sphere;
      e.mod_index = 2 * n * (n + 1) * (n + 2);
      e.splitting_caveat = n % 3 == 2;
      e.tv_group = "trivial";
      if (e.splitting_caveat)
        e.notes =
            "Aut contains no copy of Sym(3) at this rank; the extension of "
            "Out by Inn does not split";
      break;
    case Family::I2:
      if (t.label % 2 == 0) {
        e.out_group = "D_inf x C2";
        e.tv_group = t.label == 4 ? "D_inf" : "Z";
        if (t.label == 4)
          e.notes =
              "the transvections are generated by eta^2 together with "
              "T0 = epsilon o eta o gamma";
      } else {
        e.out_group = "C2";
        e.out_mod_center = "units of Z/" + std::to_string(t.label) + "Z";
        e.tv_group = "trivial";
      }
      break;
    case Family::F4:
      e.tv_group = "Z";
      e.notes =
          "whether the transvection-by-length-class subgroup is proper in "
          "Aut, and its index if so, is not determined";
      break;
  }
  return e;
}

}  // namespace artin

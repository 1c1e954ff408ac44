#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/braid.hpp"
#include "artin/catalog.hpp"
#include "artin/center.hpp"
#include "artin/dihedral.hpp"
#include "artin/errors.hpp"
#include "artin/morphism.hpp"

namespace artin {

// Word equality across the supported groups. Type A is decided directly by
// the braid oracles; B, affine C and affine A are decided by pushing words
// through the catalog embeddings into the braid group, which are injective
// on these families; I2 has its own Garside engine. F4 words have no bound
// oracle.
inline bool group_equal(const GroupRef& g, const Word& u, const Word& v,
                        const OracleOptions& opts = {});

namespace detail {

inline bool braid_image_equal(const Morphism& embedding, int braid_rank,
                              const Word& u, const Word& v,
                              const OracleOptions& opts) {
  return braid_equal(BraidWord(braid_rank, embedding.apply(u)),
                     BraidWord(braid_rank, embedding.apply(v)), opts);
}

inline bool mod_center_equal(const ArtinType& t, const Word& u, const Word& v,
                             const OracleOptions& opts) {
  const CenterData c = center_data(t);
  if (c.trivial)
    throw unsupported_error("mod-centre oracle needs a nontrivial centre: " +
                            type_tag(t));
  const long long diff = exponent_sum(u) - exponent_sum(v);
  if (diff % c.d != 0) return false;
  const Word shifted = freely_reduced(concat(v, power(c.zeta, diff / c.d)));
  return group_equal(GroupRef::group(t), u, shifted, opts);
}

}  // namespace detail

inline bool group_equal(const GroupRef& g, const Word& u, const Word& v,
                        const OracleOptions& opts) {
  switch (g.kind) {
    case GroupKind::integer_line:
      return exponent_sum(u) == exponent_sum(v);
    case GroupKind::artin_mod_center:
      return detail::mod_center_equal(g.type, u, v, opts);
    case GroupKind::artin:
      break;
  }
  const ArtinType& t = g.type;
  switch (t.family) {
    case Family::A:
      return braid_equal(BraidWord(t.rank, u), BraidWord(t.rank, v), opts);
    case Family::B:
      return detail::braid_image_equal(embed_b_in_a(t.rank), t.rank, u, v,
                                       opts);
    case Family::AffC:
      return detail::braid_image_equal(embed_affc_in_a(t.rank), t.rank, u, v,
                                       opts);
    case Family::AffA:
      return detail::braid_image_equal(
          compose(affa_in_b(t.rank), embed_b_in_a(t.rank)), t.rank, u, v,
          opts);
    case Family::I2:
      return dihedral_equal(DihedralWord(t.label, u),
                            DihedralWord(t.label, v));
    case Family::F4:
      throw unsupported_error("no word equality oracle is bound for F4");
  }
  throw std::logic_error("group_equal: unhandled group");
}

inline bool central_in_group(const GroupRef& g, const Word& w,
                             const OracleOptions& opts = {}) {
  for (int i = 1; i <= g.rank(); ++i) {
    const Word gen{i};
    if (!group_equal(g, concat(w, gen), concat(gen, w), opts)) return false;
  }
  return true;
}

struct VerifyReport {
  bool ok = false;
  std::size_t checked = 0;
  std::vector<std::size_t> failures;  // indices into the domain relation list
};

// Checks every domain relation in the codomain. All failures are collected,
// not just the first; the harness wants the whole picture on a red check.
inline VerifyReport verify_morphism(const Morphism& f,
                                    const OracleOptions& opts = {}) {
  if (f.domain.kind != GroupKind::artin)
    throw std::invalid_argument("verify_morphism: domain must be a group");
  if (f.images.size() != static_cast<std::size_t>(f.domain.rank()))
    throw std::invalid_argument("verify_morphism: expected " +
                                std::to_string(f.domain.rank()) + " images");
  const Presentation p = presentation_of(f.domain.type);
  VerifyReport report;
  report.checked = p.relations.size();
  for (std::size_t idx = 0; idx < p.relations.size(); ++idx) {
    const auto& [lhs, rhs] = p.relations[idx];
    if (!group_equal(f.codomain, f.apply(lhs), f.apply(rhs), opts))
      report.failures.push_back(idx);
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace artin

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/braid.hpp"
#include "artin/catalog.hpp"
#include "artin/center.hpp"
#include "artin/dihedral.hpp"
#include "artin/oracle.hpp"
#include "artin/rng.hpp"
#include "artin/tables.hpp"
#include "artin/transvection.hpp"
#include "artin/version.hpp"

namespace artin {

struct ReportConfig {
  std::vector<int> ranks{3, 4, 5};
  std::uint64_t seed = 1;
  std::size_t letter_budget = default_letter_budget;
  std::size_t nf_threshold = 64;
  int random_pairs = 250;  // oracle cross-validation pairs per rank
  int max_word_len = 16;   // letters per random word

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct CheckResult {
  std::string id;
  std::string anchor;  // the identity or structure the check re-derives
  std::string params;
  std::string status;   // "pass" | "fail" | "skipped"
  std::string witness;  // failing data, or the reason for a skip
  double ms = 0.0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
  std::string version;
  ReportConfig config;
  std::vector<CheckResult> checks;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

namespace detail {

// A check body returns nothing on success and a witness string on failure.
// A blown letter budget is a skip, any other exception a failure; the
// report never aborts half way.
class CheckRunner {
 public:
  explicit CheckRunner(Report& report) : report_(report) {}

  void run(const std::string& id, const std::string& anchor,
           const std::string& params,
           const std::function<std::optional<std::string>()>& body) {
    CheckResult c;
    c.id = id;
    c.anchor = anchor;
    c.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (auto witness = body()) {
        c.status = "fail";
        c.witness = *witness;
      } else {
        c.status = "pass";
      }
    } catch (const budget_error& e) {
      c.status = "skipped";
      c.witness = e.what();
    } catch (const std::exception& e) {
      c.status = "fail";
      c.witness = e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
    if (c.status == "pass")
      ++report_.pass;
    else if (c.status == "fail")
      ++report_.fail;
    else
      ++report_.skipped;
    report_.checks.push_back(std::move(c));
  }

 private:
  Report& report_;
};

inline std::optional<std::string> ok() { return std::nullopt; }

inline std::optional<std::string> fail_with(std::string witness) {
  return std::optional<std::string>(std::move(witness));
}

inline std::string pair_witness(const Word& u, const Word& v) {
  return "'" + format_word(u) + "' vs '" + format_word(v) + "'";
}

// Equal words by construction: w against w with a defining relator spliced
// in at a random position.
inline Word insert_relator(const Word& w, int rank, SplitMix64& rng) {
  Word relator;
  if (rank >= 2 && rng.next() % 2 == 0) {
    const int i = static_cast<int>(rng.between(1, rank - 1));
    relator = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
  } else {
    const int i = static_cast<int>(rng.between(1, rank));
    relator = {i, -i};
  }
  Word out = w;
  const auto pos = static_cast<Word::difference_type>(rng.below(w.size() + 1));
  out.insert(out.begin() + pos, relator.begin(), relator.end());
  return out;
}

}  // namespace detail

inline Report run_report(const ReportConfig& config) {
  for (int n : config.ranks)
    if (n < 3 || n > 8)
      throw std::invalid_argument("report: ranks must lie in 3..8");

  Report report;
  report.version = toolkit_version;
  report.config = config;
  detail::CheckRunner checks(report);
  const OracleOptions opts{config.letter_budget, config.nf_threshold};
  using detail::fail_with;
  using detail::ok;
  using detail::pair_witness;

  constexpr int i2_min = 3, i2_max = 8;

  // ---- presentations ------------------------------------------------
  {
    std::vector<ArtinType> types;
    for (int n : config.ranks) {
      types.push_back(type_a(n));
      types.push_back(type_b(n));
      types.push_back(type_aff_a(n));
      types.push_back(type_aff_c(n));
    }
    for (int m = i2_min; m <= i2_max; ++m) types.push_back(type_i2(m));
    types.push_back(type_f4());
    for (const ArtinType& t : types) {
      checks.run("presentation." + type_tag(t),
                 "one alternating relation of length m_ij per finite bond",
                 type_tag(t), [&]() -> std::optional<std::string> {
                   const CoxeterMatrix m = coxeter_matrix(t);
                   const Presentation p = artin_relations(m);
                   std::size_t bonds = 0;
                   for (int i = 1; i <= m.rank; ++i)
                     for (int j = i + 1; j <= m.rank; ++j)
                       if (m.at(i, j) != infinite_bond) ++bonds;
                   if (p.relations.size() != bonds)
                     return fail_with("relation count " +
                                      std::to_string(p.relations.size()) +
                                      " != bond count " +
                                      std::to_string(bonds));
                   for (const auto& [lhs, rhs] : p.relations) {
                     const int i = lhs[0], j = rhs[0];
                     const int label = m.at(i, j);
                     if (static_cast<int>(lhs.size()) != label ||
                         static_cast<int>(rhs.size()) != label)
                       return fail_with("relation length != m_ij at " +
                                        pair_witness(lhs, rhs));
                     if (lhs != alternating_word(i, j, label) ||
                         rhs != alternating_word(j, i, label))
                       return fail_with("relation is not alternating: " +
                                        pair_witness(lhs, rhs));
                   }
                   return ok();
                 });
    }
    checks.run("word.codec", "parse and format are mutually inverse", "",
               [&]() -> std::optional<std::string> {
                 SplitMix64 rng(config.seed ^ 0xc0dec);
                 for (int trial = 0; trial < 200; ++trial) {
                   const Word w = rng.random_word(8, config.max_word_len);
                   if (parse_word(format_word(w)) != w)
                     return fail_with("round trip broke '" + format_word(w) +
                                      "'");
                 }
                 return parse_word("") == Word{}
                            ? ok()
                            : fail_with("empty text is not the empty word");
               });
  }

  // ---- braid oracles -------------------------------------------------
  for (int n : config.ranks) {
    const std::string tag = "A:" + std::to_string(n);
    checks.run("braid.relations." + tag,
               "defining relations hold under both equality strategies", tag,
               [&]() -> std::optional<std::string> {
                 const Presentation p = presentation_of(type_a(n));
                 for (const auto& [lhs, rhs] : p.relations) {
                   const BraidWord u(n, lhs), v(n, rhs);
                   if (artin_action(u, opts) != artin_action(v, opts))
                     return fail_with("action differs on " +
                                      pair_witness(lhs, rhs));
                   if (garside_nf(u) != garside_nf(v))
                     return fail_with("normal forms differ on " +
                                      pair_witness(lhs, rhs));
                 }
                 return ok();
               });
    checks.run("braid.oracle_agreement." + tag,
               "the free-group action and the normal form decide equality "
               "identically",
               tag, [&]() -> std::optional<std::string> {
                 SplitMix64 rng(config.seed + static_cast<std::uint64_t>(n));
                 for (int trial = 0; trial < config.random_pairs; ++trial) {
                   Word a = rng.random_word(n, config.max_word_len);
                   Word b = (trial % 4 == 0)
                                ? detail::insert_relator(a, n, rng)
                                : rng.random_word(n, config.max_word_len);
                   const bool via_action =
                       artin_action(BraidWord(n, a), opts) ==
                       artin_action(BraidWord(n, b), opts);
                   const bool via_nf = garside_normal_form(n, a) ==
                                       garside_normal_form(n, b);
                   if (via_action != via_nf)
                     return fail_with("oracles disagree on " +
                                      pair_witness(a, b));
                   if (trial % 4 == 0 && !via_action)
                     return fail_with("relator insertion changed the class "
                                      "of " +
                                      pair_witness(a, b));
                 }
                 return ok();
               });
    checks.run("braid.congruence." + tag,
               "equality is stable under multiplying both sides", tag,
               [&]() -> std::optional<std::string> {
                 SplitMix64 rng(config.seed + 100 +
                                static_cast<std::uint64_t>(n));
                 for (int trial = 0; trial < 40; ++trial) {
                   const Word a = rng.random_word(n, 10);
                   const Word b = detail::insert_relator(a, n, rng);
                   const Word w = rng.random_word(n, 6);
                   if (!braid_equal(BraidWord(n, concat(w, a)),
                                    BraidWord(n, concat(w, b)), opts) ||
                       !braid_equal(BraidWord(n, concat(a, w)),
                                    BraidWord(n, concat(b, w)), opts))
                     return fail_with(pair_witness(a, b));
                 }
                 return ok();
               });
    checks.run("braid.class_functions." + tag,
               "length and strand permutation only depend on the element",
               tag, [&]() -> std::optional<std::string> {
                 SplitMix64 rng(config.seed + 200 +
                                static_cast<std::uint64_t>(n));
                 for (int trial = 0; trial < 60; ++trial) {
                   const Word a = rng.random_word(n, config.max_word_len);
                   const Word b = detail::insert_relator(a, n, rng);
                   if (braid_length(BraidWord(n, a)) !=
                       braid_length(BraidWord(n, b)))
                     return fail_with("length differs: " + pair_witness(a, b));
                   if (!(braid_perm(BraidWord(n, a)) ==
                         braid_perm(BraidWord(n, b))))
                     return fail_with("permutation differs: " +
                                      pair_witness(a, b));
                 }
                 return ok();
               });
  }
  checks.run("braid.strategy_overlap",
             "short-word and long-word strategies agree where both run",
             "threshold=" + std::to_string(config.nf_threshold),
             [&]() -> std::optional<std::string> {
               const int n = config.ranks.front();
               SplitMix64 rng(config.seed ^ 0x5eed);
               int decided = 0;
               for (int trial = 0; trial < 30; ++trial) {
                 // long enough to exercise the normal-form regime, short
                 // enough that the action usually fits its budget
                 const int len = 24 + static_cast<int>(rng.below(13));
                 Word a;
                 while (static_cast<int>(a.size()) < len)
                   a.push_back(static_cast<int>(rng.between(1, n)) *
                               (rng.next() % 2 ? 1 : -1));
                 const Word b = detail::insert_relator(a, n, rng);
                 bool via_action = false;
                 try {
                   via_action = artin_action(BraidWord(n, a), opts) ==
                                artin_action(BraidWord(n, b), opts);
                 } catch (const budget_error&) {
                   continue;  // this pair only reaches the normal-form side
                 }
                 const bool via_nf =
                     garside_normal_form(n, a) == garside_normal_form(n, b);
                 if (!via_action || !via_nf)
                   return fail_with(pair_witness(a, b));
                 ++decided;
               }
               if (decided < 10)
                 throw budget_error(
                     "braid.strategy_overlap: the letter budget left fewer "
                     "than 10 of 30 pairs decided by both strategies");
               return ok();
             });
  checks.run("oracle.bindings",
             "equality in B, affine A and affine C is decided through the "
             "braid embeddings, taken to be isomorphisms onto their images; "
             "I2 has its own engine and F4 none",
             "", [&]() -> std::optional<std::string> {
               const int n = config.ranks.front();
               if (!group_equal(GroupRef::group(type_b(n)), {1, 2, 1},
                                {2, 1, 2}, opts))
                 return fail_with("B binding");
               if (!group_equal(GroupRef::group(type_aff_a(n)), {1, 2, 1},
                                {2, 1, 2}, opts))
                 return fail_with("affine A binding");
               if (!group_equal(GroupRef::group(type_aff_c(n)), {1, 2, 1, 2},
                                {2, 1, 2, 1}, opts))
                 return fail_with("affine C binding");
               if (!group_equal(GroupRef::group(type_i2(5)), {1, 2, 1, 2, 1},
                                {2, 1, 2, 1, 2}, opts))
                 return fail_with("I2 binding");
               try {
                 group_equal(GroupRef::group(type_f4()), {1}, {1}, opts);
                 return fail_with("F4 unexpectedly bound");
               } catch (const unsupported_error&) {
               }
               return ok();
             });

  // ---- dihedral oracle -------------------------------------------------
  for (int m = i2_min; m <= i2_max; ++m) {
    const std::string tag = "I2:" + std::to_string(m);
    checks.run("dihedral.relation." + tag,
               "the two sides of the alternating relation are one element",
               tag, [&]() -> std::optional<std::string> {
                 const Presentation p = presentation_of(type_i2(m));
                 const auto& [lhs, rhs] = p.relations.front();
                 return dihedral_equal(DihedralWord(m, lhs),
                                       DihedralWord(m, rhs))
                            ? ok()
                            : fail_with(pair_witness(lhs, rhs));
               });
    checks.run("dihedral.center." + tag,
               "the designated centre word commutes with both generators",
               tag, [&]() -> std::optional<std::string> {
                 const Word zeta = center_data(type_i2(m)).zeta;
                 for (int g = 1; g <= 2; ++g) {
                   const Word gen{g};
                   if (!dihedral_equal(DihedralWord(m, concat(zeta, gen)),
                                       DihedralWord(m, concat(gen, zeta))))
                     return fail_with("generator " + std::to_string(g));
                 }
                 return ok();
               });
  }
  checks.run("dihedral.cross_check",
             "the dihedral engine and the braid engine agree where both "
             "apply",
             "I2:3", [&]() -> std::optional<std::string> {
               SplitMix64 rng(config.seed ^ 0xd1);
               for (int trial = 0; trial < 200; ++trial) {
                 const Word a = rng.random_word(2, 10);
                 const Word b = rng.random_word(2, 10);
                 const bool di = dihedral_equal(DihedralWord(3, a),
                                                DihedralWord(3, b));
                 const bool br =
                     braid_equal(BraidWord(2, a), BraidWord(2, b), opts);
                 if (di != br) return fail_with(pair_witness(a, b));
               }
               return ok();
             });

  // ---- centres ---------------------------------------------------------
  for (int n : config.ranks) {
    const std::string atag = "A:" + std::to_string(n);
    checks.run("center.full_twist." + atag,
               "the full twist is central and has length n(n+1)", atag,
               [&]() -> std::optional<std::string> {
                 const CenterData c = center_data(type_a(n));
                 const BraidWord zeta(n, c.zeta);
                 if (braid_length(zeta) !=
                     static_cast<long long>(n) * (n + 1))
                   return fail_with("length " +
                                    std::to_string(braid_length(zeta)));
                 if (!is_central(zeta, opts))
                   return fail_with("not central");
                 if (c.d != static_cast<long long>(n) * (n + 1))
                   return fail_with("d mismatch");
                 return ok();
               });
    checks.run("center.mod." + atag,
               "equality mod centre sees exactly the central twists", atag,
               [&]() -> std::optional<std::string> {
                 const Word zeta = center_data(type_a(n)).zeta;
                 const BraidWord s1(n, {1});
                 if (!equal_mod_center(s1, BraidWord(n, concat(Word{1}, zeta)),
                                       opts))
                   return fail_with("s1 != s1 zeta mod centre");
                 if (equal_mod_center(s1, BraidWord(n, {2}), opts))
                   return fail_with("s1 == s2 mod centre");
                 if (!equal_mod_center(s1, s1, opts))
                   return fail_with("reflexivity");
                 return ok();
               });
    const std::string btag = "B:" + std::to_string(n);
    checks.run("center.B_embedded." + btag,
               "the image of delta^n is central in the braid group", btag,
               [&]() -> std::optional<std::string> {
                 const Morphism embed = embed_b_in_a(n);
                 const Word image = embed.apply(center_data(type_b(n)).zeta);
                 return is_central(BraidWord(n, image), opts)
                            ? ok()
                            : fail_with("image " + format_word(image));
               });
    checks.run("center.B_abelianized." + btag,
               "the centre generator abelianizes to (n(n-1), n)", btag,
               [&]() -> std::optional<std::string> {
                 const CenterData c = center_data(type_b(n));
                 const AbValue expect{
                     true, static_cast<long long>(n) * (n - 1), n};
                 return c.ab_image == expect
                            ? ok()
                            : fail_with(format_ab_value(c.ab_image));
               });
  }
  for (int m = i2_min; m <= i2_max; m += 1) {
    if (m % 2 != 0) continue;
    checks.run("center.I2_abelianized.I2:" + std::to_string(m),
               "the centre generator abelianizes to (m/2, m/2)",
               "I2:" + std::to_string(m), [&]() -> std::optional<std::string> {
                 const CenterData c = center_data(type_i2(m));
                 const AbValue expect{true, m / 2, m / 2};
                 return c.ab_image == expect
                            ? ok()
                            : fail_with(format_ab_value(c.ab_image));
               });
  }
  checks.run("center.I2_odd_provenance",
             "for odd m the centre generator (ab)^m with d = 2m is imported "
             "data; its centrality is machine-checked here",
             "m=3,5,7", [&]() -> std::optional<std::string> {
               for (int m : {3, 5, 7}) {
                 const CenterData c = center_data(type_i2(m));
                 if (c.d != 2LL * m)
                   return fail_with("d at m=" + std::to_string(m));
                 if (c.zeta != power(Word{1, 2}, m))
                   return fail_with("zeta at m=" + std::to_string(m));
                 for (int g = 1; g <= 2; ++g) {
                   const Word gen{g};
                   if (!dihedral_equal(DihedralWord(m, concat(c.zeta, gen)),
                                       DihedralWord(m, concat(gen, c.zeta))))
                     return fail_with("centrality at m=" + std::to_string(m));
                 }
               }
               return ok();
             });
  checks.run("center.F4_abelianized",
             "the centre generator abelianizes to (12, 12) with d = 24", "F4",
             [&]() -> std::optional<std::string> {
               const CenterData c = center_data(type_f4());
               if (c.d != 24) return fail_with("d = " + std::to_string(c.d));
               const AbValue expect{true, 12, 12};
               return c.ab_image == expect
                          ? ok()
                          : fail_with(format_ab_value(c.ab_image));
             });

  // ---- morphism catalog --------------------------------------------
  const auto verify_check = [&](const std::string& id, const Morphism& f,
                                const std::string& anchor,
                                const std::string& params) {
    checks.run(id, anchor, params, [&]() -> std::optional<std::string> {
      const VerifyReport r = verify_morphism(f, opts);
      if (r.ok) return ok();
      std::string witness = "failing relations:";
      for (std::size_t idx : r.failures)
        witness += " #" + std::to_string(idx + 1);
      return fail_with(witness);
    });
  };
  for (int n : config.ranks) {
    const std::string ns = std::to_string(n);
    verify_check("morphism.embed_B_in_A.B:" + ns, embed_b_in_a(n),
                 "s_i -> sigma_i, s_n -> sigma_n^2 respects the relations",
                 "n=" + ns);
    verify_check("morphism.embed_AffC_in_A.AffC:" + ns, embed_affc_in_a(n),
                 "doubling the two end generators respects the relations",
                 "n=" + ns);
    verify_check("morphism.epsilon.A:" + ns, inversion(type_a(n)),
                 "inverting every generator is an endomorphism", "n=" + ns);
    verify_check("morphism.epsilon.B:" + ns, inversion(type_b(n)),
                 "inverting every generator is an endomorphism", "n=" + ns);
    verify_check("morphism.affA_in_B.AffA:" + ns, affa_in_b(n),
                 "the delta-conjugates of s_1 satisfy the cycle relations",
                 "n=" + ns);
    verify_check("morphism.angular_projection.B:" + ns, angular_projection(n),
                 "counting s_n exponents is a homomorphism to Z", "n=" + ns);
    verify_check("morphism.graph_rotation.AffA:" + ns, graph_rotation(n, 1),
                 "rotating the cycle diagram relabels the presentation",
                 "n=" + ns);
    verify_check("morphism.graph_reflection.AffA:" + ns,
                 graph_reflection(n, 1),
                 "reflecting the cycle diagram relabels the presentation",
                 "n=" + ns);
  }
  for (int m = i2_min; m <= i2_max; ++m) {
    const std::string ms = std::to_string(m);
    verify_check("morphism.epsilon.I2:" + ms, inversion(type_i2(m)),
                 "inverting every generator is an endomorphism", "m=" + ms);
    if (m % 2 == 0) {
      verify_check("morphism.eta.I2:" + ms, eta_i2(m),
                   "a -> aba, b -> a^-1 respects the alternating relation",
                   "m=" + ms);
    } else {
      // a -> aba doubles length and b -> a^-1 negates it, so the relation
      // sides get different lengths for odd m; the verifier must say so
      checks.run("morphism.eta_rejected.I2:" + ms,
                 "for odd m the a -> aba, b -> a^-1 substitution breaks the "
                 "relation and verification reports it",
                 "m=" + ms, [&]() -> std::optional<std::string> {
                   const VerifyReport r = verify_morphism(eta_i2(m), opts);
                   return r.ok ? fail_with(
                                     "the broken substitution verified clean")
                               : ok();
                 });
    }
    verify_check("morphism.gamma.I2:" + ms, gamma_i2(m),
                 "swapping the generators respects the alternating relation",
                 "m=" + ms);
  }
  verify_check("morphism.T0.I2:4", t0_i2(),
               "a -> a, b -> (aba)^-1 respects abab = baba", "m=4");
  checks.run("morphism.length_classes",
             "inversion reverses length, the identity preserves it, tau "
             "does neither",
             "", [&]() -> std::optional<std::string> {
               if (length_class(inversion(type_a(3))) !=
                   LengthClass::reversing)
                 return fail_with("epsilon is not length reversing");
               if (length_class(identity_morphism(GroupRef::group(
                       type_a(3)))) != LengthClass::preserving)
                 return fail_with("identity is not length preserving");
               const Morphism tau = tau_b(3);
               if (length_class(tau) != LengthClass::neither)
                 return fail_with("tau_B(3) classified as +-length");
               if (exponent_sum(tau.images.back()) != -5)
                 return fail_with(
                     "l(tau(s_3)) = " +
                     std::to_string(exponent_sum(tau.images.back())));
               return ok();
             });
  checks.run("morphism.epsilon_antilength",
             "inversion negates the length of every word", "",
             [&]() -> std::optional<std::string> {
               SplitMix64 rng(config.seed ^ 0xe5);
               const Morphism eps = inversion(type_a(4));
               for (int trial = 0; trial < 100; ++trial) {
                 const Word w = rng.random_word(4, config.max_word_len);
                 if (exponent_sum(eps.apply(w)) != -exponent_sum(w))
                   return fail_with("'" + format_word(w) + "'");
               }
               return ok();
             });
  for (int n : config.ranks) {
    if (n > 5) continue;  // involution checked at the desk-scale ranks
    const std::string ns = std::to_string(n);
    verify_check("morphism.tau_B.B:" + ns, tau_b(n),
                 "the graph involution extends to the whole group",
                 "n=" + ns);
    checks.run("morphism.tau_involution.B:" + ns,
               "tau composed with itself fixes every generator", "n=" + ns,
               [&]() -> std::optional<std::string> {
                 const Morphism square = compose(tau_b(n), tau_b(n));
                 const GroupRef b = GroupRef::group(type_b(n));
                 for (int i = 1; i <= n; ++i) {
                   if (!group_equal(b, square.images[(std::size_t)i - 1],
                                    Word{i}, opts))
                     return fail_with("generator " + std::to_string(i));
                 }
                 return ok();
               });
  }

  // ---- semidirect structure of B ------------------------------------
  for (int n : config.ranks) {
    const std::string ns = std::to_string(n);
    checks.run("semidirect.rotation.B:" + ns,
               "conjugation by delta rotates the affine cycle generators",
               "n=" + ns, [&]() -> std::optional<std::string> {
                 const Morphism aff = affa_in_b(n);
                 Word delta;
                 for (int i = 1; i <= n; ++i) delta.push_back(i);
                 const GroupRef b = GroupRef::group(type_b(n));
                 for (int i = 1; i <= n; ++i) {
                   const Word& t_i = aff.images[(std::size_t)i - 1];
                   const Word& t_next = aff.images[(std::size_t)(i % n)];
                   const Word conj = freely_reduced(
                       concat(concat(delta, t_i), inverse(delta)));
                   if (!group_equal(b, conj, t_next, opts))
                     return fail_with("t_" + std::to_string(i));
                 }
                 return ok();
               });
    checks.run("semidirect.projection.B:" + ns,
               "the angular projection kills the cycle generators and sends "
               "delta to 1",
               "n=" + ns, [&]() -> std::optional<std::string> {
                 const Morphism aff = affa_in_b(n);
                 const Morphism proj = angular_projection(n);
                 for (int i = 1; i <= n; ++i)
                   if (exponent_sum(
                           proj.apply(aff.images[(std::size_t)i - 1])) != 0)
                     return fail_with("t_" + std::to_string(i));
                 Word delta;
                 for (int i = 1; i <= n; ++i) delta.push_back(i);
                 if (exponent_sum(proj.apply(delta)) != 1)
                   return fail_with("delta");
                 return ok();
               });
  }

  // ---- lifting mod centre --------------------------------------------
  for (const ArtinType& t : {type_a(3), type_b(3)}) {
    const std::string tag = type_tag(t);
    checks.run("lift.identity." + tag,
               "the identity is recovered from centrally perturbed images",
               tag, [&]() -> std::optional<std::string> {
                 const CenterData c = center_data(t);
                 SplitMix64 rng(config.seed ^ 0x11f7);
                 std::vector<Word> images;
                 for (int i = 1; i <= t.rank; ++i)
                   images.push_back(freely_reduced(concat(
                       Word{i}, power(c.zeta, rng.between(-2, 2)))));
                 const Morphism lifted = lift_mod_center(t, images, +1);
                 const GroupRef g = GroupRef::group(t);
                 for (int i = 1; i <= t.rank; ++i)
                   if (!group_equal(g, lifted.images[(std::size_t)i - 1],
                                    Word{i}, opts))
                     return fail_with("generator " + std::to_string(i));
                 return ok();
               });
    checks.run("lift.epsilon." + tag,
               "the inversion is recovered from centrally perturbed images",
               tag, [&]() -> std::optional<std::string> {
                 const CenterData c = center_data(t);
                 SplitMix64 rng(config.seed ^ 0x11f8);
                 std::vector<Word> images;
                 for (int i = 1; i <= t.rank; ++i)
                   images.push_back(freely_reduced(concat(
                       Word{-i}, power(c.zeta, rng.between(-2, 2)))));
                 const Morphism lifted = lift_mod_center(t, images, -1);
                 const GroupRef g = GroupRef::group(t);
                 for (int i = 1; i <= t.rank; ++i)
                   if (!group_equal(g, lifted.images[(std::size_t)i - 1],
                                    Word{-i}, opts))
                     return fail_with("generator " + std::to_string(i));
                 return ok();
               });
  }
  checks.run("lift.rejects_bad_residue",
             "images with length not congruent to the sense mod d cannot "
             "lift",
             "A:3", [&]() -> std::optional<std::string> {
               std::vector<Word> images{{1, 2}, {2}, {3}};
               try {
                 lift_mod_center(type_a(3), images, +1);
               } catch (const not_liftable_error&) {
                 return ok();
               }
               return fail_with("lift accepted length 2 against sense +1");
             });

  // ---- transvections ---------------------------------------------------
  for (int n : config.ranks) {
    const std::string ns = std::to_string(n);
    checks.run("tv.exponent.B:" + ns,
               "the zeta exponent is 1 + (p(n-1) + q)n", "n=" + ns,
               [&]() -> std::optional<std::string> {
                 for (long long p = -2; p <= 2; ++p)
                   for (long long q = -2; q <= 2; ++q) {
                     const long long k =
                         zeta_exponent(transvection(type_b(n), p, q));
                     if (k != 1 + (p * (n - 1) + q) * n)
                       return fail_with("p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
                   }
                 return ok();
               });
  }
  checks.run("tv.exponent.I2", "the zeta exponent is 1 + (p+q) m/2",
             "m=4,6,8", [&]() -> std::optional<std::string> {
               for (int m : {4, 6, 8})
                 for (long long p = -2; p <= 2; ++p)
                   for (long long q = -2; q <= 2; ++q) {
                     const long long k =
                         zeta_exponent(transvection(type_i2(m), p, q));
                     if (k != 1 + (p + q) * (m / 2))
                       return fail_with("m=" + std::to_string(m));
                   }
               return ok();
             });
  checks.run("tv.exponent.F4", "the zeta exponent is 1 + (p+q) 12", "F4",
             [&]() -> std::optional<std::string> {
               for (long long p = -2; p <= 2; ++p)
                 for (long long q = -2; q <= 2; ++q)
                   if (zeta_exponent(transvection(type_f4(), p, q)) !=
                       1 + (p + q) * 12)
                     return fail_with("p=" + std::to_string(p));
               return ok();
             });
  checks.run("tv.structure",
             "Tv is Z for B(n), F4 and even I2 >= 6, infinite dihedral for "
             "I2(4), trivial otherwise",
             "", [&]() -> std::optional<std::string> {
               using Kind = TvStructure::Kind;
               for (int n : config.ranks) {
                 const TvStructure s = tv_structure(type_b(n));
                 if (s.kind != Kind::infinite_cyclic || !s.generator ||
                     s.generator->p != 1 || s.generator->q != -(n - 1))
                   return fail_with("B:" + std::to_string(n));
                 if (!is_automorphism(*s.generator))
                   return fail_with("B generator is no automorphism");
               }
               if (tv_structure(type_f4()).kind != Kind::infinite_cyclic)
                 return fail_with("F4");
               for (int m : {6, 8}) {
                 const TvStructure s = tv_structure(type_i2(m));
                 if (s.kind != Kind::infinite_cyclic || !s.generator ||
                     s.generator->q != -1)
                   return fail_with("I2:" + std::to_string(m));
               }
               const TvStructure d = tv_structure(type_i2(4));
               if (d.kind != Kind::infinite_dihedral || !d.reflection ||
                   d.reflection->q != -1 || d.reflection->p != 0)
                 return fail_with("I2:4");
               if (tv_structure(type_a(4)).kind != Kind::trivial)
                 return fail_with("A:4");
               if (tv_structure(type_i2(5)).kind != Kind::trivial)
                 return fail_with("I2:5");
               return ok();
             });
  checks.run("tv.word_level.B:3",
             "the generating transvection respects the relations at word "
             "level",
             "n=3", [&]() -> std::optional<std::string> {
               const TvStructure s = tv_structure(type_b(3));
               const VerifyReport r =
                   verify_morphism(tv_as_morphism(*s.generator), opts);
               return r.ok ? ok() : fail_with("relations fail");
             });
  checks.run("tv.epsilon_commutes.B:3",
             "conjugating a transvection by the inversion fixes it", "n=3",
             [&]() -> std::optional<std::string> {
               const Morphism t = tv_as_morphism(
                   *tv_structure(type_b(3)).generator);
               const Morphism eps = inversion(type_b(3));
               const Morphism round = compose(compose(eps, t), eps);
               const GroupRef b = GroupRef::group(type_b(3));
               for (int i = 1; i <= 3; ++i)
                 if (!group_equal(b, round.images[(std::size_t)i - 1],
                                  t.images[(std::size_t)i - 1], opts))
                   return fail_with("generator " + std::to_string(i));
               return ok();
             });
  checks.run("tv.T0_identity.I2:4",
             "T0 equals inversion after eta after gamma, and matches the "
             "(0,-1) transvection",
             "m=4", [&]() -> std::optional<std::string> {
               const Morphism chain =
                   compose(compose(gamma_i2(4), eta_i2(4)), inversion(type_i2(4)));
               const Morphism t0 = t0_i2();
               const Morphism refl = tv_as_morphism(
                   *tv_structure(type_i2(4)).reflection);
               const GroupRef g = GroupRef::group(type_i2(4));
               for (int i = 1; i <= 2; ++i) {
                 const auto idx = static_cast<std::size_t>(i - 1);
                 if (!group_equal(g, chain.images[idx], t0.images[idx], opts))
                   return fail_with("chain generator " + std::to_string(i));
                 if (!group_equal(g, refl.images[idx], t0.images[idx], opts))
                   return fail_with("transvection generator " +
                                    std::to_string(i));
               }
               return ok();
             });
  checks.run("tv.compose",
             "parameters add or subtract with the zeta exponent, which is "
             "multiplicative",
             "", [&]() -> std::optional<std::string> {
               const Transvection a = transvection(type_b(3), 1LL, -2LL);
               const Transvection b = transvection(type_b(3), 2LL, -4LL);
               const Transvection sum = tv_compose(a, b);
               if (sum.p != 3 || sum.q != -6) return fail_with("B:3 sum");
               const Transvection t0 = transvection(type_i2(4), 0LL, -1LL);
               const Transvection sq = tv_compose(t0, t0);
               if (sq.p != 0 || sq.q != 0)
                 return fail_with("T0 squared is not the identity");
               SplitMix64 rng(config.seed ^ 0x70);
               for (int trial = 0; trial < 50; ++trial) {
                 // automorphism parameters of I2(4): q = -p or q = -p - 1
                 const long long p1 = rng.between(-5, 5);
                 const long long p2 = rng.between(-5, 5);
                 const Transvection u =
                     transvection(type_i2(4), p1,
                                  rng.next() % 2 ? -p1 : -p1 - 1);
                 const Transvection v =
                     transvection(type_i2(4), p2,
                                  rng.next() % 2 ? -p2 : -p2 - 1);
                 if (zeta_exponent(tv_compose(u, v)) !=
                     zeta_exponent(u) * zeta_exponent(v))
                   return fail_with("exponent is not multiplicative");
               }
               try {
                 tv_compose(transvection(type_b(3), 1LL, 0LL),
                            transvection(type_b(3), 0LL, 0LL));
                 return fail_with("composed through a non-automorphism");
               } catch (const std::invalid_argument&) {
               }
               return ok();
             });

  // ---- commensurator sequence ---------------------------------------
  for (long long d : {6LL, 12LL, 24LL}) {
    const std::string ds = std::to_string(d);
    checks.run("comm.sequence.d=" + ds,
               "the recurrence gives pairwise coprime values congruent to 1 "
               "mod d",
               "d=" + ds, [&]() -> std::optional<std::string> {
                 const std::vector<BigInt> seq = comm_sequence(d, 6);
                 if (seq.front() != 1 + d) return fail_with("n_1 != 1+d");
                 if (d == 6 &&
                     (seq[0] != 7 || seq[1] != 43 || seq[2] != 1807))
                   return fail_with("prefix mismatch");
                 for (const BigInt& v : seq)
                   if (v % d != 1)
                     return fail_with("value not 1 mod d: " + v.str());
                 for (std::size_t i = 0; i < seq.size(); ++i)
                   for (std::size_t j = i + 1; j < seq.size(); ++j)
                     if (gcd(seq[i], seq[j]) != 1)
                       return fail_with("gcd(" + seq[i].str() + ", " +
                                        seq[j].str() + ") != 1");
                 return ok();
               });
    checks.run("comm.composition.d=" + ds,
               "composing the length-multiple transvections multiplies "
               "their zeta exponents",
               "d=" + ds, [&]() -> std::optional<std::string> {
                 for (long long m = 0; m < 10; ++m)
                   for (long long k = 0; k < 10; ++k)
                     if (!comm_compose_check(d, m, k))
                       return fail_with("m=" + std::to_string(m) +
                                        " k=" + std::to_string(k));
                 return ok();
               });
  }

  // ---- reference tables ----------------------------------------------
  checks.run("tables.consistency",
             "indices follow the rank formulas and the splitting caveat "
             "sits exactly at rank 2 mod 3",
             "n=3..8", [&]() -> std::optional<std::string> {
               for (int n = 3; n <= 8; ++n) {
                 const long long nn = n;
                 if (reference_entry(type_a(n)).mod_index != 2 * (nn + 2))
                   return fail_with("A index at n=" + std::to_string(n));
                 if (reference_entry(type_b(n)).mod_index !=
                     2 * (nn + 1) * (nn + 2))
                   return fail_with("B index at n=" + std::to_string(n));
                 const ReferenceEntry affa = reference_entry(type_aff_a(n));
                 const ReferenceEntry affc = reference_entry(type_aff_c(n));
                 if (affa.mod_index != 2 * nn * (nn + 1) * (nn + 2) ||
                     affc.mod_index != affa.mod_index)
                   return fail_with("affine index at n=" + std::to_string(n));
                 if (affc.splitting_caveat != (n % 3 == 2))
                   return fail_with("caveat at n=" + std::to_string(n));
                 if (affa.splitting_caveat ||
                     reference_entry(type_a(n)).splitting_caveat ||
                     reference_entry(type_b(n)).splitting_caveat)
                   return fail_with("stray caveat at n=" + std::to_string(n));
                 const std::string sphere =
                     "Mod(S_" + std::to_string(n + 2) + ")";
                 if (reference_entry(type_a(n)).comm != sphere ||
                     reference_entry(type_b(n)).comm != sphere ||
                     affa.comm != sphere || affc.comm != sphere)
                   return fail_with("commensurator at n=" + std::to_string(n));
               }
               return ok();
             });

  return report;
}

// ---- serialization ----------------------------------------------------

inline nlohmann::json report_to_json(const Report& report) {
  nlohmann::json j;
  j["version"] = report.version;
  j["config"] = {
      {"ranks", report.config.ranks},
      {"seed", report.config.seed},
      {"budgets",
       {{"letter_budget", report.config.letter_budget},
        {"nf_threshold", report.config.nf_threshold},
        {"random_pairs", report.config.random_pairs},
        {"max_word_len", report.config.max_word_len}}},
  };
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json jc{{"id", c.id},
                      {"anchor", c.anchor},
                      {"params", c.params},
                      {"status", c.status},
                      {"ms", c.ms}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {
      {"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}};
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report report;
  report.version = j.at("version").get<std::string>();
  const auto& config = j.at("config");
  report.config.ranks = config.at("ranks").get<std::vector<int>>();
  report.config.seed = config.at("seed").get<std::uint64_t>();
  const auto& budgets = config.at("budgets");
  report.config.letter_budget = budgets.at("letter_budget").get<std::size_t>();
  report.config.nf_threshold = budgets.at("nf_threshold").get<std::size_t>();
  report.config.random_pairs = budgets.at("random_pairs").get<int>();
  report.config.max_word_len = budgets.at("max_word_len").get<int>();
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.id = jc.at("id").get<std::string>();
    c.anchor = jc.at("anchor").get<std::string>();
    c.params = jc.at("params").get<std::string>();
    c.status = jc.at("status").get<std::string>();
    if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
    c.ms = jc.at("ms").get<double>();
    report.checks.push_back(std::move(c));
  }
  const auto& summary = j.at("summary");
  report.pass = summary.at("pass").get<int>();
  report.fail = summary.at("fail").get<int>();
  report.skipped = summary.at("skipped").get<int>();
  return report;
}

inline std::string report_to_text(const Report& report) {
  std::string out;
  out += "artin toolkit " + report.version +
         " seed=" + std::to_string(report.config.seed) + " ranks=";
  for (std::size_t i = 0; i < report.config.ranks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(report.config.ranks[i]);
  }
  out += "\n";
  for (const CheckResult& c : report.checks) {
    const std::string badge = c.status == "pass"   ? "[PASS]"
                              : c.status == "fail" ? "[FAIL]"
                                                   : "[SKIP]";
    out += badge + " " + c.id + " (" + c.anchor + ")";
    if (!c.witness.empty()) out += " -- " + c.witness;
    out += "\n";
  }
  out += "summary: " + std::to_string(report.pass) + " pass, " +
         std::to_string(report.fail) + " fail, " +
         std::to_string(report.skipped) + " skipped\n";
  return out;
}

}  // namespace artin

// Command line front end: word equality oracles, normal forms, morphism
// verification, transvection arithmetic and the full verification report.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "artin/braid.hpp"
#include "artin/catalog.hpp"
#include "artin/oracle.hpp"
#include "artin/report.hpp"
#include "artin/transvection.hpp"
#include "artin/version.hpp"

namespace {

// The braid engine itself works at any rank >= 1, below the catalog's
// standing n >= 3; tags like A:2 are meaningful for eq/nf/perm/len.
struct BraidTag {
  int rank = 0;
  bool mod_center = false;
};

std::optional<BraidTag> parse_braid_tag(std::string tag) {
  BraidTag out;
  if (tag.size() > 2 && tag.ends_with("/Z")) {
    out.mod_center = true;
    tag = tag.substr(0, tag.size() - 2);
  }
  if (!tag.starts_with("A:")) return std::nullopt;
  try {
    std::size_t used = 0;
    out.rank = std::stoi(tag.substr(2), &used);
    if (2 + used != tag.size() || out.rank < 1) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return out;
}

std::vector<int> parse_rank_list(const std::string& text) {
  std::vector<int> ranks;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    ranks.push_back(std::stoi(token));
  }
  if (ranks.empty())
    throw std::invalid_argument("ranks: expected a comma separated list");
  return ranks;
}

int rank_bound(const artin::GroupRef& g) {
  return g.kind == artin::GroupKind::integer_line ? 1 : g.type.rank;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace artin;

  CLI::App app{"word-level computations in Artin groups of types A, B, "
               "affine A, affine C, I2(m) and F4"};
  app.set_version_flag("--version", std::string(toolkit_version));
  app.require_subcommand(1);

  // eq
  std::string eq_type;
  std::vector<std::string> eq_words;
  CLI::App* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("--type", eq_type, "group tag, e.g. A:3, B:4, I2:5, A:3/Z")
      ->required();
  eq->add_option("words", eq_words, "the two words")->expected(2);

  // nf
  std::string nf_type;
  std::string nf_word;
  CLI::App* nf = app.add_subcommand("nf", "Garside normal form of a braid word");
  nf->add_option("--type", nf_type, "braid group tag A:n")->required();
  nf->add_option("word", nf_word, "the word")->required();

  // len
  std::string len_type;
  std::string len_word;
  CLI::App* len = app.add_subcommand("len", "image under the length homomorphism");
  len->add_option("--type", len_type, "group tag")->required();
  len->add_option("word", len_word, "the word")->required();

  // perm
  std::string perm_type;
  std::string perm_word;
  CLI::App* perm = app.add_subcommand("perm", "induced strand permutation");
  perm->add_option("--type", perm_type, "braid group tag A:n")->required();
  perm->add_option("word", perm_word, "the word")->required();

  // verify
  std::string verify_name;
  std::string verify_type;
  int verify_n = 0;
  int verify_k = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "check a catalog morphism against the "
                                   "domain relations");
  verify->add_option("--morphism", verify_name, "catalog name")->required();
  verify->add_option("--n", verify_n, "rank (or label m for the I2 maps)");
  verify->add_option("--type", verify_type,
                     "domain tag (epsilon takes any supported group)");
  verify->add_option("--k", verify_k,
                     "rotation amount / reflection axis for the graph maps");

  // tv
  std::string tv_type;
  std::optional<long long> tv_p, tv_q;
  std::string tv_apply_text;
  std::vector<long long> tv_comm;
  CLI::App* tv = app.add_subcommand("tv", "transvection arithmetic");
  tv->add_option("--type", tv_type, "group tag with nontrivial centre");
  tv->add_option("--p", tv_p, "first parameter (the only one for rank-one "
                              "abelianizations)");
  tv->add_option("--q", tv_q, "second parameter");
  tv->add_option("--apply", tv_apply_text, "word to transform");
  tv->add_option("--comm-seq", tv_comm,
                 "d and count: the pairwise coprime sequence 1+d, ...")
      ->expected(2);

  // report
  std::string report_ranks = "3,4,5";
  std::string report_format = "text";
  std::string report_out;
  ReportConfig config;
  CLI::App* report_cmd =
      app.add_subcommand("report", "run the verification report");
  report_cmd->add_option("--ranks", report_ranks, "comma separated ranks");
  report_cmd->add_option("--seed", config.seed, "random seed");
  report_cmd->add_option("--format", report_format, "text or json");
  report_cmd->add_option("--out", report_out, "write to this file");
  report_cmd->add_option("--pairs", config.random_pairs,
                         "random pairs per rank for oracle cross-validation");
  report_cmd->add_option("--max-len", config.max_word_len,
                         "letters per random word");
  report_cmd->add_option("--budget", config.letter_budget,
                         "free-word letter budget");
  report_cmd->add_option("--threshold", config.nf_threshold,
                         "switchover length to the normal-form strategy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  try {
    if (*eq) {
      bool result = false;
      if (const auto bt = parse_braid_tag(eq_type)) {
        const BraidWord u(bt->rank, parse_word(eq_words[0], bt->rank));
        const BraidWord v(bt->rank, parse_word(eq_words[1], bt->rank));
        result = bt->mod_center ? equal_mod_center(u, v) : braid_equal(u, v);
      } else {
        const GroupRef g = parse_group_tag(eq_type);
        result = group_equal(g, parse_word(eq_words[0], rank_bound(g)),
                             parse_word(eq_words[1], rank_bound(g)));
      }
      std::cout << (result ? "equal" : "not equal") << "\n";
      return 0;
    }
    if (*nf) {
      const auto bt = parse_braid_tag(nf_type);
      if (!bt || bt->mod_center)
        throw std::invalid_argument("nf: expected a braid group tag A:n");
      const GarsideNF form =
          garside_nf(BraidWord(bt->rank, parse_word(nf_word, bt->rank)));
      std::cout << "inf " << form.inf << "\n";
      for (const Perm& f : form.factors)
        std::cout << "factor " << format_perm(f) << "\n";
      return 0;
    }
    if (*len) {
      int bound = 0;
      if (const auto bt = parse_braid_tag(len_type))
        bound = bt->rank;
      else
        bound = rank_bound(parse_group_tag(len_type));
      std::cout << exponent_sum(parse_word(len_word, bound)) << "\n";
      return 0;
    }
    if (*perm) {
      const auto bt = parse_braid_tag(perm_type);
      if (!bt || bt->mod_center)
        throw std::invalid_argument("perm: expected a braid group tag A:n");
      std::cout << format_perm(braid_perm(
                       BraidWord(bt->rank, parse_word(perm_word, bt->rank))))
                << "\n";
      return 0;
    }
    if (*verify) {
      Morphism f;
      if (verify_name == "epsilon") {
        if (verify_type.empty() && verify_n > 0)
          f = inversion(type_a(verify_n));
        else if (!verify_type.empty()) {
          const GroupRef g = parse_group_tag(verify_type);
          if (g.kind != GroupKind::artin)
            throw std::invalid_argument("epsilon: expected a plain group tag");
          f = inversion(g.type);
        } else {
          throw std::invalid_argument("epsilon: give --type or --n");
        }
      } else {
        if (verify_n <= 0)
          throw std::invalid_argument("verify: --n is required for '" +
                                      verify_name + "'");
        f = catalog_morphism(verify_name, verify_n, verify_k);
      }
      const VerifyReport r = verify_morphism(f);
      if (r.ok) {
        std::cout << "ok (" << r.checked << " relations checked)\n";
        return 0;
      }
      std::cout << "failed relations:";
      for (std::size_t idx : r.failures) std::cout << " #" << (idx + 1);
      std::cout << " (of " << r.checked << ")\n";
      return 1;
    }
    if (*tv) {
      if (!tv_comm.empty()) {
        for (const BigInt& v :
             comm_sequence(tv_comm[0], static_cast<int>(tv_comm[1])))
          std::cout << v << "\n";
        return 0;
      }
      if (tv_type.empty() || !tv_p)
        throw std::invalid_argument("tv: give --type and --p, or --comm-seq");
      const GroupRef g = parse_group_tag(tv_type);
      if (g.kind != GroupKind::artin)
        throw std::invalid_argument("tv: expected a plain group tag");
      const Transvection t =
          has_rank_two_abelianization(g.type)
              ? transvection(g.type, *tv_p,
                             tv_q ? *tv_q
                                  : throw std::invalid_argument(
                                        "tv: this group needs --q"))
              : transvection(g.type, *tv_p);
      const long long k = zeta_exponent(t);
      std::cout << "zeta exponent " << k << "\n";
      std::cout << (is_automorphism(t) ? "automorphism" : "not an automorphism")
                << "\n";
      if (!tv_apply_text.empty())
        std::cout << format_word(
                         tv_apply(t, parse_word(tv_apply_text, g.type.rank)))
                  << "\n";
      return 0;
    }
    if (*report_cmd) {
      config.ranks = parse_rank_list(report_ranks);
      if (report_format != "text" && report_format != "json")
        throw std::invalid_argument("report: format must be text or json");
      const Report r = run_report(config);
      const std::string body = report_format == "json"
                                   ? report_to_json(r).dump(2) + "\n"
                                   : report_to_text(r);
      if (report_out.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(report_out);
        if (!out)
          throw std::invalid_argument("report: cannot write '" + report_out +
                                      "'");
        out << body;
        std::cout << "pass " << r.pass << ", fail " << r.fail << ", skipped "
                  << r.skipped << "\n";
      }
      return r.fail > 0 ? 1 : 0;
    }
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

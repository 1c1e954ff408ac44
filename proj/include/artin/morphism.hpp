#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin/center.hpp"
#include "artin/coxeter.hpp"
#include "artin/errors.hpp"
#include "artin/word.hpp"

namespace artin {

// A group a morphism can point at: one of the supported Artin groups, such
// a group modulo its centre, or the integer line Z (one generator, words
// compare by exponent sum).
enum class GroupKind { artin, artin_mod_center, integer_line };

struct GroupRef {
  GroupKind kind = GroupKind::artin;
  ArtinType type;

  static GroupRef group(const ArtinType& t) { return {GroupKind::artin, t}; }
  static GroupRef mod_center(const ArtinType& t) {
    return {GroupKind::artin_mod_center, t};
  }
  static GroupRef integers() { return {GroupKind::integer_line, ArtinType{}}; }

  int rank() const { return kind == GroupKind::integer_line ? 1 : type.rank; }

  friend bool operator==(const GroupRef&, const GroupRef&) = default;
};

inline std::string group_tag(const GroupRef& g) {
  switch (g.kind) {
    case GroupKind::artin: return type_tag(g.type);
    case GroupKind::artin_mod_center: return type_tag(g.type) + "/Z";
    case GroupKind::integer_line: return "Z";
  }
  return "?";
}

inline GroupRef parse_group_tag(const std::string& tag) {
  if (tag == "Z") return GroupRef::integers();
  if (tag.size() > 2 && tag.ends_with("/Z"))
    return GroupRef::mod_center(parse_type_tag(tag.substr(0, tag.size() - 2)));
  return GroupRef::group(parse_type_tag(tag));
}

// A homomorphism given on generators: letter +-i of a domain word maps to
// images[i-1] or its inverse. Application freely reduces the result, which
// is sound in every group.
struct Morphism {
  GroupRef domain;
  GroupRef codomain;
  std::vector<Word> images;
  std::string name;

  Word apply(const Word& w) const {
    Word out;
    for (int letter : w) {
      const int i = letter > 0 ? letter : -letter;
      if (i > domain.rank())
        throw std::invalid_argument("apply: letter " + std::to_string(letter) +
                                    " outside domain " + group_tag(domain));
      const Word& image = images[static_cast<std::size_t>(i - 1)];
      if (letter > 0)
        out.insert(out.end(), image.begin(), image.end());
      else {
        const Word inv = inverse(image);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    free_reduce_inplace(out);
    return out;
  }
};

// Diagram order: first f, then g.
inline Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.codomain != g.domain)
    throw std::invalid_argument("compose: codomain of '" + f.name +
                                "' is not the domain of '" + g.name + "'");
  Morphism out;
  out.domain = f.domain;
  out.codomain = g.codomain;
  out.name = f.name + "*" + g.name;
  out.images.reserve(f.images.size());
  for (const Word& image : f.images) out.images.push_back(g.apply(image));
  return out;
}

inline Morphism identity_morphism(const GroupRef& g) {
  Morphism f;
  f.domain = f.codomain = g;
  f.name = "id";
  for (int i = 1; i <= g.rank(); ++i) f.images.push_back(Word{i});
  return f;
}

enum class LengthClass { preserving, reversing, neither };

// Generator lengths decide the class: the length map is a homomorphism, so
// +-1 on every generator is both necessary and sufficient.
inline LengthClass length_class(const Morphism& f) {
  bool all_one = true;
  bool all_minus = true;
  for (const Word& image : f.images) {
    const long long len = exponent_sum(image);
    all_one = all_one && len == 1;
    all_minus = all_minus && len == -1;
  }
  if (all_one) return LengthClass::preserving;
  if (all_minus) return LengthClass::reversing;
  return LengthClass::neither;
}

// Length-corrected lift through A -> A/Z: each mod-centre image gains the
// unique central power that puts its length at sense*1. Lengths off the
// d-grid cannot come from a length preserving/reversing map and are
// rejected.
inline Morphism lift_mod_center(const ArtinType& t,
                                const std::vector<Word>& images_mod_z,
                                int sense) {
  if (sense != 1 && sense != -1)
    throw std::invalid_argument("lift_mod_center: sense must be +1 or -1");
  const CenterData c = center_data(t);
  if (c.trivial)
    throw std::invalid_argument("lift_mod_center: " + type_tag(t) +
                                " has trivial centre");
  if (images_mod_z.size() != static_cast<std::size_t>(t.rank))
    throw std::invalid_argument("lift_mod_center: expected " +
                                std::to_string(t.rank) + " images");
  Morphism out;
  out.domain = out.codomain = GroupRef::group(t);
  out.name = "lift";
  for (const Word& image : images_mod_z) {
    const long long len = exponent_sum(image);
    const long long residue = static_cast<long long>(sense) - len;
    if (residue % c.d != 0)
      throw not_liftable_error(
          "lift_mod_center: image length " + std::to_string(len) +
          " is not congruent to " + std::to_string(sense) + " mod " +
          std::to_string(c.d));
    out.images.push_back(
        freely_reduced(concat(image, power(c.zeta, residue / c.d))));
  }
  return out;
}

// Stable text form mirroring the word codec; round-trips via
// parse_morphism.
inline std::string format_morphism(const Morphism& f) {
  std::string out = "morphism " + f.name + "\n";
  out += "domain " + group_tag(f.domain) + "\n";
  out += "codomain " + group_tag(f.codomain) + "\n";
  for (std::size_t i = 0; i < f.images.size(); ++i)
    out += "image " + std::to_string(i + 1) + " : " +
           format_word(f.images[i]) + "\n";
  return out;
}

inline Morphism parse_morphism(const std::string& text) {
  Morphism f;
  std::istringstream stream(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "morphism") {
      fields >> f.name;
      seen_header = true;
    } else if (key == "domain") {
      std::string tag;
      fields >> tag;
      f.domain = parse_group_tag(tag);
    } else if (key == "codomain") {
      std::string tag;
      fields >> tag;
      f.codomain = parse_group_tag(tag);
    } else if (key == "image") {
      std::string index, colon;
      fields >> index >> colon;
      if (colon != ":")
        throw std::invalid_argument("morphism: malformed image line '" + line +
                                    "'");
      std::string rest;
      std::getline(fields, rest);
      f.images.push_back(parse_word(rest));
    } else {
      throw std::invalid_argument("morphism: unknown line '" + line + "'");
    }
  }
  if (!seen_header)
    throw std::invalid_argument("morphism: missing 'morphism <name>' header");
  return f;
}

}  // namespace artin

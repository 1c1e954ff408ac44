#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin/word.hpp"

namespace artin {

// The six supported families. AffA/AffC are the affine diagrams usually
// subscripted rank-1; we always store the rank (the generator count), so
// AffA with rank 3 is the 3-cycle diagram.
enum class Family { A, B, AffA, AffC, I2, F4 };

struct ArtinType {
  Family family = Family::A;
  int rank = 0;
  int label = 0;  // I2 only: the single edge label m

  friend bool operator==(const ArtinType&, const ArtinType&) = default;
};

inline ArtinType type_a(int n) {
  if (n < 3) throw std::invalid_argument("type A requires rank >= 3");
  return {Family::A, n, 0};
}

inline ArtinType type_b(int n) {
  if (n < 3) throw std::invalid_argument("type B requires rank >= 3");
  return {Family::B, n, 0};
}

inline ArtinType type_aff_a(int rank) {
  if (rank < 3) throw std::invalid_argument("affine type A requires rank >= 3");
  return {Family::AffA, rank, 0};
}

inline ArtinType type_aff_c(int rank) {
  if (rank < 3) throw std::invalid_argument("affine type C requires rank >= 3");
  return {Family::AffC, rank, 0};
}

inline ArtinType type_i2(int m) {
  if (m < 3) throw std::invalid_argument("type I2 requires label m >= 3");
  return {Family::I2, 2, m};
}

inline ArtinType type_f4() { return {Family::F4, 4, 0}; }

inline std::string type_tag(const ArtinType& t) {
  switch (t.family) {
    case Family::A: return "A:" + std::to_string(t.rank);
    case Family::B: return "B:" + std::to_string(t.rank);
    case Family::AffA: return "AffA:" + std::to_string(t.rank);
    case Family::AffC: return "AffC:" + std::to_string(t.rank);
    case Family::I2: return "I2:" + std::to_string(t.label);
    case Family::F4: return "F4";
  }
  return "?";
}

// Parses "A:3", "B:4", "AffA:3", "AffC:3", "I2:5", "F4". The number after
// the colon is the rank, except for I2 where it is the edge label m.
inline ArtinType parse_type_tag(const std::string& tag) {
  if (tag == "F4") return type_f4();
  auto colon = tag.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("type tag '" + tag + "' is not recognised");
  const std::string name = tag.substr(0, colon);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(tag.substr(colon + 1), &used);
    if (colon + 1 + used != tag.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("type tag '" + tag + "' has a bad parameter");
  }
  if (name == "A") return type_a(value);
  if (name == "B") return type_b(value);
  if (name == "AffA") return type_aff_a(value);
  if (name == "AffC") return type_aff_c(value);
  if (name == "I2") return type_i2(value);
  throw std::invalid_argument("type tag '" + tag + "' is not recognised");
}

// An entry value of 0 encodes an infinite bond. No supported family uses
// one, but the matrix type admits it.
inline constexpr int infinite_bond = 0;

struct CoxeterMatrix {
  int rank = 0;
  std::vector<int> entries;  // row-major rank x rank

  int at(int i, int j) const { return entries[(i - 1) * rank + (j - 1)]; }
  void set(int i, int j, int m) {
    entries[(i - 1) * rank + (j - 1)] = m;
    entries[(j - 1) * rank + (i - 1)] = m;
  }
};

inline void validate(const CoxeterMatrix& m) {
  if (m.rank <= 0 ||
      m.entries.size() != static_cast<std::size_t>(m.rank) * m.rank)
    throw std::invalid_argument("Coxeter matrix: bad shape");
  for (int i = 1; i <= m.rank; ++i) {
    if (m.at(i, i) != 1)
      throw std::invalid_argument("Coxeter matrix: diagonal must be 1");
    for (int j = i + 1; j <= m.rank; ++j) {
      if (m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("Coxeter matrix: not symmetric");
      if (m.at(i, j) != infinite_bond && m.at(i, j) < 2)
        throw std::invalid_argument(
            "Coxeter matrix: off-diagonal entries must be >= 2");
    }
  }
}

// The diagrams of the six families. Missing edges mean label 2 (the
// generators commute).
inline CoxeterMatrix coxeter_matrix(const ArtinType& t) {
  CoxeterMatrix m;
  m.rank = t.rank;
  m.entries.assign(static_cast<std::size_t>(t.rank) * t.rank, 2);
  for (int i = 1; i <= t.rank; ++i) m.set(i, i, 1);
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < t.rank; ++i) m.set(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 1; i < t.rank - 1; ++i) m.set(i, i + 1, 3);
      m.set(t.rank - 1, t.rank, 4);
      break;
    case Family::AffA:
      // n-cycle; for rank 3 this is the complete graph with all labels 3
      for (int i = 1; i < t.rank; ++i) m.set(i, i + 1, 3);
      m.set(t.rank, 1, 3);
      break;
    case Family::AffC:
      m.set(1, 2, 4);
      for (int i = 2; i < t.rank - 1; ++i) m.set(i, i + 1, 3);
      m.set(t.rank - 1, t.rank, 4);
      break;
    case Family::I2:
      m.set(1, 2, t.label);
      break;
    case Family::F4:
      m.set(1, 2, 3);
      m.set(2, 3, 4);
      m.set(3, 4, 3);
      break;
  }
  validate(m);
  return m;
}

struct Presentation {
  int rank = 0;
  std::vector<std::pair<Word, Word>> relations;
};

inline Word alternating_word(int first, int second, int length) {
  Word out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) out.push_back(k % 2 == 0 ? first : second);
  return out;
}

// One relation per unordered pair {i,j} with finite label: the two
// alternating words of length m_ij. Infinite bonds produce no relation.
inline Presentation artin_relations(const CoxeterMatrix& m) {
  validate(m);
  Presentation p;
  p.rank = m.rank;
  for (int i = 1; i <= m.rank; ++i) {
    for (int j = i + 1; j <= m.rank; ++j) {
      const int label = m.at(i, j);
      if (label == infinite_bond) continue;
      p.relations.emplace_back(alternating_word(i, j, label),
                               alternating_word(j, i, label));
    }
  }
  return p;
}

inline Presentation presentation_of(const ArtinType& t) {
  return artin_relations(coxeter_matrix(t));
}

// Stable text form, one relation per line, suitable for golden files.
inline std::string format_presentation(const Presentation& p) {
  std::string out = "rank " + std::to_string(p.rank) + "\n";
  for (const auto& [lhs, rhs] : p.relations)
    out += "relation " + format_word(lhs) + " = " + format_word(rhs) + "\n";
  return out;
}

}  // namespace artin

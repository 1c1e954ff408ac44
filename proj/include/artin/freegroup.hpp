#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/errors.hpp"
#include "artin/word.hpp"

namespace artin {

// Free-group computations reject results beyond this many letters unless the
// caller widens the budget. The braid action can expand words geometrically;
// a desk-scale run must fail loudly instead of hanging.
inline constexpr std::size_t default_letter_budget = 1'000'000;

namespace detail {
inline void check_budget(std::size_t letters, std::size_t budget,
                         const char* where) {
  if (letters > budget)
    throw budget_error(std::string(where) + ": result exceeds the " +
                       std::to_string(budget) + "-letter budget");
}
}  // namespace detail

// Freely reduced concatenation of reduced words. Only the seam can cancel.
inline FreeWord fg_multiply(const FreeWord& u, const FreeWord& v,
                            std::size_t budget = default_letter_budget) {
  detail::check_budget(u.size() + v.size(), budget, "fg_multiply");
  FreeWord out = u;
  for (int letter : v) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline FreeWord fg_invert(const FreeWord& u) { return inverse(u); }

// A substitution endomorphism of the free group of the given rank: x_i maps
// to images[i-1], inverse letters to the inverted image.
struct Substitution {
  int rank = 0;
  std::vector<FreeWord> images;

  static Substitution identity(int rank) {
    Substitution s;
    s.rank = rank;
    s.images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) s.images.push_back(FreeWord{i});
    return s;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

inline FreeWord fg_apply(const Substitution& s, const FreeWord& u,
                         std::size_t budget = default_letter_budget) {
  if (max_index(u) > s.rank)
    throw std::invalid_argument("fg_apply: word letter exceeds rank " +
                                std::to_string(s.rank));
  FreeWord out;
  for (int letter : u) {
    const FreeWord& image = s.images[static_cast<std::size_t>(
        (letter > 0 ? letter : -letter) - 1)];
    if (letter > 0) {
      for (int x : image) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) {
        if (!out.empty() && out.back() == *it)
          out.pop_back();
        else
          out.push_back(-*it);
      }
    }
    detail::check_budget(out.size(), budget, "fg_apply");
  }
  return out;
}

// The substitution "s, then t": generator images of s pushed through t.
inline Substitution sub_then(const Substitution& s, const Substitution& t,
                             std::size_t budget = default_letter_budget) {
  if (s.rank != t.rank)
    throw std::invalid_argument("sub_then: rank mismatch");
  Substitution out;
  out.rank = s.rank;
  out.images.reserve(s.images.size());
  for (const FreeWord& image : s.images)
    out.images.push_back(fg_apply(t, image, budget));
  return out;
}

}  // namespace artin

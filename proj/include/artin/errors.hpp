#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// A free-word computation would exceed the configured letter budget.
// Oracle callers treat this as "could not decide", never as inequality.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A generator-image map cannot be lifted to the requested length residue.
class not_liftable_error : public std::runtime_error {
 public:
  explicit not_liftable_error(const std::string& what)
      : std::runtime_error(what) {}
};

// The operation needs an equality oracle that is not bound for this group
// (word equality in type F4 is out of scope).
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace artin

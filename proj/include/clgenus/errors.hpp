#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clgenus {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symbol outside the declared alphabet; carries the offending position.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos) : error(what), position(pos) {}
  std::size_t position;
};

// Input outside an operation's domain (non-positive word, wrong alphabet, ...).
struct domain_error : error {
  using error::error;
};

// Chain (or word) does not lie in the commutator subgroup.
struct not_boundary_error : error {
  using error::error;
};

// Positive words with different letter-count multisets.
struct not_related_error : error {
  using error::error;
};

struct out_of_bounds_error : error {
  using error::error;
};

// Exact search refused: input larger than the configured guard.
struct size_guard_error : error {
  using error::error;
};

struct invalid_instance_error : error {
  using error::error;
};

struct not_a_solution_error : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

}  // namespace clgenus

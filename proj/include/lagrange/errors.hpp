#pragma once

#include <stdexcept>

namespace lagrange {

// Malformed textual input: cycle notation, group files, chain files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid algebraic input: not a subgroup, broken chain, a
// declared kind that does not match the data.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument outside an operation's domain: degree mismatch, element not in
// the group, coordinate out of range.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded (coset index, table size, order
// overflow).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lagrange

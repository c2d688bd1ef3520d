#pragma once

#include <stdexcept>

namespace hgwiener {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text that does not conform to the hypergraph file format.
struct parse_error : error {
  using error::error;
};

// Arguments outside an operation's documented domain.
struct domain_error : error {
  using error::error;
};

// Operation requires a connected hypergraph.
struct disconnected_error : error {
  using error::error;
};

// No edge removal leaves at most one non-trivial component. Impossible for
// connected edge-minimal inputs, so this signals an implementation bug.
struct no_good_edge_error : error {
  using error::error;
};

// Enumeration or canonicalization request exceeds the supported scale.
struct search_space_error : error {
  using error::error;
};

// An exact integer formula produced a non-integer value.
struct non_integer_error : error {
  using error::error;
};

}  // namespace hgwiener

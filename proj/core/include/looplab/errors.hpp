#pragma once

#include <stdexcept>
#include <string>

namespace looplab {

// Structural violation in an input object (bad involution, crossing pair, ...).
struct structure_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Width / size mismatch between objects that must agree.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation asked to decompose an all-right or all-left pair; those are
// handled by the explicit branch of the involution instead.
struct special_pair_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Request exceeds the configured size bound.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chain has no unique stationary law (p is 0 or 1, or the fixed space is
// not one-dimensional).
struct degenerate_chain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter combination where a formula's denominator vanishes.
struct singular_parameter_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A sampling run hit its row budget before the boundary closed.
struct nontermination_error : std::runtime_error {
  nontermination_error(const std::string& msg, long rows)
      : std::runtime_error(msg), rows_consumed(rows) {}
  long rows_consumed;
};

}  // namespace looplab

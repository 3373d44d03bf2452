#pragma once

#include <stdexcept>
#include <string>

namespace vanorder {

/// Base class for all toolkit errors. The CLI maps the subclasses to its
/// documented exit codes (capacity -> 2, input/data -> 3).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cycle syntax, degree mismatch, non-member element.
struct input_error : error {
  using error::error;
};

/// Operation needs an element store (or an order bound) that the group exceeds.
struct capacity_error : error {
  using error::error;
};

/// Corpus data contradicts a computed fact (e.g. declared order is wrong).
struct data_error : error {
  using error::error;
};

/// Operation is undefined for the argument (e.g. Fitting height of a
/// non-solvable group).
struct domain_error : error {
  using error::error;
};

/// A guaranteed-by-theory step failed; indicates a bug in the toolkit.
struct internal_error : error {
  using error::error;
};

}  // namespace vanorder

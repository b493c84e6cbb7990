#pragma once

#include <stdexcept>
#include <string>

namespace tatepol {

/// A mathematical invariant of the input does not hold (J^2 != -I, E not
/// alternating, incompatible (J, E), non-unimodular edge, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tatepol

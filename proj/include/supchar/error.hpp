#pragma once

#include <stdexcept>
#include <string>

namespace supchar {

// Malformed input: bad group tables, bad partitions, unparseable documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or search bound was exceeded; the computation was refused.
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

// An outcome that contradicts a proven result. Always an implementation bug,
// never a mathematical verdict.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace supchar

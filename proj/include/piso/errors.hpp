#ifndef PISO_ERRORS_HPP
#define PISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace piso {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain/codomain mismatch, ill-typed term, leaf path outside its tree.
struct TypeError : Error {
  using Error::Error;
};

// Join requested for non-orthogonal arrows, or a term set that is not
// pairwise orthogonal on one of its sides.
struct JoinError : Error {
  using Error::Error;
};

// Operation precondition violated by an otherwise well-typed input.
struct ValueError : Error {
  using Error::Error;
};

// Malformed source text: S-expressions, tree literals, diagram documents.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace piso

#endif  // PISO_ERRORS_HPP

#ifndef BRAIDPOLY_ERRORS_HPP
#define BRAIDPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidpoly {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed braid word text or out-of-range generator index.
struct ParseError : Error {
  using Error::Error;
};

// Operation defined only for positive words was given a word with
// negative letters.
struct NonPositiveWord : Error {
  using Error::Error;
};

// Caller violated a documented structural precondition (split or
// reducible input where a normalized one is required, bad position, ...).
struct PreconditionViolated : Error {
  using Error::Error;
};

// Knot-only operation applied to a multi-component closure.
struct NotAKnot : Error {
  using Error::Error;
};

// Exponent-parity consistency failure during variable substitution.
struct OddExponent : Error {
  using Error::Error;
};

// Exact polynomial division left a nonzero remainder; the supplied
// profile does not match the polynomial.
struct InexactDivision : Error {
  using Error::Error;
};

// A hard engine limit (strands, letters, memo entries, state count)
// was exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

// The orbit search hit its node cap without resolving; unreachable for
// normalized inputs and treated as a hard failure by the engine.
struct SquareSearchExhausted : Error {
  using Error::Error;
};

}  // namespace braidpoly

#endif

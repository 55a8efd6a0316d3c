#pragma once

#include <stdexcept>
#include <string>

namespace altwidth {

// Common base so callers can catch everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed cycle notation (syntax, repeated point, point <= 0, point too large).
struct ParseError : Error {
  using Error::Error;
};

// Conjugator requested between permutations of different cycle type.
struct TypeMismatchError : Error {
  using Error::Error;
};

// Operation requires a nontrivial permutation.
struct IdentityInputError : Error {
  using Error::Error;
};

// sublemma_factor got a permutation with more than one cycle.
struct NotACycleError : Error {
  using Error::Error;
};

// lemma_c / decompose require an even target.
struct OddPermutationError : Error {
  using Error::Error;
};

// lemma_c: k below ceil(word_length / 2).
struct KTooSmallError : Error {
  using Error::Error;
};

// Zero/degenerate numeric argument (e.g. lemma_b with ell = 0 or n = 0).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// decompose: odd g with even h can never be a product of class members.
struct ParityObstructionError : Error {
  using Error::Error;
};

// Oracle universe cannot hold the inputs (or exceeds the exhaustive limit).
struct UniverseTooSmallError : Error {
  using Error::Error;
};

// exact_d over a pair whose exact lambda search came back unreachable.
struct UnreachableError : Error {
  using Error::Error;
};

// Bad sampling range for the experiment harness.
struct InvalidRangeError : Error {
  using Error::Error;
};

}  // namespace altwidth

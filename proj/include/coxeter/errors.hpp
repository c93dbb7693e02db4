#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Coxeter matrix violates m_rr = 1, symmetry, or m_rs >= 2.
struct InvalidMatrix : Error {
  using Error::Error;
};

// Root closure exceeded the cap: the matrix defines an infinite group.
struct NonFiniteGroup : Error {
  using Error::Error;
};

// A word letter outside 1..rank.
struct BadLetter : Error {
  using Error::Error;
};

// An operation requiring an involution was given something else.
struct NotInvolution : Error {
  using Error::Error;
};

// epsilon() was called with y outside the reverser set of w.
struct NotReverser : Error {
  using Error::Error;
};

// No involution factorization exists (unreachable for finite groups).
struct NotStronglyReal : Error {
  using Error::Error;
};

// Index argument out of range.
struct BadIndex : Error {
  using Error::Error;
};

// Operation requires a group of a specific type (e.g. type A).
struct TypeMismatch : Error {
  using Error::Error;
};

// A certificate invariant failed; indicates a bug, never expected on valid input.
struct InternalProofViolation : Error {
  using Error::Error;
};

}  // namespace coxeter

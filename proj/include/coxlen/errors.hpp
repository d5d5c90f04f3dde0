#pragma once

#include <stdexcept>
#include <string>

namespace coxlen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input document does not match the expected JSON shape.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// Input is well-formed but violates a semantic constraint
/// (asymmetric matrix, bad labels, duplicate generator names, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An operation requiring a connected graph received a disconnected one.
class DisconnectedInput : public Error {
public:
  using Error::Error;
};

/// A braid orbit grew past the configured cap.
class BraidOrbitOverflow : public Error {
public:
  using Error::Error;
};

/// Ball enumeration grew past the configured element cap.
class BallTooLarge : public Error {
public:
  using Error::Error;
};

/// An orientation that must be acyclic contains a directed cycle.
class CyclicInput : public Error {
public:
  using Error::Error;
};

/// Flip requested at a vertex that is not a source.
class NotASource : public Error {
public:
  using Error::Error;
};

/// The fixed-space length formula was asked about an infinite group.
class NotFiniteComponent : public Error {
public:
  using Error::Error;
};

/// A validated precondition of a constructive witness failed.
class PreconditionFailed : public Error {
public:
  using Error::Error;
};

/// A bounded search exhausted its bounds without an answer; not a disproof.
class NotFoundWithinBounds : public Error {
public:
  using Error::Error;
};

/// The wall-clock budget for a search expired (see COXLEN_BUDGET_MS).
class SearchBudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A deliberately capped exhaustive computation was asked to exceed its cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace coxlen

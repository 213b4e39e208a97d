#pragma once

#include <stdexcept>
#include <string>

namespace symflow {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

// Numerical failures.
struct SingularMatrix : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

// Automorphism / symmetric-space contract violations.
struct IncompatibleAutomorphism : Error { using Error::Error; };
struct ValidationFailure : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// Cayley chart and flow errors.
struct OutsideDomain : Error { using Error::Error; };
struct NotCritical : Error { using Error::Error; };
struct NotCriticalCenter : Error { using Error::Error; };
struct SingularEvaluation : Error { using Error::Error; };
struct StepRejected : Error { using Error::Error; };

// Critical-set structure checks.
struct RelationViolated : Error { using Error::Error; };
struct StructureViolated : Error { using Error::Error; };
struct NotSquareRoot : Error { using Error::Error; };

}  // namespace symflow

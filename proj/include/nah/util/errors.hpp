#pragma once

#include <stdexcept>
#include <string>

namespace nah {

// Raised when caller-supplied arguments, configs or files violate a
// documented precondition. The CLI maps these to exit code 2; everything
// else that escapes maps to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluating a field kernel at coincident points.
class SingularEvaluationError : public ValidationError {
public:
  explicit SingularEvaluationError(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace nah

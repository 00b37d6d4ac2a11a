#ifndef FBLAB_ERRORS_HPP
#define FBLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fblab {

struct OutOfDomainError : std::runtime_error {
  explicit OutOfDomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct StencilError : std::runtime_error {
  explicit StencilError(const std::string& msg) : std::runtime_error(msg) {}
};

struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParameterError : std::runtime_error {
  explicit InvalidParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverFailureError : std::runtime_error {
  explicit SolverFailureError(const std::string& msg, double residual = 0.0)
      : std::runtime_error(msg), max_residual(residual) {}
  double max_residual;
};

struct EmptyMeasureError : std::runtime_error {
  explicit EmptyMeasureError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleScopeError : std::runtime_error {
  explicit OracleScopeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fblab

#endif

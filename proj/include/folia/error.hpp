#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Base class for all library errors.  Subclasses map onto CLI exit codes:
// ValidationError -> 2, ConstructionError -> 3, everything else -> 4.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad parameters, malformed config/input files, violated preconditions.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// The curvature pinch (or another build requirement) could not be met.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& msg, std::string segment, double worst,
                    double at_param)
      : Error(msg), segment_label(std::move(segment)), worst_value(worst),
        at(at_param) {}

  std::string segment_label;
  double worst_value;
  double at;
};

// A query outside the constructed or mathematically valid domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An analysis step failed (quadrature non-convergence, degenerate samples...).
class AnalysisError : public Error {
 public:
  explicit AnalysisError(const std::string& msg) : Error(msg) {}
};

}  // namespace folia

#pragma once

#include <stdexcept>
#include <string>

namespace cmsym {

/// A denominator vanished identically after substitution or specialisation.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (expressions, partitions, bindings).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class WeightMismatch : public std::invalid_argument {
 public:
  explicit WeightMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class NotSymmetric : public std::invalid_argument {
 public:
  explicit NotSymmetric(const std::string& what) : std::invalid_argument(what) {}
};

class NotInDeformedAlgebra : public std::invalid_argument {
 public:
  explicit NotInDeformedAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact division by a coordinate difference failed; always an internal bug.
class DivisionFailure : public std::logic_error {
 public:
  explicit DivisionFailure(const std::string& what) : std::logic_error(what) {}
};

/// Two diagonal entries of a triangular operator coincide.
class ResonanceError : public std::runtime_error {
 public:
  explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

class DualityFailure : public std::runtime_error {
 public:
  explicit DualityFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmsym

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fovregion {

enum class ErrorCode {
  DegenerateNormal,
  VerticalNormal,
  RayParallelToPlane,
  DegenerateBox,
  BadAperture,
  NoIntersection,
  ObtuseInclination,
  WrongPlane,
  BehindCamera,
  Unreachable,
  InvalidInput,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input does not satisfy a documented invariant (bad scene file, bad flag).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::InvalidInput, what) {}
};

// Geometry is degenerate for the requested construction.
class GeometryError : public Error {
 public:
  GeometryError(ErrorCode code, const std::string& what) : Error(code, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace fovregion

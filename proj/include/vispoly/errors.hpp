#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vispoly {

enum class ErrorKind {
  DegenerateInput,
  DegeneratePosition,
  NotSimple,
  NotCcw,
  ViewpointOutside,
  WindowNotFound,
  PipelineDiscrepancy,
  ParseError,
  GenerationTimeout,
};

const char* to_string(ErrorKind kind);

// All library failures. `indices` names the offending vertices where that makes sense.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail, std::vector<std::size_t> indices = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace vispoly

#include "vispoly/errors.hpp"

namespace vispoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput:
      return "DegenerateInput";
    case ErrorKind::DegeneratePosition:
      return "DegeneratePosition";
    case ErrorKind::NotSimple:
      return "NotSimple";
    case ErrorKind::NotCcw:
      return "NotCcw";
    case ErrorKind::ViewpointOutside:
      return "ViewpointOutside";
    case ErrorKind::WindowNotFound:
      return "WindowNotFound";
    case ErrorKind::PipelineDiscrepancy:
      return "PipelineDiscrepancy";
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::GenerationTimeout:
      return "GenerationTimeout";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorKind kind, const std::string& detail, const std::vector<std::size_t>& indices) {
  std::string msg = std::string(to_string(kind)) + ": " + detail;
  if (!indices.empty()) {
    msg += " [";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) msg += ", ";
      msg += std::to_string(indices[i]);
    }
    msg += "]";
  }
  return msg;
}

}  // namespace

GeometryError::GeometryError(ErrorKind kind, const std::string& detail, std::vector<std::size_t> indices)
    : std::runtime_error(describe(kind, detail, indices)), kind_(kind), indices_(std::move(indices)) {}

}  // namespace vispoly

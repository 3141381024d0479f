#include "ordalg/verdict.hpp"

#include "ordalg/error.hpp"

namespace ordalg {

const char *to_string(Status s) {
  switch (s) {
  case Status::Holds: return "Holds";
  case Status::FailsWith: return "FailsWith";
  case Status::WindowInconclusive: return "WindowInconclusive";
  }
  return "Unknown";
}

Status status_from_string(const std::string &s) {
  if (s == "Holds") return Status::Holds;
  if (s == "FailsWith") return Status::FailsWith;
  if (s == "WindowInconclusive") return Status::WindowInconclusive;
  throw SchemaError("unknown verdict status '" + s + "'");
}

} // namespace ordalg

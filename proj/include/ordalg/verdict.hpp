#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ordalg {

enum class Status { Holds, FailsWith, WindowInconclusive };

[[nodiscard]] const char *to_string(Status s);
[[nodiscard]] Status status_from_string(const std::string &s);

/// Outcome of a window-bounded property check.
///
/// `checked` counts the instances actually evaluated, `unchecked` the ones
/// skipped because a required sum or bound left the window.
template <class W> struct BasicVerdict {
  Status status = Status::Holds;
  std::vector<W> witness;
  std::string reason;
  std::size_t checked = 0;
  std::size_t unchecked = 0;

  [[nodiscard]] bool holds() const { return status == Status::Holds; }
  [[nodiscard]] bool fails() const { return status == Status::FailsWith; }
  [[nodiscard]] bool inconclusive() const {
    return status == Status::WindowInconclusive;
  }

  static BasicVerdict fail(std::vector<W> w, std::string why = {}) {
    BasicVerdict v;
    v.status = Status::FailsWith;
    v.witness = std::move(w);
    v.reason = std::move(why);
    return v;
  }
  static BasicVerdict inconclusive_because(std::string why) {
    BasicVerdict v;
    v.status = Status::WindowInconclusive;
    v.reason = std::move(why);
    return v;
  }
};

} // namespace ordalg

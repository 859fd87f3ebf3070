#pragma once

#include <stdexcept>
#include <string>

namespace gpnt {

/// A face is born strictly after one of its cofaces.
class InconsistentBirths : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cover document. `where` names the line or field at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A cover intersection is empty at every scale, so it has no basepoint.
class EmptyForever : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homology representative failed to map to a cycle. Indicates a bug.
class RepresentativeNotCycle : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The bottleneck bound was violated although the goodness parameter is finite.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gpnt

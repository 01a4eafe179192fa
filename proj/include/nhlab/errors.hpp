#pragma once

#include <stdexcept>
#include <string>

namespace nhlab {

/// Failure raised by a library operation. Carries the module it came from so
/// the command line front end can report provenance.
class Error : public std::runtime_error {
 public:
  enum class Kind { Precondition, Resource, Usage };

  Error(Kind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  Kind kind_;
  std::string module_;
};

inline Error precondition_error(std::string module, const std::string& what) {
  return Error(Error::Kind::Precondition, std::move(module), what);
}

inline Error resource_error(std::string module, const std::string& what) {
  return Error(Error::Kind::Resource, std::move(module), what);
}

inline Error usage_error(const std::string& what) {
  return Error(Error::Kind::Usage, "cli", what);
}

}  // namespace nhlab

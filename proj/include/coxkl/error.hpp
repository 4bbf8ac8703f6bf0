#pragma once

#include <stdexcept>
#include <string>

namespace coxkl {

enum class ErrorKind {
  invalid_input,
  unsupported_type,
  resource_limit,
  domain,
  precondition,
  structural,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error(ErrorKind::invalid_input, w) {}
};
struct UnsupportedType : Error {
  explicit UnsupportedType(const std::string& w) : Error(ErrorKind::unsupported_type, w) {}
};
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& w) : Error(ErrorKind::resource_limit, w) {}
};
// Argument lies outside the domain of a partial operation (e.g. l_f of w not in W_f).
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::precondition, w) {}
};
// An algebraic identity that must hold did not; always a bug or a counterexample.
struct StructuralError : Error {
  explicit StructuralError(const std::string& w) : Error(ErrorKind::structural, w) {}
};

}  // namespace coxkl

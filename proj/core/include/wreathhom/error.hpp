#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wreathhom {

enum class ErrorKind {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  InvalidPermutation,
  InvalidAbelianGroup,
  InvalidSpec,
  UnknownBuiltin,
  CapExceeded,
  IntegralityViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wreathhom

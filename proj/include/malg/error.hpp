#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MALG_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

MALG_DEFINE_ERROR(InvalidArgument);
MALG_DEFINE_ERROR(UndefinedTargetApplication);
MALG_DEFINE_ERROR(SignatureMismatch);
MALG_DEFINE_ERROR(SeedOutsideUniverse);
MALG_DEFINE_ERROR(NotGenerating);
MALG_DEFINE_ERROR(ElementOutsideClosure);
MALG_DEFINE_ERROR(EquivalenceViolation);
MALG_DEFINE_ERROR(OracleRangeViolation);
MALG_DEFINE_ERROR(NotHomomorphism);
MALG_DEFINE_ERROR(NoDefinedApplications);
MALG_DEFINE_ERROR(EmptySignature);
MALG_DEFINE_ERROR(ArityMismatch);
MALG_DEFINE_ERROR(EmptyUniverse);
MALG_DEFINE_ERROR(UnknownSymbol);
MALG_DEFINE_ERROR(SuperscriptOutOfRange);
MALG_DEFINE_ERROR(UnknownConnective);
MALG_DEFINE_ERROR(NotTotal);

#undef MALG_DEFINE_ERROR

/// Parse failure in term or formula text; `position` is a 0-based offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed document; `pointer` is a JSON-pointer style location.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : Error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(pointer) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace malg

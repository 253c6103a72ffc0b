// Error type shared by every module.
#ifndef THINSEC_ERROR_HPP
#define THINSEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace thinsec
{
  //! failure categories surfaced by library operations
  enum class ErrorKind
  {
    NotSquarefree,
    NotIsolating,
    FieldMismatch,
    DivisionByZero,
    NotAnEigenvalue,
    NotSquare,
    NegativeEntries,
    InvalidSystem,
    NotContained,
    SelfTransmission,
    PreconditionFailed,
    NoAdmissibleMove,
    AmbiguousMove,
    OutOfSupport,
    NotFree,
    NotMaximal,
    Halted,
    NearSaddle,
    EmptyWindow,
    Parse,
    Audit
  };

  const char* error_kind_name(ErrorKind k);

  class Error : public std::runtime_error
  {
  public:
    Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
  };
}

#endif // THINSEC_ERROR_HPP

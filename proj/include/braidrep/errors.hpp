#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

// Every failure raised by the library derives from Error; kind() is the
// stable machine-readable name used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BRAIDREP_ERROR(Name)                                     \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

BRAIDREP_ERROR(ParseError);
BRAIDREP_ERROR(ZeroSpecialization);
BRAIDREP_ERROR(Pole);
BRAIDREP_ERROR(DivisionByZero);
BRAIDREP_ERROR(ShapeMismatch);
BRAIDREP_ERROR(NotSquare);
BRAIDREP_ERROR(NotInvertible);
BRAIDREP_ERROR(NotUnitDeterminant);
BRAIDREP_ERROR(IndexOutOfRange);
BRAIDREP_ERROR(BadStrandCount);
BRAIDREP_ERROR(BadIndices);
BRAIDREP_ERROR(InverseUnavailable);
BRAIDREP_ERROR(UnassignedGenerator);
BRAIDREP_ERROR(NonInvertibleLetter);
BRAIDREP_ERROR(ModeMismatch);
BRAIDREP_ERROR(NonInvertibleTau);
BRAIDREP_ERROR(DivisibilityViolation);
BRAIDREP_ERROR(ZeroQ);
BRAIDREP_ERROR(NonlinearSystem);
BRAIDREP_ERROR(Inconsistent);
BRAIDREP_ERROR(NotInvolution);
BRAIDREP_ERROR(Unclassifiable);
BRAIDREP_ERROR(SingularTau);
BRAIDREP_ERROR(NotInKernel);
BRAIDREP_ERROR(TrivialWord);

#undef BRAIDREP_ERROR

}  // namespace braidrep

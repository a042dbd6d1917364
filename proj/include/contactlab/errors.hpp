#ifndef CONTACTLAB_ERRORS_HPP
#define CONTACTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace contactlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CONTACTLAB_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

CONTACTLAB_DEFINE_ERROR(OffManifold);
CONTACTLAB_DEFINE_ERROR(RankDeficient);
CONTACTLAB_DEFINE_ERROR(DegenerateContact);
CONTACTLAB_DEFINE_ERROR(NotTangent);
CONTACTLAB_DEFINE_ERROR(DimensionMismatch);
CONTACTLAB_DEFINE_ERROR(NoConvergence);
CONTACTLAB_DEFINE_ERROR(GramSingular);
CONTACTLAB_DEFINE_ERROR(NotTangentReeb);
CONTACTLAB_DEFINE_ERROR(NotContactType);
CONTACTLAB_DEFINE_ERROR(DenominatorVanishes);
CONTACTLAB_DEFINE_ERROR(ChartSingular);
CONTACTLAB_DEFINE_ERROR(ChartDegenerate);
CONTACTLAB_DEFINE_ERROR(ParseError);
CONTACTLAB_DEFINE_ERROR(ValidationError);

#undef CONTACTLAB_DEFINE_ERROR

}  // namespace contactlab

#endif

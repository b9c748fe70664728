#pragma once

#include <stdexcept>
#include <string>

namespace indsub {

// Base of everything the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INDSUB_ERROR(Name)                      \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

INDSUB_ERROR(MalformedRotation);
INDSUB_ERROR(EulerViolation);
INDSUB_ERROR(NotACycle);
INDSUB_ERROR(VertexNotOnFace);
INDSUB_ERROR(OrientationMismatch);
INDSUB_ERROR(PatternTooLarge);
INDSUB_ERROR(InstanceTooLarge);
INDSUB_ERROR(NotATwoTree);
INDSUB_ERROR(NotAKTree);
INDSUB_ERROR(TreewidthExceeded);
INDSUB_ERROR(NotK4MinorFree);
INDSUB_ERROR(MalformedEmbedding);
INDSUB_ERROR(NoTotalDominatingSet);
INDSUB_ERROR(BadParameter);
INDSUB_ERROR(UnknownClaim);
INDSUB_ERROR(BadParams);

#undef INDSUB_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace indsub

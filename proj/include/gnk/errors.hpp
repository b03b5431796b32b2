#ifndef GNK_ERRORS_HPP_
#define GNK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gnk {

  // Base for every error raised by the library. Subclasses name the violated
  // precondition; the CLI maps them onto exit codes.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // (n, k) outside 1 <= k <= n, or an operation needing a larger n.
  class InvalidContext : public Error {
   public:
    using Error::Error;
  };

  // A strand pair (i, j) that is out of range or has i == j.
  class InvalidPair : public Error {
   public:
    using Error::Error;
  };

  // A letter that does not belong to the alphabet of its word.
  class InvalidLetter : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // Word is not in the even subgroup (some generator occurs an odd number of
  // times, or the reduced length is odd).
  class NotInEvenSubgroup : public Error {
   public:
    using Error::Error;
  };

  class OutOfRange : public Error {
   public:
    using Error::Error;
  };

  // Geometric predicates.
  class DegenerateInput : public Error {
   public:
    using Error::Error;
  };

  class NoCircle : public Error {
   public:
    using Error::Error;
  };

  class TangentVertical : public Error {
   public:
    using Error::Error;
  };

  class UnorderedConfiguration : public Error {
   public:
    using Error::Error;
  };

  class NonGenericTrajectory : public Error {
   public:
    using Error::Error;
  };

}  // namespace gnk

#endif  // GNK_ERRORS_HPP_

// Exception types thrown by the arcwords library.

#ifndef ARCWORDS_ERROR_HPP_
#define ARCWORDS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcwords {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by the text parsers. `line` is 1-based; 0 when the error is not
  // tied to a particular line.
  class ParseError : public Error {
   public:
    enum class Kind {
      malformed,
      bad_header,
      loop,
      out_of_range,
      duplicate_edge,
    };

    ParseError(Kind kind, std::size_t line, std::string const& what);

    Kind kind() const noexcept {
      return _kind;
    }
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    Kind        _kind;
    std::size_t _line;
  };

  // An input exceeds a hard size limit (memory or enumeration budget).
  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  // A transformation is not an element of the semigroup in question.
  class NotMemberError : public Error {
   public:
    using Error::Error;
  };

  // The arguments violate a documented precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  char const* to_string(ParseError::Kind kind) noexcept;

}  // namespace arcwords

#endif  // ARCWORDS_ERROR_HPP_

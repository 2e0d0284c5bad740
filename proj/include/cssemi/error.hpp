#ifndef CSSEMI_ERROR_HPP_
#define CSSEMI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cssemi {

  // Base of every exception raised by the library.  The CLI maps any of these
  // onto exit code 2.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define CSSEMI_DEFINE_ERROR(Name)         \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

  CSSEMI_DEFINE_ERROR(UnknownElement);
  CSSEMI_DEFINE_ERROR(UnknownLabel);
  CSSEMI_DEFINE_ERROR(InvalidTable);
  CSSEMI_DEFINE_ERROR(NotASubgroup);
  CSSEMI_DEFINE_ERROR(NotCompletelySimple);
  CSSEMI_DEFINE_ERROR(NotNormalized);
  CSSEMI_DEFINE_ERROR(ComponentMismatch);
  CSSEMI_DEFINE_ERROR(NotValidated);
  CSSEMI_DEFINE_ERROR(NormalizationNotFixed);
  CSSEMI_DEFINE_ERROR(NoGroupAmalgamFound);
  CSSEMI_DEFINE_ERROR(CoreMismatch);
  CSSEMI_DEFINE_ERROR(InvalidAmalgam);
  CSSEMI_DEFINE_ERROR(InvalidSeed);
  CSSEMI_DEFINE_ERROR(TooLarge);
  CSSEMI_DEFINE_ERROR(DeadlineExceeded);
  CSSEMI_DEFINE_ERROR(DuplicateName);
  CSSEMI_DEFINE_ERROR(UnresolvedReference);
  CSSEMI_DEFINE_ERROR(InternalError);

#undef CSSEMI_DEFINE_ERROR

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t count)
        : Error("subsemigroup cap exceeded after " + std::to_string(count)
                + " sets"),
          _count(count) {}

    std::size_t count() const noexcept {
      return _count;
    }

   private:
    std::size_t _count;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : Error("line " + std::to_string(line) + ": " + message),
          _line(line),
          _message(message) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::size_t _line;
    std::string _message;
  };

}  // namespace cssemi

#endif  // CSSEMI_ERROR_HPP_

#pragma once

#include <stdexcept>
#include <string>

namespace sf {

  // Every failure raised by the library carries one of these codes; the C API
  // maps them onto its status values.
  enum class ErrorCode {
    arity,         // composing maps whose codomain/domain disagree
    index_range,   // generator or operator index outside its valid range
    domain,        // e.g. factor_surjection on a non-surjective map
    word,          // non-composable generator word
    precondition,  // operand is not a validated sector form
    dimension,     // polynomial / form dimensions do not match
    json,          // malformed serialized input
    resource       // a resource guard tripped
  };

  char const* to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace sf

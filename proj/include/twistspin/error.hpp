#pragma once

#include <stdexcept>
#include <string>

namespace twistspin {

  // Base for every error raised by the library. Messages are meant to be
  // shown to a CLI user as-is.
  class Error : public std::runtime_error {
   public:
    explicit Error(std::string const& msg) : std::runtime_error(msg) {}
  };

  // Malformed text input (presentation files, braid words, flag values).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration hit its step budget before finishing. Never carries a
  // partial count.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace twistspin

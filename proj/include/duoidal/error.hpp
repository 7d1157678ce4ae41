#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duoidal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in the term grammar, the proof-script format or a model file.
struct ParseError : Error {
  ParseError(const std::string &msg, std::size_t position, std::string token)
      : Error(msg + " at position " + std::to_string(position) +
              (token.empty() ? std::string(" (end of input)")
                             : " near '" + token + "'")),
        position(position), token(std::move(token)) {}

  std::size_t position;
  std::string token;
};

struct TypeError : Error {
  using Error::Error;
};

struct ModelError : Error {
  using Error::Error;
};

} // namespace duoidal

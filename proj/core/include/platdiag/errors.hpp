#pragma once

#include <stdexcept>
#include <string>

namespace pd {

// Bad user input: malformed words, out of range parameters, inadmissible tuples.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed word text. offset is the byte offset of the bad token.
struct ParseError : InputError {
    ParseError(std::string tok, std::size_t off, const std::string& why)
        : InputError("bad token '" + tok + "' at offset " + std::to_string(off) + ": " + why),
          token(std::move(tok)), offset(off) {}
    std::string token;
    std::size_t offset;
};

// A broken internal invariant, e.g. a slot permutation that does not close up.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace pd

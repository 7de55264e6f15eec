#pragma once

#include <stdexcept>
#include <string>

#include "ctlcs/core.hpp"

namespace ctlcs {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sequence text grammar: optional-sign base-10 integers separated by commas
// or whitespace. A single separator-free token of only '0'/'1' characters is
// read digit-by-digit as a binary string unless force_ints is set.
IntSeq parse_sequence(const std::string& text, bool force_ints = false);

bool is_binary(const IntSeq& s);

std::string format_sequence(const IntSeq& s, const std::string& sep = " ");

}  // namespace ctlcs

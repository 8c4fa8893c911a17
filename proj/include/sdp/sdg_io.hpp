#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdp/core.hpp"

namespace sdp {

// SDG text format:
//   # comment lines and trailing whitespace are ignored
//   p sdg <n> <m>
//   m lines "e <u> <v>"          edge indices 1..m in file order
//   any number of "d <v> <e>..." cumulative deletion sets
//   t <s> <t> [k]
struct SdgParseError : std::runtime_error {
    int line;
    SdgParseError(int line_, const std::string& what_);
};

Instance parse_sdg(std::istream& in);
Instance parse_sdg(const std::string& text);

std::string write_sdg(const Instance& inst);

} // namespace sdp

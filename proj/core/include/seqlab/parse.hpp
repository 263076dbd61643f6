#pragma once

// Small helpers shared by the spec mini-language parsers.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqlab/error.hpp"

namespace seqlab::parse {

std::string trim(std::string_view s);

// Splits on `sep`; empty fields are kept.
std::vector<std::string> split(std::string_view s, char sep);

// "name:args" -> {"name", "args"}; no colon gives empty args.
std::pair<std::string, std::string> head(std::string_view spec);

// Shortest "%.12g" rendering, used in generated names.
std::string num(double v);

double to_double(std::string_view s, std::string_view what);
Index to_index(std::string_view s, std::string_view what);

// Non-empty, trimmed, non-comment lines of a text file. Throws SpecError on
// unreadable or empty files.
std::vector<std::string> read_lines(const std::string& path);

// Parses "k1=v1,k2=v2" where a value may itself contain commas; a field with
// no '=' is glued back onto the previous value.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view s);

}  // namespace seqlab::parse

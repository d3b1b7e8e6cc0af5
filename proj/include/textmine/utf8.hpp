#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace textmine::utf8 {

// Decodes the codepoint starting at s[i] and advances i. Returns -1 and
// advances by one byte on malformed input.
std::int32_t next(std::string_view s, std::size_t& i);

// True when the whole string is well-formed UTF-8.
bool valid(std::string_view s);

// Number of codepoints (malformed bytes count as one each).
std::size_t length(std::string_view s);

// Appends the UTF-8 encoding of cp to out.
void append(std::string& out, std::int32_t cp);

} // namespace textmine::utf8

#include "doctest.h"

#include <string>

#include "textmine/utf8.hpp"

using namespace textmine;

TEST_CASE("decodes ascii and multibyte sequences") {
    std::string s = "a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x99\x82"; // a é € 🙂
    std::size_t i = 0;
    CHECK(utf8::next(s, i) == 0x61);
    CHECK(utf8::next(s, i) == 0xE9);
    CHECK(utf8::next(s, i) == 0x20AC);
    CHECK(utf8::next(s, i) == 0x1F642);
    CHECK(i == s.size());
    CHECK(utf8::valid(s));
    CHECK(utf8::length(s) == 4);
}

TEST_CASE("rejects malformed input") {
    CHECK_FALSE(utf8::valid("\xC3"));            // truncated
    CHECK_FALSE(utf8::valid("\x80"));            // bare continuation
    CHECK_FALSE(utf8::valid("\xC0\xAF"));        // overlong '/'
    CHECK_FALSE(utf8::valid("\xED\xA0\x80"));    // surrogate half
    CHECK_FALSE(utf8::valid("\xF4\x90\x80\x80")); // beyond U+10FFFF
    CHECK(utf8::valid(""));
    std::string bad = "ab\xFFzz";
    std::size_t i = 2;
    CHECK(utf8::next(bad, i) == -1);
}

TEST_CASE("append round-trips code points") {
    std::string out;
    utf8::append(out, 0x61);
    utf8::append(out, 0xE9);
    utf8::append(out, 0x20AC);
    utf8::append(out, 0x1F642);
    CHECK(out == "a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x99\x82");
    std::size_t i = 0;
    CHECK(utf8::next(out, i) == 0x61);
    CHECK(utf8::next(out, i) == 0xE9);
    CHECK(utf8::next(out, i) == 0x20AC);
    CHECK(utf8::next(out, i) == 0x1F642);
}

#include "nonef/notation.hpp"

#include <cctype>
#include <cstdlib>

namespace nonef {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("class notation: " + msg + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }
    i64 integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits_from = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits_from) fail("expected an integer");
        errno = 0;
        long long v = std::strtoll(s.substr(start, i - start).c_str(), nullptr, 10);
        if (errno != 0) fail("integer out of 64-bit range");
        return v;
    }
};

}  // namespace

DivisorClass parse_class(const std::string& text) {
    Cursor c{text};
    DivisorClass r;
    r.degree = c.integer();
    if (!c.eat(';')) c.fail("expected ';' after the degree");
    if (c.done()) return r;
    for (;;) {
        i64 m = c.integer();
        i64 rep = 1;
        if (c.eat('^')) {
            rep = c.integer();
            if (rep < 1) c.fail("exponent must be >= 1");
        }
        for (i64 j = 0; j < rep; ++j) r.mults.push_back(m);
        if (c.done()) return r;
        if (!c.eat(',')) c.fail("expected ',' between multiplicities");
        if (c.done()) c.fail("trailing ','");
    }
}

std::string format_class(const DivisorClass& a) {
    std::string out = std::to_string(a.degree) + ";";
    for (std::size_t i = 0; i < a.mults.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.mults[i]);
    }
    return out;
}

std::string format_class_normalized(const DivisorClass& a) {
    return format_class(normalized(a));
}

}  // namespace nonef

#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace mtc {

using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

} // namespace mtc

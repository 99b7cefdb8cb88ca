#pragma once

#include <string>

#include "mulink/errors.hpp"

namespace mulink {

// Components are lettered a, b, c, ... in output and in Milnor sequence
// notation. 26 letters bounds the component count for the pretty printers.
inline char comp_letter(int comp) {
    if (comp < 0 || comp >= 26)
        throw ComputeError("component index " + std::to_string(comp) +
                           " out of letter range (max 26 components)");
    return static_cast<char>('a' + comp);
}

inline int comp_from_letter(char c) {
    if (c < 'a' || c > 'z')
        throw ParseError(std::string("expected component letter, got '") + c + "'");
    return c - 'a';
}

inline std::string comp_name(int comp) { return std::string(1, comp_letter(comp)); }

} // namespace mulink

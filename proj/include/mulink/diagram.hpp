#pragma once

#include <string>
#include <vector>

namespace mulink {

enum class PassKind { Over, Under, Flat };

// One passage of a component through a crossing. sign is +1 or -1 for
// classical passages and 0 for flat (virtualized) ones.
struct Passage {
    PassKind kind;
    int crossing;
    int sign;
    bool operator==(const Passage&) const = default;
};

// Virtual link diagram as a signed Gauss code: only classical crossings are
// recorded, one Over and one Under passage each with a common sign. Flat
// passages stand for crossings that have been virtualized. Virtual crossings
// of the original diagram are not stored at all.
struct Diagram {
    std::vector<std::vector<Passage>> components;
    bool operator==(const Diagram&) const = default;
};

struct BraidLetter {
    enum class Type { ClassicalPos, ClassicalNeg, Virtual };
    Type type;
    int index; // 1-based, acts on strand positions index and index+1
    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands;
    std::vector<BraidLetter> letters;
};

// Tokens s<k> (positive classical), S<k> (negative classical), v<k> (virtual),
// whitespace separated.
BraidWord parse_braid(const std::string& text, int strands);

// Closure of a braid word. Crossing ids number the classical letters 1,2,...
// in word order. Components are the cycles of the strand permutation, ordered
// by their smallest strand, traversed starting from that strand.
Diagram close_braid(const BraidWord& b);

// Components separated by '|'; passages are tokens O<id>+ O<id>- U<id>+
// U<id>- F<id>, separated by spaces or commas. An empty segment is a
// crossing-free component.
Diagram parse_gauss(const std::string& text);
std::string render_gauss(const Diagram& d);

// Checks that every crossing id occurs as exactly one Over and one Under
// passage with equal nonzero signs, or as exactly two Flat passages.
void validate(const Diagram& d);

struct CrossingInfo {
    int id;
    int sign;
    int over_comp, over_pos;
    int under_comp, under_pos;
    bool flat;
};

// Sorted by id. Validates the diagram. For flat crossings over_* holds the
// passage met first in traversal order and under_* the second.
std::vector<CrossingInfo> crossing_table(const Diagram& d);

// Sum of signs of classical crossings where over_comp passes over under_comp.
long long linking_number(const Diagram& d, int over_comp, int under_comp);

// All passages turned flat. Idempotent.
Diagram flatten(const Diagram& d);

int max_crossing_id(const Diagram& d);

} // namespace mulink

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mulink {

// One letter of a word in a free group: generator index and exponent +1/-1.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

// Freely reduced word. The representation is canonical: no letter is followed
// by its inverse, so operator== is equality in the free group.
class GroupWord {
public:
    GroupWord() = default;

    static GroupWord generator(int gen, int exp = 1);

    // Appends gen^exp, reducing against the tail. exp may be any integer.
    void append(int gen, int exp);
    void append(const Letter& l) { append(l.gen, l.exp); }
    void append(const GroupWord& w);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const GroupWord&) const = default;

private:
    std::vector<Letter> letters_;
};

GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& a);
// g u g^-1
GroupWord conjugate(const GroupWord& u, const GroupWord& g);
// u v u^-1 v^-1
GroupWord commutator(const GroupWord& u, const GroupWord& v);
GroupWord pow(const GroupWord& a, int n);

// "b0 a2^-1 b0" style; "1" for the identity.
std::string render_word(const GroupWord& w, const std::function<std::string(int)>& namer);

// Inverse of render_word. resolver maps a generator name to its index and
// throws ParseError for unknown names. Tokens are separated by whitespace;
// each is either "1" or NAME or NAME^INT.
GroupWord parse_word(const std::string& text, const std::function<int(const std::string&)>& resolver);

// Random element of the depth-th lower central series subgroup of the free
// group on the given generators: depth 1 is a random word, deeper elements
// are products of commutators [word, element of depth-1]. Deterministic in
// the seed. May return the identity only if the retry budget is exhausted.
GroupWord sample_lcs_element(const std::vector<int>& gens, int depth, std::uint64_t seed);

} // namespace mulink

#include "doctest.h"

#include "mulink/errors.hpp"
#include "mulink/freegroup.hpp"
#include "mulink/names.hpp"
#include "mulink/rng.hpp"

#include "gen.hpp"

#include <map>

using namespace mulink;

namespace {
int resolve_letter(const std::string& s) {
    if (s.size() != 1) throw ParseError("bad generator '" + s + "'");
    return comp_from_letter(s[0]);
}
std::string name_letter(int g) { return comp_name(g); }
} // namespace

TEST_CASE("words reduce as they are built") {
    GroupWord w;
    w.append(0, 1);
    w.append(1, 1);
    w.append(1, -1);
    w.append(2, 1);
    CHECK(w.length() == 2);
    CHECK(w == multiply(GroupWord::generator(0), GroupWord::generator(2)));

    GroupWord u = multiply(w, inverse(w));
    CHECK(u.is_identity());
}

TEST_CASE("inverse law on random words") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        GroupWord w = gen::random_word(rng, 4, 12);
        CHECK(multiply(w, inverse(w)).is_identity());
        CHECK(multiply(inverse(w), w).is_identity());
    }
}

TEST_CASE("commutator and conjugate shapes") {
    GroupWord a = GroupWord::generator(0);
    GroupWord b = GroupWord::generator(1);
    CHECK(commutator(a, a).is_identity());
    CHECK(commutator(a, b).length() == 4);
    CHECK(conjugate(b, a) == multiply(multiply(a, b), inverse(a)));
    CHECK(pow(a, -3).length() == 3);
    CHECK(pow(a, 0).is_identity());
}

TEST_CASE("parse and render") {
    GroupWord w = parse_word("a^2 b^-1 1 a", resolve_letter);
    CHECK(render_word(w, name_letter) == "a^2 b^-1 a");
    CHECK(render_word(GroupWord{}, name_letter) == "1");
    CHECK(parse_word("a a^-1", resolve_letter).is_identity());
    CHECK_THROWS_AS(parse_word("a^x", resolve_letter), ParseError);
    CHECK_THROWS_AS(parse_word("ab", resolve_letter), ParseError);
}

TEST_CASE("lower central series samples have zero exponent sums") {
    Rng rng(11);
    for (int depth = 2; depth <= 4; ++depth) {
        for (int i = 0; i < 10; ++i) {
            GroupWord g = sample_lcs_element({0, 1, 2}, depth, rng.next());
            CHECK(!g.is_identity());
            std::map<int, int> sums;
            for (const Letter& l : g.letters()) sums[l.gen] += l.exp;
            for (const auto& [gen, sum] : sums) {
                (void)gen;
                CHECK(sum == 0);
            }
        }
    }
}

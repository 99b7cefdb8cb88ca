#include "doctest.h"

#include "mulink/diagram.hpp"
#include "mulink/errors.hpp"
#include "mulink/milnor.hpp"
#include "mulink/names.hpp"

#include <string>
#include <vector>

using namespace mulink;

namespace {
std::vector<GroupWord> words(const std::vector<std::string>& texts) {
    std::vector<GroupWord> out;
    for (const std::string& t : texts)
        out.push_back(parse_word(t, [](const std::string& s) {
            if (s.size() != 1) throw ParseError("bad generator");
            return comp_from_letter(s[0]);
        }));
    return out;
}
} // namespace

TEST_CASE("modified borromean longitudes") {
    MuTable t = mu_from_longitudes(
        words({"b^-1 c^-1 b c", "c a c^-1 a^-1", "b^2 a^-1 b^-1 a"}), 3,
        DeltaConvention::Subsequences);

    CHECK(t.mu(0, {1}) == 0);
    CHECK(t.mu(0, {2}) == 0);
    CHECK(t.mu(1, {0}) == 0);
    CHECK(t.mu(1, {2}) == 0);
    CHECK(t.mu(2, {0}) == 0);
    CHECK(t.mu(2, {1}) == 1);

    CHECK(t.mu(0, {1, 2}) == 1);
    CHECK(t.mu(0, {2, 1}) == -1);
    CHECK(t.mu(1, {2, 0}) == 1);
    CHECK(t.mu(1, {0, 2}) == -1);
    CHECK(t.mu(2, {0, 1}) == 1);
    CHECK(t.mu(2, {1, 0}) == -1);

    // mu(b,w_c) = 1 feeds the indeterminacy of every length two sequence
    // whose cyclic closure contains b before c
    CHECK(t.at(0, {1, 2}).delta == 1);
    CHECK(t.mubar(0, {1, 2}) == 0);
    CHECK(t.at(0, {2, 1}).delta == 0);
    CHECK(t.mubar(0, {2, 1}) == -1);
    CHECK(t.mubar(1, {2, 0}) == 1);
    CHECK(t.mubar(1, {0, 2}) == -1);
    CHECK(t.mubar(2, {0, 1}) == 0);
    CHECK(t.mubar(2, {1, 0}) == 0);
}

TEST_CASE("residues are least non-negative") {
    MuTable t = mu_from_longitudes(
        words({"1", "a^2", "a b a^-1 b^-1 a b a^-1 b^-1 a b a^-1 b^-1"}), 3,
        DeltaConvention::Subsequences);
    const MuEntry& e = t.at(2, {0, 1});
    CHECK(e.mu == 3);
    CHECK(e.delta == 2);
    CHECK(e.mubar == 1);
}

TEST_CASE("cyclic convention widens the indeterminacy") {
    std::vector<GroupWord> ls =
        words({"b^2", "1", "a b a^-1 b^-1 a b a^-1 b^-1 a b a^-1 b^-1"});
    MuTable plain = mu_from_longitudes(ls, 3, DeltaConvention::Subsequences);
    MuTable cyc = mu_from_longitudes(ls, 3, DeltaConvention::CyclicSubsequences);
    CHECK(plain.at(2, {0, 1}).delta == 0);
    CHECK(plain.mubar(2, {0, 1}) == 3);
    CHECK(cyc.at(2, {0, 1}).delta == 2);
    CHECK(cyc.mubar(2, {0, 1}) == 1);
}

TEST_CASE("entries containing the target") {
    Diagram kink = parse_gauss("O1+ U1+");
    validate(kink);
    MuTable t = mu_table(kink, 3);
    CHECK(t.mu(0, {0}) == 1);
    CHECK(t.at(0, {0}).contains_target);
    CHECK(t.mubar(0, {0}) == 0);

    auto obstruction = classicality_obstruction(t);
    REQUIRE(obstruction.size() == 1);
    CHECK(obstruction[0].first == 0);
    CHECK(obstruction[0].second == 1);
}

TEST_CASE("linking column matches degree one entries") {
    Diagram d = close_braid(parse_braid("s1 s1 s1 v1", 2));
    MuTable t = mu_table(d, 3);
    REQUIRE(t.has_linking);
    CHECK(t.linking[0][1] == 2);
    CHECK(t.linking[1][0] == 1);
    CHECK(linking_mismatches(t).empty());

    MuTable free_table = mu_from_longitudes(words({"b", "a^2"}), 3,
                                            DeltaConvention::Subsequences);
    CHECK(!free_table.has_linking);
    CHECK_THROWS_AS(linking_mismatches(free_table), ComputeError);
}

TEST_CASE("record stream round trip") {
    Diagram d = close_braid(parse_braid("s1 s1 s1 v1", 2));
    MuTable t = mu_table(d, 3);
    MuTable back = from_records(to_records(t));
    CHECK(back.k == t.k);
    CHECK(back.cap == t.cap);
    CHECK(raw_equal(t, back));
    CHECK(mubar_equal(t, back));
    CHECK(raw_equal_excluding_target_in_seq(t, back));
}

TEST_CASE("sequence enumeration is graded") {
    auto seqs = all_sequences(2, 2);
    REQUIRE(seqs.size() == 6);
    CHECK(seqs.front() == std::vector<int>{0});
    CHECK(seqs[1] == std::vector<int>{1});
    CHECK(seqs[2] == std::vector<int>{0, 0});
    CHECK(seqs.back() == std::vector<int>{1, 1});
}

#include "doctest.h"

#include "mulink/diagram.hpp"
#include "mulink/errors.hpp"
#include "mulink/skein.hpp"

#include "gen.hpp"

#include <string>

using namespace mulink;

TEST_CASE("virtual hopf mark") {
    MarkedBraid mb{parse_braid("v1 S1", 2), 1};
    SkeinReport rep = check_skein(mb, 3);
    CHECK(rep.words.case_id == 2);
    CHECK(rep.words.crossing == 1);
    CHECK(rep.words.under_comp == 1);
    CHECK(rep.words.over_comp == 0);
    CHECK(rep.words.l_plus.is_identity());
    CHECK(rep.words.l_zero.is_identity());
    CHECK(rep.words.l_inf.is_identity());
    CHECK(rep.words.l_minus.length() == 1);
    CHECK(rep.all_pass);

    bool saw_base = false;
    for (const SkeinCheck& c : rep.checks)
        if (c.family == "base" && c.seq == std::vector<int>{0}) {
            saw_base = true;
            CHECK(c.lhs == 1);
            CHECK(c.rhs == 1);
        }
    CHECK(saw_base);
}

TEST_CASE("twice twisted closure marks") {
    MarkedBraid first{parse_braid("s1 s1 s1 v1", 2), 0};
    SkeinReport r1 = check_skein(first, 3);
    CHECK(r1.words.case_id == 1);
    CHECK(r1.all_pass);
    for (const SkeinCheck& c : r1.checks)
        if (c.family == "base") {
            CHECK(c.lhs == 1);
            CHECK(c.rhs == 1);
        }

    MarkedBraid second{parse_braid("s1 s1 s1 v1", 2), 1};
    SkeinReport r2 = check_skein(second, 3);
    CHECK(r2.words.crossing == 2);
    CHECK(r2.all_pass);

    std::string text = render_skein_report(r2);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("family=base") != std::string::npos);
}

TEST_CASE("marks must sit on classical letters") {
    CHECK_THROWS_AS(check_skein({parse_braid("s1 s1 s1 v1", 2), 3}, 3),
                    ValidationError);
    CHECK_THROWS_AS(check_skein({parse_braid("s1", 2), 5}, 3), ValidationError);
}

TEST_CASE("random marked braids satisfy all families") {
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        gen::MarkedSample s = gen::random_marked_braid(rng, 2, 8);
        SkeinReport rep = check_skein({s.braid, s.mark}, 3);
        CHECK(rep.all_pass);
    }
}

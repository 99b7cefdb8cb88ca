#include "doctest.h"

#include "mulink/diagram.hpp"
#include "mulink/errors.hpp"
#include "mulink/magnus.hpp"
#include "mulink/names.hpp"
#include "mulink/wirtinger.hpp"

#include "gen.hpp"

using namespace mulink;

namespace {
GroupWord from_text(const std::string& s) {
    return parse_word(s, [](const std::string& t) {
        if (t.size() != 1) throw ParseError("bad generator");
        return comp_from_letter(t[0]);
    });
}
} // namespace

TEST_CASE("expansions of commutator words") {
    std::vector<Series> basis = meridian_basis(3, 3);

    Series s = psi_word(from_text("b^-1 c^-1 b c"), basis, 3, 3);
    CHECK(s.coeff({}) == 1);
    CHECK(s.coeff({1}) == 0);
    CHECK(s.coeff({2}) == 0);
    CHECK(s.coeff({1, 2}) == 1);
    CHECK(s.coeff({2, 1}) == -1);

    s = psi_word(from_text("c a c^-1 a^-1"), basis, 3, 3);
    CHECK(s.coeff({2, 0}) == 1);
    CHECK(s.coeff({0, 2}) == -1);
    CHECK(s.coeff({0}) == 0);

    s = psi_word(from_text("b^2 a^-1 b^-1 a"), basis, 3, 3);
    CHECK(s.coeff({1}) == 1);
    CHECK(s.coeff({0, 1}) == 1);
    CHECK(s.coeff({1, 0}) == -1);
    CHECK(s.coeff({0}) == 0);
}

TEST_CASE("expansion is a homomorphism") {
    Rng rng(23);
    std::vector<Series> basis = meridian_basis(3, 4);
    for (int i = 0; i < 30; ++i) {
        GroupWord u = gen::random_word(rng, 3, 8);
        GroupWord v = gen::random_word(rng, 3, 8);
        Series lhs = psi_word(multiply(u, v), basis, 3, 4);
        Series rhs = series_mul(psi_word(u, basis, 3, 4), psi_word(v, basis, 3, 4));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("arc series fixpoint on the twice twisted closure") {
    Diagram d = close_braid(parse_braid("s1 s1 s1 v1", 2));
    Presentation p = presentation(d);
    ArcSeriesMap rho = rho_fixpoint(p, 3);

    int a0 = p.arcs.id(0, 0);
    int b0 = p.arcs.id(1, 0);
    int b1 = p.arcs.id(1, 1);
    CHECK(rho.by_gen[a0] == Series::meridian(2, 3, 0));
    CHECK(rho.by_gen[b0] == Series::meridian(2, 3, 1));
    CHECK(rho.by_gen[b1].coeff({1}) == 1);
    CHECK(rho.by_gen[b1].coeff({0, 1}) == 1);
    CHECK(rho.by_gen[b1].coeff({1, 0}) == -1);
    CHECK(rho.sweeps <= 3);

    Series wa = psi_word(p.longitudes[0], rho.by_gen, p.k, 3);
    Series wb = psi_word(p.longitudes[1], rho.by_gen, p.k, 3);
    CHECK(wa.coeff({1}) == 1);
    CHECK(wb.coeff({0}) == 2);
}

TEST_CASE("defining relations hold exactly in the fixpoint") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        Diagram d = close_braid(gen::random_virtual_braid(rng, 2, 3, 10));
        Presentation p = presentation(d);
        ArcSeriesMap rho = rho_fixpoint(p, 3);
        for (const WirtingerRelation& r : p.relations) {
            if (!r.defining) continue;
            Series over = rho.by_gen[r.over_gen];
            if (r.sign < 0) over = series_inverse(over);
            Series out = series_mul(series_mul(over, rho.by_gen[r.in_gen]),
                                    series_inverse(over));
            CHECK(out == rho.by_gen[r.out_gen]);
        }
    }
}

TEST_CASE("unknown generators are rejected") {
    std::vector<Series> basis = meridian_basis(2, 3);
    CHECK_THROWS_AS(psi_word(from_text("c"), basis, 2, 3), ComputeError);
}

#include "mulink/magnus.hpp"

#include "mulink/errors.hpp"

namespace mulink {

std::vector<Series> meridian_basis(int k, int cap) {
    std::vector<Series> basis;
    basis.reserve(k);
    for (int i = 0; i < k; ++i) basis.push_back(Series::meridian(k, cap, i));
    return basis;
}

Series psi_word(const GroupWord& w, const std::vector<Series>& assignment, int vars, int cap) {
    Series r = Series::one(vars, cap);
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen >= static_cast<int>(assignment.size()))
            throw ComputeError("word uses generator " + std::to_string(l.gen) +
                               " outside the assignment");
        const Series& s = assignment[l.gen];
        r = series_mul(r, l.exp > 0 ? s : series_inverse(s));
    }
    return r;
}

ArcSeriesMap rho_fixpoint(const Presentation& p, int cap) {
    ArcSeriesMap m;
    m.by_gen.reserve(p.arcs.total());
    for (int g = 0; g < p.arcs.total(); ++g)
        m.by_gen.push_back(Series::meridian(p.k, cap, p.arcs.of(g).component));

    for (int sweep = 1; sweep <= cap; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < p.relations.size(); ++i) {
            const WirtingerRelation& r = p.relations[i];
            if (!r.defining) continue;
            const Series& over = m.by_gen[r.over_gen];
            Series o = r.sign > 0 ? over : series_inverse(over);
            Series oi = r.sign > 0 ? series_inverse(over) : over;
            Series out = series_mul(series_mul(o, m.by_gen[r.in_gen]), oi);
            if (!(out == m.by_gen[r.out_gen])) {
                m.by_gen[r.out_gen] = std::move(out);
                changed = true;
            }
        }
        m.sweeps = sweep;
        if (!changed) return m;
    }
    throw ComputeError("arc series did not stabilize within " + std::to_string(cap) +
                       " sweeps");
}

} // namespace mulink

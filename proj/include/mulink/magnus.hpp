#pragma once

#include <vector>

#include "mulink/freegroup.hpp"
#include "mulink/series.hpp"
#include "mulink/wirtinger.hpp"

namespace mulink {

// Assignment of a power series (in one variable per component) to every arc
// generator of a presentation.
struct ArcSeriesMap {
    std::vector<Series> by_gen;
    int sweeps = 0;
};

// 1 + x_i for each component i.
std::vector<Series> meridian_basis(int k, int cap);

// Magnus image of a word under the given generator assignment. Exponent -1
// maps to the series inverse, so every assigned series must have constant
// term 1.
Series psi_word(const GroupWord& w, const std::vector<Series>& assignment, int vars, int cap);

// Solves the defining Wirtinger relations for the arc series: every arc
// starts at its component's meridian 1 + x_i and the relations
// out = over^s * in * over^-s are swept in presentation order until stable.
// Base arcs (arc 0 of each component) are never the output of a defining
// relation, so they stay pinned at the meridian. Closure relations are not
// swept; they hold only modulo higher-degree terms and are checked elsewhere.
// Throws ComputeError if the assignment still changes after cap sweeps.
ArcSeriesMap rho_fixpoint(const Presentation& p, int cap);

} // namespace mulink

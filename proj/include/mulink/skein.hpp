#pragma once

#include <string>
#include <vector>

#include "mulink/diagram.hpp"
#include "mulink/freegroup.hpp"
#include "mulink/ints.hpp"
#include "mulink/series.hpp"

namespace mulink {

// Braid word with one classical letter singled out for crossing switching.
struct MarkedBraid {
    BraidWord braid;
    int mark = 0; // 0-based index into braid.letters, must name a classical letter
};

// The four longitude words at a marked classical crossing, all written in the
// arc generators of the closed diagram of the given braid. With v and w the
// parts of the under strand's longitude after and before the mark, and C the
// conjugator expressing the over arc as C a_k0 C^-1:
//   positive crossing (case 1): l+ = v C a_k0 C^-1 w   l- = v w
//   negative crossing (case 2): l+ = v w               l- = v C a_k0^-1 C^-1 w
//   both cases:                 l0 = v C                linf = C^-1 w
struct SkeinWords {
    int case_id;    // 1 if the marked crossing is positive, 2 if negative
    int crossing;
    int under_comp; // component whose longitude is being resolved
    int over_comp;  // the "k-th strand"
    GroupWord l_plus, l_minus, l_zero, l_inf;
};

SkeinWords skein_words(const Diagram& d, int crossing_id);

struct SkeinCheck {
    std::string family; // base, terminal, leading, interior
    std::vector<int> seq;
    Integer lhs, rhs;
    bool pass;
};

struct SkeinReport {
    SkeinWords words;
    int components = 0;
    int cap = 0;
    Series psi_plus, psi_minus, psi_zero, psi_inf;
    std::vector<SkeinCheck> checks;
    bool all_pass = true;
};

// Closes the braid, expands the four longitudes, and verifies
//   mu(A k B, l+) - mu(A k B, l-) = mu(A, l0) * mu(B, linf)
// for every sequence containing the over component exactly once, of length
// below cap. The family labels the position of k: alone (base), last
// (terminal), first (leading), or in the middle (interior).
SkeinReport check_skein(const MarkedBraid& mb, int cap);

std::string render_skein_report(const SkeinReport& r);

} // namespace mulink

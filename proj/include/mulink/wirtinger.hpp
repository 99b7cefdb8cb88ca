#pragma once

#include <string>
#include <vector>

#include "mulink/diagram.hpp"
#include "mulink/freegroup.hpp"

namespace mulink {

struct ArcGen {
    int component;
    int arc;
    bool operator==(const ArcGen&) const = default;
};

// Flat numbering of arc generators across all components. Arc j of component
// i is named like "a0", "b2": component letter plus arc number.
class ArcIndexer {
public:
    ArcIndexer() = default;
    explicit ArcIndexer(std::vector<int> arc_counts);

    int id(int comp, int arc) const;
    ArcGen of(int id) const;
    std::string name(int id) const;
    int resolve(const std::string& name) const;

    int total() const { return total_; }
    int components() const { return static_cast<int>(counts_.size()); }
    int arcs_of(int comp) const { return counts_[comp]; }

private:
    std::vector<int> counts_;
    std::vector<int> offsets_;
    int total_ = 0;
};

// out = over^sign * in * over^-sign, from one classical crossing. under_ordinal
// counts the under-passages of under_comp in traversal order starting at 1;
// the last one of each component yields the closure relation (defining=false).
struct WirtingerRelation {
    int crossing;
    int sign;
    int over_gen;
    int in_gen;
    int out_gen;
    int under_comp;
    int under_ordinal;
    bool defining;
};

struct Presentation {
    int k = 0;
    ArcIndexer arcs;
    std::vector<WirtingerRelation> relations; // component-major, traversal order
    std::vector<GroupWord> relators;          // over^s * in * over^-s * out^-1
    std::vector<GroupWord> longitudes;        // one per component, arc generators
    std::vector<int> base_arc_gen;            // generator id of arc 0, per component
    std::vector<GroupWord> meridian_relators; // extra commutators, see link_group_presentation
};

// Wirtinger presentation of the diagram's group. Arcs of a component are the
// stretches between its genuine under-passages (flat passages do not cut);
// a component with none has a single arc. The longitude of component i is the
// product of over-arc generators at its under-passages, each raised to the
// crossing sign, taken in reversed traversal order. No framing correction is
// applied.
Presentation presentation(const Diagram& d);

GroupWord longitude(const Diagram& d, int comp);

// Same presentation with commutators [a_ij, a_ik] of all arc generator pairs
// within each component appended, so that all meridians of a component
// commute (the reduced group).
Presentation link_group_presentation(const Diagram& d);

std::string render_presentation(const Presentation& p);

} // namespace mulink

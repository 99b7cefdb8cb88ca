#include "mulink/wirtinger.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mulink/errors.hpp"
#include "mulink/names.hpp"

namespace mulink {

ArcIndexer::ArcIndexer(std::vector<int> arc_counts) : counts_(std::move(arc_counts)) {
    offsets_.reserve(counts_.size());
    for (int c : counts_) {
        offsets_.push_back(total_);
        total_ += c;
    }
}

int ArcIndexer::id(int comp, int arc) const {
    return offsets_[comp] + arc;
}

ArcGen ArcIndexer::of(int id) const {
    int comp = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), id) -
                                offsets_.begin()) -
               1;
    return {comp, id - offsets_[comp]};
}

std::string ArcIndexer::name(int id) const {
    ArcGen g = of(id);
    return comp_name(g.component) + std::to_string(g.arc);
}

int ArcIndexer::resolve(const std::string& name) const {
    if (name.empty()) throw ParseError("empty generator name");
    int comp = comp_from_letter(name[0]);
    if (comp >= components())
        throw ParseError("no component '" + name.substr(0, 1) + "'");
    if (name.size() < 2) throw ParseError("generator '" + name + "' lacks an arc number");
    int arc = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw ParseError("bad generator name '" + name + "'");
        arc = arc * 10 + (name[i] - '0');
    }
    if (arc >= arcs_of(comp))
        throw ParseError("component " + comp_name(comp) + " has no arc " + std::to_string(arc));
    return id(comp, arc);
}

namespace {

struct ArcLayout {
    ArcIndexer arcs;
    std::vector<int> under_counts;
    // arc_at[c][p]: arc of component c that position p lies on
    std::vector<std::vector<int>> arc_at;
};

ArcLayout layout_arcs(const Diagram& d) {
    ArcLayout l;
    std::vector<int> counts;
    for (const auto& comp : d.components) {
        int unders = 0;
        for (const Passage& p : comp)
            if (p.kind == PassKind::Under) ++unders;
        l.under_counts.push_back(unders);
        counts.push_back(std::max(1, unders));
    }
    l.arcs = ArcIndexer(counts);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        std::vector<int> at;
        int seen = 0;
        int t = std::max(1, l.under_counts[c]);
        for (const Passage& p : d.components[c]) {
            at.push_back(seen % t);
            if (p.kind == PassKind::Under) ++seen;
        }
        l.arc_at.push_back(std::move(at));
    }
    return l;
}

} // namespace

Presentation presentation(const Diagram& d) {
    auto table = crossing_table(d);
    ArcLayout l = layout_arcs(d);

    Presentation p;
    p.k = static_cast<int>(d.components.size());
    p.arcs = l.arcs;
    for (int c = 0; c < p.k; ++c) p.base_arc_gen.push_back(p.arcs.id(c, 0));

    // over-arc generator at each classical crossing, by id
    std::vector<int> over_gen_of(max_crossing_id(d) + 1, -1);
    std::vector<int> sign_of(max_crossing_id(d) + 1, 0);
    for (const CrossingInfo& x : table) {
        if (x.flat) continue;
        over_gen_of[x.id] = p.arcs.id(x.over_comp, l.arc_at[x.over_comp][x.over_pos]);
        sign_of[x.id] = x.sign;
    }

    for (int c = 0; c < p.k; ++c) {
        const auto& comp = d.components[c];
        int t = l.under_counts[c];
        int m = 0;
        GroupWord lon;
        for (std::size_t pos = 0; pos < comp.size(); ++pos) {
            const Passage& pa = comp[pos];
            if (pa.kind != PassKind::Under) continue;
            ++m;
            WirtingerRelation rel;
            rel.crossing = pa.crossing;
            rel.sign = pa.sign;
            rel.over_gen = over_gen_of[pa.crossing];
            rel.in_gen = p.arcs.id(c, m - 1);
            rel.out_gen = p.arcs.id(c, m % t);
            rel.under_comp = c;
            rel.under_ordinal = m;
            rel.defining = m < t;
            GroupWord w = GroupWord::generator(rel.over_gen, rel.sign);
            w.append(rel.in_gen, 1);
            w.append(rel.over_gen, -rel.sign);
            w.append(rel.out_gen, -1);
            p.relations.push_back(rel);
            p.relators.push_back(std::move(w));
            lon.append(rel.over_gen, rel.sign);
        }
        // last under-passage contributes the leftmost letter
        GroupWord rev;
        const auto& ls = lon.letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) rev.append(it->gen, it->exp);
        p.longitudes.push_back(std::move(rev));
    }
    return p;
}

GroupWord longitude(const Diagram& d, int comp) {
    Presentation p = presentation(d);
    if (comp < 0 || comp >= p.k) throw ComputeError("component index out of range");
    return p.longitudes[comp];
}

Presentation link_group_presentation(const Diagram& d) {
    Presentation p = presentation(d);
    for (int c = 0; c < p.k; ++c) {
        int n = p.arcs.arcs_of(c);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                p.meridian_relators.push_back(commutator(GroupWord::generator(p.arcs.id(c, i)),
                                                         GroupWord::generator(p.arcs.id(c, j))));
    }
    return p;
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream out;
    auto namer = [&](int g) { return p.arcs.name(g); };
    out << "components: " << p.k << "\n";
    out << "generators:";
    for (int g = 0; g < p.arcs.total(); ++g) out << ' ' << p.arcs.name(g);
    out << "\n";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const WirtingerRelation& r = p.relations[i];
        out << "relation crossing=" << r.crossing << (r.defining ? " defining" : " closure")
            << ": " << p.arcs.name(r.out_gen) << " = ";
        GroupWord rhs = GroupWord::generator(r.over_gen, r.sign);
        rhs.append(r.in_gen, 1);
        rhs.append(r.over_gen, -r.sign);
        out << render_word(rhs, namer) << "\n";
    }
    for (const GroupWord& w : p.meridian_relators)
        out << "relator: " << render_word(w, namer) << "\n";
    for (int c = 0; c < p.k; ++c)
        out << "longitude " << comp_name(c) << ": " << render_word(p.longitudes[c], namer)
            << "\n";
    return out.str();
}

} // namespace mulink

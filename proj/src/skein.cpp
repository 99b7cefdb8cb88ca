#include "mulink/skein.hpp"

#include <algorithm>
#include <sstream>

#include "mulink/errors.hpp"
#include "mulink/magnus.hpp"
#include "mulink/milnor.hpp"
#include "mulink/names.hpp"
#include "mulink/wirtinger.hpp"

namespace mulink {

SkeinWords skein_words(const Diagram& d, int crossing_id) {
    auto table = crossing_table(d);
    const CrossingInfo* mark = nullptr;
    for (const CrossingInfo& x : table)
        if (x.id == crossing_id) mark = &x;
    if (!mark) throw ValidationError("no crossing " + std::to_string(crossing_id));
    if (mark->flat) throw ValidationError("marked crossing is flat");

    Presentation p = presentation(d);
    SkeinWords sw;
    sw.case_id = mark->sign > 0 ? 1 : 2;
    sw.crossing = crossing_id;
    sw.under_comp = mark->under_comp;
    sw.over_comp = mark->over_comp;

    // under passages of the under component, in traversal order
    std::vector<const WirtingerRelation*> unders;
    for (const WirtingerRelation& r : p.relations)
        if (r.under_comp == sw.under_comp) unders.push_back(&r);
    int m = -1;
    for (std::size_t j = 0; j < unders.size(); ++j)
        if (unders[j]->crossing == crossing_id) m = static_cast<int>(j) + 1;
    if (m < 0) throw ComputeError("marked crossing not among the under passages");
    int t = static_cast<int>(unders.size());

    GroupWord v, w;
    for (int j = t; j > m; --j) v.append(unders[j - 1]->over_gen, unders[j - 1]->sign);
    for (int j = m - 1; j >= 1; --j) w.append(unders[j - 1]->over_gen, unders[j - 1]->sign);

    // conjugator from the base arc of the over component to the over arc at
    // the mark, read off the chain of defining relations
    int q = p.arcs.of(unders[m - 1]->over_gen).arc;
    GroupWord c;
    std::vector<const WirtingerRelation*> k_unders;
    for (const WirtingerRelation& r : p.relations)
        if (r.under_comp == sw.over_comp) k_unders.push_back(&r);
    for (int j = q; j >= 1; --j) c.append(k_unders[j - 1]->over_gen, k_unders[j - 1]->sign);

    int base = p.base_arc_gen[sw.over_comp];
    GroupWord mid_pos = c;
    mid_pos.append(base, 1);
    mid_pos.append(inverse(c));
    GroupWord mid_neg = c;
    mid_neg.append(base, -1);
    mid_neg.append(inverse(c));

    GroupWord vw = v;
    vw.append(w);
    if (sw.case_id == 1) {
        sw.l_plus = v;
        sw.l_plus.append(mid_pos);
        sw.l_plus.append(w);
        sw.l_minus = vw;
    } else {
        sw.l_plus = vw;
        sw.l_minus = v;
        sw.l_minus.append(mid_neg);
        sw.l_minus.append(w);
    }
    sw.l_zero = v;
    sw.l_zero.append(c);
    sw.l_inf = inverse(c);
    sw.l_inf.append(w);
    return sw;
}

SkeinReport check_skein(const MarkedBraid& mb, int cap) {
    if (mb.mark < 0 || mb.mark >= static_cast<int>(mb.braid.letters.size()))
        throw ValidationError("mark index out of range");
    if (mb.braid.letters[mb.mark].type == BraidLetter::Type::Virtual)
        throw ValidationError("marked letter is virtual, not classical");
    int id = 0;
    for (int i = 0; i <= mb.mark; ++i)
        if (mb.braid.letters[i].type != BraidLetter::Type::Virtual) ++id;

    Diagram d = close_braid(mb.braid);
    Presentation p = presentation(d);
    ArcSeriesMap arcs = rho_fixpoint(p, cap);

    SkeinWords words = skein_words(d, id);
    SkeinReport rep{words,
                    p.k,
                    cap,
                    psi_word(words.l_plus, arcs.by_gen, p.k, cap),
                    psi_word(words.l_minus, arcs.by_gen, p.k, cap),
                    psi_word(words.l_zero, arcs.by_gen, p.k, cap),
                    psi_word(words.l_inf, arcs.by_gen, p.k, cap),
                    {},
                    true};

    int k = rep.words.over_comp;
    for (const auto& seq : all_sequences(p.k, cap - 1)) {
        if (std::count(seq.begin(), seq.end(), k) != 1) continue;
        auto split = std::find(seq.begin(), seq.end(), k);
        Mono a(seq.begin(), split);
        Mono b(split + 1, seq.end());
        SkeinCheck chk;
        chk.seq = seq;
        if (a.empty() && b.empty())
            chk.family = "base";
        else if (b.empty())
            chk.family = "terminal";
        else if (a.empty())
            chk.family = "leading";
        else
            chk.family = "interior";
        Mono whole(seq.begin(), seq.end());
        chk.lhs = rep.psi_plus.coeff(whole) - rep.psi_minus.coeff(whole);
        chk.rhs = rep.psi_zero.coeff(a) * rep.psi_inf.coeff(b);
        chk.pass = chk.lhs == chk.rhs;
        if (!chk.pass) rep.all_pass = false;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

std::string render_skein_report(const SkeinReport& r) {
    std::ostringstream out;
    out << "case: " << r.words.case_id << "\n";
    out << "crossing: " << r.words.crossing << "\n";
    out << "under: " << comp_name(r.words.under_comp) << "\n";
    out << "over: " << comp_name(r.words.over_comp) << "\n";
    for (const SkeinCheck& c : r.checks) {
        out << (c.pass ? "PASS" : "FAIL") << " family=" << c.family << " seq=";
        for (int s : c.seq) out << comp_letter(s);
        out << " lhs=" << c.lhs.str() << " rhs=" << c.rhs.str() << "\n";
    }
    return out.str();
}

} // namespace mulink

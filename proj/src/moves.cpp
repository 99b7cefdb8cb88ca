#include "mulink/moves.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "mulink/errors.hpp"
#include "mulink/rng.hpp"

namespace mulink {

std::string kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::Forbidden: return "FM";
    case MoveKind::SelfChange: return "SCC";
    }
    return "?";
}

std::string render_move(const Move& m) {
    std::ostringstream out;
    switch (m.kind) {
    case MoveKind::R1Add:
        out << "R1+ comp=" << m.comp << " pos=" << m.pos << " sign=" << (m.sign > 0 ? '+' : '-')
            << " order=" << (m.order_ou ? "OU" : "UO");
        break;
    case MoveKind::R1Remove:
        out << "R1- comp=" << m.comp << " pos=" << m.pos;
        break;
    case MoveKind::R2Add:
        out << "R2+ over=" << m.over_comp << ':' << m.over_pos << " under=" << m.under_comp
            << ':' << m.under_pos << " sign=" << (m.sign > 0 ? '+' : '-')
            << " anti=" << (m.anti ? 1 : 0);
        break;
    case MoveKind::R2Remove:
        out << "R2- over=" << m.over_comp << ':' << m.over_pos << " under=" << m.under_comp
            << ':' << m.under_pos;
        break;
    case MoveKind::R3:
        out << "R3 a=" << m.comp << ':' << m.pos << " b=" << m.b_comp << ':' << m.b_pos
            << " c=" << m.c_comp << ':' << m.c_pos;
        break;
    case MoveKind::Forbidden:
        out << "FM comp=" << m.comp << " pos=" << m.pos;
        break;
    case MoveKind::SelfChange:
        out << "SCC id=" << m.crossing;
        break;
    }
    return out.str();
}

namespace {

struct FieldMap {
    std::vector<std::pair<std::string, std::string>> kv;
    const std::string& get(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw ParseError("move line lacks field '" + key + "'");
    }
};

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "' in move line");
    }
    if (used != s.size()) throw ParseError("bad integer '" + s + "' in move line");
    return v;
}

void parse_window(const std::string& s, int& comp, int& pos) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected comp:pos, got '" + s + "'");
    comp = to_int(s.substr(0, colon));
    pos = to_int(s.substr(colon + 1));
}

} // namespace

Move parse_move(const std::string& line) {
    std::istringstream in(line);
    std::string head;
    if (!(in >> head)) throw ParseError("empty move line");
    FieldMap f;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value in move line, got '" + tok + "'");
        f.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    Move m;
    if (head == "R1+") {
        m.kind = MoveKind::R1Add;
        m.comp = to_int(f.get("comp"));
        m.pos = to_int(f.get("pos"));
        const std::string& s = f.get("sign");
        if (s != "+" && s != "-") throw ParseError("sign must be + or -");
        m.sign = s == "+" ? 1 : -1;
        const std::string& o = f.get("order");
        if (o != "OU" && o != "UO") throw ParseError("order must be OU or UO");
        m.order_ou = o == "OU";
    } else if (head == "R1-") {
        m.kind = MoveKind::R1Remove;
        m.comp = to_int(f.get("comp"));
        m.pos = to_int(f.get("pos"));
    } else if (head == "R2+" || head == "R2-") {
        m.kind = head == "R2+" ? MoveKind::R2Add : MoveKind::R2Remove;
        parse_window(f.get("over"), m.over_comp, m.over_pos);
        parse_window(f.get("under"), m.under_comp, m.under_pos);
        if (head == "R2+") {
            const std::string& s = f.get("sign");
            if (s != "+" && s != "-") throw ParseError("sign must be + or -");
            m.sign = s == "+" ? 1 : -1;
            m.anti = to_int(f.get("anti")) != 0;
        }
    } else if (head == "R3") {
        m.kind = MoveKind::R3;
        parse_window(f.get("a"), m.comp, m.pos);
        parse_window(f.get("b"), m.b_comp, m.b_pos);
        parse_window(f.get("c"), m.c_comp, m.c_pos);
    } else if (head == "FM") {
        m.kind = MoveKind::Forbidden;
        m.comp = to_int(f.get("comp"));
        m.pos = to_int(f.get("pos"));
    } else if (head == "SCC") {
        m.kind = MoveKind::SelfChange;
        m.crossing = to_int(f.get("id"));
    } else {
        throw ParseError("unknown move '" + head + "'");
    }
    return m;
}

namespace {

void check_comp(const Diagram& d, int comp) {
    if (comp < 0 || comp >= static_cast<int>(d.components.size()))
        throw ValidationError("move names component " + std::to_string(comp) +
                              " which the diagram lacks");
}

// window (pos, pos+1) inside component comp
void check_window(const Diagram& d, int comp, int pos) {
    check_comp(d, comp);
    if (pos < 0 || pos + 1 >= static_cast<int>(d.components[comp].size()))
        throw ValidationError("window " + std::to_string(comp) + ":" + std::to_string(pos) +
                              " out of range");
}

void check_insertion_point(const Diagram& d, int comp, int pos) {
    check_comp(d, comp);
    if (pos < 0 || pos > static_cast<int>(d.components[comp].size()))
        throw ValidationError("insertion point " + std::to_string(comp) + ":" +
                              std::to_string(pos) + " out of range");
}

void check_disjoint_windows(int c1, int p1, int c2, int p2) {
    if (c1 == c2 && std::abs(p1 - p2) < 2)
        throw ValidationError("move windows overlap");
}

Diagram apply_r1add(const Diagram& d, const Move& m) {
    check_insertion_point(d, m.comp, m.pos);
    Diagram r = d;
    int id = max_crossing_id(d) + 1;
    Passage o{PassKind::Over, id, m.sign};
    Passage u{PassKind::Under, id, m.sign};
    auto& comp = r.components[m.comp];
    if (m.order_ou)
        comp.insert(comp.begin() + m.pos, {o, u});
    else
        comp.insert(comp.begin() + m.pos, {u, o});
    return r;
}

Diagram apply_r1remove(const Diagram& d, const Move& m) {
    check_window(d, m.comp, m.pos);
    const auto& comp = d.components[m.comp];
    const Passage& a = comp[m.pos];
    const Passage& b = comp[m.pos + 1];
    if (a.crossing != b.crossing || a.kind == PassKind::Flat)
        throw ValidationError("no kink at " + std::to_string(m.comp) + ":" +
                              std::to_string(m.pos));
    Diagram r = d;
    auto& rc = r.components[m.comp];
    rc.erase(rc.begin() + m.pos, rc.begin() + m.pos + 2);
    return r;
}

Diagram apply_r2add(const Diagram& d, const Move& m) {
    check_insertion_point(d, m.over_comp, m.over_pos);
    check_insertion_point(d, m.under_comp, m.under_pos);
    if (m.over_comp == m.under_comp && m.over_pos == m.under_pos)
        throw ValidationError("R2 insertion needs two distinct split points on one component");
    int c = max_crossing_id(d) + 1;
    int dd = c + 1;
    Passage oc{PassKind::Over, c, m.sign};
    Passage od{PassKind::Over, dd, -m.sign};
    Passage uc{PassKind::Under, c, m.sign};
    Passage ud{PassKind::Under, dd, -m.sign};
    std::vector<Passage> over_pair{oc, od};
    std::vector<Passage> under_pair = m.anti ? std::vector<Passage>{ud, uc}
                                             : std::vector<Passage>{uc, ud};
    Diagram r = d;
    // same component: insert at the larger index first so the smaller stays valid
    if (m.over_comp == m.under_comp && m.over_pos < m.under_pos) {
        auto& comp = r.components[m.under_comp];
        comp.insert(comp.begin() + m.under_pos, under_pair.begin(), under_pair.end());
        comp.insert(comp.begin() + m.over_pos, over_pair.begin(), over_pair.end());
    } else {
        auto& oc_ref = r.components[m.over_comp];
        oc_ref.insert(oc_ref.begin() + m.over_pos, over_pair.begin(), over_pair.end());
        auto& uc_ref = r.components[m.under_comp];
        uc_ref.insert(uc_ref.begin() + m.under_pos, under_pair.begin(), under_pair.end());
    }
    return r;
}

Diagram apply_r2remove(const Diagram& d, const Move& m) {
    check_window(d, m.over_comp, m.over_pos);
    check_window(d, m.under_comp, m.under_pos);
    check_disjoint_windows(m.over_comp, m.over_pos, m.under_comp, m.under_pos);
    const Passage& o1 = d.components[m.over_comp][m.over_pos];
    const Passage& o2 = d.components[m.over_comp][m.over_pos + 1];
    const Passage& u1 = d.components[m.under_comp][m.under_pos];
    const Passage& u2 = d.components[m.under_comp][m.under_pos + 1];
    bool shape = o1.kind == PassKind::Over && o2.kind == PassKind::Over &&
                 u1.kind == PassKind::Under && u2.kind == PassKind::Under;
    bool ids = (u1.crossing == o1.crossing && u2.crossing == o2.crossing) ||
               (u1.crossing == o2.crossing && u2.crossing == o1.crossing);
    if (!shape || !ids || o1.crossing == o2.crossing || o1.sign != -o2.sign)
        throw ValidationError("no R2 pattern at the given windows");
    Diagram r = d;
    if (m.over_comp == m.under_comp) {
        std::vector<int> idx{m.over_pos, m.over_pos + 1, m.under_pos, m.under_pos + 1};
        std::sort(idx.rbegin(), idx.rend());
        auto& comp = r.components[m.over_comp];
        for (int i : idx) comp.erase(comp.begin() + i);
    } else {
        auto& oc = r.components[m.over_comp];
        oc.erase(oc.begin() + m.over_pos, oc.begin() + m.over_pos + 2);
        auto& uc = r.components[m.under_comp];
        uc.erase(uc.begin() + m.under_pos, uc.begin() + m.under_pos + 2);
    }
    return r;
}

// The two triangle patterns. In both, window a holds the strand that passes
// over twice and its crossings must share a sign.
//   P : a=(O_t O_u)  b=(U_t O_v)  c=(U_u U_v)
//   P': a=(O_x O_y)  b=(O_z U_y)  c=(U_z U_x)
bool r3_matches(const Diagram& d, const Move& m) {
    const Passage& a1 = d.components[m.comp][m.pos];
    const Passage& a2 = d.components[m.comp][m.pos + 1];
    const Passage& b1 = d.components[m.b_comp][m.b_pos];
    const Passage& b2 = d.components[m.b_comp][m.b_pos + 1];
    const Passage& c1 = d.components[m.c_comp][m.c_pos];
    const Passage& c2 = d.components[m.c_comp][m.c_pos + 1];
    if (a1.kind != PassKind::Over || a2.kind != PassKind::Over) return false;
    if (a1.sign != a2.sign) return false;
    int t = a1.crossing, u = a2.crossing;
    if (t == u) return false;
    bool p = b1.kind == PassKind::Under && b2.kind == PassKind::Over &&
             c1.kind == PassKind::Under && c2.kind == PassKind::Under &&
             b1.crossing == t && c1.crossing == u && b2.crossing == c2.crossing &&
             b2.crossing != t && b2.crossing != u;
    bool pp = b1.kind == PassKind::Over && b2.kind == PassKind::Under &&
              c1.kind == PassKind::Under && c2.kind == PassKind::Under &&
              c2.crossing == t && b2.crossing == u && b1.crossing == c1.crossing &&
              b1.crossing != t && b1.crossing != u;
    return p || pp;
}

Diagram apply_r3(const Diagram& d, const Move& m) {
    check_window(d, m.comp, m.pos);
    check_window(d, m.b_comp, m.b_pos);
    check_window(d, m.c_comp, m.c_pos);
    check_disjoint_windows(m.comp, m.pos, m.b_comp, m.b_pos);
    check_disjoint_windows(m.comp, m.pos, m.c_comp, m.c_pos);
    check_disjoint_windows(m.b_comp, m.b_pos, m.c_comp, m.c_pos);
    if (!r3_matches(d, m)) throw ValidationError("no R3 pattern at the given windows");
    Diagram r = d;
    std::swap(r.components[m.comp][m.pos], r.components[m.comp][m.pos + 1]);
    std::swap(r.components[m.b_comp][m.b_pos], r.components[m.b_comp][m.b_pos + 1]);
    std::swap(r.components[m.c_comp][m.c_pos], r.components[m.c_comp][m.c_pos + 1]);
    return r;
}

Diagram apply_forbidden(const Diagram& d, const Move& m) {
    check_window(d, m.comp, m.pos);
    const Passage& a = d.components[m.comp][m.pos];
    const Passage& b = d.components[m.comp][m.pos + 1];
    if (a.kind != PassKind::Over || b.kind != PassKind::Over)
        throw ValidationError("forbidden move needs two adjacent over passages");
    Diagram r = d;
    std::swap(r.components[m.comp][m.pos], r.components[m.comp][m.pos + 1]);
    return r;
}

Diagram apply_selfchange(const Diagram& d, const Move& m) {
    Diagram r = d;
    int comp_of[2] = {-1, -1};
    Passage* hits[2] = {nullptr, nullptr};
    int n = 0;
    for (std::size_t c = 0; c < r.components.size(); ++c)
        for (Passage& p : r.components[c])
            if (p.crossing == m.crossing) {
                if (n == 2) throw ValidationError("crossing occurs more than twice");
                comp_of[n] = static_cast<int>(c);
                hits[n] = &p;
                ++n;
            }
    if (n != 2) throw ValidationError("crossing " + std::to_string(m.crossing) + " not found");
    if (comp_of[0] != comp_of[1])
        throw ValidationError("crossing " + std::to_string(m.crossing) +
                              " is not a self-crossing");
    if (hits[0]->kind == PassKind::Flat)
        throw ValidationError("cannot switch a flat crossing");
    for (Passage* p : hits) {
        p->kind = p->kind == PassKind::Over ? PassKind::Under : PassKind::Over;
        p->sign = -p->sign;
    }
    return r;
}

} // namespace

Diagram apply(const Diagram& d, const Move& m) {
    switch (m.kind) {
    case MoveKind::R1Add: return apply_r1add(d, m);
    case MoveKind::R1Remove: return apply_r1remove(d, m);
    case MoveKind::R2Add: return apply_r2add(d, m);
    case MoveKind::R2Remove: return apply_r2remove(d, m);
    case MoveKind::R3: return apply_r3(d, m);
    case MoveKind::Forbidden: return apply_forbidden(d, m);
    case MoveKind::SelfChange: return apply_selfchange(d, m);
    }
    throw ValidationError("unknown move kind");
}

namespace {

struct Locator {
    // (comp, pos) of the over and under passage of each classical crossing
    std::vector<std::array<int, 4>> where; // id -> over_comp, over_pos, under_comp, under_pos
    explicit Locator(const Diagram& d) {
        where.assign(max_crossing_id(d) + 1, {-1, -1, -1, -1});
        for (std::size_t c = 0; c < d.components.size(); ++c)
            for (std::size_t p = 0; p < d.components[c].size(); ++p) {
                const Passage& pa = d.components[c][p];
                if (pa.kind == PassKind::Over) {
                    where[pa.crossing][0] = static_cast<int>(c);
                    where[pa.crossing][1] = static_cast<int>(p);
                } else if (pa.kind == PassKind::Under) {
                    where[pa.crossing][2] = static_cast<int>(c);
                    where[pa.crossing][3] = static_cast<int>(p);
                }
            }
    }
};

bool windows_disjoint(int c1, int p1, int c2, int p2) {
    return c1 != c2 || std::abs(p1 - p2) >= 2;
}

void enumerate_r3(const Diagram& d, std::vector<Move>& out) {
    Locator loc(d);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const auto& comp = d.components[c];
        for (std::size_t p = 0; p + 1 < comp.size(); ++p) {
            const Passage& a1 = comp[p];
            const Passage& a2 = comp[p + 1];
            if (a1.kind != PassKind::Over || a2.kind != PassKind::Over) continue;
            if (a1.sign != a2.sign || a1.crossing == a2.crossing) continue;
            int t = a1.crossing, u = a2.crossing;
            // pattern P: b = (U_t O_v), c = (U_u U_v)
            {
                int bc = loc.where[t][2], bp = loc.where[t][3];
                int cc = loc.where[u][2], cp = loc.where[u][3];
                Move m;
                m.kind = MoveKind::R3;
                m.comp = static_cast<int>(c);
                m.pos = static_cast<int>(p);
                m.b_comp = bc;
                m.b_pos = bp;
                m.c_comp = cc;
                m.c_pos = cp;
                if (bp + 1 < static_cast<int>(d.components[bc].size()) &&
                    cp + 1 < static_cast<int>(d.components[cc].size()) &&
                    windows_disjoint(m.comp, m.pos, bc, bp) &&
                    windows_disjoint(m.comp, m.pos, cc, cp) &&
                    windows_disjoint(bc, bp, cc, cp) && r3_matches(d, m))
                    out.push_back(m);
            }
            // pattern P': b = (O_z U_y), c = (U_z U_x); here x=t, y=u
            {
                int bc = loc.where[u][2], bp = loc.where[u][3] - 1;
                int cc = loc.where[t][2], cp = loc.where[t][3] - 1;
                Move m;
                m.kind = MoveKind::R3;
                m.comp = static_cast<int>(c);
                m.pos = static_cast<int>(p);
                m.b_comp = bc;
                m.b_pos = bp;
                m.c_comp = cc;
                m.c_pos = cp;
                if (bp >= 0 && cp >= 0 && windows_disjoint(m.comp, m.pos, bc, bp) &&
                    windows_disjoint(m.comp, m.pos, cc, cp) &&
                    windows_disjoint(bc, bp, cc, cp) && r3_matches(d, m))
                    out.push_back(m);
            }
        }
    }
}

} // namespace

std::vector<Move> enumerate(const Diagram& d, MoveKind kind) {
    std::vector<Move> out;
    switch (kind) {
    case MoveKind::R1Remove:
        for (std::size_t c = 0; c < d.components.size(); ++c) {
            const auto& comp = d.components[c];
            for (std::size_t p = 0; p + 1 < comp.size(); ++p)
                if (comp[p].crossing == comp[p + 1].crossing &&
                    comp[p].kind != PassKind::Flat) {
                    Move m;
                    m.kind = kind;
                    m.comp = static_cast<int>(c);
                    m.pos = static_cast<int>(p);
                    out.push_back(m);
                }
        }
        break;
    case MoveKind::R2Remove:
        for (std::size_t c = 0; c < d.components.size(); ++c) {
            const auto& comp = d.components[c];
            for (std::size_t p = 0; p + 1 < comp.size(); ++p) {
                if (comp[p].kind != PassKind::Over || comp[p + 1].kind != PassKind::Over)
                    continue;
                if (comp[p].crossing == comp[p + 1].crossing ||
                    comp[p].sign != -comp[p + 1].sign)
                    continue;
                for (std::size_t c2 = 0; c2 < d.components.size(); ++c2) {
                    const auto& comp2 = d.components[c2];
                    for (std::size_t q = 0; q + 1 < comp2.size(); ++q) {
                        if (comp2[q].kind != PassKind::Under ||
                            comp2[q + 1].kind != PassKind::Under)
                            continue;
                        bool same =
                            (comp2[q].crossing == comp[p].crossing &&
                             comp2[q + 1].crossing == comp[p + 1].crossing) ||
                            (comp2[q].crossing == comp[p + 1].crossing &&
                             comp2[q + 1].crossing == comp[p].crossing);
                        if (!same) continue;
                        if (!windows_disjoint(static_cast<int>(c), static_cast<int>(p),
                                              static_cast<int>(c2), static_cast<int>(q)))
                            continue;
                        Move m;
                        m.kind = kind;
                        m.over_comp = static_cast<int>(c);
                        m.over_pos = static_cast<int>(p);
                        m.under_comp = static_cast<int>(c2);
                        m.under_pos = static_cast<int>(q);
                        out.push_back(m);
                    }
                }
            }
        }
        break;
    case MoveKind::R3:
        enumerate_r3(d, out);
        break;
    case MoveKind::Forbidden:
        for (std::size_t c = 0; c < d.components.size(); ++c) {
            const auto& comp = d.components[c];
            for (std::size_t p = 0; p + 1 < comp.size(); ++p)
                if (comp[p].kind == PassKind::Over && comp[p + 1].kind == PassKind::Over) {
                    Move m;
                    m.kind = kind;
                    m.comp = static_cast<int>(c);
                    m.pos = static_cast<int>(p);
                    out.push_back(m);
                }
        }
        break;
    case MoveKind::SelfChange:
        for (const CrossingInfo& x : crossing_table(d))
            if (!x.flat && x.over_comp == x.under_comp) {
                Move m;
                m.kind = kind;
                m.crossing = x.id;
                out.push_back(m);
            }
        break;
    default:
        throw ComputeError("enumerate supports only in-place move kinds");
    }
    return out;
}

MoveClass parse_move_class(const std::string& name) {
    if (name == "isotopy") return MoveClass::Isotopy;
    if (name == "welded") return MoveClass::Welded;
    if (name == "homotopy") return MoveClass::Homotopy;
    if (name == "welded-homotopy") return MoveClass::WeldedHomotopy;
    throw ParseError("unknown move class '" + name + "'");
}

std::vector<MoveKind> kinds_of(MoveClass c) {
    std::vector<MoveKind> k{MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add,
                            MoveKind::R2Remove, MoveKind::R3};
    if (c == MoveClass::Welded || c == MoveClass::WeldedHomotopy)
        k.push_back(MoveKind::Forbidden);
    if (c == MoveClass::Homotopy || c == MoveClass::WeldedHomotopy)
        k.push_back(MoveKind::SelfChange);
    return k;
}

namespace {

Move sample_r1add(const Diagram& d, Rng& rng) {
    Move m;
    m.kind = MoveKind::R1Add;
    m.comp = static_cast<int>(rng.below(d.components.size()));
    m.pos = static_cast<int>(rng.below(d.components[m.comp].size() + 1));
    m.sign = rng.coin() ? 1 : -1;
    m.order_ou = rng.coin();
    return m;
}

bool sample_r2add(const Diagram& d, Rng& rng, Move& m) {
    m.kind = MoveKind::R2Add;
    for (int attempt = 0; attempt < 8; ++attempt) {
        m.over_comp = static_cast<int>(rng.below(d.components.size()));
        m.under_comp = static_cast<int>(rng.below(d.components.size()));
        m.over_pos = static_cast<int>(rng.below(d.components[m.over_comp].size() + 1));
        m.under_pos = static_cast<int>(rng.below(d.components[m.under_comp].size() + 1));
        m.sign = rng.coin() ? 1 : -1;
        m.anti = rng.coin();
        if (m.over_comp != m.under_comp || m.over_pos != m.under_pos) return true;
    }
    return false;
}

} // namespace

FuzzResult fuzz(const Diagram& d, const std::vector<MoveKind>& kinds, int steps,
                std::uint64_t seed) {
    if (kinds.empty()) throw ComputeError("fuzz needs at least one move kind");
    Rng rng(seed);
    FuzzResult r;
    r.diagram = d;
    for (int s = 0; s < steps; ++s) {
        MoveKind kind = kinds[rng.below(kinds.size())];
        Move m;
        bool have = false;
        if (kind == MoveKind::R1Add) {
            m = sample_r1add(r.diagram, rng);
            have = true;
        } else if (kind == MoveKind::R2Add) {
            have = sample_r2add(r.diagram, rng, m);
        } else {
            std::vector<Move> options = enumerate(r.diagram, kind);
            if (!options.empty()) {
                m = options[rng.below(options.size())];
                have = true;
            }
        }
        if (!have) {
            r.log.push_back("SKIP kind=" + kind_name(kind));
            continue;
        }
        r.diagram = apply(r.diagram, m);
        r.log.push_back(render_move(m));
    }
    return r;
}

FuzzResult fuzz(const Diagram& d, MoveClass cls, int steps, std::uint64_t seed) {
    return fuzz(d, kinds_of(cls), steps, seed);
}

Diagram replay(const Diagram& d, const std::vector<std::string>& log) {
    Diagram cur = d;
    for (const std::string& line : log) {
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        if (trimmed.empty()) continue;
        if (trimmed.rfind("SKIP", 0) == 0) continue;
        cur = apply(cur, parse_move(trimmed));
    }
    return cur;
}

} // namespace mulink

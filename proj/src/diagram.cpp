#include "mulink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "mulink/errors.hpp"

namespace mulink {

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw ParseError("braid needs at least one strand");
    BraidWord b;
    b.strands = strands;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t tok_start = i;
        char c = text[i];
        BraidLetter::Type type;
        if (c == 's')
            type = BraidLetter::Type::ClassicalPos;
        else if (c == 'S')
            type = BraidLetter::Type::ClassicalNeg;
        else if (c == 'v')
            type = BraidLetter::Type::Virtual;
        else
            throw ParseError(std::string("expected braid letter s/S/v, got '") + c + "'",
                             static_cast<long>(i));
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("braid letter needs a strand index", static_cast<long>(tok_start));
        long idx = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            idx = idx * 10 + (text[i] - '0');
            if (idx > strands) break;
            ++i;
        }
        if (idx < 1 || idx > strands - 1)
            throw ParseError("strand index " + std::to_string(idx) + " out of range for " +
                                 std::to_string(strands) + " strands",
                             static_cast<long>(tok_start));
        b.letters.push_back({type, static_cast<int>(idx)});
    }
    return b;
}

Diagram close_braid(const BraidWord& b) {
    int n = b.strands;
    // occupant[p] = strand currently at position p (both 1-based, stored 0-based)
    std::vector<int> occupant(n);
    std::iota(occupant.begin(), occupant.end(), 0);
    std::vector<std::vector<Passage>> strand_passages(n);
    int next_id = 1;
    for (const BraidLetter& l : b.letters) {
        int p = l.index - 1;
        int lo = occupant[p], hi = occupant[p + 1];
        if (l.type != BraidLetter::Type::Virtual) {
            int sign = l.type == BraidLetter::Type::ClassicalPos ? 1 : -1;
            // positive letter: the strand at position index goes over
            int over = sign > 0 ? lo : hi;
            int under = sign > 0 ? hi : lo;
            strand_passages[over].push_back({PassKind::Over, next_id, sign});
            strand_passages[under].push_back({PassKind::Under, next_id, sign});
            ++next_id;
        }
        std::swap(occupant[p], occupant[p + 1]);
    }
    // closure joins the top of each position to its bottom, so the strand
    // ending at position q continues as the strand that started there
    std::vector<int> succ(n);
    for (int p = 0; p < n; ++p) succ[occupant[p]] = p;
    Diagram d;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Passage> comp;
        int cur = s;
        do {
            seen[cur] = true;
            comp.insert(comp.end(), strand_passages[cur].begin(), strand_passages[cur].end());
            cur = succ[cur];
        } while (cur != s);
        d.components.push_back(std::move(comp));
    }
    return d;
}

namespace {

Passage parse_gauss_token(const std::string& text, std::size_t& i) {
    std::size_t tok_start = i;
    char c = text[i];
    PassKind kind;
    if (c == 'O')
        kind = PassKind::Over;
    else if (c == 'U')
        kind = PassKind::Under;
    else if (c == 'F')
        kind = PassKind::Flat;
    else
        throw ParseError(std::string("expected passage O/U/F, got '") + c + "'",
                         static_cast<long>(i));
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("passage needs a crossing id", static_cast<long>(tok_start));
    long id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        id = id * 10 + (text[i] - '0');
        if (id > 1000000000L)
            throw ParseError("crossing id too large", static_cast<long>(tok_start));
        ++i;
    }
    if (id < 1) throw ParseError("crossing ids start at 1", static_cast<long>(tok_start));
    int sign = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '+' ? 1 : -1;
        ++i;
    }
    if (kind == PassKind::Flat && sign != 0)
        throw ParseError("flat passage takes no sign", static_cast<long>(tok_start));
    if (kind != PassKind::Flat && sign == 0)
        throw ParseError("classical passage needs a sign", static_cast<long>(tok_start));
    return {kind, static_cast<int>(id), sign};
}

} // namespace

Diagram parse_gauss(const std::string& text) {
    Diagram d;
    d.components.emplace_back();
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '|') {
            d.components.emplace_back();
            ++i;
            continue;
        }
        d.components.back().push_back(parse_gauss_token(text, i));
    }
    return d;
}

std::string render_gauss(const Diagram& d) {
    std::ostringstream out;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        if (c) out << " | ";
        for (std::size_t p = 0; p < d.components[c].size(); ++p) {
            const Passage& pa = d.components[c][p];
            if (p) out << ' ';
            out << (pa.kind == PassKind::Over ? 'O' : pa.kind == PassKind::Under ? 'U' : 'F');
            out << pa.crossing;
            if (pa.kind != PassKind::Flat) out << (pa.sign > 0 ? '+' : '-');
        }
    }
    std::string s = out.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    return s;
}

void validate(const Diagram& d) { crossing_table(d); }

std::vector<CrossingInfo> crossing_table(const Diagram& d) {
    std::map<int, CrossingInfo> by_id;
    std::map<int, int> count;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        for (std::size_t p = 0; p < d.components[c].size(); ++p) {
            const Passage& pa = d.components[c][p];
            if (pa.crossing < 1)
                throw ValidationError("crossing ids must be positive");
            if (pa.kind == PassKind::Flat && pa.sign != 0)
                throw ValidationError("flat passage with nonzero sign at crossing " +
                                      std::to_string(pa.crossing));
            if (pa.kind != PassKind::Flat && pa.sign == 0)
                throw ValidationError("classical passage with zero sign at crossing " +
                                      std::to_string(pa.crossing));
            auto [it, fresh] = by_id.emplace(
                pa.crossing, CrossingInfo{pa.crossing, pa.sign, -1, -1, -1, -1,
                                          pa.kind == PassKind::Flat});
            CrossingInfo& info = it->second;
            int& n = count[pa.crossing];
            if (n >= 2)
                throw ValidationError("crossing " + std::to_string(pa.crossing) +
                                      " occurs more than twice");
            if (!fresh) {
                bool this_flat = pa.kind == PassKind::Flat;
                if (this_flat != info.flat || (!this_flat && pa.sign != info.sign))
                    throw ValidationError("inconsistent passages at crossing " +
                                          std::to_string(pa.crossing));
            }
            switch (pa.kind) {
            case PassKind::Over:
                if (info.over_comp >= 0)
                    throw ValidationError("crossing " + std::to_string(pa.crossing) +
                                          " has two over passages");
                info.over_comp = static_cast<int>(c);
                info.over_pos = static_cast<int>(p);
                break;
            case PassKind::Under:
                if (info.under_comp >= 0)
                    throw ValidationError("crossing " + std::to_string(pa.crossing) +
                                          " has two under passages");
                info.under_comp = static_cast<int>(c);
                info.under_pos = static_cast<int>(p);
                break;
            case PassKind::Flat:
                if (info.over_comp < 0) {
                    info.over_comp = static_cast<int>(c);
                    info.over_pos = static_cast<int>(p);
                } else {
                    info.under_comp = static_cast<int>(c);
                    info.under_pos = static_cast<int>(p);
                }
                break;
            }
            ++n;
        }
    }
    std::vector<CrossingInfo> table;
    table.reserve(by_id.size());
    for (const auto& [id, info] : by_id) {
        if (count[id] != 2)
            throw ValidationError("crossing " + std::to_string(id) + " occurs only once");
        if (info.over_comp < 0 || info.under_comp < 0)
            throw ValidationError("crossing " + std::to_string(id) +
                                  " lacks an over or under passage");
        table.push_back(info);
    }
    return table;
}

long long linking_number(const Diagram& d, int over_comp, int under_comp) {
    long long sum = 0;
    for (const CrossingInfo& x : crossing_table(d)) {
        if (x.flat) continue;
        if (x.over_comp == over_comp && x.under_comp == under_comp) sum += x.sign;
    }
    return sum;
}

Diagram flatten(const Diagram& d) {
    Diagram r = d;
    for (auto& comp : r.components)
        for (Passage& p : comp) {
            p.kind = PassKind::Flat;
            p.sign = 0;
        }
    return r;
}

int max_crossing_id(const Diagram& d) {
    int m = 0;
    for (const auto& comp : d.components)
        for (const Passage& p : comp) m = std::max(m, p.crossing);
    return m;
}

} // namespace mulink

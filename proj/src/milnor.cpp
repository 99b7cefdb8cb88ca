#include "mulink/milnor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mulink/errors.hpp"
#include "mulink/magnus.hpp"
#include "mulink/names.hpp"
#include "mulink/wirtinger.hpp"

namespace mulink {

const MuEntry& MuTable::at(int target, const std::vector<int>& seq) const {
    auto it = entries.find({target, seq});
    if (it == entries.end()) throw ComputeError("mu entry not in table");
    return it->second;
}

std::vector<std::vector<int>> all_sequences(int k, int maxlen) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int len = 1; len <= maxlen; ++len) {
        cur.assign(len, 0);
        while (true) {
            out.push_back(cur);
            int i = len - 1;
            while (i >= 0 && cur[i] == k - 1) {
                cur[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++cur[i];
        }
    }
    return out;
}

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer gcd_int(Integer a, Integer b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

void fill_indeterminacy(MuTable& t) {
    // mubar of shorter sequences feeds the gcd of longer ones, so walk the
    // table by total length
    for (int len = 1; len < t.cap; ++len) {
        for (auto& [key, e] : t.entries) {
            const auto& [target, seq] = key;
            if (static_cast<int>(seq.size()) != len) continue;
            std::vector<int> full = seq;
            full.push_back(target);
            int L = static_cast<int>(full.size());

            std::set<std::pair<int, std::vector<int>>> sub_keys;
            for (unsigned mask = 1; mask + 1 < (1u << L); ++mask) {
                std::vector<int> pick;
                for (int i = 0; i < L; ++i)
                    if (mask & (1u << i)) pick.push_back(full[i]);
                if (pick.size() < 2) continue;
                int rots = t.convention == DeltaConvention::CyclicSubsequences
                               ? static_cast<int>(pick.size())
                               : 1;
                std::vector<int> rot = pick;
                for (int r = 0; r < rots; ++r) {
                    if (r) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                    std::vector<int> sub_seq(rot.begin(), rot.end() - 1);
                    sub_keys.emplace(rot.back(), std::move(sub_seq));
                }
            }
            Integer g = 0;
            for (const auto& sk : sub_keys) g = gcd_int(g, t.entries.at(sk).mubar);

            e.delta = g;
            if (e.contains_target) {
                e.mubar = 0;
            } else if (g == 0) {
                e.mubar = e.mu;
            } else {
                Integer r = e.mu % g;
                if (r < 0) r += g;
                e.mubar = r;
            }
        }
    }
}

MuTable table_from_series(std::vector<Series> psi, int k, int cap, DeltaConvention conv) {
    if (k < 1) throw ComputeError("table needs at least one component");
    if (cap < 2) throw ComputeError("cap must be at least 2");
    MuTable t;
    t.k = k;
    t.cap = cap;
    t.convention = conv;
    for (int target = 0; target < k; ++target) {
        for (const auto& seq : all_sequences(k, cap - 1)) {
            MuEntry e;
            e.mu = psi[target].coeff(Mono(seq.begin(), seq.end()));
            e.contains_target =
                std::find(seq.begin(), seq.end(), target) != seq.end();
            std::vector<int> full = seq;
            full.push_back(target);
            std::sort(full.begin(), full.end());
            e.repeated = std::adjacent_find(full.begin(), full.end()) != full.end();
            e.delta = 0;
            e.mubar = 0;
            t.entries.emplace(std::make_pair(target, seq), std::move(e));
        }
    }
    fill_indeterminacy(t);
    t.longitude_series = std::move(psi);
    return t;
}

} // namespace

MuTable mu_table(const Diagram& d, int cap, DeltaConvention conv) {
    Presentation p = presentation(d);
    ArcSeriesMap arcs = rho_fixpoint(p, cap);
    std::vector<Series> psi;
    psi.reserve(p.k);
    for (int i = 0; i < p.k; ++i)
        psi.push_back(psi_word(p.longitudes[i], arcs.by_gen, p.k, cap));
    MuTable t = table_from_series(std::move(psi), p.k, cap, conv);
    t.sweeps = arcs.sweeps;
    int k = p.k;
    t.linking.assign(k, std::vector<long long>(k, 0));
    for (const CrossingInfo& x : crossing_table(d))
        if (!x.flat) t.linking[x.over_comp][x.under_comp] += x.sign;
    t.has_linking = true;
    return t;
}

MuTable mu_from_longitudes(const std::vector<GroupWord>& longitudes, int cap,
                           DeltaConvention conv) {
    int k = static_cast<int>(longitudes.size());
    if (k < 1) throw ComputeError("need at least one longitude");
    std::vector<Series> basis = meridian_basis(k, cap);
    std::vector<Series> psi;
    psi.reserve(k);
    for (const GroupWord& w : longitudes) psi.push_back(psi_word(w, basis, k, cap));
    return table_from_series(std::move(psi), k, cap, conv);
}

std::vector<std::pair<int, Integer>> classicality_obstruction(const MuTable& t) {
    std::vector<std::pair<int, Integer>> out;
    for (int i = 0; i < t.k; ++i) {
        Integer v = t.mu(i, {i});
        if (v != 0) out.emplace_back(i, v);
    }
    return out;
}

std::vector<LinkingMismatch> linking_mismatches(const MuTable& t) {
    if (!t.has_linking) throw ComputeError("table carries no linking matrix");
    std::vector<LinkingMismatch> out;
    for (int i = 0; i < t.k; ++i)
        for (int j = 0; j < t.k; ++j) {
            Integer m = t.mu(j, {i});
            if (m != Integer(t.linking[i][j]))
                out.push_back({i, j, t.linking[i][j], m});
        }
    return out;
}

namespace {

std::string seq_str(const std::vector<int>& seq) {
    std::string s;
    for (int c : seq) s += comp_letter(c);
    return s;
}

std::string flags_str(const MuEntry& e, bool conv_dep) {
    std::string f;
    if (e.repeated) f += 'R';
    if (e.contains_target) f += 'T';
    if (conv_dep) f += 'C';
    return f.empty() ? "-" : f;
}

// target-major, then sequences shorter first and lexicographic
std::vector<std::pair<int, std::vector<int>>> ordered_keys(const MuTable& t) {
    std::vector<std::pair<int, std::vector<int>>> keys;
    keys.reserve(t.entries.size());
    for (const auto& [key, e] : t.entries) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        return a.second < b.second;
    });
    return keys;
}

std::string render_rows(const MuTable& t, bool with_raw) {
    std::vector<std::vector<std::string>> rows;
    if (with_raw)
        rows.push_back({"target", "seq", "mu", "delta", "mubar", "flags"});
    else
        rows.push_back({"target", "seq", "mubar", "flags"});
    for (const auto& [target, seq] : ordered_keys(t)) {
        const MuEntry& e = t.entries.at({target, seq});
        std::string tgt = std::string("w_") + comp_letter(target);
        std::string fl = flags_str(e, seq.size() >= 2);
        if (with_raw)
            rows.push_back(
                {tgt, seq_str(seq), e.mu.str(), e.delta.str(), e.mubar.str(), fl});
        else
            rows.push_back({tgt, seq_str(seq), e.mubar.str(), fl});
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) out << "  ";
            out << r[c];
            if (c + 1 < r.size())
                out << std::string(width[c] - r[c].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string render_table(const MuTable& t) { return render_rows(t, true); }
std::string render_mubar(const MuTable& t) { return render_rows(t, false); }

std::string to_records(const MuTable& t) {
    std::ostringstream out;
    for (const auto& [target, seq] : ordered_keys(t)) {
        const MuEntry& e = t.entries.at({target, seq});
        nlohmann::json j;
        j["target"] = comp_name(target);
        nlohmann::json arr = nlohmann::json::array();
        for (int c : seq) arr.push_back(comp_name(c));
        j["seq"] = arr;
        j["mu"] = e.mu.str();
        j["delta"] = e.delta.str();
        j["mubar"] = e.mubar.str();
        j["repeated"] = e.repeated;
        j["contains_target"] = e.contains_target;
        out << j.dump() << "\n";
    }
    return out.str();
}

MuTable from_records(const std::string& text) {
    MuTable t;
    std::istringstream in(text);
    std::string line;
    int max_comp = -1;
    int max_len = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("bad record line: ") + ex.what());
        }
        MuEntry e;
        int target = comp_from_letter(j.at("target").get<std::string>().at(0));
        std::vector<int> seq;
        for (const auto& s : j.at("seq"))
            seq.push_back(comp_from_letter(s.get<std::string>().at(0)));
        e.mu = Integer(j.at("mu").get<std::string>());
        e.delta = Integer(j.at("delta").get<std::string>());
        e.mubar = Integer(j.at("mubar").get<std::string>());
        e.repeated = j.at("repeated").get<bool>();
        e.contains_target = j.at("contains_target").get<bool>();
        max_comp = std::max(max_comp, target);
        for (int c : seq) max_comp = std::max(max_comp, c);
        max_len = std::max(max_len, static_cast<int>(seq.size()));
        t.entries.emplace(std::make_pair(target, std::move(seq)), std::move(e));
    }
    t.k = max_comp + 1;
    t.cap = max_len + 1;
    return t;
}

namespace {

template <typename Pick>
bool entries_match(const MuTable& a, const MuTable& b, Pick pick) {
    if (a.entries.size() != b.entries.size()) return false;
    for (const auto& [key, ea] : a.entries) {
        auto it = b.entries.find(key);
        if (it == b.entries.end()) return false;
        if (!pick(ea, it->second)) return false;
    }
    return true;
}

} // namespace

bool raw_equal(const MuTable& a, const MuTable& b) {
    return entries_match(a, b, [](const MuEntry& x, const MuEntry& y) { return x.mu == y.mu; });
}

bool mubar_equal(const MuTable& a, const MuTable& b) {
    return entries_match(a, b,
                         [](const MuEntry& x, const MuEntry& y) { return x.mubar == y.mubar; });
}

bool raw_equal_excluding_target_in_seq(const MuTable& a, const MuTable& b) {
    return entries_match(a, b, [](const MuEntry& x, const MuEntry& y) {
        return x.contains_target || x.mu == y.mu;
    });
}

} // namespace mulink

#include "mulink/freegroup.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "mulink/errors.hpp"
#include "mulink/rng.hpp"

namespace mulink {

GroupWord GroupWord::generator(int gen, int exp) {
    GroupWord w;
    w.append(gen, exp);
    return w;
}

void GroupWord::append(int gen, int exp) {
    if (exp == 0) return;
    int step = exp > 0 ? 1 : -1;
    for (int i = 0; i != exp; i += step) {
        if (!letters_.empty() && letters_.back().gen == gen && letters_.back().exp == -step)
            letters_.pop_back();
        else
            letters_.push_back({gen, step});
    }
}

void GroupWord::append(const GroupWord& w) {
    for (const Letter& l : w.letters_) append(l.gen, l.exp);
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.append(b);
    return r;
}

GroupWord inverse(const GroupWord& a) {
    GroupWord r;
    const auto& ls = a.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.append(it->gen, -it->exp);
    return r;
}

GroupWord conjugate(const GroupWord& u, const GroupWord& g) {
    GroupWord r = g;
    r.append(u);
    r.append(inverse(g));
    return r;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
    GroupWord r = u;
    r.append(v);
    r.append(inverse(u));
    r.append(inverse(v));
    return r;
}

GroupWord pow(const GroupWord& a, int n) {
    GroupWord r;
    GroupWord base = n >= 0 ? a : inverse(a);
    int count = n >= 0 ? n : -n;
    for (int i = 0; i < count; ++i) r.append(base);
    return r;
}

std::string render_word(const GroupWord& w, const std::function<std::string(int)>& namer) {
    if (w.is_identity()) return "1";
    std::ostringstream out;
    const auto& ls = w.letters();
    std::size_t i = 0;
    bool first = true;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
        int e = ls[i].exp * static_cast<int>(j - i);
        if (!first) out << ' ';
        first = false;
        out << namer(ls[i].gen);
        if (e != 1) out << '^' << e;
        i = j;
    }
    return out.str();
}

GroupWord parse_word(const std::string& text,
                     const std::function<int(const std::string&)>& resolver) {
    GroupWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        int e = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string et = tok.substr(caret + 1);
            if (et.empty()) throw ParseError("missing exponent after '^' in '" + tok + "'");
            std::size_t used = 0;
            try {
                e = std::stoi(et, &used);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
            if (used != et.size()) throw ParseError("bad exponent in '" + tok + "'");
        }
        if (name.empty()) throw ParseError("empty generator name in '" + tok + "'");
        w.append(resolver(name), e);
    }
    return w;
}

namespace {

GroupWord random_word(const std::vector<int>& gens, Rng& rng) {
    GroupWord w;
    int len = static_cast<int>(rng.range(1, 5));
    for (int i = 0; i < len; ++i) {
        int g = gens[rng.below(gens.size())];
        w.append(g, rng.coin() ? 1 : -1);
    }
    return w;
}

GroupWord sample_lcs_rec(const std::vector<int>& gens, int depth, Rng& rng) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        GroupWord r;
        if (depth <= 1) {
            r = random_word(gens, rng);
        } else {
            int factors = static_cast<int>(rng.range(1, 2));
            for (int f = 0; f < factors; ++f) {
                GroupWord u = random_word(gens, rng);
                GroupWord deep = sample_lcs_rec(gens, depth - 1, rng);
                r.append(commutator(u, deep));
            }
        }
        if (!r.is_identity()) return r;
    }
    return GroupWord();
}

} // namespace

GroupWord sample_lcs_element(const std::vector<int>& gens, int depth, std::uint64_t seed) {
    if (gens.empty()) throw ComputeError("sample_lcs_element needs at least one generator");
    Rng rng(seed);
    return sample_lcs_rec(gens, depth, rng);
}

} // namespace mulink

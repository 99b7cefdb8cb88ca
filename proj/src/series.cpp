#include "mulink/series.hpp"

#include <algorithm>
#include <sstream>

#include "mulink/errors.hpp"

namespace mulink {

Series::Series(int vars, int cap) : vars_(vars), cap_(cap) {
    if (vars < 0) throw ComputeError("negative variable count");
    if (cap < 1) throw ComputeError("series cap must be at least 1");
}

Series Series::one(int vars, int cap) {
    Series s(vars, cap);
    s.add_term({}, 1);
    return s;
}

Series Series::variable(int vars, int cap, int v) {
    Series s(vars, cap);
    if (v < 0 || v >= vars) throw ComputeError("variable index out of range");
    s.add_term({v}, 1);
    return s;
}

Series Series::meridian(int vars, int cap, int v) {
    Series s = Series::variable(vars, cap, v);
    s.add_term({}, 1);
    return s;
}

Integer Series::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Series::add_term(const Mono& m, const Integer& c) {
    if (c == 0) return;
    if (static_cast<int>(m.size()) >= cap_) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_compatible(const Series& a, const Series& b) {
    if (a.vars() != b.vars() || a.cap() != b.cap())
        throw ComputeError("series have different variable counts or caps");
}

} // namespace

Series add(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

Series sub(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r(a.vars(), a.cap());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (static_cast<int>(ma.size() + mb.size()) >= a.cap()) continue;
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Series series_inverse(const Series& s) {
    if (s.coeff({}) != 1)
        throw ComputeError("series inverse requires constant term 1");
    Series n = s;
    n.add_term({}, -1); // n = s - 1, all terms of degree >= 1
    Series acc = Series::one(s.vars(), s.cap());
    Series term = Series::one(s.vars(), s.cap());
    for (int j = 1; j < s.cap(); ++j) {
        term = series_mul(term, n);
        for (const auto& [m, c] : term.terms()) acc.add_term(m, (j % 2 == 0) ? c : -c);
    }
    return acc;
}

std::optional<int> min_nonconstant_degree(const Series& s) {
    std::optional<int> best;
    for (const auto& [m, c] : s.terms()) {
        if (m.empty()) continue;
        int d = static_cast<int>(m.size());
        if (!best || d < *best) best = d;
    }
    return best;
}

std::string render_series(const Series& s, const std::function<std::string(int)>& namer) {
    if (s.terms().empty()) return "0";
    std::vector<std::pair<Mono, Integer>> items(s.terms().begin(), s.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : items) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) mono += '.';
            mono += namer(m[i]);
        }
        if (m.empty()) {
            out << mag.str();
        } else if (mag == 1) {
            out << mono;
        } else {
            out << mag.str() << '*' << mono;
        }
    }
    return out.str();
}

} // namespace mulink

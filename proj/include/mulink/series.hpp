#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mulink/ints.hpp"

namespace mulink {

// Non-commutative monomial: the sequence of variable indices in order.
using Mono = std::vector<int>;

// Integer power series in non-commuting variables x_0..x_{vars-1}, truncated
// to total degree < cap. Zero coefficients are never stored.
class Series {
public:
    Series(int vars, int cap);

    static Series one(int vars, int cap);
    static Series variable(int vars, int cap, int v);
    // 1 + x_v, the image of a meridian generator.
    static Series meridian(int vars, int cap, int v);

    int vars() const { return vars_; }
    int cap() const { return cap_; }

    Integer coeff(const Mono& m) const;
    const std::map<Mono, Integer>& terms() const { return terms_; }

    void add_term(const Mono& m, const Integer& c);

    bool operator==(const Series&) const = default;

private:
    int vars_;
    int cap_;
    std::map<Mono, Integer> terms_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);

// Multiplicative inverse of a series whose constant term is exactly 1.
Series series_inverse(const Series& s);

// Smallest degree among nonconstant terms, or nullopt if s is constant.
std::optional<int> min_nonconstant_degree(const Series& s);

// Graded lexicographic order, e.g. "1 + 2*x_a + x_a.x_b - x_b.x_a".
std::string render_series(const Series& s, const std::function<std::string(int)>& namer);

} // namespace mulink

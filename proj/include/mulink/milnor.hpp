#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mulink/diagram.hpp"
#include "mulink/freegroup.hpp"
#include "mulink/ints.hpp"
#include "mulink/series.hpp"

namespace mulink {

// What the indeterminacy gcd ranges over: proper nonempty subsequences of the
// full sequence taken as-is, or together with all their cyclic rotations.
enum class DeltaConvention { Subsequences, CyclicSubsequences };

struct MuEntry {
    Integer mu;    // coefficient of x_{j1}..x_{js} in the target's longitude series
    Integer delta; // gcd of the shorter mubar values, 0 if all vanish
    Integer mubar; // mu reduced mod delta; 0 when the target occurs in seq
    bool repeated;            // some component occurs twice in (seq, target)
    bool contains_target;     // target occurs in seq
    bool operator==(const MuEntry&) const = default;
};

struct MuTable {
    int k = 0;
    int cap = 0;
    DeltaConvention convention = DeltaConvention::Subsequences;
    // key: (target component, sequence of components), sequence lengths 1..cap-1
    std::map<std::pair<int, std::vector<int>>, MuEntry> entries;
    std::vector<std::vector<long long>> linking; // linking[i][j] = link(i over, j under)
    bool has_linking = false;
    std::vector<Series> longitude_series; // Magnus image of each longitude
    int sweeps = 0;

    const MuEntry& at(int target, const std::vector<int>& seq) const;
    Integer mu(int target, const std::vector<int>& seq) const { return at(target, seq).mu; }
    Integer mubar(int target, const std::vector<int>& seq) const {
        return at(target, seq).mubar;
    }
};

// All sequences over {0..k-1} of lengths 1..maxlen, shorter first, then
// lexicographic.
std::vector<std::vector<int>> all_sequences(int k, int maxlen);

// Full table for a diagram: Wirtinger presentation, arc series fixed point,
// longitude expansion, then every mu with sequence length below cap.
MuTable mu_table(const Diagram& d, int cap,
                 DeltaConvention conv = DeltaConvention::Subsequences);

// Same table when the longitudes are already words in the component meridians
// (generator index = component index).
MuTable mu_from_longitudes(const std::vector<GroupWord>& longitudes, int cap,
                           DeltaConvention conv = DeltaConvention::Subsequences);

// Components whose own-component degree-1 longitude coefficient mu(i, w_i) is
// nonzero. Any such entry obstructs the diagram being classical.
std::vector<std::pair<int, Integer>> classicality_obstruction(const MuTable& t);

struct LinkingMismatch {
    int over, under;
    long long link;
    Integer mu;
};

// Compares every degree-1 coefficient mu(i, w_j) against the crossing-sign
// count link(i, j). Empty result means consistent. Requires has_linking.
std::vector<LinkingMismatch> linking_mismatches(const MuTable& t);

std::string render_table(const MuTable& t);
std::string render_mubar(const MuTable& t);

// One JSON object per line, numbers as decimal strings.
std::string to_records(const MuTable& t);
MuTable from_records(const std::string& text);

bool raw_equal(const MuTable& a, const MuTable& b);
bool mubar_equal(const MuTable& a, const MuTable& b);
// Raw equality on the entries whose sequence avoids the target component.
bool raw_equal_excluding_target_in_seq(const MuTable& a, const MuTable& b);

} // namespace mulink

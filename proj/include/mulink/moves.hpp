#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulink/diagram.hpp"

namespace mulink {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, Forbidden, SelfChange };

std::string kind_name(MoveKind k);

// Gauss-code rewriting move. Window positions are indices into a component's
// passage vector; every window is a pair (pos, pos+1) and never wraps around
// the end of the component.
//
//   R1Add      comp/pos/sign/order_ou: insert a kink [O U] or [U O]
//   R1Remove   comp/pos: delete the adjacent kink pair at pos, pos+1
//   R2Add      over_*/under_*/sign/anti: insert an over pair [O_c O_d] and
//              the matching under pair, parallel [U_c U_d] or antiparallel
//              [U_d U_c]; c gets sign, d gets -sign
//   R2Remove   over_*/under_*: delete such a pattern
//   R3         comp:pos (a), b_*/c_* windows: slide a doubly-over strand
//              across a third crossing by swapping inside each window
//   Forbidden  comp/pos: swap two adjacent over passages (welded move)
//   SelfChange crossing: switch a self-crossing (over/under swap, sign flip)
struct Move {
    MoveKind kind;
    int comp = 0, pos = 0;
    int sign = 1;
    bool order_ou = true;
    int over_comp = 0, over_pos = 0, under_comp = 0, under_pos = 0;
    bool anti = false;
    int b_comp = 0, b_pos = 0, c_comp = 0, c_pos = 0;
    int crossing = 0;
};

std::string render_move(const Move& m);
Move parse_move(const std::string& line);

// Applies one move, throwing ValidationError when the precondition fails.
Diagram apply(const Diagram& d, const Move& m);

// All applicable instances of an in-place kind (R1Remove, R2Remove, R3,
// Forbidden, SelfChange) in deterministic scan order. Insertion kinds have
// unbounded parameter spaces and are sampled by fuzz instead.
std::vector<Move> enumerate(const Diagram& d, MoveKind kind);

enum class MoveClass { Isotopy, Welded, Homotopy, WeldedHomotopy };

MoveClass parse_move_class(const std::string& name);
std::vector<MoveKind> kinds_of(MoveClass c);

struct FuzzResult {
    Diagram diagram;
    std::vector<std::string> log; // one rendered move or SKIP line per step
};

// Applies `steps` random moves drawn from `kinds`. A step whose kind has no
// applicable instance logs "SKIP kind=..." and leaves the diagram alone.
FuzzResult fuzz(const Diagram& d, const std::vector<MoveKind>& kinds, int steps,
                std::uint64_t seed);
FuzzResult fuzz(const Diagram& d, MoveClass cls, int steps, std::uint64_t seed);

// Re-applies a recorded move log.
Diagram replay(const Diagram& d, const std::vector<std::string>& log);

} // namespace mulink

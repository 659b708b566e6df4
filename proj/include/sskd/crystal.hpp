#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sskd/crystal_graph.hpp"
#include "sskd/tabloid.hpp"

namespace sskd {

// Matching between the two letters a crystal operator moves.  "Low" is the
// letter the lowering operator changes (i, or n for the affine pair), "high"
// the one the raising operator changes (i+1, or 1).  The low letter of a
// matched pair always precedes the high one in reading order, except for
// same-column pairs which are matched unconditionally first.
struct Pairing {
    std::vector<std::pair<Cell, Cell>> matched;  // (low cell, high cell)
    std::vector<Cell> unpaired_low;              // reading order
    std::vector<Cell> unpaired_high;             // reading order
};

enum class PairingScan { forward, reverse };

// Letters i / i+1 for 1 <= i < n: same-column pairs first, then iteratively
// an unpaired i+1 matches an unpaired i to its left when every i / i+1
// strictly between them is already matched.
Pairing i_pairing(const Tabloid& t, int i, PairingScan scan = PairingScan::forward);

// Letters n / 1: same-column pairs first, then an unpaired n matches an
// unpaired 1 to its right under the same in-between condition.
Pairing zero_pairing(const Tabloid& t, PairingScan scan = PairingScan::forward);

// Crystal operators.  All require the tabloid to be semistandard with
// alphabet equal to the number of rows; nullopt encodes the zero of the
// crystal.  lower/raise are the finite operators (1 <= i < n), lower0/raise0
// the affine ones.
std::optional<Tabloid> lower(const Tabloid& t, int i);
std::optional<Tabloid> raise(const Tabloid& t, int i);
std::optional<Tabloid> lower0(const Tabloid& t);
std::optional<Tabloid> raise0(const Tabloid& t);

// Label dispatch: label 0 means the affine operator.
std::optional<Tabloid> apply_f(const Tabloid& t, int label);
std::optional<Tabloid> apply_e(const Tabloid& t, int label);

// (phi, eps): maximal numbers of times f resp. e applies, by iteration.
std::pair<int, int> string_lengths(const Tabloid& t, int label);

// (#unpaired low, #unpaired high) under the pairing for this label.
std::pair<int, int> unpaired_counts(const Tabloid& t, int label);

struct TabloidCrystal {
    CrystalGraph graph;
    std::vector<Tabloid> tabloids;  // indexed by node id
};

// BFS from the distinguished highest tabloid over all lowering operators.
TabloidCrystal build_crystal(const Composition& shape);

}  // namespace sskd

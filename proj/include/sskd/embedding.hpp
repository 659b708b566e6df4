#pragma once

#include <string>
#include <vector>

#include "sskd/composition.hpp"
#include "sskd/tabloid.hpp"

namespace sskd {

// Shape-changing injection into the tabloids of s_i . a for a_i > a_{i+1}.
// Rows i and i+1 are rebuilt column by column along a diagonal chain that
// keeps or swaps the vertical order of each new pair so no Type II
// co-inversion triple appears; the long row's leftover cells keep their
// columns and move to row i+1.
Tabloid embed_finite(const Tabloid& t, int i);

// Affine analogue into s_0 . a for a_n >= a_1 > 0: the chain runs along the
// diagonal pairs (row n, col k), (row 1, col k+1) for k = 1..a_1-1 avoiding
// Type I co-inversion triples and attacking pairs; afterwards the row-n
// cells in columns a_1..a_n are appended to the end of row 1.
Tabloid embed_affine(const Tabloid& t);

// Label dispatch: label 0 is the affine embedding.
Tabloid embed(const Tabloid& t, int label);

struct FiltrationStep {
    int letter = 0;
    Composition from_shape;
    Composition to_shape;
    int from_size = 0;
    int to_size = 0;
    std::vector<std::string> violations;
};

struct FiltrationReport {
    Composition shape;
    std::vector<int> word;
    std::vector<FiltrationStep> steps;
    std::vector<std::string> notes;  // expected phi changes along the step's own label
    bool ok() const;
};

// Walks the canonical reduced word from eta to the shape; at every step
// checks that the embedding lands in the bigger tabloid set, is injective
// and covers all string heads, preserves string lengths for the other
// labels and intertwines the lowering operators, and that the image meets
// every string of the step's label in a prefix.
FiltrationReport filtration_check(const Composition& shape);

}  // namespace sskd

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sskd/composition.hpp"

namespace sskd {

// Cell of a diagram, row 1 at the bottom, column 0 is the basement.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string format_cell(const Cell& c);

// Reading order: up the columns, left to right.
bool reading_less(const Cell& a, const Cell& b);

// Filling of the diagram of `shape` with entries in {1..alphabet}.
class Tabloid {
  public:
    Tabloid(Composition shape, std::vector<std::vector<int>> rows, int alphabet);

    const Composition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int alphabet() const { return alphabet_; }
    int n_rows() const { return static_cast<int>(shape_.size()); }
    int row_length(int row) const { return shape_[static_cast<std::size_t>(row - 1)]; }

    // Entry at (row, col), both 1-based; col must be within the row.
    int at(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
    bool has_cell(int row, int col) const {
        return row >= 1 && row <= n_rows() && col >= 1 && col <= row_length(row);
    }
    // Entry with the basement convention: column 0 carries the row index.
    int entry_or_basement(int row, int col) const { return col == 0 ? row : at(row, col); }

    friend auto operator<=>(const Tabloid&, const Tabloid&) = default;

  private:
    Composition shape_;
    int alphabet_;
    std::vector<std::vector<int>> rows_;
};

// Total order on cells-with-entries: smaller entry first; on ties the cell
// with the strictly larger column is the smaller one.
bool cell_less(int entry_a, int col_a, int entry_b, int col_b);

// The three cyclic patterns i<j<k, j<k<i, k<i<j under cell_less, with the
// triple labelled (i, j, k) = (pair left, pair right, third cell).
bool coinversion_pattern(int ei, int ci, int ej, int cj, int ek, int ck);

enum class TripleKind { type_one, type_two };

// Pair cells (row, col), (row, col+1) plus a third cell: above-left for
// Type I (lower row strictly longer), below-right for Type II (higher row
// weakly longer).  Basements may appear as pair-left or Type I third.
struct Triple {
    TripleKind kind;
    Cell left;
    Cell right;
    Cell third;
};

std::vector<Triple> all_triples(const Composition& shape);

bool is_nonattacking(const Tabloid& t);
bool is_coinversion(const Triple& triple, const Tabloid& t);
bool is_sskd(const Tabloid& t);

// Exhaustive oracle: all semistandard key tabloids of the shape over
// {1..alphabet}, ordered by reading word.
std::vector<Tabloid> enumerate_sskd(const Composition& shape, int alphabet);

// Entry histogram, length = alphabet.
Composition weight(const Tabloid& t);

std::vector<int> reading_word(const Tabloid& t);
// Digits concatenated when the alphabet fits in one digit, else comma-joined.
std::string reading_word_string(const Tabloid& t);

// Major index: each cell with an entry strictly smaller than its right
// neighbor contributes its leg (number of cells strictly to its right).
int maj(const Tabloid& t);

// The distinguished filling by columns left to right, bottom to top, with
// entries 1..n repeating; always a semistandard key tabloid of weight eta.
Tabloid u_tilde_tabloid(const Composition& shape);

}  // namespace sskd

#include "sskd/tabloid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sskd/errors.hpp"

namespace sskd {

std::string format_cell(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool reading_less(const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
}

Tabloid::Tabloid(Composition shape, std::vector<std::vector<int>> rows, int alphabet)
    : shape_(std::move(shape)), alphabet_(alphabet), rows_(std::move(rows)) {
    if (!is_weak_composition(shape_)) throw InvalidInputError("tabloid: bad shape");
    if (alphabet_ < 1) throw InvalidInputError("tabloid: alphabet must be >= 1");
    if (rows_.size() != shape_.size()) throw InvalidInputError("tabloid: row count != shape length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_[r])
            throw InvalidInputError("tabloid: row " + std::to_string(r + 1) + " length != shape part");
        for (int v : rows_[r])
            if (v < 1 || v > alphabet_)
                throw InvalidInputError("tabloid: entry " + std::to_string(v) + " outside 1.." +
                                        std::to_string(alphabet_));
    }
}

bool cell_less(int entry_a, int col_a, int entry_b, int col_b) {
    if (entry_a != entry_b) return entry_a < entry_b;
    return col_a > col_b;
}

bool coinversion_pattern(int ei, int ci, int ej, int cj, int ek, int ck) {
    const bool ij = cell_less(ei, ci, ej, cj);
    const bool jk = cell_less(ej, cj, ek, ck);
    const bool ki = cell_less(ek, ck, ei, ci);
    return (ij && jk) || (jk && ki) || (ki && ij);
}

std::vector<Triple> all_triples(const Composition& shape) {
    std::vector<Triple> out;
    const int n = static_cast<int>(shape.size());
    auto len = [&](int r) { return shape[static_cast<std::size_t>(r - 1)]; };
    for (int r = 1; r <= n; ++r) {
        for (int c = 0; c + 1 <= len(r); ++c) {
            // Type I: third above at (r', c), lower row strictly longer.
            for (int rp = r + 1; rp <= n; ++rp) {
                if (!(len(r) > len(rp))) continue;
                if (c != 0 && c > len(rp)) continue;  // third cell must exist
                out.push_back({TripleKind::type_one, {r, c}, {r, c + 1}, {rp, c}});
            }
            // Type II: third below at (r'', c+1), higher row weakly longer.
            for (int rp = 1; rp < r; ++rp) {
                if (!(len(r) >= len(rp))) continue;
                if (c + 1 > len(rp)) continue;
                out.push_back({TripleKind::type_two, {r, c}, {r, c + 1}, {rp, c + 1}});
            }
        }
    }
    return out;
}

bool is_nonattacking(const Tabloid& t) {
    const int n = t.n_rows();
    int max_col = 0;
    for (int r = 1; r <= n; ++r) max_col = std::max(max_col, t.row_length(r));
    // entry -> row within a fixed column
    std::map<int, int> col_entries, next_entries;
    for (int c = 1; c <= max_col; ++c) {
        col_entries.clear();
        for (int r = 1; r <= n; ++r) {
            if (!t.has_cell(r, c)) continue;
            auto [it, fresh] = col_entries.try_emplace(t.at(r, c), r);
            if (!fresh) return false;  // equal entries in one column
        }
        next_entries.clear();
        for (int r = 1; r <= n; ++r)
            if (t.has_cell(r, c + 1)) next_entries.emplace(t.at(r, c + 1), r);
        for (auto& [entry, row_left] : col_entries) {
            auto it = next_entries.find(entry);
            if (it != next_entries.end() && row_left > it->second) return false;
        }
    }
    return true;
}

bool is_coinversion(const Triple& triple, const Tabloid& t) {
    const int ei = t.entry_or_basement(triple.left.row, triple.left.col);
    const int ej = t.entry_or_basement(triple.right.row, triple.right.col);
    const int ek = t.entry_or_basement(triple.third.row, triple.third.col);
    return coinversion_pattern(ei, triple.left.col, ej, triple.right.col, ek, triple.third.col);
}

bool is_sskd(const Tabloid& t) {
    if (!is_nonattacking(t)) return false;
    for (const Triple& tri : all_triples(t.shape()))
        if (is_coinversion(tri, t)) return false;
    return true;
}

std::vector<Tabloid> enumerate_sskd(const Composition& shape, int alphabet) {
    if (!is_weak_composition(shape)) throw InvalidInputError("enumerate_sskd: bad shape");
    if (alphabet < 1) throw InvalidInputError("enumerate_sskd: alphabet must be >= 1");
    const int n = static_cast<int>(shape.size());

    std::vector<Cell> cells;  // reading order, so output is sorted by reading word
    int max_col = *std::max_element(shape.begin(), shape.end());
    for (int c = 1; c <= max_col; ++c)
        for (int r = 1; r <= n; ++r)
            if (shape[static_cast<std::size_t>(r - 1)] >= c) cells.push_back({r, c});

    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape[r]), 1);
    // column-distinctness pruning during generation
    std::vector<std::vector<bool>> used;
    std::vector<Tabloid> out;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Tabloid t(shape, rows, alphabet);
            if (is_sskd(t)) out.push_back(std::move(t));
            return;
        }
        const Cell cell = cells[idx];
        for (int v = 1; v <= alphabet; ++v) {
            if (used[static_cast<std::size_t>(cell.col)][static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(cell.col)][static_cast<std::size_t>(v)] = true;
            rows[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = v;
            rec(idx + 1);
            used[static_cast<std::size_t>(cell.col)][static_cast<std::size_t>(v)] = false;
        }
    };
    used.assign(static_cast<std::size_t>(max_col + 1), std::vector<bool>(static_cast<std::size_t>(alphabet + 1), false));
    rec(0);
    return out;
}

Composition weight(const Tabloid& t) {
    Composition w(static_cast<std::size_t>(t.alphabet()), 0);
    for (const auto& row : t.rows())
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
    return w;
}

std::vector<int> reading_word(const Tabloid& t) {
    std::vector<int> word;
    int max_col = 0;
    for (int r = 1; r <= t.n_rows(); ++r) max_col = std::max(max_col, t.row_length(r));
    for (int c = 1; c <= max_col; ++c)
        for (int r = 1; r <= t.n_rows(); ++r)
            if (t.has_cell(r, c)) word.push_back(t.at(r, c));
    return word;
}

std::string reading_word_string(const Tabloid& t) {
    std::vector<int> word = reading_word(t);
    std::ostringstream os;
    const bool digits = t.alphabet() <= 9;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!digits && i) os << ',';
        os << word[i];
    }
    return os.str();
}

int maj(const Tabloid& t) {
    int total = 0;
    for (int r = 1; r <= t.n_rows(); ++r) {
        const int len = t.row_length(r);
        for (int c = 1; c < len; ++c)
            if (t.at(r, c) < t.at(r, c + 1)) total += len - c;
    }
    return total;
}

Tabloid u_tilde_tabloid(const Composition& shape) {
    if (!is_weak_composition(shape)) throw InvalidInputError("u_tilde_tabloid: bad shape");
    const int n = static_cast<int>(shape.size());
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape[r]), 1);
    int max_col = *std::max_element(shape.begin(), shape.end());
    int next = 1;
    for (int c = 1; c <= max_col; ++c)
        for (int r = 1; r <= n; ++r)
            if (shape[static_cast<std::size_t>(r - 1)] >= c) {
                rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = next;
                next = next % n + 1;
            }
    return Tabloid(shape, std::move(rows), n);
}

}  // namespace sskd

#include "sskd/crystal.hpp"

#include <algorithm>
#include <map>

#include "sskd/errors.hpp"

namespace sskd {

namespace {

void require_crystal_tabloid(const Tabloid& t, const char* who) {
    if (t.alphabet() != t.n_rows())
        throw InvalidInputError(std::string(who) + ": crystal operators need alphabet == number of rows");
    if (!is_sskd(t)) throw InvalidInputError(std::string(who) + ": tabloid is not semistandard");
}

struct PairItem {
    Cell cell;
    bool low = false;
    int match = -1;
};

// Shared matching engine.  The low letter is always the earlier one of a
// matched pair in reading order; same-column pairs are made unconditionally
// first, then a closer matches the nearest unmatched item to its left, which
// must be a low (an unmatched letter in between blocks the pair).
Pairing make_pairing(const Tabloid& t, int low_letter, int high_letter, PairingScan scan) {
    std::vector<PairItem> items;
    int max_col = 0;
    for (int r = 1; r <= t.n_rows(); ++r) max_col = std::max(max_col, t.row_length(r));
    for (int c = 1; c <= max_col; ++c)
        for (int r = 1; r <= t.n_rows(); ++r) {
            if (!t.has_cell(r, c)) continue;
            const int v = t.at(r, c);
            if (v == low_letter || v == high_letter) items.push_back({{r, c}, v == low_letter, -1});
        }

    for (int c = 1; c <= max_col; ++c) {
        int lo = -1, hi = -1;
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (items[j].cell.col != c || items[j].match >= 0) continue;
            (items[j].low ? lo : hi) = static_cast<int>(j);
        }
        if (lo >= 0 && hi >= 0) {
            items[static_cast<std::size_t>(lo)].match = hi;
            items[static_cast<std::size_t>(hi)].match = lo;
        }
    }

    bool changed = true;
    auto try_close = [&](std::size_t j) {
        if (items[j].low || items[j].match >= 0) return;
        for (int p = static_cast<int>(j) - 1; p >= 0; --p) {
            if (items[static_cast<std::size_t>(p)].match >= 0) continue;
            if (items[static_cast<std::size_t>(p)].low) {
                items[static_cast<std::size_t>(p)].match = static_cast<int>(j);
                items[j].match = p;
                changed = true;
            }
            break;
        }
    };
    while (changed) {
        changed = false;
        if (scan == PairingScan::forward) {
            for (std::size_t j = 0; j < items.size(); ++j) try_close(j);
        } else {
            for (std::size_t j = items.size(); j-- > 0;) try_close(j);
        }
    }

    Pairing p;
    for (const PairItem& it : items) {
        if (it.match >= 0) {
            if (it.low) p.matched.emplace_back(it.cell, items[static_cast<std::size_t>(it.match)].cell);
        } else {
            (it.low ? p.unpaired_low : p.unpaired_high).push_back(it.cell);
        }
    }
    return p;
}

// Swap the row-letter at (row, c) with the partner letter strictly above or
// below in the same column; returns false when the column does not qualify.
bool sweep_swap(std::vector<std::vector<int>>& rows, const Tabloid& t, int row, int c,
                int row_letter, int other_letter, bool other_above) {
    if (c < 1 || c > t.row_length(row)) return false;
    if (rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(c - 1)] != row_letter) return false;
    const int n = t.n_rows();
    const int from = other_above ? row + 1 : 1;
    const int to = other_above ? n : row - 1;
    for (int r = from; r <= to; ++r) {
        if (!t.has_cell(r, c)) continue;
        if (rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] == other_letter) {
            std::swap(rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(c - 1)],
                      rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
            return true;
        }
    }
    return false;
}

// Flip the entry at z and swap through consecutive qualifying columns on
// both sides.  `row_letter` is the value looked for in z's row, `partner`
// the one above (left sweep) resp. below (right sweep).
Tabloid flip_and_sweep(const Tabloid& t, Cell z, int new_value, int row_letter, int partner) {
    std::vector<std::vector<int>> rows = t.rows();
    rows[static_cast<std::size_t>(z.row - 1)][static_cast<std::size_t>(z.col - 1)] = new_value;
    for (int c = z.col - 1; c >= 1; --c)
        if (!sweep_swap(rows, t, z.row, c, row_letter, partner, /*other_above=*/true)) break;
    for (int c = z.col + 1; c <= t.row_length(z.row); ++c)
        if (!sweep_swap(rows, t, z.row, c, row_letter, partner, /*other_above=*/false)) break;
    return Tabloid(t.shape(), std::move(rows), t.alphabet());
}

bool column_has_entry_above(const Tabloid& t, int row, int c, int letter) {
    for (int r = row + 1; r <= t.n_rows(); ++r)
        if (t.has_cell(r, c) && t.at(r, c) == letter) return true;
    return false;
}

}  // namespace

Pairing i_pairing(const Tabloid& t, int i, PairingScan scan) {
    if (t.alphabet() != t.n_rows())
        throw InvalidInputError("i_pairing: crystal pairings need alphabet == number of rows");
    if (i < 1 || i >= t.n_rows()) throw InvalidInputError("i_pairing: index out of range");
    return make_pairing(t, i, i + 1, scan);
}

Pairing zero_pairing(const Tabloid& t, PairingScan scan) {
    if (t.alphabet() != t.n_rows())
        throw InvalidInputError("zero_pairing: crystal pairings need alphabet == number of rows");
    if (t.n_rows() == 1) return {};  // degenerate: letters n and 1 coincide
    return make_pairing(t, t.n_rows(), 1, scan);
}

std::optional<Tabloid> lower(const Tabloid& t, int i) {
    require_crystal_tabloid(t, "lower");
    if (i < 1 || i >= t.n_rows()) throw InvalidInputError("lower: index out of range");
    Pairing p = i_pairing(t, i);
    if (p.unpaired_low.empty()) return std::nullopt;
    const Cell z = p.unpaired_low.front();
    if (z.row == i) {
        bool blocked = true;
        for (int c = 1; c < z.col && blocked; ++c)
            blocked = t.at(z.row, c) == i && column_has_entry_above(t, z.row, c, i + 1);
        if (blocked) return std::nullopt;
    }
    return flip_and_sweep(t, z, i + 1, i, i + 1);
}

std::optional<Tabloid> raise(const Tabloid& t, int i) {
    require_crystal_tabloid(t, "raise");
    if (i < 1 || i >= t.n_rows()) throw InvalidInputError("raise: index out of range");
    Pairing p = i_pairing(t, i);
    if (p.unpaired_high.empty()) return std::nullopt;
    return flip_and_sweep(t, p.unpaired_high.back(), i, i + 1, i);
}

std::optional<Tabloid> lower0(const Tabloid& t) {
    require_crystal_tabloid(t, "lower0");
    const int n = t.n_rows();
    if (n == 1) return std::nullopt;
    Pairing p = zero_pairing(t);
    if (p.unpaired_low.empty()) return std::nullopt;
    const Cell z = p.unpaired_low.front();
    if (z.col == 1 && count_nonzero(t.shape()) > 1) return std::nullopt;
    // A lone unpaired n below the top row cannot be lowered either: doing so
    // would leave the crystal generated from the highest tabloid (checked
    // exhaustively against the tensor model by the verify suite).
    if (p.unpaired_high.empty() && p.unpaired_low.size() == 1 && z.row != n) return std::nullopt;
    return flip_and_sweep(t, z, 1, n, 1);
}

std::optional<Tabloid> raise0(const Tabloid& t) {
    require_crystal_tabloid(t, "raise0");
    const int n = t.n_rows();
    if (n == 1) return std::nullopt;
    Pairing p = zero_pairing(t);
    if (p.unpaired_high.empty()) return std::nullopt;
    const Cell z = p.unpaired_high.back();
    if (z.row < n) {
        bool blocked = true;
        for (int c = 1; c < z.col && blocked; ++c)
            blocked = t.at(z.row, c) == 1 && column_has_entry_above(t, z.row, c, n);
        if (blocked) return std::nullopt;
    }
    if (z.col == 1 && count_nonzero(t.shape()) > 1) return std::nullopt;
    if (p.unpaired_low.empty() && p.unpaired_high.size() == 1 && z.row != n) return std::nullopt;
    Tabloid candidate = flip_and_sweep(t, z, n, 1, n);
    // raise0 is the partial inverse of lower0; discard any candidate the
    // lowering operator would not map back.
    if (!is_sskd(candidate)) return std::nullopt;
    std::optional<Tabloid> back = lower0(candidate);
    if (!back || !(*back == t)) return std::nullopt;
    return candidate;
}

std::optional<Tabloid> apply_f(const Tabloid& t, int label) {
    return label == 0 ? lower0(t) : lower(t, label);
}

std::optional<Tabloid> apply_e(const Tabloid& t, int label) {
    return label == 0 ? raise0(t) : raise(t, label);
}

std::pair<int, int> string_lengths(const Tabloid& t, int label) {
    int phi = 0;
    for (std::optional<Tabloid> cur = apply_f(t, label); cur; cur = apply_f(*cur, label)) {
        if (++phi > 100000) throw std::logic_error("string_lengths: runaway lowering string");
    }
    int eps = 0;
    for (std::optional<Tabloid> cur = apply_e(t, label); cur; cur = apply_e(*cur, label)) {
        if (++eps > 100000) throw std::logic_error("string_lengths: runaway raising string");
    }
    return {phi, eps};
}

std::pair<int, int> unpaired_counts(const Tabloid& t, int label) {
    Pairing p = label == 0 ? zero_pairing(t) : i_pairing(t, label);
    return {static_cast<int>(p.unpaired_low.size()), static_cast<int>(p.unpaired_high.size())};
}

TabloidCrystal build_crystal(const Composition& shape) {
    const int n = static_cast<int>(shape.size());
    TabloidCrystal out;
    out.graph.shape = shape;
    out.graph.root = 0;

    Tabloid root = u_tilde_tabloid(shape);
    std::map<Tabloid, int> index;
    index.emplace(root, 0);
    out.tabloids.push_back(root);
    out.graph.nodes.push_back({reading_word_string(root), weight(root), maj(root)});

    for (std::size_t q = 0; q < out.tabloids.size(); ++q) {
        const Tabloid cur = out.tabloids[q];  // copy: the vector grows below
        for (int label = 0; label < n; ++label) {
            std::optional<Tabloid> next = apply_f(cur, label);
            if (!next) continue;
            auto [it, fresh] = index.try_emplace(*next, static_cast<int>(out.tabloids.size()));
            if (fresh) {
                out.tabloids.push_back(*next);
                out.graph.nodes.push_back({reading_word_string(*next), weight(*next), maj(*next)});
            }
            out.graph.edges.push_back({static_cast<int>(q), it->second, label});
        }
    }
    return out;
}

}  // namespace sskd

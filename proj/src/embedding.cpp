#include "sskd/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sskd/crystal.hpp"
#include "sskd/errors.hpp"

namespace sskd {

Tabloid embed_finite(const Tabloid& t, int i) {
    const Composition& a = t.shape();
    const int n = static_cast<int>(a.size());
    if (i < 1 || i >= n) throw DomainError("embed_finite: index out of range");
    const int long_len = a[static_cast<std::size_t>(i - 1)];
    const int short_len = a[static_cast<std::size_t>(i)];
    if (!(long_len > short_len)) throw DomainError("embed_finite: requires a_i > a_{i+1}");

    Composition b = a;
    std::swap(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i)]);

    const std::vector<int>& xrow = t.rows()[static_cast<std::size_t>(i - 1)];
    const std::vector<int>& yrow = t.rows()[static_cast<std::size_t>(i)];
    std::vector<int> new_short(static_cast<std::size_t>(short_len));
    std::vector<int> new_long(static_cast<std::size_t>(long_len));

    // Chain state: the entry currently on top (row i+1 of the result) in the
    // previous column; at the basement the row-(i+1) side is on top.
    bool y_on_top = true;
    int prev_top = i + 1;
    for (int k = 1; k <= short_len; ++k) {
        const int xv = xrow[static_cast<std::size_t>(k - 1)];
        const int yv = yrow[static_cast<std::size_t>(k - 1)];
        int top = y_on_top ? yv : xv;
        int bottom = y_on_top ? xv : yv;
        // Keeping the orientation would put (prev_top, top) row-adjacent with
        // `bottom` below the right cell: a Type II triple.
        if (coinversion_pattern(prev_top, k - 1, top, k, bottom, k)) {
            std::swap(top, bottom);
            y_on_top = !y_on_top;
        }
        new_long[static_cast<std::size_t>(k - 1)] = top;
        new_short[static_cast<std::size_t>(k - 1)] = bottom;
        prev_top = top;
    }
    for (int k = short_len + 1; k <= long_len; ++k)
        new_long[static_cast<std::size_t>(k - 1)] = xrow[static_cast<std::size_t>(k - 1)];

    std::vector<std::vector<int>> rows = t.rows();
    rows[static_cast<std::size_t>(i - 1)] = std::move(new_short);
    rows[static_cast<std::size_t>(i)] = std::move(new_long);
    return Tabloid(std::move(b), std::move(rows), t.alphabet());
}

Tabloid embed_affine(const Tabloid& t) {
    const Composition& a = t.shape();
    const int n = static_cast<int>(a.size());
    if (n < 2) throw DomainError("embed_affine: needs at least two rows");
    const int a1 = a.front();
    const int an = a.back();
    if (!(an >= a1 && a1 > 0)) throw DomainError("embed_affine: requires a_n >= a_1 > 0");

    Composition b = a;
    b.front() = an + 1;
    b.back() = a1 - 1;

    const std::vector<int>& xrow = t.rows().front();  // row 1, length a_1
    const std::vector<int>& yrow = t.rows().back();   // row n, length a_n
    std::vector<int> new_bottom(static_cast<std::size_t>(an + 1));
    std::vector<int> new_top(static_cast<std::size_t>(a1 - 1));

    new_bottom[0] = xrow[0];  // row 1, column 1 is never touched
    bool x_in_row1 = true;    // what currently sits at (1, k): x_k or y_{k-1}
    int bottom_prev = xrow[0];
    for (int k = 1; k <= a1 - 1; ++k) {
        const int yk = yrow[static_cast<std::size_t>(k - 1)];
        const int xk1 = xrow[static_cast<std::size_t>(k)];
        // Default keeps each chain on its own row; the swap moves the row-1
        // entry up into row n and the row-n entry onward along row 1.
        int top = x_in_row1 ? yk : xk1;           // goes to (n, k)
        int bottom_next = x_in_row1 ? xk1 : yk;   // goes to (1, k+1)
        // Type I triple: pair (1,k),(1,k+1) with the third at (n,k); the
        // attacking case is the proposed (n,k) against the entry at (1,k).
        const bool bad = coinversion_pattern(bottom_prev, k, bottom_next, k + 1, top, k) ||
                         top == bottom_prev;
        if (bad) {
            std::swap(top, bottom_next);
            x_in_row1 = !x_in_row1;
        }
        new_top[static_cast<std::size_t>(k - 1)] = top;
        new_bottom[static_cast<std::size_t>(k)] = bottom_next;
        bottom_prev = bottom_next;
    }
    for (int c = a1; c <= an; ++c)
        new_bottom[static_cast<std::size_t>(c)] = yrow[static_cast<std::size_t>(c - 1)];

    std::vector<std::vector<int>> rows = t.rows();
    rows.front() = std::move(new_bottom);
    rows.back() = std::move(new_top);
    return Tabloid(std::move(b), std::move(rows), t.alphabet());
}

Tabloid embed(const Tabloid& t, int label) {
    return label == 0 ? embed_affine(t) : embed_finite(t, label);
}

bool FiltrationReport::ok() const {
    for (const FiltrationStep& s : steps)
        if (!s.violations.empty()) return false;
    return true;
}

FiltrationReport filtration_check(const Composition& shape) {
    FiltrationReport report;
    report.shape = shape;
    report.word = orbit_reduced_word(shape);
    const int n = static_cast<int>(shape.size());

    Composition cur = eta(n, degree(shape));
    std::vector<Tabloid> cur_set = enumerate_sskd(cur, n);
    for (int letter : report.word) {
        Composition next = apply_s(cur, letter);
        std::vector<Tabloid> next_set = enumerate_sskd(next, n);
        FiltrationStep step;
        step.letter = letter;
        step.from_shape = cur;
        step.to_shape = next;
        step.from_size = static_cast<int>(cur_set.size());
        step.to_size = static_cast<int>(next_set.size());
        auto violation = [&](const std::string& what, const Tabloid& witness) {
            step.violations.push_back(what + " at T=" + reading_word_string(witness));
        };

        std::vector<Tabloid> image;
        image.reserve(cur_set.size());
        for (const Tabloid& t : cur_set) {
            Tabloid e = embed(t, letter);
            if (e.shape() != next || !is_sskd(e)) violation("image outside the target tabloid set", t);
            // multiset of entries is preserved; for finite labels column by column
            if (letter >= 1) {
                int max_col = 0;
                for (int r = 1; r <= n; ++r)
                    max_col = std::max({max_col, t.row_length(r), e.row_length(r)});
                for (int c = 1; c <= max_col; ++c) {
                    std::multiset<int> before, after;
                    for (int r = 1; r <= n; ++r) {
                        if (t.has_cell(r, c)) before.insert(t.at(r, c));
                        if (e.has_cell(r, c)) after.insert(e.at(r, c));
                    }
                    if (before != after) {
                        violation("column multiset changed", t);
                        break;
                    }
                }
            } else if (weight(t) != weight(e)) {
                violation("entry multiset changed", t);
            }
            image.push_back(std::move(e));
        }

        std::set<Tabloid> image_set(image.begin(), image.end());
        if (image_set.size() != image.size())
            step.violations.push_back("embedding is not injective on " + format_composition(cur));

        for (const Tabloid& t : next_set)
            if (!apply_e(t, letter) && !image_set.count(t)) violation("string head not covered", t);

        for (std::size_t idx = 0; idx < cur_set.size(); ++idx) {
            const Tabloid& t = cur_set[idx];
            const Tabloid& e = image[idx];
            for (int j = 0; j < n; ++j) {
                const int phi_t = string_lengths(t, j).first;
                const int phi_e = string_lengths(e, j).first;
                if (phi_t != phi_e) {
                    if (j == letter)
                        report.notes.push_back("phi_" + std::to_string(j) + " extended " +
                                               std::to_string(phi_t) + "->" + std::to_string(phi_e) +
                                               " along the step's own label at T=" +
                                               reading_word_string(t));
                    else
                        violation("phi_" + std::to_string(j) + " not preserved", t);
                }
                std::optional<Tabloid> ft = apply_f(t, j);
                if (ft) {
                    std::optional<Tabloid> fe = apply_f(e, j);
                    if (!fe || !(embed(*ft, letter) == *fe))
                        violation("embedding does not intertwine f_" + std::to_string(j), t);
                }
            }
        }

        // The image meets every string of the step's label in a prefix: once
        // a string leaves the image it never re-enters, and every non-image
        // node has an image node above it on its string.
        for (const Tabloid& u : image) {
            bool outside = false;
            for (std::optional<Tabloid> s = apply_f(u, letter); s; s = apply_f(*s, letter)) {
                const bool in_image = image_set.count(*s) > 0;
                if (outside && in_image) {
                    violation("image is not a string prefix", *s);
                    break;
                }
                if (!in_image) outside = true;
            }
        }
        for (const Tabloid& t : next_set) {
            if (image_set.count(t)) continue;
            bool found = false;
            std::optional<Tabloid> up = apply_e(t, letter);
            while (up) {
                if (image_set.count(*up)) {
                    found = true;
                    break;
                }
                up = apply_e(*up, letter);
            }
            if (!found) violation("non-image node with no image ancestor", t);
        }

        report.steps.push_back(std::move(step));
        cur = std::move(next);
        cur_set = std::move(next_set);
    }
    return report;
}

}  // namespace sskd

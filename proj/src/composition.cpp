#include "sskd/composition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sskd/errors.hpp"

namespace sskd {

int degree(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool is_weak_composition(const Composition& a) {
    if (a.empty()) return false;
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

int count_nonzero(const Composition& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x > 0; }));
}

Composition eta(int n, int k) {
    if (n < 1) throw DomainError("eta: n must be >= 1");
    if (k < 0) throw DomainError("eta: k must be >= 0");
    int m = k / n;
    int r = k % n;
    Composition out(static_cast<std::size_t>(n), m);
    for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = m + 1;
    return out;
}

Composition apply_s(const Composition& a, int i) {
    if (!is_weak_composition(a)) throw InvalidInputError("apply_s: not a weak composition");
    int n = static_cast<int>(a.size());
    if (i < 0 || i >= n) throw DomainError("apply_s: index out of range");
    Composition b = a;
    if (i >= 1) {
        std::swap(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i)]);
        return b;
    }
    if (a.front() < 1) throw DomainError("apply_s: s_0 requires a_1 >= 1");
    if (n == 1) return b;  // degenerate affine reflection, fixes everything
    b.front() = a.back() + 1;
    b.back() = a.front() - 1;
    return b;
}

Composition sort_decreasing(Composition a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    return a;
}

namespace {

// Orbit moves: apply_s results that are defined and strictly change a.
bool orbit_move(const Composition& a, int i, Composition& out) {
    int n = static_cast<int>(a.size());
    if (i == 0 && a.front() < 1) return false;
    if (i >= 1 && a[static_cast<std::size_t>(i - 1)] == a[static_cast<std::size_t>(i)]) return false;
    out = apply_s(a, i);
    if (out == a) return false;
    return true;
}

struct OrbitSearch {
    std::map<Composition, int> dist;
    std::map<Composition, std::pair<Composition, int>> parent;  // node -> (pred, letter)
};

OrbitSearch orbit_bfs(int n, int k) {
    OrbitSearch s;
    Composition start = eta(n, k);
    s.dist[start] = 0;
    std::deque<Composition> queue{start};
    Composition next;
    while (!queue.empty()) {
        Composition cur = queue.front();
        queue.pop_front();
        int d = s.dist.at(cur);
        for (int i = 0; i < n; ++i) {
            if (!orbit_move(cur, i, next)) continue;
            if (s.dist.count(next)) continue;
            s.dist[next] = d + 1;
            s.parent[next] = {cur, i};
            queue.push_back(next);
        }
    }
    return s;
}

}  // namespace

std::vector<int> orbit_reduced_word(const Composition& a) {
    if (!is_weak_composition(a)) throw InvalidInputError("orbit_reduced_word: not a weak composition");
    int n = static_cast<int>(a.size());
    OrbitSearch s = orbit_bfs(n, degree(a));
    if (!s.dist.count(a))
        throw UnreachableError("composition " + format_composition(a) +
                               " is not in the affine orbit of eta");
    std::vector<int> word;
    Composition cur = a;
    while (s.parent.count(cur)) {
        auto& [pred, letter] = s.parent.at(cur);
        word.push_back(letter);
        cur = pred;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::vector<int>> orbit_reduced_words(const Composition& a, std::size_t limit) {
    if (!is_weak_composition(a)) throw InvalidInputError("orbit_reduced_words: not a weak composition");
    int n = static_cast<int>(a.size());
    OrbitSearch s = orbit_bfs(n, degree(a));
    if (!s.dist.count(a))
        throw UnreachableError("composition " + format_composition(a) +
                               " is not in the affine orbit of eta");

    std::vector<std::vector<int>> words;
    std::vector<int> suffix;  // letters from a back toward eta
    Composition next;
    std::function<void(const Composition&)> walk = [&](const Composition& cur) {
        if (words.size() >= limit) return;
        int d = s.dist.at(cur);
        if (d == 0) {
            std::vector<int> word(suffix.rbegin(), suffix.rend());
            words.push_back(std::move(word));
            return;
        }
        for (int i = 0; i < n && words.size() < limit; ++i) {
            if (!orbit_move(cur, i, next)) continue;
            auto it = s.dist.find(next);
            if (it == s.dist.end() || it->second != d - 1) continue;
            suffix.push_back(i);
            Composition pred = next;
            walk(pred);
            suffix.pop_back();
        }
    };
    walk(a);
    return words;
}

std::string format_composition(const Composition& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

Composition parse_composition(const std::string& text) {
    Composition out;
    std::size_t pos = 0;
    if (text.empty()) throw TextParseError("empty composition");
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw TextParseError("bad composition part '" + token + "' in '" + text + "'");
        out.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_word(const std::vector<int>& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ',';
        os << word[i];
    }
    return os.str();
}

std::vector<Composition> all_compositions(int n, int k) {
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == n - 1) {
            cur[static_cast<std::size_t>(idx)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, rest - v);
        }
    };
    if (n >= 1 && k >= 0) rec(0, k);
    return out;
}

}  // namespace sskd

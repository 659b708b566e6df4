#include "sskd/reference.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "sskd/characters.hpp"
#include "sskd/errors.hpp"

namespace sskd {

int letter_f(int x, int i, int n) {
    if (x < 1 || x > n) throw InvalidInputError("letter_f: letter out of range");
    if (i == 0) return (n >= 2 && x == n) ? 1 : 0;
    if (i < 1 || i >= n) throw InvalidInputError("letter_f: label out of range");
    return x == i ? i + 1 : 0;
}

int letter_e(int x, int i, int n) {
    if (x < 1 || x > n) throw InvalidInputError("letter_e: letter out of range");
    if (i == 0) return (n >= 2 && x == 1) ? n : 0;
    if (i < 1 || i >= n) throw InvalidInputError("letter_e: label out of range");
    return x == i + 1 ? i : 0;
}

namespace {

int letter_phi(int x, int i, int n) { return letter_f(x, i, n) ? 1 : 0; }
int letter_eps(int x, int i, int n) { return letter_e(x, i, n) ? 1 : 0; }

}  // namespace

std::optional<TensorWord> word_f(const TensorWord& w, int i, int n) {
    if (w.empty()) return std::nullopt;
    if (w.size() == 1) {
        int y = letter_f(w.front(), i, n);
        if (!y) return std::nullopt;
        return TensorWord{y};
    }
    TensorWord prefix(w.begin(), w.end() - 1);
    const int last = w.back();
    if (letter_eps(last, i, n) < word_phi(prefix, i, n)) {
        std::optional<TensorWord> fp = word_f(prefix, i, n);
        fp->push_back(last);
        return fp;
    }
    int y = letter_f(last, i, n);
    if (!y) return std::nullopt;
    TensorWord out = w;
    out.back() = y;
    return out;
}

std::optional<TensorWord> word_e(const TensorWord& w, int i, int n) {
    if (w.empty()) return std::nullopt;
    if (w.size() == 1) {
        int y = letter_e(w.front(), i, n);
        if (!y) return std::nullopt;
        return TensorWord{y};
    }
    TensorWord prefix(w.begin(), w.end() - 1);
    const int last = w.back();
    if (letter_eps(last, i, n) <= word_phi(prefix, i, n)) {
        std::optional<TensorWord> ep = word_e(prefix, i, n);
        if (!ep) return std::nullopt;
        ep->push_back(last);
        return ep;
    }
    int y = letter_e(last, i, n);
    if (!y) return std::nullopt;
    TensorWord out = w;
    out.back() = y;
    return out;
}

int word_phi(const TensorWord& w, int i, int n) {
    int phi = 0;
    std::optional<TensorWord> cur = word_f(w, i, n);
    while (cur) {
        ++phi;
        cur = word_f(*cur, i, n);
    }
    return phi;
}

int word_eps(const TensorWord& w, int i, int n) {
    int eps = 0;
    std::optional<TensorWord> cur = word_e(w, i, n);
    while (cur) {
        ++eps;
        cur = word_e(*cur, i, n);
    }
    return eps;
}

Composition word_weight(const TensorWord& w, int n) {
    Composition wt(static_cast<std::size_t>(n), 0);
    for (int x : w) ++wt[static_cast<std::size_t>(x - 1)];
    return wt;
}

std::string format_tensor_word(const TensorWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

TensorWord u_tilde_word(int n, int k) {
    if (n < 1) throw DomainError("u_tilde_word: n must be >= 1");
    if (k < 0) throw DomainError("u_tilde_word: k must be >= 0");
    TensorWord w;
    w.reserve(static_cast<std::size_t>(k));
    for (int pos = 0; pos < k; ++pos) w.push_back(pos % n + 1);
    return w;
}

std::set<TensorWord> demazure_op(std::set<TensorWord> x, int i, int n) {
    std::deque<TensorWord> queue(x.begin(), x.end());
    while (!queue.empty()) {
        TensorWord cur = queue.front();
        queue.pop_front();
        std::optional<TensorWord> next = word_f(cur, i, n);
        if (next && x.insert(*next).second) queue.push_back(*next);
    }
    return x;
}

CrystalGraph build_reference_crystal(int n, int k, const std::vector<int>& word) {
    Composition shape = eta(n, k);
    for (int letter : word) shape = apply_s(shape, letter);

    std::set<TensorWord> elements{u_tilde_word(n, k)};
    for (int letter : word) elements = demazure_op(std::move(elements), letter, n);

    CrystalGraph g;
    g.shape = shape;
    g.root = 0;
    std::map<TensorWord, int> index;
    std::vector<TensorWord> order;

    long long min_energy = 0;
    bool first = true;
    for (const TensorWord& w : elements) {
        long long e = global_energy(w);
        min_energy = first ? e : std::min(min_energy, e);
        first = false;
    }

    auto add_node = [&](const TensorWord& w) {
        index.emplace(w, static_cast<int>(order.size()));
        order.push_back(w);
        g.nodes.push_back({format_tensor_word(w), word_weight(w, n),
                           static_cast<int>(global_energy(w) - min_energy)});
    };
    add_node(u_tilde_word(n, k));
    for (std::size_t q = 0; q < order.size(); ++q) {
        const TensorWord cur = order[q];
        for (int label = 0; label < n; ++label) {
            std::optional<TensorWord> next = word_f(cur, label, n);
            if (!next || !elements.count(*next)) continue;  // restricted to the subset
            auto it = index.find(*next);
            if (it == index.end()) {
                add_node(*next);
                it = index.find(*next);
            }
            g.edges.push_back({static_cast<int>(q), it->second, label});
        }
    }
    if (order.size() != elements.size())
        throw std::logic_error("reference crystal: subset not reachable from its highest word");
    return g;
}

}  // namespace sskd

#include "sskd/characters.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sskd/crystal.hpp"
#include "sskd/errors.hpp"
#include "sskd/tabloid.hpp"

namespace sskd {

QPoly QPoly::monomial(Exponent e, int qdeg, long long coeff) {
    QPoly p;
    p.add_term(e, qdeg, coeff);
    return p;
}

void QPoly::add_term(const Exponent& e, int qdeg, long long coeff) {
    if (coeff == 0) return;
    QCoeffs& qs = terms_[e];
    long long& c = qs[qdeg];
    c += coeff;
    if (c == 0) {
        qs.erase(qdeg);
        if (qs.empty()) terms_.erase(e);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, qs] : o.terms_)
        for (const auto& [d, c] : qs) add_term(e, d, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, qs] : o.terms_)
        for (const auto& [d, c] : qs) add_term(e, d, -c);
    return *this;
}

QPoly QPoly::q_to_one() const {
    QPoly out;
    for (const auto& [e, qs] : terms_)
        for (const auto& [d, c] : qs) out.add_term(e, 0, c);
    return out;
}

long long QPoly::value_at_ones() const {
    long long total = 0;
    for (const auto& [e, qs] : terms_)
        for (const auto& [d, c] : qs) total += c;
    return total;
}

std::string format_polynomial(const QPoly& p) {
    if (p.is_zero()) return "0";
    struct Term {
        int qdeg;
        QPoly::Exponent exp;
        long long coeff;
    };
    std::vector<Term> terms;
    for (const auto& [e, qs] : p.terms())
        for (const auto& [d, c] : qs) terms.push_back({d, e, c});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.qdeg != b.qdeg) return a.qdeg > b.qdeg;
        return a.exp > b.exp;
    });
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        const Term& t = terms[i];
        bool star = false;
        if (t.coeff != 1) {
            os << t.coeff;
            star = true;
        }
        if (t.qdeg > 0) {
            if (star) os << '*';
            os << (t.qdeg == 1 ? "q" : "q^" + std::to_string(t.qdeg));
            star = true;
        }
        if (star) os << '*';
        os << "x^(";
        for (std::size_t j = 0; j < t.exp.size(); ++j) {
            if (j) os << ',';
            os << t.exp[j];
        }
        os << ')';
    }
    return os.str();
}

QPoly specialized_macdonald(const Composition& shape) {
    const int n = static_cast<int>(shape.size());
    QPoly out;
    for (const Tabloid& t : enumerate_sskd(shape, n)) out.add_term(weight(t), maj(t), 1);
    return out;
}

QPoly divided_difference_pi(const QPoly& f, int i) {
    QPoly out;
    for (const auto& [e, qs] : f.terms()) {
        if (i < 1 || i >= static_cast<int>(e.size()))
            throw InvalidInputError("divided_difference_pi: index out of range");
        const int p = e[static_cast<std::size_t>(i - 1)];
        const int q = e[static_cast<std::size_t>(i)];
        if (p == q) {
            for (const auto& [d, c] : qs) out.add_term(e, d, c);
        } else if (p > q) {
            QPoly::Exponent ee = e;
            for (int t = q; t <= p; ++t) {
                ee[static_cast<std::size_t>(i - 1)] = t;
                ee[static_cast<std::size_t>(i)] = p + q - t;
                for (const auto& [d, c] : qs) out.add_term(ee, d, c);
            }
        } else {
            QPoly::Exponent ee = e;
            for (int t = p + 1; t <= q - 1; ++t) {
                ee[static_cast<std::size_t>(i - 1)] = t;
                ee[static_cast<std::size_t>(i)] = p + q - t;
                for (const auto& [d, c] : qs) out.add_term(ee, d, -c);
            }
        }
    }
    return out;
}

QPoly key_polynomial_chain(const Composition& b, bool largest_index_first) {
    if (!is_weak_composition(b)) throw InvalidInputError("key_polynomial: bad composition");
    const int n = static_cast<int>(b.size());
    Composition c = b;
    std::vector<int> chain;  // swaps taking b down to the decreasing rearrangement
    for (;;) {
        int pick = -1;
        for (int i = 1; i < n; ++i) {
            if (c[static_cast<std::size_t>(i - 1)] < c[static_cast<std::size_t>(i)]) {
                pick = i;
                if (!largest_index_first) break;
            }
        }
        if (pick == -1) break;
        std::swap(c[static_cast<std::size_t>(pick - 1)], c[static_cast<std::size_t>(pick)]);
        chain.push_back(pick);
    }
    QPoly f = QPoly::monomial(c);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) f = divided_difference_pi(f, *it);
    return f;
}

QPoly key_polynomial(const Composition& b) { return key_polynomial_chain(b, false); }

std::vector<KeyTerm> decompose_into_keys(const Composition& shape) {
    TabloidCrystal crystal = build_crystal(shape);
    const int n = static_cast<int>(shape.size());
    const int count = static_cast<int>(crystal.tabloids.size());

    // connected components of the graph restricted to the finite labels
    std::vector<int> comp(static_cast<std::size_t>(count));
    for (int v = 0; v < count; ++v) comp[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        while (comp[static_cast<std::size_t>(v)] != v) {
            comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
            v = comp[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const CrystalEdge& e : crystal.graph.edges)
        if (e.label != 0) comp[static_cast<std::size_t>(find(e.from))] = find(e.to);

    std::map<int, std::vector<int>> members;
    for (int v = 0; v < count; ++v) members[find(v)].push_back(v);

    std::vector<KeyTerm> out;
    for (const auto& [rep, nodes] : members) {
        std::set<int> grades;
        QPoly character;
        std::vector<int> highest;
        for (int v : nodes) {
            const Tabloid& t = crystal.tabloids[static_cast<std::size_t>(v)];
            grades.insert(maj(t));
            character.add_term(weight(t), 0, 1);
            bool killed = true;
            for (int i = 1; i < n && killed; ++i) killed = !raise(t, i).has_value();
            if (killed) highest.push_back(v);
        }
        if (grades.size() != 1)
            throw DecompositionError("component of " + format_composition(shape) +
                                     " has non-constant grade");
        if (highest.size() != 1)
            throw DecompositionError("component of " + format_composition(shape) + " has " +
                                     std::to_string(highest.size()) + " highest nodes");
        Composition lambda =
            sort_decreasing(weight(crystal.tabloids[static_cast<std::size_t>(highest.front())]));
        Composition sorted = lambda;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Composition> matches;
        do {
            if (key_polynomial(sorted).q_to_one() == character) matches.push_back(sorted);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
        if (matches.size() != 1)
            throw DecompositionError("component of " + format_composition(shape) + " matched " +
                                     std::to_string(matches.size()) + " key polynomials");
        out.push_back({*grades.begin(), matches.front()});
    }
    std::sort(out.begin(), out.end(), [](const KeyTerm& a, const KeyTerm& b) {
        if (a.q_power != b.q_power) return a.q_power > b.q_power;
        return a.key < b.key;
    });
    return out;
}

int local_energy(int b, int c) { return b < c ? 1 : 0; }

long long global_energy(const std::vector<int>& word) {
    const long long len = static_cast<long long>(word.size());
    long long total = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        total += (len - 1 - static_cast<long long>(i)) * local_energy(word[i], word[i + 1]);
    return total;
}

QPoly graded_character(const CrystalGraph& g) {
    QPoly out;
    for (const CrystalNode& node : g.nodes) out.add_term(node.weight, node.maj, 1);
    return out;
}

}  // namespace sskd

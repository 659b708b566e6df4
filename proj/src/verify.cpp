#include "sskd/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sskd/characters.hpp"
#include "sskd/composition.hpp"
#include "sskd/crystal.hpp"
#include "sskd/embedding.hpp"
#include "sskd/errors.hpp"
#include "sskd/reference.hpp"
#include "sskd/tabloid.hpp"

namespace sskd {

void VerifyReport::merge(const VerifyReport& o) {
    checks += o.checks;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

namespace {

constexpr std::size_t kMaxViolations = 200;

void fail(VerifyReport& r, const std::string& msg) {
    if (r.violations.size() < kMaxViolations) r.violations.push_back(msg);
    else if (r.violations.size() == kMaxViolations) r.violations.push_back("... further violations suppressed");
}

struct ShapeContext {
    Composition shape;
    std::vector<int> word;
};

// Reachable shapes in the orbit of eta, plus a note listing any composition
// the search cannot reach (none are expected, but this is not assumed).
std::vector<ShapeContext> reachable_shapes(int max_rows, int max_degree, VerifyReport& report,
                                           int reachability_degree) {
    std::vector<ShapeContext> out;
    std::vector<std::string> unreachable;
    for (int n = 1; n <= max_rows; ++n) {
        for (int k = 0; k <= std::max(max_degree, reachability_degree); ++k) {
            for (const Composition& a : all_compositions(n, k)) {
                try {
                    std::vector<int> word = orbit_reduced_word(a);
                    if (k <= max_degree) out.push_back({a, std::move(word)});
                } catch (const UnreachableError&) {
                    unreachable.push_back(format_composition(a));
                }
            }
        }
    }
    if (unreachable.empty()) {
        report.notes.push_back("orbit reachability: every composition with <= " +
                               std::to_string(max_rows) + " parts and degree <= " +
                               std::to_string(std::max(max_degree, reachability_degree)) +
                               " is reachable from eta");
    } else {
        for (const std::string& s : unreachable)
            report.notes.push_back("orbit reachability: " + s + " not reached from eta");
    }
    return out;
}

std::string witness(const Composition& shape, const Tabloid& t) {
    return "shape=" + format_composition(shape) + " T=" + reading_word_string(t);
}

bool same_matched_pairs(Pairing a, Pairing b) {
    auto norm = [](Pairing& p) {
        for (auto& [lo, hi] : p.matched)
            if (!reading_less(lo, hi)) std::swap(lo, hi);
        std::sort(p.matched.begin(), p.matched.end());
    };
    norm(a);
    norm(b);
    return a.matched == b.matched;
}

}  // namespace

VerifyReport verify_crystal(int max_rows, int max_degree) {
    VerifyReport report;
    long long phi_divergences = 0;
    std::string phi_example;

    for (const ShapeContext& ctx : reachable_shapes(max_rows, max_degree, report, 8)) {
        const Composition& a = ctx.shape;
        const int n = static_cast<int>(a.size());
        const int k = degree(a);
        std::vector<Tabloid> all = enumerate_sskd(a, n);

        // distinguished highest tabloid
        Tabloid u = u_tilde_tabloid(a);
        ++report.checks;
        if (!std::count(all.begin(), all.end(), u)) fail(report, "u-tilde not semistandard: " + witness(a, u));
        if (weight(u) != eta(n, k)) fail(report, "u-tilde weight is not eta: " + witness(a, u));
        for (int i = 1; i < n; ++i)
            if (raise(u, i)) fail(report, "u-tilde not highest for label " + std::to_string(i) + ": " + witness(a, u));

        // reading words determine tabloids
        {
            std::set<std::vector<int>> words;
            for (const Tabloid& t : all) words.insert(reading_word(t));
            ++report.checks;
            if (words.size() != all.size()) fail(report, "reading words not injective on shape " + format_composition(a));
        }

        // BFS crystal carries exactly the enumerated tabloids
        TabloidCrystal crystal = build_crystal(a);
        {
            std::vector<Tabloid> nodes = crystal.tabloids;
            std::sort(nodes.begin(), nodes.end());
            std::vector<Tabloid> sorted_all = all;
            std::sort(sorted_all.begin(), sorted_all.end());
            ++report.checks;
            if (nodes != sorted_all)
                fail(report, "crystal nodes differ from enumeration on shape " + format_composition(a));
        }

        for (const Tabloid& t : all) {
            for (int label = 0; label < n; ++label) {
                ++report.checks;
                std::optional<Tabloid> f = apply_f(t, label);
                if (f) {
                    if (f->shape() != a || !is_sskd(*f))
                        fail(report, "lowering left the tabloid set: label " + std::to_string(label) + " " + witness(a, t));
                    Composition wt = weight(t);
                    if (label == 0) { --wt[static_cast<std::size_t>(n - 1)]; ++wt[0]; }
                    else { --wt[static_cast<std::size_t>(label - 1)]; ++wt[static_cast<std::size_t>(label)]; }
                    if (weight(*f) != wt)
                        fail(report, "weight step wrong: label " + std::to_string(label) + " " + witness(a, t));
                    std::optional<Tabloid> back = apply_e(*f, label);
                    if (!back || !(*back == t))
                        fail(report, "raise(lower(T)) != T: label " + std::to_string(label) + " " + witness(a, t));
                    if (label == 0) {
                        Pairing before = zero_pairing(t);
                        Pairing after = zero_pairing(*f);
                        if (before.matched.size() != after.matched.size())
                            fail(report, "lower0 changed the number of matched pairs: " + witness(a, t));
                        // matched pairs whose low cell flips to 1 constrain row lengths
                        for (const auto& [lo, hi] : before.matched) {
                            if (f->at(lo.row, lo.col) != 1 || t.at(lo.row, lo.col) != n) continue;
                            const int len_lo = a[static_cast<std::size_t>(lo.row - 1)];
                            const int len_hi = a[static_cast<std::size_t>(hi.row - 1)];
                            if (hi.row > lo.row && !(len_lo > len_hi))
                                fail(report, "pairing-rows: partner above but row not strictly longer: " + witness(a, t));
                            if (hi.row < lo.row && !(len_lo >= len_hi))
                                fail(report, "pairing-rows: partner below but row not weakly longer: " + witness(a, t));
                        }
                    }
                }
                std::optional<Tabloid> e = apply_e(t, label);
                if (e) {
                    if (e->shape() != a || !is_sskd(*e))
                        fail(report, "raising left the tabloid set: label " + std::to_string(label) + " " + witness(a, t));
                    std::optional<Tabloid> back = apply_f(*e, label);
                    if (!back || !(*back == t))
                        fail(report, "lower(raise(T)) != T: label " + std::to_string(label) + " " + witness(a, t));
                }
                // scan-order independence of the pairing fixed point
                Pairing fwd = label == 0 ? zero_pairing(t) : i_pairing(t, label);
                Pairing rev = label == 0 ? zero_pairing(t, PairingScan::reverse)
                                         : i_pairing(t, label, PairingScan::reverse);
                if (!same_matched_pairs(fwd, rev))
                    fail(report, "pairing depends on scan order: label " + std::to_string(label) + " " + witness(a, t));
                // string lengths by iteration against unpaired counts (informational)
                auto [phi, eps] = string_lengths(t, label);
                auto [lows, highs] = unpaired_counts(t, label);
                if (phi != lows || eps != highs) {
                    ++phi_divergences;
                    if (phi_example.empty())
                        phi_example = "label " + std::to_string(label) + " " + witness(a, t) + " phi/eps " +
                                      std::to_string(phi) + "/" + std::to_string(eps) + " vs unpaired " +
                                      std::to_string(lows) + "/" + std::to_string(highs);
                }
            }
        }

        // grade constant on components of the finite part
        {
            CrystalGraph finite = crystal.graph.without_label(0);
            std::vector<int> comp(crystal.tabloids.size());
            for (std::size_t v = 0; v < comp.size(); ++v) comp[v] = static_cast<int>(v);
            std::function<int(int)> find = [&](int v) {
                while (comp[static_cast<std::size_t>(v)] != v) {
                    comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
                    v = comp[static_cast<std::size_t>(v)];
                }
                return v;
            };
            for (const CrystalEdge& e : finite.edges) comp[static_cast<std::size_t>(find(e.from))] = find(e.to);
            std::map<int, std::set<int>> grades;
            for (std::size_t v = 0; v < crystal.tabloids.size(); ++v)
                grades[find(static_cast<int>(v))].insert(crystal.graph.nodes[v].maj);
            ++report.checks;
            for (const auto& [rep, gs] : grades)
                if (gs.size() != 1)
                    fail(report, "grade not constant on a finite component of " + format_composition(a));
        }

        // isomorphism with the tensor model
        {
            CrystalGraph ref = build_reference_crystal(n, k, ctx.word);
            IsoResult iso = check_isomorphism(crystal.graph, ref);
            ++report.checks;
            if (!iso.ok)
                fail(report, "tabloid and tensor crystals differ on " + format_composition(a) + ": " + iso.failure);
        }

        // the Demazure subset does not depend on the reduced word chosen
        {
            std::vector<std::vector<int>> words = orbit_reduced_words(a, 3);
            ++report.checks;
            std::set<std::string> element_sets;
            for (const auto& w : words) {
                CrystalGraph ref = build_reference_crystal(n, k, w);
                std::vector<std::string> labels;
                for (const CrystalNode& node : ref.nodes) labels.push_back(node.word);
                std::sort(labels.begin(), labels.end());
                std::string joined;
                for (const std::string& s : labels) joined += s + ";";
                element_sets.insert(joined);
            }
            if (element_sets.size() != 1)
                fail(report, "Demazure subset depends on the reduced word for " + format_composition(a));
        }

        // Demazure operator idempotence along the canonical word
        {
            std::set<TensorWord> x{u_tilde_word(n, k)};
            for (int letter : ctx.word) {
                x = demazure_op(std::move(x), letter, n);
                std::set<TensorWord> again = demazure_op(x, letter, n);
                ++report.checks;
                if (again != x) fail(report, "Demazure operator not idempotent on " + format_composition(a));
            }
        }
    }

    // braid relations on adjacent affine generators, seed word only
    for (int n = 3; n <= max_rows; ++n) {
        for (int k = 1; k <= std::min(max_degree, 5); ++k) {
            for (int i = 0; i < n; ++i) {
                const int j = (i + 1) % n;
                std::set<TensorWord> seed{u_tilde_word(n, k)};
                auto iji = demazure_op(demazure_op(demazure_op(seed, i, n), j, n), i, n);
                auto jij = demazure_op(demazure_op(demazure_op(seed, j, n), i, n), j, n);
                ++report.checks;
                if (iji != jij)
                    fail(report, "braid relation fails for labels " + std::to_string(i) + "," +
                                     std::to_string(j) + " at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            }
        }
    }

    if (phi_divergences > 0)
        report.notes.push_back("string lengths by iteration diverge from unpaired counts in " +
                               std::to_string(phi_divergences) +
                               " cases (vanishing clauses truncate strings), e.g. " + phi_example);
    return report;
}

VerifyReport verify_embedding(int max_rows, int max_degree) {
    VerifyReport report;
    long long extended = 0;
    for (const ShapeContext& ctx : reachable_shapes(max_rows, max_degree, report, 0)) {
        FiltrationReport fr = filtration_check(ctx.shape);
        ++report.checks;
        for (const FiltrationStep& step : fr.steps) {
            report.checks += 4;
            for (const std::string& v : step.violations)
                fail(report, "filtration " + format_composition(ctx.shape) + " step " +
                                 std::to_string(step.letter) + " (" + format_composition(step.from_shape) +
                                 " -> " + format_composition(step.to_shape) + "): " + v);
        }
        extended += static_cast<long long>(fr.notes.size());
    }
    if (extended > 0)
        report.notes.push_back("embeddings extend " + std::to_string(extended) +
                               " strings along their own label (the expected enlargement)");
    return report;
}

namespace {

// Independent oracle for key polynomials: evaluate the divided difference
// as a rational expression at integer points, recursively along a sorting
// chain built here (largest index first, the opposite of the production
// choice).
long long eval_key_rational(const Composition& b, const std::vector<long long>& point) {
    Composition c = b;
    const int n = static_cast<int>(b.size());
    std::vector<int> chain;
    for (;;) {
        int pick = -1;
        for (int i = 1; i < n; ++i)
            if (c[static_cast<std::size_t>(i - 1)] < c[static_cast<std::size_t>(i)]) pick = i;
        if (pick == -1) break;
        std::swap(c[static_cast<std::size_t>(pick - 1)], c[static_cast<std::size_t>(pick)]);
        chain.push_back(pick);
    }
    std::reverse(chain.begin(), chain.end());  // applied from the dominant monomial outward

    std::function<long long(std::size_t, const std::vector<long long>&)> eval =
        [&](std::size_t level, const std::vector<long long>& x) -> long long {
        if (level == 0) {
            long long v = 1;
            for (int idx = 0; idx < n; ++idx)
                for (int p = 0; p < c[static_cast<std::size_t>(idx)]; ++p) v *= x[static_cast<std::size_t>(idx)];
            return v;
        }
        const int i = chain[level - 1];
        std::vector<long long> swapped = x;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        const long long xi = x[static_cast<std::size_t>(i - 1)];
        const long long xj = x[static_cast<std::size_t>(i)];
        const long long num = xi * eval(level - 1, x) - xj * eval(level - 1, swapped);
        if (num % (xi - xj) != 0) throw std::logic_error("key oracle: non-polynomial quotient");
        return num / (xi - xj);
    };
    return eval(chain.size(), point);
}

long long eval_qpoly_at(const QPoly& p, const std::vector<long long>& x) {
    long long total = 0;
    for (const auto& [e, qs] : p.terms()) {
        long long mono = 1;
        for (std::size_t idx = 0; idx < e.size(); ++idx)
            for (int t = 0; t < e[idx]; ++t) mono *= x[idx];
        long long coeff = 0;
        for (const auto& [d, c] : qs) coeff += c;  // keys carry no q
        total += coeff * mono;
    }
    return total;
}

}  // namespace

VerifyReport verify_character(int max_rows, int max_degree) {
    VerifyReport report;
    for (const ShapeContext& ctx : reachable_shapes(max_rows, max_degree, report, 0)) {
        const Composition& a = ctx.shape;
        QPoly mac = specialized_macdonald(a);
        TabloidCrystal crystal = build_crystal(a);
        ++report.checks;
        if (graded_character(crystal.graph) != mac)
            fail(report, "crystal character differs from the tabloid generating polynomial on " +
                             format_composition(a));
        std::vector<KeyTerm> decomposition;
        try {
            decomposition = decompose_into_keys(a);
        } catch (const DecompositionError& e) {
            fail(report, std::string("decomposition failed: ") + e.what());
            continue;
        }
        QPoly sum;
        for (const KeyTerm& term : decomposition) {
            QPoly key = key_polynomial(term.key);
            for (const auto& [e, qs] : key.terms())
                for (const auto& [d, c] : qs) sum.add_term(e, d + term.q_power, c);
        }
        ++report.checks;
        if (sum != mac)
            fail(report, "key decomposition does not sum to the character on " + format_composition(a));
        ++report.checks;
        if (sum.q_to_one().value_at_ones() != static_cast<long long>(enumerate_sskd(a, static_cast<int>(a.size())).size()))
            fail(report, "decomposition at q=1 does not count the tabloids of " + format_composition(a));
    }

    // key polynomials against the rational evaluation oracle
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int n = 1; n <= max_rows; ++n) {
        for (int k = 0; k <= max_degree; ++k) {
            for (const Composition& b : all_compositions(n, k)) {
                ++report.checks;
                QPoly key = key_polynomial(b);
                if (!(key == key_polynomial_chain(b, true)))
                    fail(report, "key polynomial depends on the sorting chain for " + format_composition(b));
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<long long> point(static_cast<std::size_t>(n));
                    for (;;) {
                        std::set<long long> seen;
                        for (auto& v : point) {
                            v = dist(rng);
                            seen.insert(v);
                        }
                        if (seen.size() == point.size()) break;  // pairwise distinct
                    }
                    if (eval_qpoly_at(key, point) != eval_key_rational(b, point)) {
                        fail(report, "key polynomial disagrees with the rational oracle for " +
                                         format_composition(b));
                        break;
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport verify_energy(int max_rows, int max_degree) {
    VerifyReport report;
    const int n_top = std::max(max_rows, 5);

    // local axioms on two-letter words
    for (int n = 1; n <= n_top; ++n) {
        for (int b1 = 1; b1 <= n; ++b1) {
            for (int b2 = 1; b2 <= n; ++b2) {
                TensorWord w{b1, b2};
                for (int i = 0; i < n; ++i) {
                    std::optional<TensorWord> up = word_e(w, i, n);
                    if (!up) continue;
                    ++report.checks;
                    const long long before = local_energy(w[0], w[1]);
                    const long long after = local_energy((*up)[0], (*up)[1]);
                    long long expected = before;
                    if (i == 0) {
                        const int phi0 = letter_f(b1, 0, n) ? 1 : 0;
                        const int eps0 = letter_e(b2, 0, n) ? 1 : 0;
                        expected += (phi0 >= eps0) ? -1 : 1;
                    }
                    if (after != expected)
                        fail(report, "energy axiom fails at " + format_tensor_word(w) + " label " +
                                         std::to_string(i));
                }
            }
        }
    }

    // one-row tabloids: the major index is the global energy of the word
    for (int n = 1; n <= n_top; ++n) {
        for (int row = 1; row <= n; ++row) {
            for (int len = 1; len <= 5; ++len) {
                Composition shape(static_cast<std::size_t>(n), 0);
                shape[static_cast<std::size_t>(row - 1)] = len;
                for (const Tabloid& t : enumerate_sskd(shape, n)) {
                    ++report.checks;
                    if (maj(t) != global_energy(reading_word(t)))
                        fail(report, "maj differs from global energy: " + witness(shape, t));
                }
            }
        }
    }

    // all swept shapes: the major index is the row-wise energy sum
    for (const ShapeContext& ctx : reachable_shapes(max_rows, max_degree, report, 0)) {
        for (const Tabloid& t : enumerate_sskd(ctx.shape, static_cast<int>(ctx.shape.size()))) {
            long long rows_total = 0;
            for (const auto& row : t.rows()) rows_total += global_energy(row);
            ++report.checks;
            if (maj(t) != rows_total)
                fail(report, "maj differs from the row-wise energy sum: " + witness(ctx.shape, t));
        }
    }
    return report;
}

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    const bool all = options.suite == "all";
    if (all || options.suite == "crystal") report.merge(verify_crystal(options.max_rows, options.max_degree));
    if (all || options.suite == "embedding") report.merge(verify_embedding(options.max_rows, options.max_degree));
    if (all || options.suite == "character") report.merge(verify_character(options.max_rows, options.max_degree));
    if (all || options.suite == "energy") report.merge(verify_energy(options.max_rows, options.max_degree));
    if (!all && options.suite != "crystal" && options.suite != "embedding" &&
        options.suite != "character" && options.suite != "energy")
        throw InvalidInputError("unknown suite '" + options.suite + "'");
    return report;
}

}  // namespace sskd

#pragma once

#include <map>
#include <string>
#include <vector>

#include "sskd/composition.hpp"
#include "sskd/crystal_graph.hpp"

namespace sskd {

// Sparse polynomial in x_1..x_n with integer-polynomial-in-q coefficients.
class QPoly {
  public:
    using Exponent = std::vector<int>;
    using QCoeffs = std::map<int, long long>;  // q-degree -> coefficient, no zeros

    QPoly() = default;
    static QPoly monomial(Exponent e, int qdeg = 0, long long coeff = 1);

    void add_term(const Exponent& e, int qdeg, long long coeff);
    QPoly& operator+=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    const std::map<Exponent, QCoeffs>& terms() const { return terms_; }
    QPoly q_to_one() const;
    long long value_at_ones() const;

  private:
    std::map<Exponent, QCoeffs> terms_;
};

// Text format: terms joined by " + ", each "c*q^d*x^(e1,...,en)"; the
// coefficient is omitted when 1, "q^d" omitted when d = 0 and printed as
// plain "q" when d = 1.  Terms are ordered by descending q-degree, then
// lexicographically descending exponent.  The zero polynomial prints as "0".
std::string format_polynomial(const QPoly& p);

// Graded generating polynomial over all semistandard key tabloids of the
// shape: q^maj x^weight summed over the exhaustive enumeration.
QPoly specialized_macdonald(const Composition& shape);

// Demazure operator on polynomials, monomial-wise closed form.
QPoly divided_difference_pi(const QPoly& f, int i);

// Key polynomial: divided differences applied to the dominant monomial
// along a sorting chain; the chain choice does not matter (tested).
QPoly key_polynomial(const Composition& b);
QPoly key_polynomial_chain(const Composition& b, bool largest_index_first);

struct KeyTerm {
    int q_power = 0;
    Composition key;
    friend auto operator<=>(const KeyTerm&, const KeyTerm&) = default;
};

// Cut the label-0 edges of the crystal, match each connected component
// against a key polynomial, and return the q-graded list, sorted by
// descending q-power then ascending key.  Throws DecompositionError when a
// component has non-constant grade, no unique highest node, or no unique
// key match.
std::vector<KeyTerm> decompose_into_keys(const Composition& shape);

// Local energy on pairs of letters, normalized so that the global energy of
// a row word equals the row's major-index contribution.
int local_energy(int b, int c);

// Weighted sum sum_i (L-i) * H(w_i, w_{i+1}) over a word of length L.
long long global_energy(const std::vector<int>& word);

// Sum of q^maj x^weight over the nodes of a crystal graph.
QPoly graded_character(const CrystalGraph& g);

}  // namespace sskd

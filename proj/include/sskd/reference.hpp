#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sskd/crystal_graph.hpp"

namespace sskd {

// Element of the k-fold tensor power of the standard affine crystal on
// letters {1..n}, leftmost factor first.
using TensorWord = std::vector<int>;

// Standard crystal arrows: f_i(i) = i+1 for 1 <= i < n, f_0(n) = 1,
// zero otherwise (encoded as 0).  letter_e is the partial inverse.
int letter_f(int x, int i, int n);
int letter_e(int x, int i, int n);

// Tensor rule, left-associated: f acts on the prefix when the last letter's
// eps is strictly smaller than the prefix's phi.  String statistics of
// subwords are computed by plain iteration.
std::optional<TensorWord> word_f(const TensorWord& w, int i, int n);
std::optional<TensorWord> word_e(const TensorWord& w, int i, int n);
int word_phi(const TensorWord& w, int i, int n);
int word_eps(const TensorWord& w, int i, int n);

Composition word_weight(const TensorWord& w, int n);
std::string format_tensor_word(const TensorWord& w);

// Highest weight word (1,...,n)^m (1,...,r) where k = m*n + r.
TensorWord u_tilde_word(int n, int k);

// Closure of a set under the lowering operator for one label; equivalently
// all words some raising iterate of which lands in the set.
std::set<TensorWord> demazure_op(std::set<TensorWord> x, int i, int n);

// Demazure subset built along the word (leftmost letter applied first),
// with edges of the ambient operators restricted to the subset.  Node grades
// are the global energy normalized to vanish on the minimum.
CrystalGraph build_reference_crystal(int n, int k, const std::vector<int>& word);

}  // namespace sskd

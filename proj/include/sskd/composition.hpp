#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sskd {

// Weak composition: a vector of nonnegative parts, length n >= 1.
using Composition = std::vector<int>;

int degree(const Composition& a);
bool is_weak_composition(const Composition& a);
int count_nonzero(const Composition& a);

// Minimal affine orbit representative of degree k with n parts:
// k = m*n + r with 0 <= r < n gives r parts equal to m+1 followed by m's.
Composition eta(int n, int k);

// Simple reflection action.  For 1 <= i < n swaps parts i, i+1.  For i = 0
// maps (a_1,...,a_n) to (a_n+1, a_2,...,a_{n-1}, a_1-1); requires a_1 >= 1.
// For n = 1, i = 0 fixes the composition (still requires a_1 >= 1).
Composition apply_s(const Composition& a, int i);

Composition sort_decreasing(Composition a);

// Shortest word [j_1,...,j_l] with s_{j_l}...s_{j_1} . eta = a, j_1 applied
// first.  BFS from eta over moves that stay nonnegative and strictly change
// the composition, expanding generators in increasing order per layer.
std::vector<int> orbit_reduced_word(const Composition& a);

// Up to `limit` distinct shortest orbit words for a, lexicographically
// ordered.  Used to test reduced-word independence of Demazure sets.
std::vector<std::vector<int>> orbit_reduced_words(const Composition& a, std::size_t limit);

// Serialization: comma-separated nonnegative integers, e.g. "0,2,1".
std::string format_composition(const Composition& a);
Composition parse_composition(const std::string& text);

// Reduced words use the same comma format; the empty word prints as "".
std::string format_word(const std::vector<int>& word);

// All weak compositions with n parts and degree exactly k, lexicographic.
std::vector<Composition> all_compositions(int n, int k);

}  // namespace sskd

#pragma once

#include <string>
#include <vector>

#include "sskd/composition.hpp"

namespace sskd {

struct CrystalNode {
    std::string word;    // reading word (tabloids) or comma-joined letters (tensor words)
    Composition weight;  // length-n histogram
    int maj = 0;         // q-grade
};

struct CrystalEdge {
    int from = 0;
    int to = 0;
    int label = 0;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

// Rooted directed graph with edge labels in {0..n-1}; at most one outgoing
// edge per (node, label).  Node ids are assigned in BFS discovery order.
struct CrystalGraph {
    Composition shape;
    int root = 0;
    std::vector<CrystalNode> nodes;
    std::vector<CrystalEdge> edges;

    int max_label() const;
    // -1 when absent; asserts the partial-function edge invariant.
    int edge_target(int node, int label) const;
    CrystalGraph without_label(int label) const;
};

struct IsoResult {
    bool ok = false;
    std::vector<int> mapping;  // g node id -> h node id
    std::string failure;       // first mismatching pair and label on failure
};

// Simultaneous BFS from the roots, matching per-label edges and comparing
// weights; succeeds only if the correspondence exhausts both node sets.
IsoResult check_isomorphism(const CrystalGraph& g, const CrystalGraph& h);

}  // namespace sskd

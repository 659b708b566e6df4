#include "sskd/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sskd/errors.hpp"

namespace sskd {

int CrystalGraph::max_label() const {
    int m = -1;
    for (const CrystalEdge& e : edges) m = std::max(m, e.label);
    return m;
}

int CrystalGraph::edge_target(int node, int label) const {
    int found = -1;
    for (const CrystalEdge& e : edges) {
        if (e.from != node || e.label != label) continue;
        if (found != -1) throw InvalidInputError("crystal graph: duplicate labelled edge");
        found = e.to;
    }
    return found;
}

CrystalGraph CrystalGraph::without_label(int label) const {
    CrystalGraph g = *this;
    g.edges.clear();
    for (const CrystalEdge& e : edges)
        if (e.label != label) g.edges.push_back(e);
    return g;
}

namespace {

std::vector<std::map<int, int>> out_maps(const CrystalGraph& g, std::string& err) {
    std::vector<std::map<int, int>> out(g.nodes.size());
    for (const CrystalEdge& e : g.edges) {
        if (e.from < 0 || e.from >= static_cast<int>(g.nodes.size()) || e.to < 0 ||
            e.to >= static_cast<int>(g.nodes.size())) {
            err = "edge endpoint out of range";
            return out;
        }
        auto [it, fresh] = out[static_cast<std::size_t>(e.from)].try_emplace(e.label, e.to);
        if (!fresh) {
            err = "node " + std::to_string(e.from) + " has two edges labelled " + std::to_string(e.label);
            return out;
        }
    }
    return out;
}

}  // namespace

IsoResult check_isomorphism(const CrystalGraph& g, const CrystalGraph& h) {
    IsoResult r;
    if (g.nodes.size() != h.nodes.size()) {
        r.failure = "node counts differ: " + std::to_string(g.nodes.size()) + " vs " +
                    std::to_string(h.nodes.size());
        return r;
    }
    std::string err;
    auto gout = out_maps(g, err);
    if (!err.empty()) { r.failure = "left graph: " + err; return r; }
    auto hout = out_maps(h, err);
    if (!err.empty()) { r.failure = "right graph: " + err; return r; }

    const int labels = std::max(g.max_label(), h.max_label()) + 1;
    std::vector<int> fwd(g.nodes.size(), -1), bwd(h.nodes.size(), -1);
    std::deque<std::pair<int, int>> queue;

    auto match = [&](int u, int v) -> bool {
        if (g.nodes[static_cast<std::size_t>(u)].weight != h.nodes[static_cast<std::size_t>(v)].weight) {
            r.failure = "weights differ at pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
            return false;
        }
        fwd[static_cast<std::size_t>(u)] = v;
        bwd[static_cast<std::size_t>(v)] = u;
        queue.emplace_back(u, v);
        return true;
    };

    if (!match(g.root, h.root)) return r;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (int label = 0; label < labels; ++label) {
            auto gi = gout[static_cast<std::size_t>(u)].find(label);
            auto hi = hout[static_cast<std::size_t>(v)].find(label);
            const bool has_g = gi != gout[static_cast<std::size_t>(u)].end();
            const bool has_h = hi != hout[static_cast<std::size_t>(v)].end();
            if (has_g != has_h) {
                r.failure = "edge mismatch at pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") label " + std::to_string(label);
                return r;
            }
            if (!has_g) continue;
            const int gu = gi->second, hv = hi->second;
            const int mapped = fwd[static_cast<std::size_t>(gu)];
            if (mapped == -1 && bwd[static_cast<std::size_t>(hv)] == -1) {
                if (!match(gu, hv)) return r;
            } else if (mapped != hv || bwd[static_cast<std::size_t>(hv)] != gu) {
                r.failure = "inconsistent correspondence at pair (" + std::to_string(gu) + "," +
                            std::to_string(hv) + ") label " + std::to_string(label);
                return r;
            }
        }
    }
    for (std::size_t u = 0; u < fwd.size(); ++u) {
        if (fwd[u] == -1) {
            r.failure = "node " + std::to_string(u) + " unreachable from the root pairing";
            return r;
        }
    }
    r.ok = true;
    r.mapping = fwd;
    return r;
}

}  // namespace sskd

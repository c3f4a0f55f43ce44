#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dagsp/errors.hpp"
#include "dagsp/matrix.hpp"
#include "dagsp/rng.hpp"

namespace dagsp {

/// Directed edge src -> dst with a nonzero weight. Endpoints are dense node
/// indices in input (construction) order, not topological positions.
struct Edge {
    int src;
    int dst;
    double weight;
};

struct LabeledEdge {
    std::string src;
    std::string dst;
    double weight;
};

/// Edge-weighted DAG. Construction verifies acyclicity and computes a
/// deterministic topological order (stable Kahn, ties broken by ascending
/// input index). Immutable afterwards; matrices derived from it are indexed
/// by topological position, where every edge points from a smaller to a
/// larger position and the weight matrix is strictly lower triangular.
class WeightedDag {
public:
    WeightedDag(int node_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : n_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            fail(errc::dimension_mismatch, "label count does not match node count");
        validate_edges();
        topo_sort();
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_labels() const { return !labels_.empty(); }

    /// Label of a node given by input index ("v<i>" when none were supplied).
    std::string label(int input_index) const {
        if (labels_.empty()) return "v" + std::to_string(input_index);
        return labels_[input_index];
    }

    std::string label_at_position(int pos) const { return label(topo_order_[pos]); }

    /// topo_order()[p] = input index of the node at topological position p.
    const std::vector<int>& topo_order() const { return topo_order_; }
    int position(int input_index) const { return position_[input_index]; }

    /// Weight matrix in topological indexing: A(x, y) = weight of edge y -> x.
    Matrix adjacency_matrix() const {
        Matrix a(n_, n_);
        for (const Edge& e : edges_) a(position_[e.dst], position_[e.src]) = e.weight;
        return a;
    }

    /// Edges rewritten as (position(src), position(dst), weight).
    std::vector<Edge> edges_by_position() const {
        std::vector<Edge> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_) out.push_back({position_[e.src], position_[e.dst], e.weight});
        return out;
    }

private:
    void validate_edges() {
        std::map<std::pair<int, int>, bool> seen;
        for (const Edge& e : edges_) {
            if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
                fail(errc::dimension_mismatch, "edge endpoint out of range");
            if (e.src == e.dst)
                fail(errc::cycle_detected, "self-loop at node " + label(e.src));
            if (e.weight == 0.0)
                fail(errc::zero_weight,
                     "zero weight on edge " + label(e.src) + " -> " + label(e.dst));
            if (!seen.emplace(std::pair{e.src, e.dst}, true).second)
                fail(errc::duplicate_edge,
                     "duplicate edge " + label(e.src) + " -> " + label(e.dst));
        }
    }

    // Stable Kahn: among ready nodes always pick the smallest input index.
    void topo_sort() {
        std::vector<int> indegree(n_, 0);
        std::vector<std::vector<int>> out(n_);
        for (const Edge& e : edges_) {
            ++indegree[e.dst];
            out[e.src].push_back(e.dst);
        }
        // Ordered ready set; std::map keys double as a min-heap with stable ties.
        std::map<int, bool> ready;
        for (int v = 0; v < n_; ++v)
            if (indegree[v] == 0) ready.emplace(v, true);
        topo_order_.reserve(n_);
        while (!ready.empty()) {
            const int v = ready.begin()->first;
            ready.erase(ready.begin());
            topo_order_.push_back(v);
            for (int w : out[v])
                if (--indegree[w] == 0) ready.emplace(w, true);
        }
        if (static_cast<int>(topo_order_.size()) != n_)
            fail(errc::cycle_detected, "input graph contains a directed cycle");
        position_.assign(n_, 0);
        for (int p = 0; p < n_; ++p) position_[topo_order_[p]] = p;
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<int> topo_order_;
    std::vector<int> position_;
};

/// Builds a DAG from labeled edges. Labels map to dense indices in first-
/// appearance order; an explicit label list fixes the universe (and admits
/// isolated nodes).
inline WeightedDag build_dag(const std::vector<LabeledEdge>& edges,
                             const std::optional<std::vector<std::string>>& node_labels = {}) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    if (node_labels) {
        for (const std::string& l : *node_labels) {
            if (!index.emplace(l, static_cast<int>(labels.size())).second)
                fail(errc::duplicate_edge, "duplicate node label '" + l + "'");
            labels.push_back(l);
        }
    }
    auto resolve = [&](const std::string& l) {
        auto it = index.find(l);
        if (it != index.end()) return it->second;
        if (node_labels) fail(errc::unknown_label, "edge references unknown node '" + l + "'");
        const int id = static_cast<int>(labels.size());
        index.emplace(l, id);
        labels.push_back(l);
        return id;
    };
    std::vector<Edge> dense;
    dense.reserve(edges.size());
    for (const LabeledEdge& e : edges) {
        const int s = resolve(e.src);
        const int d = resolve(e.dst);
        dense.push_back({s, d, e.weight});
    }
    return WeightedDag(static_cast<int>(labels.size()), std::move(dense), std::move(labels));
}

inline WeightedDag build_dag(int node_count, std::vector<Edge> edges,
                             std::vector<std::string> labels = {}) {
    return WeightedDag(node_count, std::move(edges), std::move(labels));
}

/// Random DAG in the Erdos-Renyi style: nodes are ordered by a random
/// permutation and each forward pair becomes an edge with probability p,
/// weighted uniformly from [lo, hi] with exact zeros resampled.
inline WeightedDag erdos_renyi_dag(int n, double p, double weight_lo, double weight_hi,
                                   std::uint64_t seed) {
    if (weight_hi < weight_lo || (weight_lo == 0.0 && weight_hi == 0.0))
        fail(errc::empty_weight_range, "weight range is empty or all-zero");
    Rng rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(0, i));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!rng.bernoulli(p)) continue;
            double w;
            do {
                w = rng.uniform(weight_lo, weight_hi);
            } while (w == 0.0);
            edges.push_back({perm[i], perm[j], w});
        }
    }
    return WeightedDag(n, std::move(edges));
}

} // namespace dagsp

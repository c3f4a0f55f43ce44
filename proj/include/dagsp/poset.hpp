#pragma once

#include <cstdint>
#include <vector>

#include "dagsp/dag.hpp"

namespace dagsp {

/// Reachability view of a DAG as a partial order on topological positions:
/// leq(y, x) holds iff x is reachable from y, or x == y. Backed by per-node
/// bitsets, computed once in a single topological pass.
class PosetView {
public:
    explicit PosetView(const WeightedDag& dag)
        : n_(dag.node_count()), words_((n_ + 63) / 64) {
        pred_.assign(static_cast<std::size_t>(n_) * words_, 0);
        succ_.assign(static_cast<std::size_t>(n_) * words_, 0);
        std::vector<std::vector<int>> parents(n_); // by position
        for (const Edge& e : dag.edges_by_position()) parents[e.dst].push_back(e.src);
        for (int x = 0; x < n_; ++x) {
            std::uint64_t* px = pred_row(x);
            for (int y : parents[x]) {
                const std::uint64_t* py = pred_row(y);
                for (int w = 0; w < words_; ++w) px[w] |= py[w];
            }
            px[x >> 6] |= 1ULL << (x & 63);
        }
        for (int y = 0; y < n_; ++y)
            for (int x = y; x < n_; ++x)
                if (leq(y, x)) succ_row(y)[x >> 6] |= 1ULL << (x & 63);
    }

    int size() const { return n_; }

    bool leq(int y, int x) const { return (pred_row(x)[y >> 6] >> (y & 63)) & 1ULL; }

    /// All y with y <= x, ascending; includes x.
    std::vector<int> predecessors(int x) const { return expand(pred_row(x)); }

    /// All q with y <= q, ascending; includes y.
    std::vector<int> successors(int y) const { return expand(succ_row(y)); }

    int predecessor_count(int x) const { return popcount_row(pred_row(x)); }
    int successor_count(int y) const { return popcount_row(succ_row(y)); }

    /// succ(a) subset-of succ(b); with Theorem-style total variation vectors
    /// this is exactly componentwise TV(f^b) <= TV(f^a).
    bool successors_subset(int a, int b) const {
        const std::uint64_t* sa = succ_row(a);
        const std::uint64_t* sb = succ_row(b);
        for (int w = 0; w < words_; ++w)
            if (sa[w] & ~sb[w]) return false;
        return true;
    }

    const std::uint64_t* pred_row(int x) const { return pred_.data() + static_cast<std::size_t>(x) * words_; }
    const std::uint64_t* succ_row(int y) const { return succ_.data() + static_cast<std::size_t>(y) * words_; }

private:
    std::uint64_t* pred_row(int x) { return pred_.data() + static_cast<std::size_t>(x) * words_; }
    std::uint64_t* succ_row(int y) { return succ_.data() + static_cast<std::size_t>(y) * words_; }

    std::vector<int> expand(const std::uint64_t* row) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if ((row[v >> 6] >> (v & 63)) & 1ULL) out.push_back(v);
        return out;
    }

    int popcount_row(const std::uint64_t* row) const {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(row[w]);
        return c;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> pred_;
    std::vector<std::uint64_t> succ_;
};

inline PosetView poset_view(const WeightedDag& dag) { return PosetView(dag); }

/// Cover graph: keeps edge (y, x) iff no other path y -> x exists. The result
/// induces the same partial order with the fewest edges.
inline WeightedDag transitive_reduction(const WeightedDag& dag) {
    const PosetView poset(dag);
    const int n = dag.node_count();
    std::vector<Edge> kept;
    for (const Edge& e : dag.edges()) {
        const int y = dag.position(e.src);
        const int x = dag.position(e.dst);
        bool redundant = false;
        for (int z = y + 1; z < x && !redundant; ++z)
            if (poset.leq(y, z) && poset.leq(z, x)) redundant = true;
        if (!redundant) kept.push_back(e);
    }
    std::vector<std::string> labels;
    if (dag.has_labels()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(dag.label(i));
    }
    return WeightedDag(n, std::move(kept), std::move(labels));
}

} // namespace dagsp

#pragma once

#include "cattab/tuples.hpp"

#include <utility>
#include <vector>

namespace cattab {

// Rooted planar tree of pockets. Pockets are indexed in preorder (the order
// the building walk first reaches them); children appear in planar
// left-to-right order. label_sides attaches the 2*edge_count() edge-side
// labels produced by the counterclockwise contour walk.
struct PocketTree {
    struct Pocket {
        int parent = -1;  // -1 at the root
        std::vector<int> children;
        int level = 0;      // edge distance to the root
        int down_label = -1;  // parent-edge side assigned while descending
        int up_label = -1;    // parent-edge side assigned while ascending
    };

    std::vector<Pocket> pockets;

    int pocket_count() const { return static_cast<int>(pockets.size()); }
    int edge_count() const { return pocket_count() - 1; }
    int side_count() const { return 2 * edge_count(); }
    bool is_leaf(int m) const { return pockets[static_cast<std::size_t>(m)].children.empty(); }
    int valency(int m) const {
        const auto& p = pockets[static_cast<std::size_t>(m)];
        return static_cast<int>(p.children.size()) + (p.parent >= 0 ? 1 : 0);
    }
    bool labeled() const { return pocket_count() < 2 || pockets[1].down_label >= 0; }
};

// Builds the rooted planar tree of a Catalan tuple: vertex l attaches to the
// most recent earlier vertex that still has an open half-edge, then opens
// e_l half-edges of its own.
PocketTree pocket_tree(const CatalanTuple& lengths);

// Contour walk from the root, counterclockwise (leftmost child first):
// descending an edge assigns its down side, ascending its up side, labels
// 0..2*edges-1 in walk order.
PocketTree label_sides(PocketTree tree);

enum class ThreadKind { direct, opposite };

// Non-crossing arcs over a row of nodes, oriented left to right.
struct ThreadTree {
    ThreadKind kind = ThreadKind::direct;
    int node_count = 0;
    std::vector<std::pair<int, int>> threads;  // (from, to), from < to, sorted

    bool operator==(const ThreadTree&) const = default;
};

// Same attachment walk as pocket_tree, read as threads.
ThreadTree direct_tree(const CatalanTuple& t);

// Vertices with e_l > 0 only open half-edges; a vertex with e_l = 0 connects
// to the most recent open vertex and keeps connecting to successively
// earlier open vertices as long as each target it hits becomes exhausted.
ThreadTree opposite_tree(const CatalanTuple& t);

// The two node rows of a non-leaf pocket: incident edges ordered parent edge
// first, then children in planar order; even side labels in that edge order
// form one row, odd side labels the other. Throws for leaves and unlabeled
// trees.
struct PocketRows {
    std::vector<int> even;
    std::vector<int> odd;
};
PocketRows pocket_rows(const PocketTree& tree, int m);

}  // namespace cattab

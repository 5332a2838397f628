#include "cattab/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cattab {

namespace {

// Shared attachment walk: returns parent[l] for every vertex l >= 1.
// parent[l] is the most recent vertex with an open half-edge when l arrives.
std::vector<int> attachment_parents(const CatalanTuple& t) {
    const int k = t.length();
    std::vector<int> parent(static_cast<std::size_t>(k) + 1, -1);
    std::vector<std::pair<int, int>> open;  // (vertex, open half-edges), stack
    if (t[0] > 0) open.emplace_back(0, t[0]);
    for (int l = 1; l <= k; ++l) {
        // The ballot condition guarantees an open half-edge here.
        auto& [vertex, count] = open.back();
        parent[static_cast<std::size_t>(l)] = vertex;
        if (--count == 0) open.pop_back();
        if (t[l] > 0) open.emplace_back(l, t[l]);
    }
    return parent;
}

}  // namespace

PocketTree pocket_tree(const CatalanTuple& lengths) {
    const std::vector<int> parent = attachment_parents(lengths);
    PocketTree tree;
    tree.pockets.resize(parent.size());
    for (std::size_t l = 1; l < parent.size(); ++l) {
        const int p = parent[l];
        tree.pockets[l].parent = p;
        tree.pockets[l].level = tree.pockets[static_cast<std::size_t>(p)].level + 1;
        tree.pockets[static_cast<std::size_t>(p)].children.push_back(static_cast<int>(l));
    }
    return tree;
}

PocketTree label_sides(PocketTree tree) {
    int next = 0;
    // Iterative contour walk; recursion depth could reach pocket_count.
    struct Frame {
        int pocket;
        std::size_t child_pos = 0;
    };
    std::vector<Frame> stack{{0}};
    while (!stack.empty()) {
        Frame& frame = stack.back();
        auto& pocket = tree.pockets[static_cast<std::size_t>(frame.pocket)];
        if (frame.child_pos < pocket.children.size()) {
            const int child = pocket.children[frame.child_pos++];
            tree.pockets[static_cast<std::size_t>(child)].down_label = next++;
            stack.push_back({child});
        } else {
            if (pocket.parent >= 0) pocket.up_label = next++;
            stack.pop_back();
        }
    }
    return tree;
}

ThreadTree direct_tree(const CatalanTuple& t) {
    const std::vector<int> parent = attachment_parents(t);
    ThreadTree tree;
    tree.kind = ThreadKind::direct;
    tree.node_count = t.length() + 1;
    for (std::size_t l = 1; l < parent.size(); ++l)
        tree.threads.emplace_back(parent[l], static_cast<int>(l));
    std::sort(tree.threads.begin(), tree.threads.end());
    return tree;
}

ThreadTree opposite_tree(const CatalanTuple& t) {
    const int k = t.length();
    ThreadTree tree;
    tree.kind = ThreadKind::opposite;
    tree.node_count = k + 1;
    std::vector<std::pair<int, int>> open;  // (vertex, open half-edges), stack
    for (int l = 0; l <= k; ++l) {
        if (t[l] > 0) {
            open.emplace_back(l, t[l]);
            continue;
        }
        // Connect to the top vertex; while that connection exhausts its
        // target, connect to the next one down as well.
        while (!open.empty()) {
            auto& [vertex, count] = open.back();
            tree.threads.emplace_back(vertex, l);
            if (--count > 0) break;
            open.pop_back();
        }
    }
    std::sort(tree.threads.begin(), tree.threads.end());
    return tree;
}

PocketRows pocket_rows(const PocketTree& tree, int m) {
    if (m < 0 || m >= tree.pocket_count())
        throw std::out_of_range("pocket_rows: pocket index " + std::to_string(m));
    if (!tree.labeled()) throw std::invalid_argument("pocket_rows: tree has no side labels");
    if (tree.is_leaf(m))
        throw std::invalid_argument("pocket_rows: pocket " + std::to_string(m) + " is a leaf");

    const auto& pocket = tree.pockets[static_cast<std::size_t>(m)];
    PocketRows rows;
    // Edge order: parent edge first, then children counterclockwise. Each
    // edge contributes one even and one odd side label.
    auto push_edge = [&rows](int down, int up) {
        rows.even.push_back(down % 2 == 0 ? down : up);
        rows.odd.push_back(down % 2 == 0 ? up : down);
    };
    if (pocket.parent >= 0) push_edge(pocket.down_label, pocket.up_label);
    for (const int child : pocket.children) {
        const auto& c = tree.pockets[static_cast<std::size_t>(child)];
        push_edge(c.down_label, c.up_label);
    }
    return rows;
}

}  // namespace cattab

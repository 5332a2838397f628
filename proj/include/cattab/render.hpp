#pragma once

#include "cattab/moments.hpp"
#include "cattab/tables.hpp"
#include "cattab/trees.hpp"
#include "cattab/tuples.hpp"

#include <string>
#include <string_view>

namespace cattab {

// Bumped whenever the emitted text changes; rendering is a pure function of
// (input, style, version) and golden tests rely on byte equality.
inline constexpr std::string_view kRenderVersion = "1";

struct DiagramStyle {
    std::string chord_color = "#2e8b57";        // two-point chords
    std::string even_thread_color = "#e08000";  // threads between even labels
    std::string odd_thread_color = "#2060c0";   // threads between odd labels
    std::string node_color = "#202020";
    double chord_width = 2.0;
    double thread_width = 1.4;

    bool operator==(const DiagramStyle&) const = default;
};

enum class RenderFormat { svg, dot };

enum class TreeKind { pocket, direct, opposite };

// Chord diagram of one expansion term: N nodes counterclockwise on a circle
// with node 0 anchored on top and ringed as the designated node, chords as
// straight segments, threads as arcs in the two parity styles.
std::string render_chord_diagram(const CatalanTable& table, RenderFormat format,
                                 const DiagramStyle& style = {});

// Pocket trees are drawn top-down; direct/opposite trees as a node row with
// nested arcs above it.
std::string render_tree(const CatalanTuple& tuple, TreeKind kind, RenderFormat format,
                        const DiagramStyle& style = {});

}  // namespace cattab

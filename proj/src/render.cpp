#include "cattab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace cattab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fixed2(double v) {
    char buffer[32];
    // -0.00 and 0.00 must not depend on rounding direction.
    if (std::abs(v) < 0.005) v = 0.0;
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

struct Point {
    double x = 0;
    double y = 0;
};

std::string svg_open(double width, double height) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width) << "\" height=\""
        << fixed2(height) << "\" viewBox=\"0 0 " << fixed2(width) << " " << fixed2(height)
        << "\">\n";
    out << "<!-- generated by cattab render v" << kRenderVersion << " -->\n";
    out << "<rect width=\"" << fixed2(width) << "\" height=\"" << fixed2(height)
        << "\" fill=\"#ffffff\"/>\n";
    return out.str();
}

void svg_node(std::ostringstream& out, const Point& p, bool designated,
              const DiagramStyle& style) {
    if (designated)
        out << "<circle class=\"designated\" cx=\"" << fixed2(p.x) << "\" cy=\"" << fixed2(p.y)
            << "\" r=\"7\" fill=\"none\" stroke=\"" << style.node_color << "\" stroke-width=\"1\"/>\n";
    out << "<circle class=\"node\" cx=\"" << fixed2(p.x) << "\" cy=\"" << fixed2(p.y)
        << "\" r=\"3.5\" fill=\"" << style.node_color << "\"/>\n";
}

void svg_label(std::ostringstream& out, const Point& p, const std::string& text) {
    out << "<text class=\"label\" x=\"" << fixed2(p.x) << "\" y=\"" << fixed2(p.y)
        << "\" font-family=\"Helvetica,sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">"
        << text << "</text>\n";
}

// Threads that span more nested threads of the same parity bow deeper, which
// keeps the drawn arcs from touching.
int nesting_depth(const Monomial& m, std::size_t index) {
    const auto [lo, hi] = std::minmax(m.threads[index].from, m.threads[index].to);
    int depth = 0;
    for (std::size_t j = 0; j < m.threads.size(); ++j) {
        if (j == index || m.threads[j].even_row != m.threads[index].even_row) continue;
        const auto [lo2, hi2] = std::minmax(m.threads[j].from, m.threads[j].to);
        if (lo <= lo2 && hi2 <= hi) ++depth;
    }
    return depth;
}

std::string chord_diagram_svg(const CatalanTable& table, const DiagramStyle& style) {
    const Monomial m = monomial_from_table(table);
    const int n = m.point_count;
    const double size = 420;
    const double cx = size / 2;
    const double cy = size / 2;
    const double radius = 150;

    std::vector<Point> node(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double angle = kPi / 2 + 2 * kPi * j / n;  // counterclockwise from the top
        node[static_cast<std::size_t>(j)] = {cx + radius * std::cos(angle),
                                             cy - radius * std::sin(angle)};
    }

    std::ostringstream out;
    out << svg_open(size, size);
    out << "<circle class=\"frame\" cx=\"" << fixed2(cx) << "\" cy=\"" << fixed2(cy) << "\" r=\""
        << fixed2(radius) << "\" fill=\"none\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";

    for (const auto& [a, b] : m.chords) {
        const Point& pa = node[static_cast<std::size_t>(a)];
        const Point& pb = node[static_cast<std::size_t>(b)];
        out << "<line class=\"chord\" x1=\"" << fixed2(pa.x) << "\" y1=\"" << fixed2(pa.y)
            << "\" x2=\"" << fixed2(pb.x) << "\" y2=\"" << fixed2(pb.y) << "\" stroke=\""
            << style.chord_color << "\" stroke-width=\"" << fixed2(style.chord_width) << "\"/>\n";
    }

    for (std::size_t i = 0; i < m.threads.size(); ++i) {
        const OrientedThread& t = m.threads[i];
        const Point& pa = node[static_cast<std::size_t>(t.from)];
        const Point& pb = node[static_cast<std::size_t>(t.to)];
        const double pull = std::min(0.25 + 0.15 * nesting_depth(m, i), 0.9);
        const Point mid{(pa.x + pb.x) / 2, (pa.y + pb.y) / 2};
        const Point ctrl{mid.x + (cx - mid.x) * pull, mid.y + (cy - mid.y) * pull};
        out << "<path class=\"" << (t.even_row ? "thread-even" : "thread-odd") << "\" d=\"M "
            << fixed2(pa.x) << " " << fixed2(pa.y) << " Q " << fixed2(ctrl.x) << " "
            << fixed2(ctrl.y) << " " << fixed2(pb.x) << " " << fixed2(pb.y)
            << "\" fill=\"none\" stroke=\""
            << (t.even_row ? style.even_thread_color : style.odd_thread_color)
            << "\" stroke-width=\"" << fixed2(style.thread_width) << "\"/>\n";
    }

    for (int j = 0; j < n; ++j)
        svg_node(out, node[static_cast<std::size_t>(j)], j == 0, style);
    for (int j = 0; j < n; ++j) {
        const double angle = kPi / 2 + 2 * kPi * j / n;
        const Point p{cx + (radius + 20) * std::cos(angle), cy - (radius + 20) * std::sin(angle)};
        svg_label(out, p, std::to_string(j));
    }
    out << "</svg>\n";
    return out.str();
}

std::string chord_diagram_dot(const CatalanTable& table, const DiagramStyle& style) {
    const Monomial m = monomial_from_table(table);
    std::ostringstream out;
    out << "graph chord_diagram {\n";
    out << "  // generated by cattab render v" << kRenderVersion << "\n";
    out << "  layout=\"circo\";\n";
    out << "  node [shape=\"circle\", fontsize=10];\n";
    for (int j = 0; j < m.point_count; ++j) {
        out << "  n" << j << " [label=\"" << j << "\"";
        if (j == 0) out << ", penwidth=2.5";
        out << "];\n";
    }
    for (const auto& [a, b] : m.chords)
        out << "  n" << a << " -- n" << b << " [class=\"chord\", color=\"" << style.chord_color
            << "\", penwidth=" << fixed2(style.chord_width) << "];\n";
    for (const OrientedThread& t : m.threads)
        out << "  n" << t.from << " -- n" << t.to << " [class=\""
            << (t.even_row ? "thread-even" : "thread-odd") << "\", color=\""
            << (t.even_row ? style.even_thread_color : style.odd_thread_color)
            << "\", penwidth=" << fixed2(style.thread_width) << ", dir=\"forward\"];\n";
    out << "}\n";
    return out.str();
}

std::string pocket_tree_svg(const CatalanTuple& tuple, const DiagramStyle& style) {
    const PocketTree tree = pocket_tree(tuple);
    const int count = tree.pocket_count();

    // Leaves take successive horizontal slots left to right; inner pockets
    // center above their children. Children carry larger preorder indices
    // than their parent, so one reverse sweep sees children first.
    std::vector<double> x(static_cast<std::size_t>(count), 0);
    int next_slot = 0;
    for (int m = 0; m < count; ++m)
        if (tree.is_leaf(m)) x[static_cast<std::size_t>(m)] = 60.0 * next_slot++;
    for (int m = count - 1; m >= 0; --m) {
        const auto& pocket = tree.pockets[static_cast<std::size_t>(m)];
        if (pocket.children.empty()) continue;
        double sum = 0;
        for (const int c : pocket.children) sum += x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(m)] = sum / static_cast<double>(pocket.children.size());
    }

    int max_level = 0;
    for (const auto& pocket : tree.pockets) max_level = std::max(max_level, pocket.level);
    const double margin = 40;
    const double width = margin * 2 + 60.0 * std::max(next_slot - 1, 0);
    const double height = margin * 2 + 60.0 * max_level;

    std::ostringstream out;
    out << svg_open(std::max(width, 120.0), std::max(height, 120.0));
    auto pos = [&](int m) {
        return Point{margin + x[static_cast<std::size_t>(m)],
                     margin + 60.0 * tree.pockets[static_cast<std::size_t>(m)].level};
    };
    for (int m = 1; m < count; ++m) {
        const Point a = pos(tree.pockets[static_cast<std::size_t>(m)].parent);
        const Point b = pos(m);
        out << "<line class=\"edge\" x1=\"" << fixed2(a.x) << "\" y1=\"" << fixed2(a.y)
            << "\" x2=\"" << fixed2(b.x) << "\" y2=\"" << fixed2(b.y) << "\" stroke=\""
            << style.node_color << "\" stroke-width=\"1.5\"/>\n";
    }
    for (int m = 0; m < count; ++m) svg_node(out, pos(m), m == 0, style);
    for (int m = 0; m < count; ++m) {
        Point p = pos(m);
        p.x += 12;
        p.y -= 10;
        svg_label(out, p, std::to_string(m));
    }
    out << "</svg>\n";
    return out.str();
}

std::string thread_tree_svg(const CatalanTuple& tuple, TreeKind kind, const DiagramStyle& style) {
    const ThreadTree tree =
        kind == TreeKind::direct ? direct_tree(tuple) : opposite_tree(tuple);
    const std::string& color =
        kind == TreeKind::direct ? style.even_thread_color : style.odd_thread_color;

    const double step = 50;
    const double margin = 40;
    int max_span = 1;
    for (const auto& [a, b] : tree.threads) max_span = std::max(max_span, b - a);
    const double arc_ceiling = 18.0 + 13.0 * (max_span - 1);
    const double width = margin * 2 + step * std::max(tree.node_count - 1, 0);
    const double height = margin + arc_ceiling + 50;
    const double baseline = height - 40;

    std::ostringstream out;
    out << svg_open(std::max(width, 120.0), std::max(height, 120.0));
    for (const auto& [a, b] : tree.threads) {
        const double x1 = margin + step * a;
        const double x2 = margin + step * b;
        const double h = 18.0 + 13.0 * (b - a - 1);
        out << "<path class=\"thread\" d=\"M " << fixed2(x1) << " " << fixed2(baseline) << " Q "
            << fixed2((x1 + x2) / 2) << " " << fixed2(baseline - 2 * h) << " " << fixed2(x2) << " "
            << fixed2(baseline) << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"" << fixed2(style.thread_width) << "\"/>\n";
    }
    for (int j = 0; j < tree.node_count; ++j) {
        svg_node(out, {margin + step * j, baseline}, j == 0, style);
        svg_label(out, {margin + step * j, baseline + 18}, std::to_string(j));
    }
    out << "</svg>\n";
    return out.str();
}

std::string tree_dot(const CatalanTuple& tuple, TreeKind kind, const DiagramStyle& style) {
    std::ostringstream out;
    if (kind == TreeKind::pocket) {
        const PocketTree tree = pocket_tree(tuple);
        out << "graph pocket_tree {\n";
        out << "  // generated by cattab render v" << kRenderVersion << "\n";
        out << "  node [shape=\"circle\", fontsize=10];\n";
        for (int m = 0; m < tree.pocket_count(); ++m) out << "  n" << m << " [label=\"" << m
                                                          << "\"];\n";
        for (int m = 1; m < tree.pocket_count(); ++m)
            out << "  n" << tree.pockets[static_cast<std::size_t>(m)].parent << " -- n" << m
                << ";\n";
        out << "}\n";
        return out.str();
    }
    const ThreadTree tree = kind == TreeKind::direct ? direct_tree(tuple) : opposite_tree(tuple);
    const std::string& color =
        kind == TreeKind::direct ? style.even_thread_color : style.odd_thread_color;
    out << "graph thread_tree {\n";
    out << "  // generated by cattab render v" << kRenderVersion << "\n";
    out << "  rankdir=\"LR\";\n";
    out << "  node [shape=\"circle\", fontsize=10];\n";
    for (int j = 0; j < tree.node_count; ++j) out << "  n" << j << " [label=\"" << j << "\"];\n";
    for (const auto& [a, b] : tree.threads)
        out << "  n" << a << " -- n" << b << " [color=\"" << color << "\", dir=\"forward\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string render_chord_diagram(const CatalanTable& table, RenderFormat format,
                                 const DiagramStyle& style) {
    switch (format) {
        case RenderFormat::svg: return chord_diagram_svg(table, style);
        case RenderFormat::dot: return chord_diagram_dot(table, style);
    }
    throw std::invalid_argument("render_chord_diagram: unsupported format");
}

std::string render_tree(const CatalanTuple& tuple, TreeKind kind, RenderFormat format,
                        const DiagramStyle& style) {
    switch (format) {
        case RenderFormat::svg:
            return kind == TreeKind::pocket ? pocket_tree_svg(tuple, style)
                                            : thread_tree_svg(tuple, kind, style);
        case RenderFormat::dot: return tree_dot(tuple, kind, style);
    }
    throw std::invalid_argument("render_tree: unsupported format");
}

}  // namespace cattab

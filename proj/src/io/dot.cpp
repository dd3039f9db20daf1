#include "bistable/io/dot.hpp"

#include <sstream>

namespace bistable::io {

std::string system_to_dot(const CouplingSystem& sys) {
    const auto& x = sys.ambient();
    const auto c = sys.effective_coupling();
    std::ostringstream out;
    out << "graph system {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << v;
        if (const auto it = sys.pinned().find(v); it != sys.pinned().end()) {
            out << "=" << (it->second ? 1 : 0) << "\", style=filled, fillcolor=lightgray";
        } else {
            out << "\"";
        }
        out << "];\n";
    }
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        const auto& ed = x.edge(e);
        out << "  v" << ed.u << " -- v" << ed.v << " [label=\"e" << e << "\"";
        if (!sys.is_constraint(e)) {
            out << ", style=dashed";
        } else if (c.get(e)) {
            out << ", color=red";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string cover_to_dot(const DoubleCover& cover) {
    std::ostringstream out;
    out << "graph cover {\n";
    out << "  node [shape=circle];\n";
    for (int s = 0; s < 2; ++s) {
        out << "  subgraph cluster_sheet" << s << " {\n";
        out << "    label=\"sheet " << s << "\";\n";
        for (std::size_t v = 0; v < cover.base_vertices; ++v) {
            const auto id = cover.lift(v, s == 1);
            out << "    w" << id << " [label=\"" << v << "/" << s << "\"];\n";
        }
        out << "  }\n";
    }
    for (std::size_t e = 0; e < cover.lifted.edge_count(); ++e) {
        const auto& ed = cover.lifted.edge(e);
        out << "  w" << ed.u << " -- w" << ed.v << " [label=\"e" << cover.base_edge[e] << "\"";
        if (cover.sheet(ed.u) != cover.sheet(ed.v)) {
            out << ", color=red, style=bold";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace bistable::io

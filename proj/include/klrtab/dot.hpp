#pragma once

#include <ostream>
#include <string>

#include "klrtab/crystal.hpp"

namespace klrtab {

// GraphViz rendering of a crystal graph; vertex labels carry the tableau
// serialization and the weight, edges carry the acting letter.
inline void write_dot(std::ostream& os, const CrystalGraph& g,
                      const std::string& name = "crystal") {
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n";
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.vertices[v].to_string() << "\\nwt=(";
        for (size_t i = 0; i < g.weights[v].omega.size(); ++i) {
            if (i) os << ",";
            os << g.weights[v].omega[i];
        }
        os << ")\"];\n";
    }
    for (const CrystalEdge& e : g.edges)
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.letter << "\"];\n";
    os << "}\n";
}

}  // namespace klrtab

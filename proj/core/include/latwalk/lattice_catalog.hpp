#pragma once

#include "latwalk/graph.hpp"

#include <string>
#include <vector>

namespace latwalk {

/// Named rooted lattices and products with known closed-walk formulas.
struct LatticeKind {
    enum class Id {
        z,              // Z at 0
        zplus,          // Z+ at 0
        zplus_at_one,   // Z+ at 1
        full_z2,        // Z xC Z = L[Z^2]
        half_plane,     // L{x >= y}
        wedge,          // L{x >= y >= -x}
        quarter_plane,  // L{x >= 0, y >= 0}
        strip,          // L{x >= y >= x-(n-1)}
        diamond,        // L{0 <= x+y <= k-1, 0 <= x-y <= l-1}
        bcc3,           // (Z xK Z xK Z)°
        z3_cartesian,   // Z xC Z xC Z
        chamber3,       // L{x >= y >= z}
        mixed3,         // ((Z+ xK Z+) xC Z+)°
        z_x_zplus,      // Z xC Z+ at (0,0)
        zplus2_shifted, // Z+ xK Z+ at (0,1)
    };

    Id id;
    int n = 0; // strip width
    int k = 0; // diamond sides
    int l = 0;

    static LatticeKind make(Id id) { return LatticeKind{id}; }
    static LatticeKind strip(int n);
    static LatticeKind diamond(int k, int l);

    std::string name() const;
    /// Short token used on the command line ("halfplane", "bcc3", ...).
    std::string token() const;
    std::size_t dim() const;
};

/// Parses a command-line token; strip/diamond take their sizes from n, k, l.
LatticeKind parse_lattice_kind(const std::string& token, int n = 0, int k = 0, int l = 0);
std::vector<std::string> lattice_kind_tokens();

/// The graph on which walks for `kind` are counted directly.
Graph lattice_graph(const LatticeKind& kind);
Vertex lattice_root(const LatticeKind& kind);

} // namespace latwalk

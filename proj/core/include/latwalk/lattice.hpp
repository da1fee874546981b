#pragma once

#include "latwalk/graph.hpp"

#include <functional>
#include <string>

namespace latwalk {

/// Coordinate domain D for a restricted nearest-neighbor lattice L[D].
class LatticeDomain {
public:
    enum class Kind {
        full_z2,       // all of Z^2
        half_plane,    // x >= y
        strip,         // x >= y >= x - (n-1)
        wedge,         // x >= y >= -x
        diamond,       // 0 <= x+y <= k-1, 0 <= x-y <= l-1
        quarter_plane, // x >= 0, y >= 0
        chamber3,      // x >= y >= z in Z^3
        custom,
    };

    static LatticeDomain full_z2();
    static LatticeDomain half_plane();
    static LatticeDomain strip(int n);
    static LatticeDomain wedge();
    static LatticeDomain diamond(int k, int l);
    static LatticeDomain quarter_plane();
    static LatticeDomain chamber3();
    /// Arbitrary decidable predicate over `dim`-tuples.
    static LatticeDomain custom(std::size_t dim, std::string name,
                                std::function<bool(const Vertex&)> predicate);

    Kind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    bool contains(const Vertex& v) const;

private:
    LatticeDomain(Kind kind, std::size_t dim, std::string name, int p1 = 0, int p2 = 0);

    Kind kind_;
    std::size_t dim_;
    std::string name_;
    int p1_;
    int p2_;
    std::function<bool(const Vertex&)> predicate_;
};

/// L[D]: the induced subgraph of the nearest-neighbor lattice Z^d on D.
ImplicitGraph restrict_lattice(const LatticeDomain& domain);

/// Z^d with nearest-neighbor adjacency (the d-fold Cartesian power of Z).
ImplicitGraph cubic_lattice(std::size_t dim);

} // namespace latwalk

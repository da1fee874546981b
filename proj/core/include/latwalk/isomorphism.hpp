#pragma once

#include "latwalk/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latwalk {

/// Affine map between coordinate tuples: v -> M v + c.
class IsoMap {
public:
    IsoMap(std::vector<std::vector<int>> matrix, std::vector<int> offset, std::string source,
           std::string target);

    /// Identity on `dim`-tuples.
    static IsoMap identity(std::size_t dim, std::string source, std::string target);

    Vertex operator()(const Vertex& v) const;
    std::size_t source_dim() const noexcept { return cols_; }
    std::size_t target_dim() const noexcept { return matrix_.size(); }
    const std::string& source() const noexcept { return source_; }
    const std::string& target() const noexcept { return target_; }

private:
    std::vector<std::vector<int>> matrix_;
    std::vector<int> offset_;
    std::size_t cols_ = 0;
    std::string source_;
    std::string target_;
};

/// A map together with the rooted graphs it is claimed to identify.
struct IsoCase {
    std::string label;
    IsoMap map;
    Graph source;
    Vertex source_root;
    Graph target;
    Vertex target_root;
};

struct IsoReport {
    bool ok = false;
    std::string message;
    std::size_t source_vertices = 0;
    std::size_t target_vertices = 0;
    std::size_t edges_checked = 0;
    /// First offending pair, when the check fails on specific vertices.
    std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Checks that the map sends the radius-`radius` ball of the source root
/// bijectively onto the radius-`radius` ball of the target root, with
/// adjacency preserved in both directions.
IsoReport verify_isomorphism(const IsoCase& iso, int radius,
                             std::size_t vertex_budget = default_vertex_budget);

// Built-in maps. Each sends a restricted lattice onto the origin component of
// a Kronecker product, fixing the origin.

/// (x,y) -> (x+y, x-y): Z xC Z onto (Z xK Z)°.
IsoCase iso_plane();
/// (x,y) -> (x-y, x+y): L{x >= y >= x-(n-1)} onto (P_n xK Z)°.
IsoCase iso_strip(int n);
/// (x,y) -> (x-y, x+y): L{x >= y} onto (Z+ xK Z)°.
IsoCase iso_half_plane();
/// (x,y) -> (x+y, x-y): L{0 <= x+y <= k-1, 0 <= x-y <= l-1} onto (P_k xK P_l)°.
IsoCase iso_diamond(int k, int l);
/// (x,y) -> (x+y, x-y): L{x >= y >= -x} onto (Z+ xK Z+)°.
IsoCase iso_wedge();

} // namespace latwalk

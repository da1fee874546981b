#include "latwalk/isomorphism.hpp"

#include "latwalk/error.hpp"
#include "latwalk/lattice.hpp"

#include <unordered_map>

namespace latwalk {

IsoMap::IsoMap(std::vector<std::vector<int>> matrix, std::vector<int> offset, std::string source,
               std::string target)
    : matrix_(std::move(matrix)), offset_(std::move(offset)), source_(std::move(source)),
      target_(std::move(target))
{
    if (matrix_.empty() || matrix_.size() > Vertex::max_dim) {
        throw InvalidParameter("IsoMap: bad target dimension");
    }
    cols_ = matrix_.front().size();
    for (const auto& row : matrix_) {
        if (row.size() != cols_) {
            throw InvalidParameter("IsoMap: ragged matrix");
        }
    }
    if (offset_.empty()) {
        offset_.assign(matrix_.size(), 0);
    }
    if (offset_.size() != matrix_.size()) {
        throw InvalidParameter("IsoMap: offset length must equal target dimension");
    }
}

IsoMap IsoMap::identity(std::size_t dim, std::string source, std::string target)
{
    std::vector<std::vector<int>> m(dim, std::vector<int>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1;
    }
    return IsoMap(std::move(m), {}, std::move(source), std::move(target));
}

Vertex IsoMap::operator()(const Vertex& v) const
{
    if (v.dim() != cols_) {
        throw InvalidParameter("IsoMap: vertex " + v.to_string() + " has wrong dimension");
    }
    Vertex out = Vertex::zero(matrix_.size());
    for (std::size_t r = 0; r < matrix_.size(); ++r) {
        long long acc = offset_[r];
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += static_cast<long long>(matrix_[r][c]) * v[c];
        }
        out[r] = static_cast<Vertex::coord_type>(acc);
    }
    return out;
}

IsoReport verify_isomorphism(const IsoCase& iso, int radius, std::size_t vertex_budget)
{
    using index_type = FiniteGraph::index_type;
    IsoReport rep;
    const FiniteGraph src = ball(iso.source, iso.source_root, radius, vertex_budget);
    const FiniteGraph dst = ball(iso.target, iso.target_root, radius, vertex_budget);
    rep.source_vertices = src.size();
    rep.target_vertices = dst.size();

    if (iso.map(iso.source_root) != iso.target_root) {
        rep.message = "root is not mapped to root";
        rep.witness = std::pair{iso.source_root, iso.map(iso.source_root)};
        return rep;
    }

    std::unordered_map<Vertex, index_type, VertexHash> preimage;
    std::vector<index_type> image(src.size());
    for (index_type i = 0; i < src.size(); ++i) {
        const Vertex fv = iso.map(src.vertex(i));
        auto [it, fresh] = preimage.emplace(fv, i);
        if (!fresh) {
            rep.message = "map is not injective on the source ball";
            rep.witness = std::pair{src.vertex(it->second), src.vertex(i)};
            return rep;
        }
        auto j = dst.index_of(fv);
        if (!j) {
            rep.message = "image of " + src.vertex(i).to_string() + " lies outside the target ball";
            rep.witness = std::pair{src.vertex(i), fv};
            return rep;
        }
        image[i] = *j;
    }
    if (src.size() != dst.size()) {
        rep.message = "ball sizes differ: " + std::to_string(src.size()) + " vs " +
                      std::to_string(dst.size());
        for (const auto& w : dst.vertices()) {
            if (!preimage.count(w)) {
                rep.witness = std::pair{iso.target_root, w};
                break;
            }
        }
        return rep;
    }
    for (auto [a, b] : src.edges()) {
        ++rep.edges_checked;
        if (!dst.adjacent(image[a], image[b])) {
            rep.message = "edge not preserved";
            rep.witness = std::pair{src.vertex(a), src.vertex(b)};
            return rep;
        }
    }
    // Vertex bijection plus injective edge map: equal edge counts give the
    // reverse direction.
    if (src.edge_count() != dst.edge_count()) {
        rep.message = "target ball has edges without preimage: " +
                      std::to_string(src.edge_count()) + " vs " + std::to_string(dst.edge_count());
        for (auto [a, b] : dst.edges()) {
            auto pa = preimage.at(dst.vertex(a));
            auto pb = preimage.at(dst.vertex(b));
            if (!src.adjacent(pa, pb)) {
                rep.witness = std::pair{dst.vertex(a), dst.vertex(b)};
                break;
            }
        }
        return rep;
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

namespace {

ImplicitGraph origin_component(const Graph& product, std::string name)
{
    return restrict_component(as_implicit(product), equal_parity({0, 1}), std::move(name));
}

const std::vector<std::vector<int>> sum_diff = {{1, 1}, {1, -1}};
const std::vector<std::vector<int>> diff_sum = {{1, -1}, {1, 1}};

} // namespace

IsoCase iso_plane()
{
    const Graph z = integer_line();
    return IsoCase{"Z xC Z -> (Z xK Z)°",
                   IsoMap(sum_diff, {}, "Z xC Z", "(Z xK Z)°"),
                   cartesian(z, z),
                   Vertex{0, 0},
                   origin_component(kronecker(z, z), "(Z xK Z)°"),
                   Vertex{0, 0}};
}

IsoCase iso_strip(int n)
{
    const auto dom = LatticeDomain::strip(n);
    const std::string target = "(P" + std::to_string(n) + " xK Z)°";
    return IsoCase{dom.name() + " -> " + target,
                   IsoMap(diff_sum, {}, dom.name(), target),
                   restrict_lattice(dom),
                   Vertex{0, 0},
                   origin_component(kronecker(Graph{path_graph(n)}, Graph{integer_line()}), target),
                   Vertex{0, 0}};
}

IsoCase iso_half_plane()
{
    const auto dom = LatticeDomain::half_plane();
    const std::string target = "(Z+ xK Z)°";
    return IsoCase{dom.name() + " -> " + target,
                   IsoMap(diff_sum, {}, dom.name(), target),
                   restrict_lattice(dom),
                   Vertex{0, 0},
                   origin_component(kronecker(Graph{half_line()}, Graph{integer_line()}), target),
                   Vertex{0, 0}};
}

IsoCase iso_diamond(int k, int l)
{
    const auto dom = LatticeDomain::diamond(k, l);
    const std::string target = "(P" + std::to_string(k) + " xK P" + std::to_string(l) + ")°";
    return IsoCase{dom.name() + " -> " + target,
                   IsoMap(sum_diff, {}, dom.name(), target),
                   restrict_lattice(dom),
                   Vertex{0, 0},
                   origin_component(kronecker(Graph{path_graph(k)}, Graph{path_graph(l)}), target),
                   Vertex{0, 0}};
}

IsoCase iso_wedge()
{
    const auto dom = LatticeDomain::wedge();
    const std::string target = "(Z+ xK Z+)°";
    return IsoCase{dom.name() + " -> " + target,
                   IsoMap(sum_diff, {}, dom.name(), target),
                   restrict_lattice(dom),
                   Vertex{0, 0},
                   origin_component(kronecker(Graph{half_line()}, Graph{half_line()}), target),
                   Vertex{0, 0}};
}

} // namespace latwalk

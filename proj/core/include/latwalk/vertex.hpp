#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace latwalk {

/// A lattice point: a short tuple of signed integer coordinates.
///
/// Products of graphs concatenate coordinate tuples, so the capacity bounds
/// the total dimension of any product built by the library.
class Vertex {
public:
    static constexpr std::size_t max_dim = 8;
    using coord_type = std::int32_t;

    Vertex() = default;
    Vertex(std::initializer_list<coord_type> coords);
    explicit Vertex(std::span<const coord_type> coords);

    /// The origin of the given dimension.
    static Vertex zero(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    coord_type operator[](std::size_t i) const noexcept { return c_[i]; }
    coord_type& operator[](std::size_t i) noexcept { return c_[i]; }
    std::span<const coord_type> coords() const noexcept { return {c_.data(), dim_}; }

    /// First `k` coordinates.
    Vertex head(std::size_t k) const;
    /// Coordinates from index `k` onwards.
    Vertex tail(std::size_t k) const;
    /// Coordinate tuple of `a` followed by that of `b`.
    static Vertex concat(const Vertex& a, const Vertex& b);

    Vertex with(std::size_t axis, coord_type value) const;

    /// "x1,x2,...": the edge-list / CSV rendering.
    std::string to_string() const;

    friend bool operator==(const Vertex& a, const Vertex& b) noexcept;
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) noexcept;

private:
    std::array<coord_type, max_dim> c_{};
    std::uint8_t dim_ = 0;
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept;
};

/// Parses "x1,x2,..." (whitespace tolerated).
Vertex parse_vertex(const std::string& text);

} // namespace latwalk

#include "latwalk/vertex.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace latwalk {

namespace {

void check_dim(std::size_t dim)
{
    if (dim > Vertex::max_dim) {
        throw InvalidParameter("vertex dimension " + std::to_string(dim) + " exceeds capacity " +
                               std::to_string(Vertex::max_dim));
    }
}

} // namespace

Vertex::Vertex(std::initializer_list<coord_type> coords)
    : Vertex(std::span<const coord_type>(coords.begin(), coords.size()))
{
}

Vertex::Vertex(std::span<const coord_type> coords)
{
    check_dim(coords.size());
    std::copy(coords.begin(), coords.end(), c_.begin());
    dim_ = static_cast<std::uint8_t>(coords.size());
}

Vertex Vertex::zero(std::size_t dim)
{
    check_dim(dim);
    Vertex v;
    v.dim_ = static_cast<std::uint8_t>(dim);
    return v;
}

Vertex Vertex::head(std::size_t k) const
{
    return Vertex(coords().first(std::min<std::size_t>(k, dim_)));
}

Vertex Vertex::tail(std::size_t k) const
{
    return k >= dim_ ? zero(0) : Vertex(coords().subspan(k));
}

Vertex Vertex::concat(const Vertex& a, const Vertex& b)
{
    check_dim(a.dim_ + b.dim_);
    Vertex v = a;
    std::copy(b.c_.begin(), b.c_.begin() + b.dim_, v.c_.begin() + a.dim_);
    v.dim_ = static_cast<std::uint8_t>(a.dim_ + b.dim_);
    return v;
}

Vertex Vertex::with(std::size_t axis, coord_type value) const
{
    Vertex v = *this;
    v.c_[axis] = value;
    return v;
}

std::string Vertex::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(c_[i]);
    }
    return out;
}

bool operator==(const Vertex& a, const Vertex& b) noexcept
{
    return a.dim_ == b.dim_ && std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) noexcept
{
    if (auto c = a.dim_ <=> b.dim_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.dim_,
                                                  b.c_.begin(), b.c_.begin() + b.dim_);
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept
{
    // FNV-1a over the coordinates, seeded with the dimension.
    std::uint64_t h = 1469598103934665603ull ^ v.dim();
    for (auto c : v.coords()) {
        h ^= static_cast<std::uint32_t>(c);
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

Vertex parse_vertex(const std::string& text)
{
    std::array<Vertex::coord_type, Vertex::max_dim> buf{};
    std::size_t n = 0;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        auto first = field.find_first_not_of(" \t");
        auto last = field.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw InvalidParameter("empty coordinate in vertex '" + text + "'");
        }
        if (n == buf.size()) {
            throw InvalidParameter("too many coordinates in vertex '" + text + "'");
        }
        const char* b = field.data() + first;
        const char* e = field.data() + last + 1;
        auto [ptr, ec] = std::from_chars(b, e, buf[n]);
        if (ec != std::errc{} || ptr != e) {
            throw InvalidParameter("bad coordinate '" + field + "' in vertex '" + text + "'");
        }
        ++n;
    }
    if (n == 0) {
        throw InvalidParameter("empty vertex");
    }
    return Vertex(std::span<const Vertex::coord_type>(buf.data(), n));
}

} // namespace latwalk

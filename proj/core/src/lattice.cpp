#include "latwalk/lattice.hpp"

#include "latwalk/error.hpp"

namespace latwalk {

LatticeDomain::LatticeDomain(Kind kind, std::size_t dim, std::string name, int p1, int p2)
    : kind_(kind), dim_(dim), name_(std::move(name)), p1_(p1), p2_(p2)
{
}

LatticeDomain LatticeDomain::full_z2()
{
    return {Kind::full_z2, 2, "Z2"};
}

LatticeDomain LatticeDomain::half_plane()
{
    return {Kind::half_plane, 2, "L{x>=y}"};
}

LatticeDomain LatticeDomain::strip(int n)
{
    if (n < 2) {
        throw InvalidParameter("strip width n must be >= 2");
    }
    return {Kind::strip, 2, "L{x>=y>=x-" + std::to_string(n - 1) + "}", n};
}

LatticeDomain LatticeDomain::wedge()
{
    return {Kind::wedge, 2, "L{x>=y>=-x}"};
}

LatticeDomain LatticeDomain::diamond(int k, int l)
{
    if (k < 2 || l < 2) {
        throw InvalidParameter("diamond sides k, l must be >= 2");
    }
    return {Kind::diamond, 2,
            "L{0<=x+y<=" + std::to_string(k - 1) + ",0<=x-y<=" + std::to_string(l - 1) + "}", k, l};
}

LatticeDomain LatticeDomain::quarter_plane()
{
    return {Kind::quarter_plane, 2, "L{x>=0,y>=0}"};
}

LatticeDomain LatticeDomain::chamber3()
{
    return {Kind::chamber3, 3, "L{x>=y>=z}"};
}

LatticeDomain LatticeDomain::custom(std::size_t dim, std::string name,
                                    std::function<bool(const Vertex&)> predicate)
{
    if (!predicate) {
        throw InvalidParameter("custom domain needs a predicate");
    }
    LatticeDomain d{Kind::custom, dim, std::move(name)};
    d.predicate_ = std::move(predicate);
    return d;
}

bool LatticeDomain::contains(const Vertex& v) const
{
    if (v.dim() != dim_) {
        return false;
    }
    // Sums and differences in 64 bits so extreme coordinates cannot overflow.
    const long long x = v[0];
    const long long y = dim_ > 1 ? v[1] : 0;
    switch (kind_) {
    case Kind::full_z2:
        return true;
    case Kind::half_plane:
        return x >= y;
    case Kind::strip:
        return x >= y && y >= x - (p1_ - 1);
    case Kind::wedge:
        return x >= y && y >= -x;
    case Kind::diamond:
        return 0 <= x + y && x + y <= p1_ - 1 && 0 <= x - y && x - y <= p2_ - 1;
    case Kind::quarter_plane:
        return x >= 0 && y >= 0;
    case Kind::chamber3:
        return x >= y && y >= v[2];
    case Kind::custom:
        return predicate_(v);
    }
    return false;
}

ImplicitGraph restrict_lattice(const LatticeDomain& domain)
{
    return ImplicitGraph(
        domain.dim(), domain.name(),
        [domain](const Vertex& v, std::vector<Vertex>& out) {
            for (std::size_t a = 0; a < v.dim(); ++a) {
                for (int step : {-1, 1}) {
                    Vertex w = v.with(a, v[a] + step);
                    if (domain.contains(w)) {
                        out.push_back(w);
                    }
                }
            }
        },
        [domain](const Vertex& v) { return domain.contains(v); });
}

ImplicitGraph cubic_lattice(std::size_t dim)
{
    return restrict_lattice(LatticeDomain::custom(dim, "Z" + std::to_string(dim),
                                                  [](const Vertex&) { return true; }));
}

} // namespace latwalk

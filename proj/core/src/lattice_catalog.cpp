#include "latwalk/lattice_catalog.hpp"

#include "latwalk/error.hpp"
#include "latwalk/lattice.hpp"

#include <array>
#include <utility>

namespace latwalk {

namespace {

using Id = LatticeKind::Id;

struct KindInfo {
    Id id;
    const char* token;
    const char* name;
    std::size_t dim;
};

constexpr std::array<KindInfo, 15> kinds = {{
    {Id::z, "z", "Z", 1},
    {Id::zplus, "zplus", "Z+", 1},
    {Id::zplus_at_one, "zplus1", "Z+ at 1", 1},
    {Id::full_z2, "z2", "Z xC Z", 2},
    {Id::half_plane, "halfplane", "L{x>=y}", 2},
    {Id::wedge, "wedge", "L{x>=y>=-x}", 2},
    {Id::quarter_plane, "quarter", "L{x>=0,y>=0}", 2},
    {Id::strip, "strip", "L{x>=y>=x-(n-1)}", 2},
    {Id::diamond, "diamond", "L{0<=x+y<=k-1,0<=x-y<=l-1}", 2},
    {Id::bcc3, "bcc3", "(Z xK Z xK Z)°", 3},
    {Id::z3_cartesian, "z3", "Z xC Z xC Z", 3},
    {Id::chamber3, "chamber3", "L{x>=y>=z}", 3},
    {Id::mixed3, "mixed3", "((Z+ xK Z+) xC Z+)°", 3},
    {Id::z_x_zplus, "zxzplus", "Z xC Z+", 2},
    {Id::zplus2_shifted, "zplus2shift", "Z+ xK Z+ at (0,1)", 2},
}};

const KindInfo& info(Id id)
{
    for (const auto& k : kinds) {
        if (k.id == id) {
            return k;
        }
    }
    throw InvalidParameter("unknown lattice kind");
}

} // namespace

LatticeKind LatticeKind::strip(int n)
{
    if (n < 2) {
        throw InvalidParameter("strip requires n >= 2");
    }
    LatticeKind k{Id::strip};
    k.n = n;
    return k;
}

LatticeKind LatticeKind::diamond(int k, int l)
{
    if (k < 2 || l < 2) {
        throw InvalidParameter("diamond requires k, l >= 2");
    }
    LatticeKind d{Id::diamond};
    d.k = k;
    d.l = l;
    return d;
}

std::string LatticeKind::name() const
{
    if (id == Id::strip) {
        return LatticeDomain::strip(n).name();
    }
    if (id == Id::diamond) {
        return LatticeDomain::diamond(k, l).name();
    }
    return info(id).name;
}

std::string LatticeKind::token() const
{
    return info(id).token;
}

std::size_t LatticeKind::dim() const
{
    return info(id).dim;
}

LatticeKind parse_lattice_kind(const std::string& token, int n, int k, int l)
{
    for (const auto& entry : kinds) {
        if (token == entry.token) {
            if (entry.id == Id::strip) {
                return LatticeKind::strip(n);
            }
            if (entry.id == Id::diamond) {
                return LatticeKind::diamond(k, l);
            }
            return LatticeKind{entry.id};
        }
    }
    throw InvalidParameter("unknown lattice kind '" + token + "'");
}

std::vector<std::string> lattice_kind_tokens()
{
    std::vector<std::string> out;
    for (const auto& k : kinds) {
        out.emplace_back(k.token);
    }
    return out;
}

Graph lattice_graph(const LatticeKind& kind)
{
    const Graph z = integer_line();
    const Graph zp = half_line();
    switch (kind.id) {
    case Id::z:
        return z;
    case Id::zplus:
    case Id::zplus_at_one:
        return zp;
    case Id::full_z2:
        return restrict_lattice(LatticeDomain::full_z2());
    case Id::half_plane:
        return restrict_lattice(LatticeDomain::half_plane());
    case Id::wedge:
        return restrict_lattice(LatticeDomain::wedge());
    case Id::quarter_plane:
        return restrict_lattice(LatticeDomain::quarter_plane());
    case Id::strip:
        return restrict_lattice(LatticeDomain::strip(kind.n));
    case Id::diamond:
        return restrict_lattice(LatticeDomain::diamond(kind.k, kind.l));
    case Id::bcc3:
        return restrict_component(as_implicit(kronecker(kronecker(z, z), z)),
                                  equal_parity({0, 1, 2}), kind.name());
    case Id::z3_cartesian:
        return cartesian(cartesian(z, z), z);
    case Id::chamber3:
        return restrict_lattice(LatticeDomain::chamber3());
    case Id::mixed3:
        return restrict_component(as_implicit(cartesian(kronecker(zp, zp), zp)),
                                  equal_parity({0, 1}), kind.name());
    case Id::z_x_zplus:
        return cartesian(z, zp);
    case Id::zplus2_shifted:
        return kronecker(zp, zp);
    }
    throw InvalidParameter("unknown lattice kind");
}

Vertex lattice_root(const LatticeKind& kind)
{
    switch (kind.id) {
    case Id::zplus_at_one:
        return Vertex{1};
    case Id::zplus2_shifted:
        return Vertex{0, 1};
    default:
        return Vertex::zero(kind.dim());
    }
}

} // namespace latwalk

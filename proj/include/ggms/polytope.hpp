#pragma once

#include "ggms/dualfn.hpp"

namespace ggms {

// Convex polytope in Q (x) R with exact rational vertices; the vertex
// list is irredundant and lex-sorted, so equality is list equality.
struct RationalPolytope {
    std::vector<std::vector<Rat>> vertices;

    int dim_ambient() const { return vertices.empty() ? 0 : int(vertices[0].size()); }
    bool operator==(const RationalPolytope& o) const { return vertices == o.vertices; }
    bool operator<(const RationalPolytope& o) const { return vertices < o.vertices; }
    std::string str() const;
};

RationalPolytope hull(std::vector<std::vector<Rat>> points);

bool point_in_hull(const RationalPolytope& p, const std::vector<Rat>& x);

// Convex hull of underline_L(f) in simple-root coordinates.
RationalPolytope pol(const Algebra& alg, const Functional& f);

// Face of P where theta attains its minimum.
RationalPolytope min_face(const RationalPolytope& p, const StabilityParam& theta);

// Normal fan coarsens the Weyl fan: every chamber closure must lie in the
// normal cone of a single vertex, i.e. the argmin vertex sets over the
// chamber generators (plus an interior sample) have a common element.
bool is_ggms(const RationalPolytope& p, const CartanData& cartan);

bool includes(const RationalPolytope& outer, const RationalPolytope& inner);
bool equals(const RationalPolytope& a, const RationalPolytope& b);

RationalPolytope negate(const RationalPolytope& p);
RationalPolytope translate(const RationalPolytope& p, const std::vector<Rat>& t);

} // namespace ggms

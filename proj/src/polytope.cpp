#include "ggms/polytope.hpp"

#include "ggms/stability.hpp"

#include <algorithm>
#include <sstream>

namespace ggms {

std::string RationalPolytope::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << " ";
        os << "(";
        for (size_t j = 0; j < vertices[i].size(); ++j) {
            if (j) os << ",";
            os << vertices[i][j].str();
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

// is x a convex combination of the given points?
static bool in_convex_span(const std::vector<std::vector<Rat>>& pts,
                           const std::vector<Rat>& x) {
    if (pts.empty()) return false;
    const int d = int(x.size());
    Mat a(d + 1, int(pts.size()));
    std::vector<Rat> b(d + 1);
    for (int i = 0; i < d; ++i) {
        for (size_t k = 0; k < pts.size(); ++k) a(i, int(k)) = pts[k][i];
        b[i] = x[i];
    }
    for (size_t k = 0; k < pts.size(); ++k) a(d, int(k)) = 1;
    b[d] = 1;
    return lp_feasible(a, b);
}

RationalPolytope hull(std::vector<std::vector<Rat>> points) {
    if (points.empty()) throw error("hull: empty point set");
    const size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw error("hull: dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    RationalPolytope out;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<Rat>> others;
        for (size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_span(others, points[i])) out.vertices.push_back(points[i]);
    }
    return out;
}

bool point_in_hull(const RationalPolytope& p, const std::vector<Rat>& x) {
    return in_convex_span(p.vertices, x);
}

RationalPolytope pol(const Algebra& alg, const Functional& f) {
    if (f.is_zero()) throw error("pol: zero functional");
    std::vector<std::vector<Rat>> pts;
    for (const Weight& mu : underline_L(alg, f)) {
        std::vector<Rat> v;
        for (int c : mu.c) v.push_back(Rat(c));
        pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
}

static Rat dot(const std::vector<Rat>& theta, const std::vector<Rat>& v) {
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) s += theta[i] * v[i];
    return s;
}

static std::vector<size_t> argmin_set(const RationalPolytope& p,
                                      const std::vector<Rat>& theta) {
    std::vector<size_t> out;
    Rat best;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        Rat v = dot(theta, p.vertices[i]);
        if (out.empty() || v < best) {
            best = v;
            out.assign(1, i);
        } else if (v == best) {
            out.push_back(i);
        }
    }
    return out;
}

RationalPolytope min_face(const RationalPolytope& p, const StabilityParam& theta) {
    RationalPolytope out;
    for (size_t i : argmin_set(p, theta.t)) out.vertices.push_back(p.vertices[i]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

bool is_ggms(const RationalPolytope& p, const CartanData& cartan) {
    if (p.vertices.size() <= 1) return true;
    if (p.dim_ambient() != cartan.rank) throw error("is_ggms: rank mismatch");
    for (const Cone& chamber : weyl_chambers(cartan)) {
        std::vector<std::vector<Rat>> samples = chamber.generators;
        std::vector<Rat> interior(cartan.rank, Rat(0));
        for (const auto& g : chamber.generators)
            for (int i = 0; i < cartan.rank; ++i) interior[i] += g[i];
        samples.push_back(interior);
        std::vector<size_t> common;
        bool first = true;
        for (const auto& s : samples) {
            std::vector<size_t> am = argmin_set(p, s);
            if (first) {
                common = am;
                first = false;
            } else {
                std::vector<size_t> next;
                std::set_intersection(common.begin(), common.end(), am.begin(), am.end(),
                                      std::back_inserter(next));
                common = next;
            }
            if (common.empty()) return false;
        }
    }
    return true;
}

bool includes(const RationalPolytope& outer, const RationalPolytope& inner) {
    for (const auto& v : inner.vertices)
        if (!point_in_hull(outer, v)) return false;
    return true;
}

bool equals(const RationalPolytope& a, const RationalPolytope& b) {
    return a.vertices == b.vertices;
}

RationalPolytope negate(const RationalPolytope& p) {
    RationalPolytope out = p;
    for (auto& v : out.vertices)
        for (auto& x : v) x = -x;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

RationalPolytope translate(const RationalPolytope& p, const std::vector<Rat>& t) {
    RationalPolytope out = p;
    for (auto& v : out.vertices)
        for (size_t i = 0; i < v.size(); ++i) v[i] += t[i];
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace ggms

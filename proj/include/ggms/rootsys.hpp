#pragma once

#include "ggms/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ggms {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the root lattice Q, stored in simple-root coordinates.
// The library never uses the fundamental-weight basis.
struct Weight {
    std::vector<int> c;

    Weight() = default;
    explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return int(c.size()); }
    long height() const {
        long h = 0;
        for (int x : c) h += x;
        return h;
    }
    bool in_q_plus() const {
        for (int x : c)
            if (x < 0) return false;
        return true;
    }
    bool in_q_minus() const {
        for (int x : c)
            if (x > 0) return false;
        return true;
    }
    bool is_zero() const {
        for (int x : c)
            if (x != 0) return false;
        return true;
    }

    Weight operator+(const Weight& o) const {
        Weight w = *this;
        for (int i = 0; i < rank(); ++i) w.c[i] += o.c[i];
        return w;
    }
    Weight operator-(const Weight& o) const {
        Weight w = *this;
        for (int i = 0; i < rank(); ++i) w.c[i] -= o.c[i];
        return w;
    }
    Weight operator-() const {
        Weight w = *this;
        for (int& x : w.c) x = -x;
        return w;
    }
    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }
    bool operator<(const Weight& o) const { return c < o.c; } // lex, for map keys

    std::string str() const;
};

// Finite-type Cartan datum.  a[i][j] = <alpha_j, alpha_i^vee>; sym[i] are
// the symmetrizing integers, so (alpha_i, alpha_j) = sym[i] * a[i][j].
struct CartanData {
    std::string label;
    int rank = 0;
    std::vector<std::vector<int>> a;
    std::vector<int> sym;

    bool simply_laced() const {
        for (int d : sym)
            if (d != 1) return false;
        return true;
    }

    // The underlying graph: i ~ j iff a[i][j] != 0, i != j.
    bool adjacent(int i, int j) const { return i != j && a[i][j] != 0; }

    static CartanData from_label(const std::string& label);
    static CartanData from_matrix(std::vector<std::vector<int>> m, std::string label);
};

// Stability parameter theta, stored by its values on the simple roots.
struct StabilityParam {
    std::vector<Rat> t;

    StabilityParam() = default;
    explicit StabilityParam(std::vector<Rat> v) : t(std::move(v)) {}
    static StabilityParam zero(int rank) { return StabilityParam(std::vector<Rat>(rank, Rat(0))); }

    Rat operator()(const Weight& w) const {
        Rat s(0);
        for (int i = 0; i < int(t.size()); ++i)
            if (w.c[i] != 0) s += Rat(w.c[i]) * t[i];
        return s;
    }
    std::string str() const;
};

// Rational polyhedral cone given by its generators (in theta-coordinates).
struct Cone {
    std::vector<std::vector<Rat>> generators;
};

std::vector<Weight> positive_roots(const CartanData& cartan);

// Number of multisets of positive roots summing to nu (the dimension of
// the weight space U(n)_nu by PBW).
long kostant_dim(const CartanData& cartan, const Weight& nu);

// Full-dimensional chambers of the Weyl fan in theta-space; chamber
// count equals |W|.
std::vector<Cone> weyl_chambers(const CartanData& cartan);

// Symmetrized invariant form extended bilinearly from (alpha_i, alpha_j).
Rat symmetrized_form(const CartanData& cartan, const Weight& mu, const Weight& nu);

// All nu' in Q+ with nu' <= nu coordinatewise, in lex order.
std::vector<Weight> weights_below(const Weight& nu);

// All nu in Q+ of height exactly h (resp. at most h), coords bounded by h.
std::vector<Weight> weights_of_height(int rank, int h);

} // namespace ggms

#pragma once

#include "ggms/preproj.hpp"
#include "ggms/stability.hpp"

namespace ggms {

// Weight-graded family of functionals, labelled; per-weight lists span
// O_lambda up to the construction cutoff.
struct BasisFamily {
    int height_cutoff = 0;
    std::map<Weight, std::vector<BasisElement>> by_weight; // key in Q-
};

BasisFamily semicanonical_family(const Algebra& alg, const Catalog& cat, int height_cutoff);

// Image of the family under the star involution (labels get a trailing *).
BasisFamily star_family(const Algebra& alg, const BasisFamily& b);

struct Report {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> stats;

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
    void note(const std::string& key, const std::string& value) {
        stats.emplace_back(key, value);
    }
};

// Berenstein-Kazhdan perfectness with prescribed structure constants:
// b -> e_i^(n).b maps {ell_i = n} injectively into {ell_i = 0}, landing
// exactly on basis elements.
Report is_perfect(const Algebra& alg, const BasisFamily& b);
Report is_biperfect(const Algebra& alg, const BasisFamily& b);

struct CrystalGraph {
    struct Node {
        std::string label;
        Weight weight;
        std::vector<int> eps, eps_star;
    };
    struct Edge {
        int i;
        int from, to; // node indices; to = e~_i(from)
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

CrystalGraph crystal_graph(const Algebra& alg, const BasisFamily& b);

// Chamber representatives plus a tied sample and zero.
std::vector<StabilityParam> default_theta_samples(const CartanData& cartan);

// A theta whose positive-root slopes are pairwise different.
StabilityParam distinct_slope_theta(const CartanData& cartan);

// Politeness conditions (i)-(iv): weight vectors, zeta powers present,
// and compatibility with both filtrations and splitting isomorphisms.
Report politeness_check(const Algebra& alg, const BasisFamily& b,
                        const std::vector<StabilityParam>& theta_samples);

// Pol is injective on the family; upper rims pairwise distinct for a
// distinct-slope theta.
Report polytope_injectivity(const Algebra& alg, const BasisFamily& b);

struct TransitionResult {
    Report report;
    // per weight: (labels of row basis, labels of column basis, matrix)
    std::vector<std::tuple<Weight, std::vector<std::string>, std::vector<std::string>, Mat>>
        matrices;
};

// Change of basis per weight with both families indexed by their
// polytopes; checks upper unitriangularity for the inclusion order.
TransitionResult transition_matrix(const Algebra& alg, const BasisFamily& from,
                                   const BasisFamily& to);

// Every expansion of a family member contains a monomial with the same rim.
Report single_maximal_check(const Algebra& alg, const BasisFamily& b,
                            const StabilityParam& theta);

// S(K) is spanned by the members whose polytope fits in K.
Report conv_comp_check(const Algebra& alg, const BasisFamily& b);

// Face factorization: the middle split factor's polytope translates to
// the min_face, and all three factors lie in the family.
Report face_factorization_check(const Algebra& alg, const BasisFamily& b,
                                const std::vector<StabilityParam>& theta_samples);

} // namespace ggms

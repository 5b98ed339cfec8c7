#pragma once

#include "ggms/dualfn.hpp"

#include <optional>

namespace ggms {

// Degree in the graded monoid Gamma_theta: r is the height component,
// d the theta component.  Lives in the right half-plane r > 0, or
// r = 0 and d = 0 for the unit degree.
struct GradedDegree {
    long r = 0;
    Rat d;

    GradedDegree() = default;
    GradedDegree(long rr, Rat dd) : r(rr), d(std::move(dd)) {}

    GradedDegree operator+(const GradedDegree& o) const { return {r + o.r, d + o.d}; }
    GradedDegree operator-(const GradedDegree& o) const { return {r - o.r, d - o.d}; }
    bool operator==(const GradedDegree& o) const { return r == o.r && d == o.d; }
    bool operator!=(const GradedDegree& o) const { return !(*this == o); }
    bool operator<(const GradedDegree& o) const { // lex, for ordered containers
        if (r != o.r) return r < o.r;
        return d < o.d;
    }
    bool is_zero() const { return r == 0 && d == 0; }
    std::string str() const { return "(" + std::to_string(r) + "," + d.str() + ")"; }
};

// J_theta(lambda) = -(height lambda, theta(lambda)) for lambda in Q-.
GradedDegree j_theta(const Weight& lambda, const StabilityParam& theta);
// Degree of U_nu for nu in Q+: (height nu, theta(nu)).
GradedDegree u_degree(const Weight& nu, const StabilityParam& theta);

// Slope d/r; degree (0,0) compares below every slope, (0,d) above.
struct Slope {
    int kind = 0; // -1 = -inf, 0 = finite, +1 = +inf
    Rat value;
    std::string str() const;
};
Slope slope_of(const GradedDegree& g);
int slope_cmp(const Slope& a, const Slope& b);
Slope slope_of_weight(const Weight& lambda, const StabilityParam& theta); // O-side

// Half-plane orders of the splitting filtrations.
bool in_pi1(const GradedDegree& g); // d < 0, or d = 0 and r >= 0
bool in_pi2(const GradedDegree& g); // d > 0, or d = 0 and r >= 0
bool leq1(const GradedDegree& a, const GradedDegree& b); // a <=' b
bool leq2(const GradedDegree& a, const GradedDegree& b); // a <='' b

// Concave upper boundary of a 2-D degree set, from (0,0) to the total
// degree; interior vertices are the angular points.
struct UpperRim {
    std::vector<GradedDegree> vertices;
    bool operator==(const UpperRim& o) const { return vertices == o.vertices; }
    bool is_segment() const { return vertices.size() <= 2; }
    std::string str() const;
};

UpperRim upper_rim(std::vector<GradedDegree> pts);
// Does the region of `inner` sit inside the region of `outer`?  Both rims
// must share endpoints.
bool rim_inside(const UpperRim& inner, const UpperRim& outer);

// Ordered monomial: product of homogeneous semistable factors with
// weakly decreasing slopes.  Factors are kept monic; the scalar lives in
// coeff.
struct OrderedMonomial {
    Rat coeff;
    std::vector<Functional> factors;
};

UpperRim monomial_rim(const OrderedMonomial& m, const StabilityParam& theta);
Functional monomial_value(const Algebra& alg, const OrderedMonomial& m);

// ---- stability operations on O(N) ----

std::vector<GradedDegree> l_theta(const Algebra& alg, const Functional& f,
                                  const StabilityParam& theta);
std::vector<GradedDegree> r_theta(const Algebra& alg, const Functional& f,
                                  const StabilityParam& theta);

struct SemistableResult {
    bool semistable = false;
    Slope slope;
};
SemistableResult is_semistable(const Algebra& alg, const Functional& f,
                               const StabilityParam& theta);

// Basis of the semistable slice O_[mu] cap O_lambda, mu = slope of
// J_theta(lambda).
std::vector<Functional> semistable_basis(const Algebra& alg, const Weight& lambda,
                                         const StabilityParam& theta);

UpperRim pol_wedge(const Algebra& alg, const Functional& f, const StabilityParam& theta);

// Lattice-point count of Gamma_theta inside the Pol^ region; the strictly
// decreasing measure of the expansion recursion.
long rim_lattice_count(const Algebra& alg, const Functional& f,
                       const StabilityParam& theta);

// Expansion of a homogeneous element into ordered monomials (sum equals
// the input; every monomial rim is contained in the input rim).
std::vector<OrderedMonomial> expand_ordered(const Algebra& alg, const Functional& f,
                                            const StabilityParam& theta);

Functional remultiply(const Algebra& alg, const std::vector<OrderedMonomial>& ms);

// Factorization audit at weight -nu: products of semistable basis
// elements over strictly decreasing slope patterns must form a basis.
struct FactorizationReport {
    bool pass = false;
    long dim = 0;
    long count = 0;
    long rank = 0;
    std::vector<std::string> patterns;
};
FactorizationReport verify_factorization(const Algebra& alg, const Weight& nu,
                                         const StabilityParam& theta, int height_cutoff);

// Filtration slices: F'_alpha = {f : L_theta(f) in alpha + Pi'},
// F''_beta = {f : R_theta(f) in beta + Pi''}.
std::vector<Functional> filtration_f1(const Algebra& alg, const Weight& lambda,
                                      const GradedDegree& alpha, const StabilityParam& theta);
std::vector<Functional> filtration_f2(const Algebra& alg, const Weight& lambda,
                                      const GradedDegree& beta, const StabilityParam& theta);

// Span of the strictly lower filtration slices (union over realized
// degrees strictly below the given one), echelonized.
std::vector<Functional> filtration_f1_below(const Algebra& alg, const Weight& lambda,
                                            const GradedDegree& alpha,
                                            const StabilityParam& theta);
std::vector<Functional> filtration_f2_below(const Algebra& alg, const Weight& lambda,
                                            const GradedDegree& beta,
                                            const StabilityParam& theta);

// Maxima of L_theta(f) and R_theta(f) for the filtration orders.
GradedDegree max_l_degree(const Algebra& alg, const Functional& f, const StabilityParam& theta);
GradedDegree max_r_degree(const Algebra& alg, const Functional& f, const StabilityParam& theta);

struct Split1 {
    GradedDegree alpha;
    std::vector<std::pair<Functional, Functional>> pairs;
};
// Top graded piece of Delta(f) along <=' : component at (alpha, |f|-alpha)
// with alpha the <='-maximum of L_theta(f).
Split1 split_delta1(const Algebra& alg, const Functional& f, const StabilityParam& theta);

struct Split2 {
    GradedDegree alpha, beta;
    std::vector<std::tuple<Functional, Functional, Functional>> triples;
};
// Component of (Delta x id) Delta(f) at (alpha, |f|-alpha-beta, beta),
// alpha = max<=' L_theta(f), beta = max<='' R_theta(f).
Split2 split_delta2(const Algebra& alg, const Functional& f, const StabilityParam& theta);

// ---- the U(n) side ----

struct UOrderedMonomial {
    Rat coeff;
    std::vector<WordVector> factors; // semistable, weakly decreasing slopes
};

// Component of the free coproduct of x at left weight mu, as a matrix
// indexed by (word of weight mu, word of weight |x|-mu).
Mat u_free_component(const Algebra& alg, const WordVector& x, const Weight& mu);

// Is the component contained in I (x) F + F (x) I (the coideal test for
// the Serre ideal slice)?
bool u_component_in_ideal(const Algebra& alg, const WordVector& x, const Weight& mu);

// Semistability of a class in U(n): all coproduct components at slopes
// above the total slope vanish modulo the Serre ideal.
bool u_is_semistable(const Algebra& alg, const WordVector& x, const StabilityParam& theta);

// Basis of the semistable slice of U(n)_nu (classes represented in the
// non-pivot word complement of the Serre slice).
std::vector<WordVector> u_semistable_basis(const Algebra& alg, const Weight& nu,
                                           const StabilityParam& theta);

UpperRim u_monomial_rim(const UOrderedMonomial& m, const StabilityParam& theta);

// Pairing of ordered monomials on the two sides; throws if a factor is
// not semistable for theta, returns the pairing, and reports rim match.
struct DualityResult {
    Rat pairing;
    bool rims_match = false;
};
DualityResult duality_check(const Algebra& alg, const UOrderedMonomial& x,
                            const OrderedMonomial& f, const StabilityParam& theta);

// Slope-subalgebra audit: the semistable slice dimension of U(n)_nu must
// equal the Kostant count over the positive roots of the total slope.
struct SlopeSubalgebraReport {
    bool pass = false;
    long semistable_dim = 0;
    long restricted_kostant = 0;
    Slope slope;
};
SlopeSubalgebraReport verify_slope_subalgebra(const Algebra& alg, const StabilityParam& theta,
                                              const Weight& nu);

} // namespace ggms

#pragma once

#include "ggms/envalg.hpp"

#include <set>

namespace ggms {

// Element of O(N)_lambda (lambda in Q-), stored by its values on all
// words of weight -lambda.  A valid functional vanishes on the Serre
// ideal slice; constructors coming from phi/zeta/products guarantee it,
// and check_in_o below verifies it explicitly.
struct Functional {
    Weight weight;           // in Q-
    std::vector<Rat> values; // indexed by words(-weight); empty means 0

    bool is_zero() const {
        for (const Rat& x : values)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const Functional& o) const {
        return weight == o.weight && values == o.values;
    }
};

Functional functional_zero(const Algebra& alg, const Weight& lambda);
Functional functional_one(const Algebra& alg);
Functional zeta(const Algebra& alg, int i);

Functional add(const Functional& f, const Functional& g);
Functional scale(const Functional& f, const Rat& s);
// Scale so that the first nonzero value is 1 (identity on zero input).
Functional monic(const Functional& f);

// <e_w, f>
Rat evaluate(const Algebra& alg, const Functional& f, const Word& w);
// <x, f> for a homogeneous x in the free algebra
Rat pair_with(const Algebra& alg, const WordVector& x, const Functional& f);

// Does f vanish on the Serre ideal slice?
bool check_in_o(const Algebra& alg, const Functional& f);

// Shuffle product (dual to deconcatenation); commutative.
Functional multiply(const Algebra& alg, const Functional& f, const Functional& g);

Functional power(const Algebra& alg, const Functional& f, int n);

struct CoproductComponent {
    Weight left_weight;
    std::vector<std::pair<Functional, Functional>> pairs; // minimal writing
    int rank = 0;
};

// Minimal writing of the weight-(mu, |f|-mu) component of Delta(f), via a
// deterministic rank factorization of the evaluation matrix f(xy).
CoproductComponent coproduct_component(const Algebra& alg, const Functional& f,
                                       const Weight& mu);

// The set of weights mu with a nonzero coproduct component (always
// contains 0 and |f| for nonzero f).
std::set<Weight> underline_L(const Algebra& alg, const Functional& f);

// Divided-power left action: (e_i^(n) . f)(w) = f(w i^n) / n!
Functional e_act(const Algebra& alg, int i, int n, const Functional& f);

// Smallest n >= 0 with e_i^(n+1) . f = 0.
int ell(const Algebra& alg, int i, const Functional& f);

// Star involution, realized by word reversal.
Functional star(const Algebra& alg, const Functional& f);

} // namespace ggms

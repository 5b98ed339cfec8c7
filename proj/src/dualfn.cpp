#include "ggms/dualfn.hpp"

#include <algorithm>
#include <cassert>

namespace ggms {

Functional functional_zero(const Algebra& alg, const Weight& lambda) {
    if (!lambda.in_q_minus()) return Functional{lambda, {}};
    return Functional{lambda, std::vector<Rat>(alg.words(-lambda).size(), Rat(0))};
}

Functional functional_one(const Algebra& alg) {
    Functional f = functional_zero(alg, Weight::zero(alg.rank()));
    f.values[0] = 1;
    return f;
}

Functional zeta(const Algebra& alg, int i) {
    if (i < 0 || i >= alg.rank()) throw error("zeta: letter out of range");
    Weight lambda = Weight::zero(alg.rank());
    lambda.c[i] = -1;
    Functional f = functional_zero(alg, lambda);
    f.values[0] = 1; // single word [i]
    return f;
}

Functional add(const Functional& f, const Functional& g) {
    if (f.weight != g.weight) throw error("add: weight mismatch");
    if (f.values.empty()) return g;
    if (g.values.empty()) return f;
    Functional out = f;
    for (size_t k = 0; k < out.values.size(); ++k) out.values[k] += g.values[k];
    return out;
}

Functional scale(const Functional& f, const Rat& s) {
    Functional out = f;
    for (Rat& x : out.values) x *= s;
    return out;
}

Functional monic(const Functional& f) {
    for (const Rat& x : f.values)
        if (x != 0) return scale(f, Rat(1) / x);
    return f;
}

Rat evaluate(const Algebra& alg, const Functional& f, const Word& w) {
    if (f.values.empty()) return Rat(0);
    if (word_weight(w, alg.rank()) != -f.weight) return Rat(0);
    return f.values[alg.word_index(-f.weight, w)];
}

Rat pair_with(const Algebra& alg, const WordVector& x, const Functional& f) {
    if (x.weight != -f.weight) return Rat(0);
    Rat s(0);
    for (const auto& [w, c] : x.terms) s += c * evaluate(alg, f, w);
    return s;
}

bool check_in_o(const Algebra& alg, const Functional& f) {
    if (f.values.empty()) return true;
    const SerreSpan& span = alg.serre(-f.weight);
    for (const auto& v : span.basis) {
        Rat s(0);
        for (const auto& [w, c] : v.terms)
            s += c * f.values[alg.word_index(-f.weight, w)];
        if (s != 0) return false;
    }
    return true;
}

Functional multiply(const Algebra& alg, const Functional& f, const Functional& g) {
    Weight lambda = f.weight + g.weight;
    Functional out = functional_zero(alg, lambda);
    if (f.values.empty() || g.values.empty()) return out;
    const Weight nu = -lambda;
    const auto& ws = alg.words(nu);
    const long hf = (-f.weight).height();
    const int n = int(nu.height());
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        const Word& w = ws[wi];
        Rat s(0);
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            if (long(__builtin_popcountl(mask)) != hf) continue;
            Word left, right;
            for (int p = 0; p < n; ++p)
                ((mask >> p) & 1 ? left : right).push_back(w[p]);
            if (word_weight(left, alg.rank()) != -f.weight) continue;
            Rat a = f.values[alg.word_index(-f.weight, left)];
            if (a == 0) continue;
            Rat b = g.values[alg.word_index(-g.weight, right)];
            if (b == 0) continue;
            s += a * b;
        }
        out.values[wi] = s;
    }
#ifndef NDEBUG
    assert(check_in_o(alg, out));
#endif
    return out;
}

Functional power(const Algebra& alg, const Functional& f, int n) {
    Functional out = functional_one(alg);
    for (int k = 0; k < n; ++k) out = multiply(alg, out, f);
    return out;
}

CoproductComponent coproduct_component(const Algebra& alg, const Functional& f,
                                       const Weight& mu) {
    CoproductComponent out;
    out.left_weight = mu;
    const Weight rest = f.weight - mu;
    if (!mu.in_q_minus() || !rest.in_q_minus()) return out; // empty component
    if (f.values.empty()) return out;
    const auto& xs = alg.words(-mu);
    const auto& ys = alg.words(-rest);
    Mat m(int(xs.size()), int(ys.size()));
    bool nonzero = false;
    for (size_t xi = 0; xi < xs.size(); ++xi)
        for (size_t yi = 0; yi < ys.size(); ++yi) {
            Word w = xs[xi];
            w.insert(w.end(), ys[yi].begin(), ys[yi].end());
            m(int(xi), int(yi)) = f.values[alg.word_index(-f.weight, w)];
            if (m(int(xi), int(yi)) != 0) nonzero = true;
        }
    if (!nonzero) return out;
    Rref r = rref(m);
    out.rank = r.rank;
    for (int k = 0; k < r.rank; ++k) {
        Functional left{mu, {}};
        left.values.resize(xs.size());
        for (size_t xi = 0; xi < xs.size(); ++xi)
            left.values[xi] = m(int(xi), r.pivots[k]);
        Functional right{rest, {}};
        right.values.resize(ys.size());
        for (size_t yi = 0; yi < ys.size(); ++yi) right.values[yi] = r.r(k, int(yi));
        // Normalization: a weight-0 factor is rendered as an exact
        // constant so the counit components read (1, f) and (f, 1).
        if (mu.is_zero()) {
            Rat s = left.values[0];
            left.values[0] = 1;
            right = scale(right, s);
        }
        out.pairs.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

std::set<Weight> underline_L(const Algebra& alg, const Functional& f) {
    if (f.is_zero()) throw error("underline_L: zero functional");
    std::set<Weight> out;
    const Weight lambda = f.weight;
    // candidate mu: lambda <= mu <= 0 coordinatewise
    for (const Weight& d : weights_below(-lambda)) {
        const Weight mu = lambda + d; // runs over the box [lambda, 0]
        const Weight rest = lambda - mu;
        if (!mu.in_q_minus() || !rest.in_q_minus()) continue;
        // nonzero component iff some stacked value is nonzero
        const auto& xs = alg.words(-mu);
        const auto& ys = alg.words(-rest);
        bool nonzero = false;
        for (size_t xi = 0; xi < xs.size() && !nonzero; ++xi)
            for (size_t yi = 0; yi < ys.size() && !nonzero; ++yi) {
                Word w = xs[xi];
                w.insert(w.end(), ys[yi].begin(), ys[yi].end());
                if (f.values[alg.word_index(-lambda, w)] != 0) nonzero = true;
            }
        if (nonzero) out.insert(mu);
    }
    return out;
}

Functional e_act(const Algebra& alg, int i, int n, const Functional& f) {
    if (n < 0) throw error("e_act: negative power");
    if (n == 0) return f;
    Weight lambda = f.weight;
    lambda.c[i] += n;
    Functional out = functional_zero(alg, lambda);
    if (!lambda.in_q_minus() || f.values.empty()) return out;
    Rat fact(1);
    for (int k = 2; k <= n; ++k) fact *= k;
    const auto& ws = alg.words(-lambda);
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        Word w = ws[wi];
        for (int k = 0; k < n; ++k) w.push_back(i);
        out.values[wi] = f.values[alg.word_index(-f.weight, w)] / fact;
    }
    return out;
}

int ell(const Algebra& alg, int i, const Functional& f) {
    if (f.is_zero()) throw error("ell: zero functional");
    int n = 0;
    while (!e_act(alg, i, n + 1, f).is_zero()) {
        ++n;
        if (n > -f.weight.c[i]) throw error("ell: exceeded weight bound");
    }
    return n;
}

Functional star(const Algebra& alg, const Functional& f) {
    Functional out = functional_zero(alg, f.weight);
    if (f.values.empty()) return out;
    const auto& ws = alg.words(-f.weight);
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        Word r = ws[wi];
        std::reverse(r.begin(), r.end());
        out.values[alg.word_index(-f.weight, r)] = f.values[wi];
    }
    return out;
}

} // namespace ggms

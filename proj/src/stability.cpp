#include "ggms/stability.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ggms {

GradedDegree j_theta(const Weight& lambda, const StabilityParam& theta) {
    return GradedDegree{-lambda.height(), -theta(lambda)};
}

GradedDegree u_degree(const Weight& nu, const StabilityParam& theta) {
    return GradedDegree{nu.height(), theta(nu)};
}

std::string Slope::str() const {
    if (kind < 0) return "-inf";
    if (kind > 0) return "inf";
    return value.str();
}

Slope slope_of(const GradedDegree& g) {
    if (g.r == 0) return (g.d == 0) ? Slope{-1, Rat(0)} : Slope{+1, Rat(0)};
    return Slope{0, g.d / g.r};
}

int slope_cmp(const Slope& a, const Slope& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.kind != 0) return 0;
    if (a.value == b.value) return 0;
    return a.value < b.value ? -1 : 1;
}

Slope slope_of_weight(const Weight& lambda, const StabilityParam& theta) {
    return slope_of(j_theta(lambda, theta));
}

bool in_pi1(const GradedDegree& g) { return g.d < 0 || (g.d == 0 && g.r >= 0); }
bool in_pi2(const GradedDegree& g) { return g.d > 0 || (g.d == 0 && g.r >= 0); }
bool leq1(const GradedDegree& a, const GradedDegree& b) { return in_pi1(a - b); }
bool leq2(const GradedDegree& a, const GradedDegree& b) { return in_pi2(a - b); }

std::string UpperRim::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << "-";
        os << vertices[i].str();
    }
    return os.str();
}

UpperRim upper_rim(std::vector<GradedDegree> pts) {
    // keep only the highest point per abscissa
    std::map<long, Rat> top;
    for (const auto& p : pts) {
        auto it = top.find(p.r);
        if (it == top.end() || it->second < p.d) top[p.r] = p.d;
    }
    std::vector<GradedDegree> sorted;
    for (const auto& [r, d] : top) sorted.emplace_back(r, d);
    // monotone chain, upper hull: pop unless the chain turns clockwise
    std::vector<GradedDegree> hull;
    for (const auto& p : sorted) {
        while (hull.size() >= 2) {
            const GradedDegree& o = hull[hull.size() - 2];
            const GradedDegree& a = hull[hull.size() - 1];
            Rat cross = Rat(a.r - o.r) * (p.d - o.d) - (a.d - o.d) * Rat(p.r - o.r);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return UpperRim{std::move(hull)};
}

// value of the piecewise-linear rim at abscissa r (must be in range)
static Rat rim_value(const UpperRim& rim, long r) {
    for (size_t i = 0; i + 1 < rim.vertices.size(); ++i) {
        const auto& a = rim.vertices[i];
        const auto& b = rim.vertices[i + 1];
        if (r >= a.r && r <= b.r) {
            if (a.r == b.r) return std::max(a.d, b.d);
            return a.d + (b.d - a.d) * Rat(r - a.r) / Rat(b.r - a.r);
        }
    }
    if (rim.vertices.size() == 1 && r == rim.vertices[0].r) return rim.vertices[0].d;
    throw error("rim_value: abscissa out of range");
}

bool rim_inside(const UpperRim& inner, const UpperRim& outer) {
    if (inner.vertices.empty() || outer.vertices.empty()) return false;
    if (inner.vertices.front() != outer.vertices.front()) return false;
    if (inner.vertices.back() != outer.vertices.back()) return false;
    for (const auto& v : inner.vertices)
        if (v.d > rim_value(outer, v.r)) return false;
    return true;
}

UpperRim monomial_rim(const OrderedMonomial& m, const StabilityParam& theta) {
    std::vector<GradedDegree> pts;
    GradedDegree cur{0, Rat(0)};
    pts.push_back(cur);
    for (const auto& f : m.factors) {
        cur = cur + j_theta(f.weight, theta);
        pts.push_back(cur);
    }
    return upper_rim(std::move(pts));
}

Functional monomial_value(const Algebra& alg, const OrderedMonomial& m) {
    Functional prod = functional_one(alg);
    for (const auto& f : m.factors) prod = multiply(alg, prod, f);
    return scale(prod, m.coeff);
}

std::vector<GradedDegree> l_theta(const Algebra& alg, const Functional& f,
                                  const StabilityParam& theta) {
    std::vector<GradedDegree> out;
    for (const Weight& mu : underline_L(alg, f)) out.push_back(j_theta(mu, theta));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GradedDegree> r_theta(const Algebra& alg, const Functional& f,
                                  const StabilityParam& theta) {
    std::vector<GradedDegree> out;
    for (const Weight& mu : underline_L(alg, f))
        out.push_back(j_theta(f.weight - mu, theta));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SemistableResult is_semistable(const Algebra& alg, const Functional& f,
                               const StabilityParam& theta) {
    if (f.weight.is_zero()) throw error("is_semistable: zero-degree input");
    if (f.is_zero()) throw error("is_semistable: zero functional");
    Slope s = slope_of(j_theta(f.weight, theta));
    for (const GradedDegree& g : l_theta(alg, f, theta))
        if (slope_cmp(slope_of(g), s) > 0) return {false, s};
    return {true, s};
}

std::vector<Functional> semistable_basis(const Algebra& alg, const Weight& lambda,
                                         const StabilityParam& theta) {
    if (!lambda.in_q_minus()) throw error("semistable_basis: weight outside Q-");
    if (lambda.is_zero()) return {functional_one(alg)};
    const Weight nu = -lambda;
    const Slope s = slope_of(j_theta(lambda, theta));
    const auto& ws = alg.words(nu);
    const SerreSpan& span = alg.serre(nu);
    Mat rows(0, int(ws.size()));
    for (const auto& v : span.basis) {
        std::vector<Rat> row(ws.size(), Rat(0));
        for (const auto& [w, c] : v.terms) row[alg.word_index(nu, w)] = c;
        rows.append_row(row);
    }
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        const Word& w = ws[wi];
        Weight pre = Weight::zero(alg.rank());
        bool bad = false;
        for (size_t k = 0; k + 1 < w.size() && !bad; ++k) {
            pre.c[w[k]] += 1;
            if (slope_cmp(slope_of(j_theta(-pre, theta)), s) > 0) bad = true;
        }
        if (bad) {
            std::vector<Rat> row(ws.size(), Rat(0));
            row[wi] = 1;
            rows.append_row(row);
        }
    }
    std::vector<Functional> out;
    for (auto& v : nullspace(rows)) out.push_back(Functional{lambda, std::move(v)});
    return out;
}

UpperRim pol_wedge(const Algebra& alg, const Functional& f, const StabilityParam& theta) {
    return upper_rim(l_theta(alg, f, theta));
}

long rim_lattice_count(const Algebra& alg, const Functional& f,
                       const StabilityParam& theta) {
    UpperRim rim = pol_wedge(alg, f, theta);
    const GradedDegree total = j_theta(f.weight, theta);
    if (total.r == 0) return 1;
    // distinct Gamma_theta points with abscissa <= height, between the
    // chord and the rim
    std::vector<int> box(alg.rank(), int(total.r));
    std::set<GradedDegree> pts;
    for (const Weight& mu : weights_below(Weight(box))) {
        if (mu.height() > total.r) continue;
        GradedDegree g = j_theta(-mu, theta);
        Rat chord = total.d * Rat(g.r) / Rat(total.r);
        if (g.d < chord) continue;
        if (g.d > rim_value(rim, g.r)) continue;
        pts.insert(g);
    }
    return long(pts.size());
}

static bool functional_less(const Functional& a, const Functional& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.values < b.values;
}

static bool monomial_factors_less(const OrderedMonomial& x, const OrderedMonomial& y) {
    if (x.factors.size() != y.factors.size()) return x.factors.size() < y.factors.size();
    for (size_t i = 0; i < x.factors.size(); ++i) {
        if (!(x.factors[i] == y.factors[i]))
            return functional_less(x.factors[i], y.factors[i]);
    }
    return false;
}

static bool monomial_factors_equal(const OrderedMonomial& x, const OrderedMonomial& y) {
    if (x.factors.size() != y.factors.size()) return false;
    for (size_t i = 0; i < x.factors.size(); ++i)
        if (!(x.factors[i] == y.factors[i])) return false;
    return true;
}

static void validate_ordered(const Algebra& alg, const OrderedMonomial& m,
                             const StabilityParam& theta) {
    for (size_t i = 0; i + 1 < m.factors.size(); ++i) {
        Slope a = slope_of(j_theta(m.factors[i].weight, theta));
        Slope b = slope_of(j_theta(m.factors[i + 1].weight, theta));
        if (slope_cmp(a, b) < 0) throw error("ordered monomial: slopes increase");
    }
    for (const auto& f : m.factors)
        if (f.weight.is_zero()) throw error("ordered monomial: zero-degree factor");
    (void)alg;
}

static std::vector<OrderedMonomial> expand_rec(const Algebra& alg, const Functional& f,
                                               const StabilityParam& theta, long parent_count,
                                               int depth) {
    if (depth > 64) throw error("expand_ordered: recursion too deep");
    const long my_count = rim_lattice_count(alg, f, theta);
    if (parent_count >= 0 && my_count >= parent_count)
        throw error("expand_ordered: recursion measure did not decrease");

    SemistableResult ss = is_semistable(alg, f, theta);
    if (ss.semistable) {
        Rat lead(0);
        for (const Rat& x : f.values)
            if (x != 0) { lead = x; break; }
        return {OrderedMonomial{lead, {monic(f)}}};
    }

    UpperRim rim = pol_wedge(alg, f, theta);
    const GradedDegree alpha = rim.vertices[1]; // leftmost angular point

    std::vector<OrderedMonomial> result;
    Functional recombined = functional_zero(alg, f.weight);
    for (const Weight& mu : underline_L(alg, f)) {
        if (j_theta(mu, theta) != alpha) continue;
        CoproductComponent comp = coproduct_component(alg, f, mu);
        for (const auto& [b, c] : comp.pairs) {
            recombined = add(recombined, multiply(alg, b, c));
            auto eb = expand_rec(alg, b, theta, my_count, depth + 1);
            auto ec = expand_rec(alg, c, theta, my_count, depth + 1);
            for (const auto& mb : eb)
                for (const auto& mc : ec) {
                    OrderedMonomial m;
                    m.coeff = mb.coeff * mc.coeff;
                    m.factors = mb.factors;
                    m.factors.insert(m.factors.end(), mc.factors.begin(),
                                     mc.factors.end());
                    validate_ordered(alg, m, theta);
                    result.push_back(std::move(m));
                }
        }
    }
    Functional rest = add(f, scale(recombined, Rat(-1)));
    if (!rest.is_zero()) {
        auto er = expand_rec(alg, rest, theta, my_count, depth + 1);
        result.insert(result.end(), er.begin(), er.end());
    }
    return result;
}

std::vector<OrderedMonomial> expand_ordered(const Algebra& alg, const Functional& f,
                                            const StabilityParam& theta) {
    if (f.weight.is_zero()) throw error("expand_ordered: zero-degree input");
    if (f.is_zero()) return {};
    auto raw = expand_rec(alg, f, theta, -1, 0);
    std::sort(raw.begin(), raw.end(), monomial_factors_less);
    std::vector<OrderedMonomial> merged;
    for (auto& m : raw) {
        if (!merged.empty() && monomial_factors_equal(merged.back(), m)) {
            merged.back().coeff += m.coeff;
        } else {
            merged.push_back(std::move(m));
        }
    }
    std::vector<OrderedMonomial> out;
    for (auto& m : merged)
        if (m.coeff != 0) out.push_back(std::move(m));
    return out;
}

Functional remultiply(const Algebra& alg, const std::vector<OrderedMonomial>& ms) {
    if (ms.empty()) throw error("remultiply: empty expansion");
    Weight lambda = Weight::zero(ms[0].factors[0].weight.rank());
    for (const auto& f : ms[0].factors) lambda = lambda + f.weight;
    Functional total = functional_zero(alg, lambda);
    for (const auto& m : ms) total = add(total, monomial_value(alg, m));
    return total;
}

FactorizationReport verify_factorization(const Algebra& alg, const Weight& nu,
                                         const StabilityParam& theta, int height_cutoff) {
    if (!nu.in_q_plus()) throw error("verify_factorization: weight outside Q+");
    if (nu.height() > height_cutoff) throw error("verify_factorization: cutoff exceeded");
    FactorizationReport rep;
    rep.dim = alg.u_dim(nu);
    if (nu.is_zero()) {
        rep.count = rep.rank = 1;
        rep.pass = true;
        rep.patterns = {"1"};
        return rep;
    }

    // slope classes of nonzero weights below nu, in decreasing slope order
    struct Entry {
        Weight lambda;
        std::vector<Functional> basis;
    };
    std::vector<std::pair<Slope, std::vector<Entry>>> classes;
    for (const Weight& mu : weights_below(nu)) {
        if (mu.is_zero()) continue;
        Weight lambda = -mu;
        auto basis = semistable_basis(alg, lambda, theta);
        if (basis.empty()) continue;
        Slope s = slope_of(j_theta(lambda, theta));
        auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
            return slope_cmp(c.first, s) == 0;
        });
        if (it == classes.end()) {
            classes.push_back({s, {Entry{lambda, std::move(basis)}}});
        } else {
            it->second.push_back(Entry{lambda, std::move(basis)});
        }
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return slope_cmp(a.first, b.first) > 0;
    });

    std::vector<Functional> products;
    std::vector<std::string> patterns;
    auto rec = [&](auto&& self, size_t idx, const Weight& remaining, const Functional& acc,
                   const std::string& pat) -> void {
        if (remaining.is_zero()) {
            products.push_back(acc);
            patterns.push_back(pat.empty() ? "1" : pat);
            return;
        }
        if (idx == classes.size()) return;
        self(self, idx + 1, remaining, acc, pat); // skip this slope
        for (const Entry& e : classes[idx].second) {
            Weight rest = remaining + e.lambda;
            if (!rest.in_q_plus()) continue;
            for (size_t bi = 0; bi < e.basis.size(); ++bi) {
                Functional next = multiply(alg, acc, e.basis[bi]);
                std::string p = pat;
                if (!p.empty()) p += " * ";
                p += e.lambda.str() + "#" + std::to_string(bi);
                self(self, idx + 1, rest, next, p);
            }
        }
    };
    rec(rec, 0, nu, functional_one(alg), "");

    rep.count = long(products.size());
    rep.patterns = patterns;
    const auto& ws = alg.words(nu);
    Mat m(0, int(ws.size()));
    for (const auto& p : products) m.append_row(p.values);
    rep.rank = rref(m).rank;
    rep.pass = (rep.count == rep.dim) && (rep.rank == rep.dim);
    return rep;
}

static std::vector<Functional> filtration_slice(const Algebra& alg, const Weight& lambda,
                                                const StabilityParam& theta, bool prime,
                                                const GradedDegree& bound) {
    if (!lambda.in_q_minus()) throw error("filtration: weight outside Q-");
    const Weight nu = -lambda;
    if (lambda.is_zero()) {
        // the unit is in every slice containing degree 0
        bool inside = prime ? leq1(GradedDegree{0, Rat(0)}, bound)
                            : leq2(GradedDegree{0, Rat(0)}, bound);
        if (inside) return {functional_one(alg)};
        return {};
    }
    const auto& ws = alg.words(nu);
    const SerreSpan& span = alg.serre(nu);
    Mat rows(0, int(ws.size()));
    for (const auto& v : span.basis) {
        std::vector<Rat> row(ws.size(), Rat(0));
        for (const auto& [w, c] : v.terms) row[alg.word_index(nu, w)] = c;
        rows.append_row(row);
    }
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        const Word& w = ws[wi];
        bool bad = false;
        Weight part = Weight::zero(alg.rank());
        for (size_t k = 0; k <= w.size() && !bad; ++k) {
            // prefix for F', suffix for F''
            if (k > 0) part.c[prime ? w[k - 1] : w[w.size() - k]] += 1;
            GradedDegree g = j_theta(-part, theta);
            bool inside = prime ? leq1(g, bound) : leq2(g, bound);
            if (!inside) bad = true;
        }
        if (bad) {
            std::vector<Rat> row(ws.size(), Rat(0));
            row[wi] = 1;
            rows.append_row(row);
        }
    }
    std::vector<Functional> out;
    for (auto& v : nullspace(rows)) out.push_back(Functional{lambda, std::move(v)});
    return out;
}

std::vector<Functional> filtration_f1(const Algebra& alg, const Weight& lambda,
                                      const GradedDegree& alpha, const StabilityParam& theta) {
    return filtration_slice(alg, lambda, theta, true, alpha);
}

std::vector<Functional> filtration_f2(const Algebra& alg, const Weight& lambda,
                                      const GradedDegree& beta, const StabilityParam& theta) {
    return filtration_slice(alg, lambda, theta, false, beta);
}

// Largest realized degree strictly below the bound; the filtration is
// constant between realized degrees, so the strictly-lower slice is the
// slice there.
static std::optional<GradedDegree> below_bound(const Algebra& alg, const Weight& lambda,
                                               const StabilityParam& theta, bool prime,
                                               const GradedDegree& bound) {
    std::optional<GradedDegree> best;
    for (const Weight& mu : weights_below(-lambda)) {
        GradedDegree g = j_theta(-mu, theta);
        bool lower = prime ? (leq1(g, bound) && g != bound) : (leq2(g, bound) && g != bound);
        if (!lower) continue;
        if (!best || (prime ? leq1(*best, g) : leq2(*best, g))) best = g;
    }
    return best;
}

std::vector<Functional> filtration_f1_below(const Algebra& alg, const Weight& lambda,
                                            const GradedDegree& alpha,
                                            const StabilityParam& theta) {
    auto b = below_bound(alg, lambda, theta, true, alpha);
    if (!b) return {};
    return filtration_f1(alg, lambda, *b, theta);
}

std::vector<Functional> filtration_f2_below(const Algebra& alg, const Weight& lambda,
                                            const GradedDegree& beta,
                                            const StabilityParam& theta) {
    auto b = below_bound(alg, lambda, theta, false, beta);
    if (!b) return {};
    return filtration_f2(alg, lambda, *b, theta);
}

static GradedDegree max_leq1(const std::vector<GradedDegree>& degs) {
    GradedDegree best = degs.front();
    for (const auto& g : degs)
        if (leq1(best, g)) best = g;
    return best;
}

static GradedDegree max_leq2(const std::vector<GradedDegree>& degs) {
    GradedDegree best = degs.front();
    for (const auto& g : degs)
        if (leq2(best, g)) best = g;
    return best;
}

GradedDegree max_l_degree(const Algebra& alg, const Functional& f,
                          const StabilityParam& theta) {
    return max_leq1(l_theta(alg, f, theta));
}

GradedDegree max_r_degree(const Algebra& alg, const Functional& f,
                          const StabilityParam& theta) {
    return max_leq2(r_theta(alg, f, theta));
}

Split1 split_delta1(const Algebra& alg, const Functional& f, const StabilityParam& theta) {
    Split1 out;
    out.alpha = max_leq1(l_theta(alg, f, theta));
    for (const Weight& mu : underline_L(alg, f)) {
        if (j_theta(mu, theta) != out.alpha) continue;
        CoproductComponent comp = coproduct_component(alg, f, mu);
        for (auto& pr : comp.pairs) out.pairs.push_back(std::move(pr));
    }
    return out;
}

Split2 split_delta2(const Algebra& alg, const Functional& f, const StabilityParam& theta) {
    Split2 out;
    out.alpha = max_leq1(l_theta(alg, f, theta));
    out.beta = max_leq2(r_theta(alg, f, theta));
    const Weight lambda = f.weight;
    for (const Weight& d1 : weights_below(-lambda)) {
        const Weight mu1 = -d1;
        if (j_theta(mu1, theta) != out.alpha) continue;
        for (const Weight& d2 : weights_below(-lambda)) {
            const Weight mu2 = -d2;
            if (j_theta(mu2, theta) != out.beta) continue;
            const Weight mid = lambda - mu1 - mu2;
            if (!mid.in_q_minus()) continue;
            const auto& xs = alg.words(-mu1);
            const auto& ys = alg.words(-mid);
            const auto& zs = alg.words(-mu2);
            Mat m1(int(xs.size()), int(ys.size() * zs.size()));
            bool nonzero = false;
            for (size_t xi = 0; xi < xs.size(); ++xi)
                for (size_t yi = 0; yi < ys.size(); ++yi)
                    for (size_t zi = 0; zi < zs.size(); ++zi) {
                        Word w = xs[xi];
                        w.insert(w.end(), ys[yi].begin(), ys[yi].end());
                        w.insert(w.end(), zs[zi].begin(), zs[zi].end());
                        Rat v = f.values[alg.word_index(-lambda, w)];
                        m1(int(xi), int(yi * zs.size() + zi)) = v;
                        if (v != 0) nonzero = true;
                    }
            if (!nonzero) continue;
            Rref r1 = rref(m1);
            for (int k = 0; k < r1.rank; ++k) {
                Functional left{mu1, std::vector<Rat>(xs.size())};
                for (size_t xi = 0; xi < xs.size(); ++xi)
                    left.values[xi] = m1(int(xi), r1.pivots[k]);
                Mat m2(int(ys.size()), int(zs.size()));
                for (size_t yi = 0; yi < ys.size(); ++yi)
                    for (size_t zi = 0; zi < zs.size(); ++zi)
                        m2(int(yi), int(zi)) = r1.r(k, int(yi * zs.size() + zi));
                Rref r2 = rref(m2);
                for (int j = 0; j < r2.rank; ++j) {
                    Functional midf{mid, std::vector<Rat>(ys.size())};
                    for (size_t yi = 0; yi < ys.size(); ++yi)
                        midf.values[yi] = m2(int(yi), r2.pivots[j]);
                    Functional right{mu2, std::vector<Rat>(zs.size())};
                    for (size_t zi = 0; zi < zs.size(); ++zi)
                        right.values[zi] = r2.r(j, int(zi));
                    out.triples.emplace_back(left, midf, right);
                }
            }
        }
    }
    return out;
}

// ---- U(n) side ----

Mat u_free_component(const Algebra& alg, const WordVector& x, const Weight& mu) {
    const Weight rest = x.weight - mu;
    const auto& ls = alg.words(mu);
    const auto& rs = alg.words(rest);
    Mat m(int(ls.size()), int(rs.size()));
    for (const auto& [w, c] : x.terms) {
        const int n = int(w.size());
        for (unsigned long s = 0; s < (1ul << n); ++s) {
            Word left, right;
            for (int p = 0; p < n; ++p)
                ((s >> p) & 1 ? left : right).push_back(w[p]);
            if (word_weight(left, alg.rank()) != mu) continue;
            m(alg.word_index(mu, left), alg.word_index(rest, right)) += c;
        }
    }
    return m;
}

static std::vector<Rat> flatten(const Mat& m) {
    std::vector<Rat> out;
    out.reserve(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

bool u_component_in_ideal(const Algebra& alg, const WordVector& x, const Weight& mu) {
    Mat comp = u_free_component(alg, x, mu);
    if (comp.is_zero()) return true;
    return in_row_span(alg.ideal_pair_span(mu, x.weight - mu), flatten(comp));
}

bool u_is_semistable(const Algebra& alg, const WordVector& x, const StabilityParam& theta) {
    if (x.weight.is_zero()) throw error("u_is_semistable: zero-degree input");
    const Slope s = slope_of(u_degree(x.weight, theta));
    for (const Weight& mu : weights_below(x.weight)) {
        if (mu.is_zero() || mu == x.weight) continue;
        if (slope_cmp(slope_of(u_degree(mu, theta)), s) <= 0) continue;
        if (!u_component_in_ideal(alg, x, mu)) return false;
    }
    return true;
}

std::vector<WordVector> u_semistable_basis(const Algebra& alg, const Weight& nu,
                                           const StabilityParam& theta) {
    if (!nu.in_q_plus()) throw error("u_semistable_basis: weight outside Q+");
    if (nu.is_zero()) {
        WordVector one;
        one.weight = nu;
        one.add(Word{}, Rat(1));
        return {one};
    }
    const auto& ws = alg.words(nu);
    const SerreSpan& span = alg.serre(nu);
    // class representatives: non-pivot words of the Serre echelon form
    std::vector<int> rep;
    for (int j = 0; j < int(ws.size()); ++j)
        if (!span.reduced.is_pivot(j)) rep.push_back(j);

    const Slope s = slope_of(u_degree(nu, theta));
    Mat constraints(0, int(rep.size()));
    for (const Weight& mu : weights_below(nu)) {
        if (mu.is_zero() || mu == nu) continue;
        if (slope_cmp(slope_of(u_degree(mu, theta)), s) <= 0) continue;
        const Rref& ideal = alg.ideal_pair_span(mu, nu - mu);
        std::vector<std::vector<Rat>> residues;
        for (int j : rep) {
            WordVector w;
            w.weight = nu;
            w.add(ws[j], Rat(1));
            residues.push_back(residue(ideal, flatten(u_free_component(alg, w, mu))));
        }
        const int dim = int(residues[0].size());
        for (int row = 0; row < dim; ++row) {
            std::vector<Rat> cr(rep.size());
            bool nonzero = false;
            for (size_t j = 0; j < rep.size(); ++j) {
                cr[j] = residues[j][row];
                if (cr[j] != 0) nonzero = true;
            }
            if (nonzero) constraints.append_row(cr);
        }
    }
    std::vector<WordVector> out;
    for (const auto& sol : nullspace(constraints)) {
        WordVector x;
        x.weight = nu;
        for (size_t j = 0; j < rep.size(); ++j)
            if (sol[j] != 0) x.add(ws[rep[j]], sol[j]);
        out.push_back(std::move(x));
    }
    return out;
}

UpperRim u_monomial_rim(const UOrderedMonomial& m, const StabilityParam& theta) {
    std::vector<GradedDegree> pts;
    GradedDegree cur{0, Rat(0)};
    pts.push_back(cur);
    for (const auto& x : m.factors) {
        cur = cur + u_degree(x.weight, theta);
        pts.push_back(cur);
    }
    return upper_rim(std::move(pts));
}

DualityResult duality_check(const Algebra& alg, const UOrderedMonomial& x,
                            const OrderedMonomial& f, const StabilityParam& theta) {
    for (const auto& fac : x.factors)
        if (!u_is_semistable(alg, fac, theta))
            throw error("duality_check: U-side factor not semistable for this theta");
    for (const auto& fac : f.factors)
        if (!is_semistable(alg, fac, theta).semistable)
            throw error("duality_check: O-side factor not semistable for this theta");
    for (size_t i = 0; i + 1 < x.factors.size(); ++i)
        if (slope_cmp(slope_of(u_degree(x.factors[i].weight, theta)),
                      slope_of(u_degree(x.factors[i + 1].weight, theta))) < 0)
            throw error("duality_check: U-side slopes increase");
    validate_ordered(alg, f, theta);

    WordVector prod;
    prod.weight = Weight::zero(alg.rank());
    prod.add(Word{}, x.coeff);
    for (const auto& fac : x.factors) prod = concat(prod, fac);
    Functional fv = monomial_value(alg, f);

    DualityResult out;
    out.pairing = pair_with(alg, prod, fv);
    out.rims_match = (u_monomial_rim(x, theta) == monomial_rim(f, theta));
    if (!out.rims_match && out.pairing != 0)
        throw error("duality_check: mismatched rims paired nonzero");
    return out;
}

SlopeSubalgebraReport verify_slope_subalgebra(const Algebra& alg, const StabilityParam& theta,
                                              const Weight& nu) {
    SlopeSubalgebraReport rep;
    rep.slope = slope_of(u_degree(nu, theta));
    rep.semistable_dim = long(u_semistable_basis(alg, nu, theta).size());
    // Kostant count restricted to positive roots of the same slope
    std::vector<Weight> roots;
    for (const Weight& r : alg.roots())
        if (slope_cmp(slope_of(u_degree(r, theta)), rep.slope) == 0) roots.push_back(r);
    std::map<std::pair<int, std::vector<int>>, long> memo;
    auto rec = [&](auto&& self, int idx, const Weight& rest) -> long {
        if (rest.is_zero()) return 1;
        if (idx == int(roots.size())) return 0;
        auto key = std::make_pair(idx, rest.c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long total = 0;
        Weight r = rest;
        for (;;) {
            total += self(self, idx + 1, r);
            bool ok = true;
            for (int i = 0; i < r.rank(); ++i) {
                r.c[i] -= roots[idx].c[i];
                if (r.c[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo[key] = total;
        return total;
    };
    rep.restricted_kostant = nu.is_zero() ? 1 : rec(rec, 0, nu);
    rep.pass = (rep.semistable_dim == rep.restricted_kostant);
    return rep;
}

} // namespace ggms

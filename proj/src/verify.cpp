#include "ggms/verify.hpp"

#include <chrono>
#include <random>

namespace ggms {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

Functional random_o_element(const Algebra& alg, const Weight& lambda, std::mt19937& rng) {
    const auto& basis = alg.o_basis(lambda);
    Functional f = functional_zero(alg, lambda);
    for (const auto& b : basis) {
        Rat c(int(rng() % 9) - 4);
        for (size_t k = 0; k < b.size(); ++k) f.values[k] += c * b[k];
    }
    return f;
}

Weight random_weight(const Algebra& alg, int max_height, std::mt19937& rng) {
    for (;;) {
        Weight nu = Weight::zero(alg.rank());
        for (int i = 0; i < alg.rank(); ++i) nu.c[i] = int(rng() % (max_height + 1));
        if (nu.height() >= 1 && nu.height() <= max_height) return -nu;
    }
}

std::vector<std::pair<std::string, int>> pairs_or_override(
    const VerifyOptions& opt, std::vector<std::pair<std::string, int>> defaults) {
    if (opt.cartan.empty()) return defaults;
    int h = opt.height;
    if (h == 0)
        for (const auto& [c, hh] : defaults)
            if (c == opt.cartan) h = hh;
    if (h == 0) h = 4;
    return {{opt.cartan, h}};
}

std::vector<StabilityParam> thetas_or_override(const VerifyOptions& opt,
                                               const CartanData& cartan) {
    if (!opt.thetas.empty()) return opt.thetas;
    return suite_theta_samples(cartan);
}

// ---- criterion 1 ----
SuiteResult suite_pbw(const VerifyOptions& opt) {
    SuiteResult res{"pbw"};
    for (const auto& [label, hmax] :
         pairs_or_override(opt, {{"A2", 8}, {"A3", 6}, {"B2", 6}})) {
        Algebra alg(CartanData::from_label(label));
        long checked = 0;
        std::vector<int> box(alg.rank(), hmax);
        for (const Weight& nu : weights_below(Weight(box))) {
            if (nu.height() > hmax) continue;
            long u = alg.u_dim(nu), k = alg.kostant(nu);
            if (u != k)
                res.fail(label + " at " + nu.str() + ": u_dim " + std::to_string(u) +
                         " vs kostant " + std::to_string(k));
            ++checked;
        }
        res.note(label + "_weights", std::to_string(checked));
    }
    return res;
}

// ---- criterion 2 ----
SuiteResult suite_factorization(const VerifyOptions& opt) {
    SuiteResult res{"factorization"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 6}, {"A3", 4}})) {
        Algebra alg(CartanData::from_label(label));
        auto thetas = thetas_or_override(opt, alg.cartan());
        long reports = 0;
        std::vector<int> box(alg.rank(), hmax);
        for (const auto& theta : thetas) {
            for (const Weight& nu : weights_below(Weight(box))) {
                if (nu.height() > hmax) continue;
                FactorizationReport rep = verify_factorization(alg, nu, theta, hmax);
                if (!rep.pass)
                    res.fail(label + " theta=" + theta.str() + " nu=" + nu.str() +
                             ": count " + std::to_string(rep.count) + " rank " +
                             std::to_string(rep.rank) + " dim " + std::to_string(rep.dim));
                ++reports;
            }
        }
        res.note(label + "_reports", std::to_string(reports));
    }
    return res;
}

// ---- criterion 3 ----
SuiteResult suite_expansion(const VerifyOptions& opt) {
    SuiteResult res{"expansion"};
    for (const auto& [label, hmax] :
         pairs_or_override(opt, {{"A2", 5}, {"A3", 4}, {"B2", 4}})) {
        Algebra alg(CartanData::from_label(label));
        auto thetas = thetas_or_override(opt, alg.cartan());
        for (size_t ti = 0; ti < thetas.size(); ++ti) {
            std::mt19937 rng(opt.seed + unsigned(ti));
            int done = 0;
            while (done < 100) {
                Weight lambda = random_weight(alg, hmax, rng);
                Functional f = random_o_element(alg, lambda, rng);
                if (f.is_zero()) continue;
                ++done;
                std::vector<OrderedMonomial> ms;
                try {
                    ms = expand_ordered(alg, f, thetas[ti]);
                } catch (const error& e) {
                    res.fail(label + " theta=" + thetas[ti].str() + ": " + e.what());
                    continue;
                }
                if (!(remultiply(alg, ms) == f))
                    res.fail(label + " theta=" + thetas[ti].str() +
                             ": re-multiplication differs at " + lambda.str());
                UpperRim rim = pol_wedge(alg, f, thetas[ti]);
                for (const auto& m : ms) {
                    Weight total = Weight::zero(alg.rank());
                    for (const auto& fac : m.factors) total = total + fac.weight;
                    if (total != lambda)
                        res.fail(label + ": monomial degree mismatch at " + lambda.str());
                    if (!rim_inside(monomial_rim(m, thetas[ti]), rim))
                        res.fail(label + ": monomial rim escapes at " + lambda.str());
                }
            }
        }
        res.note(label + "_inputs", std::to_string(100 * thetas.size()));
    }
    return res;
}

// ---- criterion 4 ----
SuiteResult suite_duality(const VerifyOptions& opt) {
    SuiteResult res{"duality"};
    const std::string label = opt.cartan.empty() ? "A2" : opt.cartan;
    const int hmax = opt.height ? opt.height : 4;
    Algebra alg(CartanData::from_label(label));
    std::vector<StabilityParam> thetas;
    if (!opt.thetas.empty()) {
        thetas = opt.thetas;
    } else {
        std::vector<Rat> alt;
        for (int i = 0; i < alg.rank(); ++i) alt.push_back(Rat(i % 2 ? -1 : 1));
        thetas = {StabilityParam(alt), distinct_slope_theta(alg.cartan())};
    }
    long pairs = 0, matching_nonzero = 0;
    std::vector<int> box(alg.rank(), hmax);
    for (const auto& theta : thetas) {
        for (const Weight& nu : weights_below(Weight(box))) {
            if (nu.height() < 1 || nu.height() > hmax) continue;
            // ordered monomials on both sides via decreasing slope patterns
            struct OClass {
                Slope s;
                std::vector<std::pair<Weight, std::vector<Functional>>> slices;
            };
            struct UClass {
                Slope s;
                std::vector<std::pair<Weight, std::vector<WordVector>>> slices;
            };
            std::vector<OClass> oclasses;
            std::vector<UClass> uclasses;
            for (const Weight& mu : weights_below(nu)) {
                if (mu.is_zero()) continue;
                Slope s = slope_of(u_degree(mu, theta));
                auto ob = semistable_basis(alg, -mu, theta);
                if (!ob.empty()) {
                    auto it = std::find_if(oclasses.begin(), oclasses.end(), [&](auto& c) {
                        return slope_cmp(c.s, s) == 0;
                    });
                    if (it == oclasses.end())
                        oclasses.push_back({s, {{-mu, ob}}});
                    else
                        it->slices.push_back({-mu, ob});
                }
                auto ub = u_semistable_basis(alg, mu, theta);
                if (!ub.empty()) {
                    auto it = std::find_if(uclasses.begin(), uclasses.end(), [&](auto& c) {
                        return slope_cmp(c.s, s) == 0;
                    });
                    if (it == uclasses.end())
                        uclasses.push_back({s, {{mu, ub}}});
                    else
                        it->slices.push_back({mu, ub});
                }
            }
            auto bigger = [](const Slope& a, const Slope& b) { return slope_cmp(a, b) > 0; };
            std::sort(oclasses.begin(), oclasses.end(),
                      [&](auto& a, auto& b) { return bigger(a.s, b.s); });
            std::sort(uclasses.begin(), uclasses.end(),
                      [&](auto& a, auto& b) { return bigger(a.s, b.s); });

            std::vector<OrderedMonomial> omons;
            std::vector<UOrderedMonomial> umons;
            {
                OrderedMonomial acc{Rat(1), {}};
                auto rec = [&](auto&& self, size_t idx, Weight rem) -> void {
                    if (rem.is_zero()) {
                        omons.push_back(acc);
                        return;
                    }
                    if (idx == oclasses.size()) return;
                    self(self, idx + 1, rem);
                    for (const auto& [lam, basis] : oclasses[idx].slices) {
                        Weight rest = rem + lam;
                        if (!rest.in_q_plus()) continue;
                        for (const auto& b : basis) {
                            acc.factors.push_back(b);
                            self(self, idx + 1, rest);
                            acc.factors.pop_back();
                        }
                    }
                };
                rec(rec, 0, nu);
            }
            {
                UOrderedMonomial acc{Rat(1), {}};
                auto rec = [&](auto&& self, size_t idx, Weight rem) -> void {
                    if (rem.is_zero()) {
                        umons.push_back(acc);
                        return;
                    }
                    if (idx == uclasses.size()) return;
                    self(self, idx + 1, rem);
                    for (const auto& [mu, basis] : uclasses[idx].slices) {
                        Weight rest = rem - mu;
                        if (!rest.in_q_plus()) continue;
                        for (const auto& x : basis) {
                            acc.factors.push_back(x);
                            self(self, idx + 1, rest);
                            acc.factors.pop_back();
                        }
                    }
                };
                rec(rec, 0, nu);
            }
            for (const auto& um : umons) {
                if (um.factors.empty()) continue;
                for (const auto& om : omons) {
                    if (om.factors.empty()) continue;
                    DualityResult r;
                    try {
                        r = duality_check(alg, um, om, theta);
                    } catch (const error& e) {
                        res.fail(std::string("duality_check: ") + e.what());
                        continue;
                    }
                    ++pairs;
                    if (!r.rims_match && r.pairing != 0)
                        res.fail("mismatched rims paired nonzero at " + nu.str());
                    if (r.rims_match && r.pairing != 0) ++matching_nonzero;
                }
            }
        }
    }
    res.note("pairs", std::to_string(pairs));
    res.note("matching_nonzero", std::to_string(matching_nonzero));
    if (matching_nonzero == 0) res.fail("no matching-rim pair paired nonzero");
    return res;
}

// ---- criterion 5 ----
SuiteResult suite_politeness(const VerifyOptions& opt) {
    SuiteResult res{"politeness"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 6}, {"A3", 4}})) {
        Algebra alg(CartanData::from_label(label));
        Catalog cat = load_catalog(alg, catalog_path(opt.data_dir, label));
        BasisFamily fam = semicanonical_family(alg, cat, hmax);
        auto thetas = opt.thetas.empty() ? default_theta_samples(alg.cartan()) : opt.thetas;
        Report rep = politeness_check(alg, fam, thetas);
        for (const auto& f : rep.failures) res.fail(label + " politeness: " + f);
        Report bi = is_biperfect(alg, fam);
        for (const auto& f : bi.failures) res.fail(label + " biperfect: " + f);
        try {
            CrystalGraph g = crystal_graph(alg, fam);
            std::map<Weight, long> counts;
            for (const auto& n : g.nodes) counts[n.weight] += 1;
            for (const auto& [lambda, c] : counts)
                if (c != alg.kostant(-lambda))
                    res.fail(label + " node count at " + lambda.str() + ": " +
                             std::to_string(c));
            res.note(label + "_nodes", std::to_string(g.nodes.size()));
        } catch (const error& e) {
            res.fail(label + " crystal: " + e.what());
        }
    }
    return res;
}

// ---- criterion 6 ----
SuiteResult suite_hn_polytope(const VerifyOptions& opt) {
    SuiteResult res{"hn-polytope"};
    long checked = 0;
    for (const auto& [label, hmax] :
         pairs_or_override(opt, {{"A2", 6}, {"A3", 6}, {"A4", 4}})) {
        Algebra alg(CartanData::from_label(label));
        Catalog cat = load_catalog(alg, catalog_path(opt.data_dir, label));
        // catalog entries within the dimension bound
        for (size_t k = 0; k < cat.entries.size(); ++k) {
            const auto& e = cat.entries[k];
            if (e.module.total_dim() > 6) continue;
            if (!equals(hn_polytope(e.module), negate(pol(alg, cat.phi_of(alg, k)))))
                res.fail(label + " entry " + e.label);
            ++checked;
        }
        // rigid combinations up to the height cutoff
        std::vector<int> box(alg.rank(), hmax);
        for (const Weight& nu : weights_below(Weight(box))) {
            long h = nu.height();
            if (h < 1 || h > std::min(hmax, 6)) continue;
            for (const auto& b : semicanonical_basis(alg, cat, nu)) {
                if (!equals(hn_polytope(b.module), negate(pol(alg, b.value))))
                    res.fail(label + " basis " + b.label + " at " + nu.str());
                ++checked;
            }
        }
    }
    res.note("modules", std::to_string(checked));
    return res;
}

// ---- criterion 7 ----
SuiteResult suite_zeta(const VerifyOptions& opt) {
    SuiteResult res{"zeta"};
    const std::string label = opt.cartan.empty() ? "A2" : opt.cartan;
    Algebra alg(CartanData::from_label(label));
    for (int i = 0; i < alg.rank(); ++i) {
        PModule simple = zero_module(alg.cartan());
        simple.dims[i] = 1;
        PModule acc = zero_module(alg.cartan());
        Rat fact(1);
        for (int n = 1; n <= 5; ++n) {
            fact *= n;
            acc = direct_sum(acc, simple);
            Functional zn = power(alg, zeta(alg, i), n);
            WordVector en;
            en.weight = Weight::zero(alg.rank());
            Word w(size_t(n), i);
            en.weight.c[i] = n;
            en.add(w, Rat(1));
            if (pair_with(alg, en, zn) != fact)
                res.fail("pairing <e^" + std::to_string(n) + ", zeta^n> differs from n! at i=" +
                         std::to_string(i + 1));
            if (!(phi(alg, acc) == zn))
                res.fail("phi(" + std::to_string(n) + " S_" + std::to_string(i + 1) +
                         ") differs from zeta^" + std::to_string(n));
        }
    }
    res.note("letters", std::to_string(alg.rank()));
    return res;
}

// ---- criterion 8 ----
SuiteResult suite_ggms_injectivity(const VerifyOptions& opt) {
    SuiteResult res{"ggms-injectivity"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 6}, {"A3", 4}})) {
        Algebra alg(CartanData::from_label(label));
        Catalog cat = load_catalog(alg, catalog_path(opt.data_dir, label));
        BasisFamily fam = semicanonical_family(alg, cat, hmax);
        long polytopes = 0;
        for (const auto& [lambda, elems] : fam.by_weight) {
            for (const auto& b : elems) {
                if (lambda.is_zero()) continue;
                if (!is_ggms(pol(alg, b.value), alg.cartan()))
                    res.fail(label + " " + b.label + " at " + lambda.str() + " is not GGMS");
                ++polytopes;
            }
        }
        Report inj = polytope_injectivity(alg, fam);
        for (const auto& f : inj.failures) res.fail(label + " " + f);
        res.note(label + "_polytopes", std::to_string(polytopes));
    }
    return res;
}

// ---- criterion 9 ----
SuiteResult suite_a4_remark(const VerifyOptions& opt) {
    SuiteResult res{"a4-remark"};
    Algebra alg(CartanData::from_label("A4"));
    Catalog cat = load_catalog(alg, catalog_path(opt.data_dir, "A4"));
    auto find = [&](std::vector<int> dims, std::vector<int> head,
                    std::vector<int> socle) -> const PModule* {
        for (const auto& e : cat.entries) {
            if (e.module.dims != dims) continue;
            auto [h, s] = head_socle_multiplicities(e.module);
            if (h == head && s == socle) return &e.module;
        }
        return nullptr;
    };
    const PModule* p3 = find({1, 2, 2, 1}, {0, 0, 1, 0}, {0, 1, 0, 0});
    const PModule* p2 = find({1, 2, 2, 1}, {0, 1, 0, 0}, {0, 0, 1, 0});
    const PModule* m4321 = find({1, 1, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 0});
    const PModule* w1324 = find({1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1});
    const PModule* m32 = find({0, 1, 1, 0}, {0, 0, 1, 0}, {0, 1, 0, 0});
    const PModule* nmod = find({1, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 0});
    if (!p3 || !p2 || !m4321 || !w1324 || !m32 || !nmod) {
        res.fail("catalog does not contain the required modules");
        return res;
    }
    PModule mprime = *p3;
    for (int k = 1; k < 4; ++k) mprime = direct_sum(mprime, *p3);
    PModule msecond = direct_sum(*m4321, *p2);
    msecond = direct_sum(msecond, *w1324);
    msecond = direct_sum(msecond, *w1324);
    for (int k = 0; k < 3; ++k) msecond = direct_sum(msecond, *m32);

    auto [h1, s1] = head_socle_multiplicities(mprime);
    if (h1 != std::vector<int>{0, 0, 4, 0}) res.fail("head of M' differs from (0,0,4,0)");
    if (s1 != std::vector<int>{0, 4, 0, 0}) res.fail("socle of M' differs from (0,4,0,0)");
    auto [h2, s2] = head_socle_multiplicities(msecond);
    if (h2 != std::vector<int>{2, 1, 5, 1}) res.fail("head of M'' differs from (2,1,5,1)");
    if (s2 != std::vector<int>{1, 5, 1, 2}) res.fail("socle of M'' differs from (1,5,1,2)");

    long hom1 = hom_dim(*nmod, mprime);
    long hom2 = hom_dim(*nmod, msecond);
    if (hom1 != 4) res.fail("hom(N, M') = " + std::to_string(hom1) + ", expected 4");
    if (hom2 != 2) res.fail("hom(N, M'') = " + std::to_string(hom2) + ", expected 2");
    res.note("hom_mprime", std::to_string(hom1));
    res.note("hom_msecond", std::to_string(hom2));
    return res;
}

// ---- criterion 10 ----
SuiteResult suite_slope_subalgebra(const VerifyOptions& opt) {
    SuiteResult res{"slope-subalgebra"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 6}, {"A3", 6}})) {
        Algebra alg(CartanData::from_label(label));
        auto thetas = opt.thetas.empty() ? default_theta_samples(alg.cartan()) : opt.thetas;
        long checked = 0;
        std::vector<int> box(alg.rank(), hmax);
        for (const auto& theta : thetas) {
            for (const Weight& nu : weights_below(Weight(box))) {
                if (nu.height() < 1 || nu.height() > hmax) continue;
                SlopeSubalgebraReport rep = verify_slope_subalgebra(alg, theta, nu);
                if (!rep.pass)
                    res.fail(label + " theta=" + theta.str() + " nu=" + nu.str() + ": dim " +
                             std::to_string(rep.semistable_dim) + " vs kostant " +
                             std::to_string(rep.restricted_kostant));
                ++checked;
            }
        }
        res.note(label + "_slices", std::to_string(checked));
    }
    return res;
}

// ---- criterion 11 ----
SuiteResult suite_transition(const VerifyOptions& opt) {
    SuiteResult res{"transition"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 5}, {"A3", 4}})) {
        Algebra alg(CartanData::from_label(label));
        Catalog cat = load_catalog(alg, catalog_path(opt.data_dir, label));
        BasisFamily fam = semicanonical_family(alg, cat, hmax);
        TransitionResult self = transition_matrix(alg, fam, fam);
        for (const auto& f : self.report.failures) res.fail(label + " self: " + f);
        for (const auto& [lambda, rl, cl, t] : self.matrices)
            for (int r = 0; r < t.rows(); ++r)
                for (int c = 0; c < t.cols(); ++c)
                    if (t(r, c) != (r == c ? Rat(1) : Rat(0)))
                        res.fail(label + " self transition differs from identity at " +
                                 lambda.str());
        TransitionResult st = transition_matrix(alg, fam, star_family(alg, fam));
        for (const auto& f : st.report.failures) res.fail(label + " star: " + f);
        res.note(label + "_weights", std::to_string(self.matrices.size()));
    }
    return res;
}

// ---- criterion 12 ----
SuiteResult suite_splitting(const VerifyOptions& opt) {
    SuiteResult res{"splitting"};
    for (const auto& [label, hmax] : pairs_or_override(opt, {{"A2", 5}, {"A3", 4}})) {
        Algebra alg(CartanData::from_label(label));
        auto thetas = thetas_or_override(opt, alg.cartan());
        for (size_t ti = 0; ti < thetas.size(); ++ti) {
            const StabilityParam& theta = thetas[ti];
            std::mt19937 rng(opt.seed + unsigned(1000 + ti));
            int done = 0;
            while (done < 50) {
                Weight lambda = random_weight(alg, hmax, rng);
                Functional f = random_o_element(alg, lambda, rng);
                if (f.is_zero()) continue;
                ++done;
                // Delta' splitting: recover modulo the strictly lower slice
                Split1 s1 = split_delta1(alg, f, theta);
                Functional g = functional_zero(alg, lambda);
                for (const auto& [b, c] : s1.pairs) g = add(g, multiply(alg, b, c));
                Functional r1 = add(f, scale(g, Rat(-1)));
                {
                    auto lower = filtration_f1_below(alg, lambda, s1.alpha, theta);
                    Mat rows(0, int(f.values.size()));
                    for (const auto& l : lower) rows.append_row(l.values);
                    if (!in_row_span(rref(rows), r1.values))
                        res.fail(label + " theta=" + theta.str() +
                                 " split' residue outside lower slice at " + lambda.str());
                }
                // mirrored Delta'' splitting
                GradedDegree beta = max_r_degree(alg, f, theta);
                Functional g2 = functional_zero(alg, lambda);
                for (const Weight& mu : underline_L(alg, f)) {
                    if (j_theta(f.weight - mu, theta) != beta) continue;
                    CoproductComponent comp = coproduct_component(alg, f, mu);
                    for (const auto& [b, c] : comp.pairs) g2 = add(g2, multiply(alg, b, c));
                }
                Functional r2 = add(f, scale(g2, Rat(-1)));
                {
                    auto lower = filtration_f2_below(alg, lambda, beta, theta);
                    Mat rows(0, int(f.values.size()));
                    for (const auto& l : lower) rows.append_row(l.values);
                    if (!in_row_span(rref(rows), r2.values))
                        res.fail(label + " theta=" + theta.str() +
                                 " split'' residue outside lower slice at " + lambda.str());
                }
                // Delta_2 slicing: recover modulo both lower filtrations
                Split2 s2 = split_delta2(alg, f, theta);
                Functional g3 = functional_zero(alg, lambda);
                for (const auto& [p, m, n] : s2.triples)
                    g3 = add(g3, multiply(alg, multiply(alg, p, m), n));
                Functional r3 = add(f, scale(g3, Rat(-1)));
                {
                    auto low1 = filtration_f1_below(alg, lambda, s2.alpha, theta);
                    auto low2 = filtration_f2_below(alg, lambda, s2.beta, theta);
                    Mat rows(0, int(f.values.size()));
                    for (const auto& l : low1) rows.append_row(l.values);
                    for (const auto& l : low2) rows.append_row(l.values);
                    if (!in_row_span(rref(rows), r3.values))
                        res.fail(label + " theta=" + theta.str() +
                                 " slicing residue outside lower slices at " + lambda.str());
                }
            }
        }
        res.note(label + "_inputs", std::to_string(50 * thetas.size()));
    }
    return res;
}

} // namespace

std::vector<StabilityParam> suite_theta_samples(const CartanData& cartan) {
    std::vector<StabilityParam> out;
    std::vector<Rat> alt, two;
    for (int i = 0; i < cartan.rank; ++i) {
        alt.push_back(Rat(i % 2 ? -1 : 1));
        two.push_back(i == 0 ? Rat(2) : Rat(i % 2 ? -1 : 1));
    }
    out.push_back(StabilityParam(alt));
    out.push_back(StabilityParam(std::vector<Rat>(cartan.rank, Rat(1)))); // tied
    out.push_back(StabilityParam(two));
    out.push_back(StabilityParam::zero(cartan.rank));
    out.push_back(distinct_slope_theta(cartan));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "pbw",          "factorization", "expansion", "duality",
        "politeness",   "hn-polytope",   "zeta",      "ggms-injectivity",
        "a4-remark",    "slope-subalgebra", "transition", "splitting"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    Timer timer;
    SuiteResult res;
    if (name == "pbw")
        res = suite_pbw(opt);
    else if (name == "factorization")
        res = suite_factorization(opt);
    else if (name == "expansion")
        res = suite_expansion(opt);
    else if (name == "duality")
        res = suite_duality(opt);
    else if (name == "politeness")
        res = suite_politeness(opt);
    else if (name == "hn-polytope")
        res = suite_hn_polytope(opt);
    else if (name == "zeta")
        res = suite_zeta(opt);
    else if (name == "ggms-injectivity")
        res = suite_ggms_injectivity(opt);
    else if (name == "a4-remark")
        res = suite_a4_remark(opt);
    else if (name == "slope-subalgebra")
        res = suite_slope_subalgebra(opt);
    else if (name == "transition")
        res = suite_transition(opt);
    else if (name == "splitting")
        res = suite_splitting(opt);
    else
        throw error("unknown suite: " + name);
    res.seconds = timer.elapsed();
    return res;
}

} // namespace ggms

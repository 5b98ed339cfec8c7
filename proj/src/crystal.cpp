#include "ggms/crystal.hpp"

#include <algorithm>
#include <sstream>

namespace ggms {

BasisFamily semicanonical_family(const Algebra& alg, const Catalog& cat, int height_cutoff) {
    BasisFamily fam;
    fam.height_cutoff = height_cutoff;
    std::vector<int> box(alg.rank(), height_cutoff);
    for (const Weight& nu : weights_below(Weight(box))) {
        if (nu.height() > height_cutoff) continue;
        fam.by_weight[-nu] = semicanonical_basis(alg, cat, nu);
    }
    return fam;
}

BasisFamily star_family(const Algebra& alg, const BasisFamily& b) {
    BasisFamily out;
    out.height_cutoff = b.height_cutoff;
    for (const auto& [lambda, elems] : b.by_weight) {
        std::vector<BasisElement> imgs;
        for (const auto& e : elems) {
            BasisElement s = e;
            s.label = e.label + "*";
            s.value = star(alg, e.value);
            imgs.push_back(std::move(s));
        }
        out.by_weight[lambda] = std::move(imgs);
    }
    return out;
}

namespace {

// index of the member with exactly this value vector, or -1
int find_member(const std::vector<BasisElement>& elems, const Functional& f) {
    for (size_t k = 0; k < elems.size(); ++k)
        if (elems[k].value == f) return int(k);
    return -1;
}

std::string wstr(const Weight& w) { return w.str(); }

} // namespace

Report is_perfect(const Algebra& alg, const BasisFamily& fam) {
    Report rep;
    long elements = 0;
    for (const auto& [lambda, elems] : fam.by_weight) elements += long(elems.size());
    rep.note("elements", std::to_string(elements));
    for (int i = 0; i < alg.rank(); ++i) {
        // images per n: the map {ell_i = n} -> {ell_i = 0} must be
        // injective and land on family members
        std::map<int, std::vector<std::pair<std::string, Functional>>> images;
        for (const auto& [lambda, elems] : fam.by_weight) {
            for (const auto& b : elems) {
                int n = ell(alg, i, b.value);
                if (n == 0) continue;
                Functional img = e_act(alg, i, n, b.value);
                Weight target = img.weight;
                auto it = fam.by_weight.find(target);
                if (it == fam.by_weight.end()) {
                    if (-target.height() <= fam.height_cutoff)
                        rep.fail("image weight missing from family: " + wstr(target));
                    continue;
                }
                int idx = find_member(it->second, img);
                if (idx < 0) {
                    rep.fail("e_" + std::to_string(i + 1) + "^(" + std::to_string(n) +
                             ") of " + b.label + " at " + wstr(lambda) +
                             " is not a basis element");
                    continue;
                }
                if (ell(alg, i, img) != 0)
                    rep.fail("image of " + b.label + " has nonzero ell_" +
                             std::to_string(i + 1));
                images[n].push_back({b.label, img});
            }
        }
        for (const auto& [n, list] : images) {
            for (size_t a = 0; a < list.size(); ++a)
                for (size_t c = a + 1; c < list.size(); ++c)
                    if (list[a].second == list[c].second)
                        rep.fail("divided-power map not injective: " + list[a].first +
                                 " and " + list[c].first + " collide at i=" +
                                 std::to_string(i + 1) + ", n=" + std::to_string(n));
        }
    }
    return rep;
}

Report is_biperfect(const Algebra& alg, const BasisFamily& fam) {
    Report rep = is_perfect(alg, fam);
    Report star_rep = is_perfect(alg, star_family(alg, fam));
    for (const auto& f : star_rep.failures) rep.fail("[star] " + f);
    if (star_rep.pass) rep.note("star_perfect", "yes");
    // the involution permutes the family: star of each member is again a
    // member of the same weight
    for (const auto& [lambda, elems] : fam.by_weight)
        for (const auto& b : elems)
            if (find_member(elems, star(alg, b.value)) < 0)
                rep.fail("star of " + b.label + " at " + lambda.str() +
                         " is not a member");
    return rep;
}

CrystalGraph crystal_graph(const Algebra& alg, const BasisFamily& fam) {
    Report perfectness = is_perfect(alg, fam);
    if (!perfectness.pass) throw error("crystal_graph: family is not perfect");
    CrystalGraph g;
    std::map<std::pair<Weight, int>, int> node_index; // (weight, position) -> id
    for (const auto& [lambda, elems] : fam.by_weight) {
        for (size_t k = 0; k < elems.size(); ++k) {
            CrystalGraph::Node n;
            n.label = elems[k].label;
            n.weight = lambda;
            for (int i = 0; i < alg.rank(); ++i) {
                n.eps.push_back(ell(alg, i, elems[k].value));
                n.eps_star.push_back(ell(alg, i, star(alg, elems[k].value)));
            }
            node_index[{lambda, int(k)}] = int(g.nodes.size());
            g.nodes.push_back(std::move(n));
        }
    }
    // e~_i arrows: b with ell_i = n >= 1 maps to the unique b' of weight
    // lambda + alpha_i with ell_i(b') = n-1 and e^(n-1) b' = e^(n) b.
    for (const auto& [lambda, elems] : fam.by_weight) {
        for (size_t k = 0; k < elems.size(); ++k) {
            for (int i = 0; i < alg.rank(); ++i) {
                int n = ell(alg, i, elems[k].value);
                if (n == 0) continue;
                Weight up = lambda;
                up.c[i] += 1;
                auto it = fam.by_weight.find(up);
                if (it == fam.by_weight.end()) {
                    if (-up.height() <= fam.height_cutoff)
                        throw error("crystal_graph: missing weight " + up.str());
                    continue;
                }
                Functional target = e_act(alg, i, n, elems[k].value);
                int to = -1;
                for (size_t j = 0; j < it->second.size(); ++j) {
                    const Functional& cand = it->second[j].value;
                    if (ell(alg, i, cand) != n - 1) continue;
                    if (e_act(alg, i, n - 1, cand) == target) {
                        if (to >= 0) throw error("crystal_graph: e~ arrow not unique");
                        to = int(j);
                    }
                }
                if (to < 0) throw error("crystal_graph: no e~ arrow for " + elems[k].label);
                g.edges.push_back(CrystalGraph::Edge{i, node_index[{lambda, int(k)}],
                                                     node_index[{up, to}]});
            }
        }
    }
    return g;
}

std::vector<StabilityParam> default_theta_samples(const CartanData& cartan) {
    std::vector<StabilityParam> out;
    for (const Cone& chamber : weyl_chambers(cartan)) {
        std::vector<Rat> interior(cartan.rank, Rat(0));
        for (const auto& g : chamber.generators)
            for (int i = 0; i < cartan.rank; ++i) interior[i] += g[i];
        out.push_back(StabilityParam(std::move(interior)));
    }
    // a tied sample (all simple roots share a slope) and zero
    out.push_back(StabilityParam(std::vector<Rat>(cartan.rank, Rat(1))));
    out.push_back(StabilityParam::zero(cartan.rank));
    return out;
}

StabilityParam distinct_slope_theta(const CartanData& cartan) {
    auto roots = positive_roots(cartan);
    for (long seed = 1; seed < 4000; ++seed) {
        std::vector<Rat> t;
        long v = seed;
        for (int i = 0; i < cartan.rank; ++i) {
            t.push_back(Rat(v % 7 - 3));
            v /= 7;
        }
        StabilityParam theta(t);
        bool distinct = true;
        for (size_t a = 0; a < roots.size() && distinct; ++a)
            for (size_t b = a + 1; b < roots.size() && distinct; ++b) {
                Slope sa = slope_of(u_degree(roots[a], theta));
                Slope sb = slope_of(u_degree(roots[b], theta));
                if (slope_cmp(sa, sb) == 0) distinct = false;
            }
        if (distinct) return theta;
    }
    throw error("no distinct-slope theta found");
}

namespace {

bool l_inside(const Algebra& alg, const Functional& f, const GradedDegree& bound,
              const StabilityParam& theta) {
    for (const Weight& mu : underline_L(alg, f))
        if (!leq1(j_theta(mu, theta), bound)) return false;
    return true;
}

bool r_inside(const Algebra& alg, const Functional& f, const GradedDegree& bound,
              const StabilityParam& theta) {
    for (const Weight& mu : underline_L(alg, f)) {
        GradedDegree g = j_theta(f.weight - mu, theta);
        if (!leq2(g, bound)) return false;
    }
    return true;
}

// the Gamma-component of Delta(b) at left degree alpha as per-mu blocks
std::map<Weight, Mat> gamma_component(const Algebra& alg, const Functional& f,
                                      const GradedDegree& alpha, const StabilityParam& theta,
                                      bool left_side) {
    std::map<Weight, Mat> blocks;
    const Weight lambda = f.weight;
    for (const Weight& d : weights_below(-lambda)) {
        const Weight mu = -d;
        if (j_theta(mu, theta) != alpha) continue;
        const Weight muL = left_side ? mu : lambda - mu;
        const Weight muR = lambda - muL;
        if (!muL.in_q_minus() || !muR.in_q_minus()) continue;
        const auto& xs = alg.words(-muL);
        const auto& ys = alg.words(-muR);
        Mat m(int(xs.size()), int(ys.size()));
        bool nonzero = false;
        for (size_t xi = 0; xi < xs.size(); ++xi)
            for (size_t yi = 0; yi < ys.size(); ++yi) {
                Word w = xs[xi];
                w.insert(w.end(), ys[yi].begin(), ys[yi].end());
                m(int(xi), int(yi)) = f.values[alg.word_index(-lambda, w)];
                if (m(int(xi), int(yi)) != 0) nonzero = true;
            }
        if (nonzero) blocks[muL] = std::move(m);
    }
    return blocks;
}

// does the single-block component equal an exact tensor of two members?
bool is_member_tensor(const Algebra& alg, const BasisFamily& fam, const Weight& lambda,
                      const std::map<Weight, Mat>& blocks, std::string* what) {
    (void)alg;
    if (blocks.size() != 1) {
        if (what) *what = "component spread over " + std::to_string(blocks.size()) + " weights";
        return false;
    }
    const auto& [muL, m] = *blocks.begin();
    auto itL = fam.by_weight.find(muL);
    auto itR = fam.by_weight.find(lambda - muL);
    if (itL == fam.by_weight.end() || itR == fam.by_weight.end()) {
        if (what) *what = "no members at the factor weights of " + muL.str();
        return false;
    }
    for (const auto& bl : itL->second) {
        for (const auto& br : itR->second) {
            bool equal = true;
            for (int r = 0; r < m.rows() && equal; ++r)
                for (int c = 0; c < m.cols() && equal; ++c)
                    if (m(r, c) != bl.value.values[size_t(r)] * br.value.values[size_t(c)])
                        equal = false;
            if (equal) return true;
        }
    }
    if (what) *what = "component is not a tensor of members";
    return false;
}

} // namespace

Report politeness_check(const Algebra& alg, const BasisFamily& fam,
                        const std::vector<StabilityParam>& theta_samples) {
    Report rep;
    // (i) weight vectors: structural. (ii) zeta powers belong to the family.
    for (int i = 0; i < alg.rank(); ++i) {
        for (int n = 1; n <= fam.height_cutoff; ++n) {
            Weight lambda = Weight::zero(alg.rank());
            lambda.c[i] = -n;
            auto it = fam.by_weight.find(lambda);
            if (it == fam.by_weight.end()) break;
            Functional zn = power(alg, zeta(alg, i), n);
            if (find_member(it->second, zn) < 0)
                rep.fail("zeta_" + std::to_string(i + 1) + "^" + std::to_string(n) +
                         " is not a member");
        }
    }
    for (size_t ti = 0; ti < theta_samples.size(); ++ti) {
        const StabilityParam& theta = theta_samples[ti];
        const std::string tname = "theta" + std::to_string(ti) + "=" + theta.str();
        for (const auto& [lambda, elems] : fam.by_weight) {
            if (lambda.is_zero()) continue;
            // (iii)/(iv) slice spanning at every realized degree
            std::set<GradedDegree> degrees;
            for (const Weight& d : weights_below(-lambda))
                degrees.insert(j_theta(-d, theta));
            for (const GradedDegree& alpha : degrees) {
                auto slice = filtration_f1(alg, lambda, alpha, theta);
                long members = 0;
                for (const auto& b : elems)
                    if (l_inside(alg, b.value, alpha, theta)) ++members;
                if (long(slice.size()) != members)
                    rep.fail(tname + " F' slice at " + lambda.str() + " deg " + alpha.str() +
                             ": dim " + std::to_string(slice.size()) + " vs members " +
                             std::to_string(members));
                auto slice2 = filtration_f2(alg, lambda, alpha, theta);
                long members2 = 0;
                for (const auto& b : elems)
                    if (r_inside(alg, b.value, alpha, theta)) ++members2;
                if (long(slice2.size()) != members2)
                    rep.fail(tname + " F'' slice at " + lambda.str() + " deg " + alpha.str() +
                             ": dim " + std::to_string(slice2.size()) + " vs members " +
                             std::to_string(members2));
            }
            // top-degree splitting lands on the tensor basis, coefficient one
            for (const auto& b : elems) {
                GradedDegree alpha = max_l_degree(alg, b.value, theta);
                auto blocks = gamma_component(alg, b.value, alpha, theta, true);
                std::string why;
                if (!is_member_tensor(alg, fam, lambda, blocks, &why))
                    rep.fail(tname + " Delta' of " + b.label + " at " + lambda.str() + ": " +
                             why);
                GradedDegree beta = max_r_degree(alg, b.value, theta);
                auto blocks2 = gamma_component(alg, b.value, beta, theta, false);
                std::string why2;
                if (!is_member_tensor(alg, fam, lambda, blocks2, &why2))
                    rep.fail(tname + " Delta'' of " + b.label + " at " + lambda.str() + ": " +
                             why2);
            }
        }
    }
    return rep;
}

Report polytope_injectivity(const Algebra& alg, const BasisFamily& fam) {
    Report rep;
    StabilityParam theta = distinct_slope_theta(alg.cartan());
    rep.note("distinct_slope_theta", theta.str());
    for (const auto& [lambda, elems] : fam.by_weight) {
        if (lambda.is_zero()) continue;
        for (size_t a = 0; a < elems.size(); ++a) {
            for (size_t b = a + 1; b < elems.size(); ++b) {
                if (equals(pol(alg, elems[a].value), pol(alg, elems[b].value)))
                    rep.fail("equal polytopes at " + lambda.str() + ": " + elems[a].label +
                             " vs " + elems[b].label);
                if (pol_wedge(alg, elems[a].value, theta) ==
                    pol_wedge(alg, elems[b].value, theta))
                    rep.fail("equal rims at " + lambda.str() + ": " + elems[a].label +
                             " vs " + elems[b].label);
            }
        }
    }
    return rep;
}

TransitionResult transition_matrix(const Algebra& alg, const BasisFamily& from,
                                   const BasisFamily& to) {
    TransitionResult out;
    for (const auto& [lambda, cols] : to.by_weight) {
        auto it = from.by_weight.find(lambda);
        if (it == from.by_weight.end() || it->second.size() != cols.size()) {
            out.report.fail("span mismatch at " + lambda.str());
            continue;
        }
        const auto& rows = it->second;
        if (lambda.is_zero()) continue;
        const auto& ws = alg.words(-lambda);
        // solve: to_j = sum_k T(k, j) from_k
        Mat aug(int(ws.size()), int(rows.size() + cols.size()));
        for (size_t k = 0; k < rows.size(); ++k)
            for (size_t w = 0; w < ws.size(); ++w) aug(int(w), int(k)) = rows[k].value.values[w];
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t w = 0; w < ws.size(); ++w)
                aug(int(w), int(rows.size() + j)) = cols[j].value.values[w];
        Rref red = rref(aug);
        bool solvable = true;
        for (int r = 0; r < red.rank; ++r)
            if (red.pivots[r] >= int(rows.size())) solvable = false;
        if (!solvable) {
            out.report.fail("target not in span at " + lambda.str());
            continue;
        }
        Mat t(int(rows.size()), int(cols.size()));
        for (int r = 0; r < red.rank; ++r)
            for (size_t j = 0; j < cols.size(); ++j)
                t(red.pivots[r], int(j)) = red.r(r, int(rows.size() + j));
        // unitriangularity in the polytope inclusion order
        std::vector<RationalPolytope> prow, pcol;
        for (const auto& b : rows) prow.push_back(pol(alg, b.value));
        for (const auto& b : cols) pcol.push_back(pol(alg, b.value));
        for (size_t k = 0; k < rows.size(); ++k) {
            for (size_t j = 0; j < cols.size(); ++j) {
                if (t(int(k), int(j)) == 0) continue;
                if (equals(prow[k], pcol[j])) {
                    if (t(int(k), int(j)) != 1)
                        out.report.fail("diagonal entry differs from 1 at " + lambda.str() +
                                        " (" + rows[k].label + "," + cols[j].label + ")");
                } else if (!includes(pcol[j], prow[k])) {
                    out.report.fail("entry outside the inclusion order at " + lambda.str() +
                                    " (" + rows[k].label + "," + cols[j].label + ")");
                }
            }
        }
        std::vector<std::string> rl, cl;
        for (const auto& b : rows) rl.push_back(b.label);
        for (const auto& b : cols) cl.push_back(b.label);
        out.matrices.emplace_back(lambda, rl, cl, t);
    }
    return out;
}

Report single_maximal_check(const Algebra& alg, const BasisFamily& fam,
                            const StabilityParam& theta) {
    Report rep;
    for (const auto& [lambda, elems] : fam.by_weight) {
        if (lambda.is_zero()) continue;
        for (const auto& b : elems) {
            UpperRim target = pol_wedge(alg, b.value, theta);
            bool found = false;
            for (const auto& m : expand_ordered(alg, b.value, theta))
                if (monomial_rim(m, theta) == target) found = true;
            if (!found)
                rep.fail("no expansion monomial achieves the rim of " + b.label + " at " +
                         lambda.str());
        }
    }
    return rep;
}

Report conv_comp_check(const Algebra& alg, const BasisFamily& fam) {
    Report rep;
    for (const auto& [lambda, elems] : fam.by_weight) {
        if (lambda.is_zero()) continue;
        const Weight nu = -lambda;
        const auto& ws = alg.words(nu);
        for (const auto& b : elems) {
            RationalPolytope k = pol(alg, b.value);
            // bad words: some prefix weight leaves K
            const SerreSpan& span = alg.serre(nu);
            Mat rows(0, int(ws.size()));
            for (const auto& v : span.basis) {
                std::vector<Rat> row(ws.size(), Rat(0));
                for (const auto& [w, c] : v.terms) row[alg.word_index(nu, w)] = c;
                rows.append_row(row);
            }
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                Weight pre = Weight::zero(alg.rank());
                bool bad = false;
                for (size_t t = 0; t <= ws[wi].size() && !bad; ++t) {
                    if (t > 0) pre.c[ws[wi][t - 1]] += 1;
                    std::vector<Rat> pt;
                    for (int c : pre.c) pt.push_back(Rat(-c));
                    if (!point_in_hull(k, pt)) bad = true;
                }
                if (bad) {
                    std::vector<Rat> row(ws.size(), Rat(0));
                    row[wi] = 1;
                    rows.append_row(row);
                }
            }
            long dim = long(nullspace(rows).size());
            long members = 0;
            for (const auto& other : elems)
                if (includes(k, pol(alg, other.value))) ++members;
            if (dim != members)
                rep.fail("S(K) at " + lambda.str() + " for K = pol(" + b.label + "): dim " +
                         std::to_string(dim) + " vs members " + std::to_string(members));
        }
    }
    return rep;
}

Report face_factorization_check(const Algebra& alg, const BasisFamily& fam,
                                const std::vector<StabilityParam>& theta_samples) {
    Report rep;
    for (const auto& [lambda, elems] : fam.by_weight) {
        if (lambda.is_zero()) continue;
        for (const auto& b : elems) {
            RationalPolytope pb = pol(alg, b.value);
            for (const auto& theta : theta_samples) {
                Split2 s = split_delta2(alg, b.value, theta);
                if (s.triples.size() != 1) {
                    rep.fail("slicing of " + b.label + " at " + theta.str() +
                             " is not a pure tensor");
                    continue;
                }
                auto& [fp, f0, fm] = s.triples[0];
                // all three factors proportional to members; product scalars 1
                auto match = [&](const Functional& f) -> const BasisElement* {
                    auto it = fam.by_weight.find(f.weight);
                    if (it == fam.by_weight.end()) return nullptr;
                    for (const auto& cand : it->second) {
                        // proportional?
                        Rat ratio(0);
                        bool prop = true;
                        for (size_t t = 0; t < f.values.size() && prop; ++t) {
                            if (cand.value.values[t] == 0 && f.values[t] == 0) continue;
                            if (cand.value.values[t] == 0 || f.values[t] == 0) {
                                prop = false;
                                break;
                            }
                            Rat r = f.values[t] / cand.value.values[t];
                            if (ratio == 0)
                                ratio = r;
                            else if (ratio != r)
                                prop = false;
                        }
                        if (prop && ratio != 0) return &cand;
                    }
                    return nullptr;
                };
                const BasisElement* cp = match(fp);
                const BasisElement* c0 = match(f0);
                const BasisElement* cm = match(fm);
                if (!cp || !c0 || !cm) {
                    rep.fail("slicing factors of " + b.label + " at " + theta.str() +
                             " are not members");
                    continue;
                }
                // scalars must multiply to 1: compare the recombined tensor
                Functional lhs = multiply(alg, multiply(alg, fp, f0), fm);
                Functional rhs = multiply(alg, multiply(alg, cp->value, c0->value), cm->value);
                if (!(lhs == rhs))
                    rep.fail("slicing scalars of " + b.label + " at " + theta.str() +
                             " do not multiply to one");
                // face = translate of pol(middle)
                RationalPolytope face = min_face(pb, theta);
                RationalPolytope p0 = pol(alg, c0->value);
                // translate by (lexmin difference)
                std::vector<Rat> t = face.vertices.front();
                for (size_t c = 0; c < t.size(); ++c) t[c] -= p0.vertices.front()[c];
                if (!equals(face, translate(p0, t)))
                    rep.fail("min_face of " + b.label + " at " + theta.str() +
                             " is not a translate of the middle polytope");
            }
        }
    }
    return rep;
}

} // namespace ggms

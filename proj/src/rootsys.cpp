#include "ggms/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ggms {

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

std::string StabilityParam::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < int(t.size()); ++i) {
        if (i) os << ",";
        os << t[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

std::vector<int> symmetrizers(const std::vector<std::vector<int>>& a) {
    const int n = int(a.size());
    // d_i a_ij = d_j a_ji on each edge; propagate over the graph.
    std::vector<long> d(n, 0);
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                // d_j = d_i * a_ij / a_ji
                long num = d[i] * -a[i][j];
                long den = -a[j][i];
                if (den == 0 || num % den != 0) {
                    // rescale the whole component
                    for (int k = 0; k < n; ++k) d[k] *= den;
                    num = d[i] * -a[i][j];
                }
                long dj = num / den;
                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw error("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    long g = 0;
    for (long x : d) g = std::gcd(g, x);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        if (d[i] <= 0) throw error("Cartan matrix is not symmetrizable");
        out[i] = int(d[i] / g);
    }
    return out;
}

bool positive_definite(const std::vector<std::vector<Rat>>& s) {
    // leading principal minors via fraction-free elimination
    const int n = int(s.size());
    std::vector<std::vector<Rat>> m = s;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

} // namespace

CartanData CartanData::from_matrix(std::vector<std::vector<int>> m, std::string label) {
    const int n = int(m.size());
    if (n == 0) throw error("empty Cartan matrix");
    for (const auto& row : m)
        if (int(row.size()) != n) throw error("Cartan matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (m[i][i] != 2) throw error("Cartan diagonal entry differs from 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) throw error("positive off-diagonal Cartan entry");
            if ((m[i][j] == 0) != (m[j][i] == 0)) throw error("asymmetric Cartan zero pattern");
        }
    }
    CartanData c;
    c.label = std::move(label);
    c.rank = n;
    c.a = std::move(m);
    c.sym = symmetrizers(c.a);
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = Rat(c.sym[i]) * Rat(c.a[i][j]);
    if (!positive_definite(s)) throw error("Cartan matrix is not of finite type");
    return c;
}

CartanData CartanData::from_label(const std::string& label) {
    auto a_type = [](int n) {
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            m[i][i] = 2;
            if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
        }
        return m;
    };
    if (label == "A1") return from_matrix(a_type(1), label);
    if (label == "A2") return from_matrix(a_type(2), label);
    if (label == "A3") return from_matrix(a_type(3), label);
    if (label == "A4") return from_matrix(a_type(4), label);
    if (label == "B2") return from_matrix({{2, -1}, {-2, 2}}, label);
    if (label == "D4") {
        // node 2 is the trivalent one
        std::vector<std::vector<int>> m(4, std::vector<int>(4, 0));
        for (int i = 0; i < 4; ++i) m[i][i] = 2;
        for (int i : {0, 2, 3}) m[1][i] = m[i][1] = -1;
        return from_matrix(m, label);
    }
    throw error("unknown Cartan label: " + label);
}

std::vector<Weight> positive_roots(const CartanData& cartan) {
    const int n = cartan.rank;
    std::set<std::vector<int>> known;
    std::vector<std::vector<Weight>> by_height(1);
    for (int i = 0; i < n; ++i) {
        Weight w = Weight::zero(n);
        w.c[i] = 1;
        by_height[0].push_back(w);
        known.insert(w.c);
    }
    for (int h = 1;; ++h) {
        std::vector<Weight> next;
        for (const Weight& beta : by_height[h - 1]) {
            for (int i = 0; i < n; ++i) {
                // alpha_i-string through beta: q = p - <beta, alpha_i^vee>
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += cartan.a[i][j] * beta.c[j];
                int p = 0;
                Weight down = beta;
                for (;;) {
                    down.c[i] -= 1;
                    if (known.count(down.c)) { ++p; continue; }
                    break;
                }
                if (p - pair > 0) {
                    Weight up = beta;
                    up.c[i] += 1;
                    if (known.insert(up.c).second) next.push_back(up);
                }
            }
        }
        if (next.empty()) break;
        by_height.push_back(std::move(next));
        if (h > 64) throw error("root closure did not terminate");
    }
    std::vector<Weight> out;
    for (auto& level : by_height)
        for (auto& w : level) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const Weight& x, const Weight& y) {
        if (x.height() != y.height()) return x.height() < y.height();
        return x.c < y.c;
    });
    return out;
}

long kostant_dim(const CartanData& cartan, const Weight& nu) {
    if (!nu.in_q_plus()) throw error("kostant_dim: weight outside Q+");
    std::vector<Weight> roots = positive_roots(cartan);
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
    return rec(rec, 0, nu);
}

std::vector<Cone> weyl_chambers(const CartanData& cartan) {
    const int n = cartan.rank;
    // theta-coordinates: theta_j = theta(alpha_j); s_i acts by
    // (s_i theta)_j = theta_j - a[i][j] theta_i.
    using Gens = std::vector<std::vector<long>>;
    auto canon = [](Gens g) {
        std::sort(g.begin(), g.end());
        return g;
    };
    Gens c0;
    for (int k = 0; k < n; ++k) {
        std::vector<long> e(n, 0);
        e[k] = 1;
        c0.push_back(e);
    }
    std::set<Gens> seen{canon(c0)};
    std::vector<Gens> queue{c0};
    for (size_t q = 0; q < queue.size(); ++q) {
        Gens cur = queue[q];
        for (int i = 0; i < n; ++i) {
            Gens img;
            for (const auto& v : cur) {
                std::vector<long> w = v;
                for (int j = 0; j < n; ++j) w[j] -= cartan.a[i][j] * v[i];
                img.push_back(w);
            }
            if (seen.insert(canon(img)).second) queue.push_back(img);
        }
    }
    std::vector<Gens> all(seen.begin(), seen.end());
    std::vector<Cone> out;
    for (const Gens& g : all) {
        Cone c;
        for (const auto& v : g) {
            std::vector<Rat> gen;
            for (long x : v) gen.push_back(Rat(x));
            c.generators.push_back(std::move(gen));
        }
        out.push_back(std::move(c));
    }
    return out;
}

Rat symmetrized_form(const CartanData& cartan, const Weight& mu, const Weight& nu) {
    Rat s(0);
    for (int i = 0; i < cartan.rank; ++i) {
        if (mu.c[i] == 0) continue;
        for (int j = 0; j < cartan.rank; ++j) {
            if (nu.c[j] == 0) continue;
            s += Rat(mu.c[i]) * Rat(nu.c[j]) * Rat(cartan.sym[i] * cartan.a[i][j]);
        }
    }
    return s;
}

std::vector<Weight> weights_below(const Weight& nu) {
    std::vector<Weight> out;
    Weight cur = Weight::zero(nu.rank());
    for (;;) {
        out.push_back(cur);
        int i = nu.rank() - 1;
        while (i >= 0 && cur.c[i] == nu.c[i]) {
            cur.c[i] = 0;
            --i;
        }
        if (i < 0) break;
        cur.c[i] += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> weights_of_height(int rank, int h) {
    std::vector<Weight> out;
    Weight box(std::vector<int>(rank, h));
    for (const Weight& w : weights_below(box))
        if (w.height() == h) out.push_back(w);
    return out;
}

} // namespace ggms

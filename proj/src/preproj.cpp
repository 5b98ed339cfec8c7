#include "ggms/preproj.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ggms {

namespace {

// set of oriented arrows of the doubled quiver
std::vector<std::pair<int, int>> doubled_arrows(const CartanData& c) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j)
            if (c.adjacent(i, j)) out.push_back({i, j});
    return out;
}

IntMat zero_mat(int rows, int cols) {
    return IntMat(size_t(rows), std::vector<long>(size_t(cols), 0));
}

} // namespace

bool check_relations(const PModule& m) {
    const CartanData& c = m.cartan;
    for (int v = 0; v < c.rank; ++v) {
        if (m.dims[v] == 0) continue;
        IntMat acc = zero_mat(m.dims[v], m.dims[v]);
        for (int w = 0; w < c.rank; ++w) {
            if (!c.adjacent(v, w)) continue;
            const IntMat* in = m.map(w, v);
            const IntMat* out = m.map(v, w);
            if (!in || !out || m.dims[w] == 0) continue;
            long sign = (w < v) ? 1 : -1;
            for (int r = 0; r < m.dims[v]; ++r)
                for (int cc = 0; cc < m.dims[v]; ++cc) {
                    long s = 0;
                    for (int k = 0; k < m.dims[w]; ++k) s += (*in)[r][k] * (*out)[k][cc];
                    acc[r][cc] += sign * s;
                }
        }
        for (const auto& row : acc)
            for (long x : row)
                if (x != 0) return false;
    }
    return true;
}

PModule zero_module(const CartanData& cartan) {
    PModule m;
    m.cartan = cartan;
    m.dims.assign(cartan.rank, 0);
    return m;
}

PModule direct_sum(const PModule& a, const PModule& b) {
    if (a.cartan.label != b.cartan.label) throw error("direct_sum: quiver mismatch");
    PModule m;
    m.cartan = a.cartan;
    m.dims.resize(a.cartan.rank);
    for (int v = 0; v < a.cartan.rank; ++v) m.dims[v] = a.dims[v] + b.dims[v];
    for (const auto& arrow : doubled_arrows(a.cartan)) {
        auto [i, j] = arrow;
        const IntMat* ma = a.map(i, j);
        const IntMat* mb = b.map(i, j);
        if (!ma && !mb) continue;
        IntMat blk = zero_mat(m.dims[j], m.dims[i]);
        if (ma)
            for (int r = 0; r < a.dims[j]; ++r)
                for (int cc = 0; cc < a.dims[i]; ++cc) blk[r][cc] = (*ma)[r][cc];
        if (mb)
            for (int r = 0; r < b.dims[j]; ++r)
                for (int cc = 0; cc < b.dims[i]; ++cc)
                    blk[a.dims[j] + r][a.dims[i] + cc] = (*mb)[r][cc];
        m.maps[{i, j}] = std::move(blk);
    }
    return m;
}

// ---- diagrams ----

StringDiagram parse_diagram(const std::vector<std::string>& lines, const CartanData& cartan) {
    StringDiagram d;
    d.lines = lines;
    std::map<std::pair<int, int>, int> at; // (row, col) -> node index
    for (int r = 0; r < int(lines.size()); ++r) {
        for (int c = 0; c < int(lines[r].size()); ++c) {
            char ch = lines[r][c];
            if (ch == ' ') continue;
            if (ch >= '1' && ch <= '9') {
                int v = ch - '1';
                if (v >= cartan.rank) throw error("diagram vertex out of range");
                at[{r, c}] = int(d.nodes.size());
                d.nodes.push_back({r, c, v});
            } else if (ch != '/' && ch != '\\') {
                throw error(std::string("bad character in diagram: ") + ch);
            }
        }
    }
    for (int r = 0; r < int(lines.size()); ++r) {
        for (int c = 0; c < int(lines[r].size()); ++c) {
            char ch = lines[r][c];
            if (ch != '/' && ch != '\\') continue;
            int uc = (ch == '\\') ? c - 1 : c + 1;
            int lc = (ch == '\\') ? c + 1 : c - 1;
            auto ui = at.find({r - 1, uc});
            auto li = at.find({r + 1, lc});
            if (ui == at.end() || li == at.end())
                throw error("diagram edge has no endpoint");
            const auto& un = d.nodes[ui->second];
            const auto& ln = d.nodes[li->second];
            if (!cartan.adjacent(un.vertex, ln.vertex))
                throw error("diagram edge joins non-adjacent vertices");
            d.edges.push_back({ui->second, li->second});
        }
    }
    return d;
}

PModule string_module(const CartanData& cartan, const StringDiagram& diagram) {
    std::vector<std::pair<int, int>> nodes;
    for (const auto& n : diagram.nodes) nodes.push_back({n.row / 2, n.vertex});
    return layered_module(cartan, nodes, diagram.edges);
}

PModule layered_module(const CartanData& cartan,
                       const std::vector<std::pair<int, int>>& nodes,
                       const std::vector<std::pair<int, int>>& edges) {
    for (const auto& [u, l] : edges) {
        if (nodes[l].first != nodes[u].first + 1)
            throw error("layered_module: edge does not drop one layer");
        if (!cartan.adjacent(nodes[u].second, nodes[l].second))
            throw error("layered_module: edge joins non-adjacent vertices");
    }
    PModule m;
    m.cartan = cartan;
    m.dims.assign(cartan.rank, 0);
    std::vector<int> coord(nodes.size());
    for (size_t k = 0; k < nodes.size(); ++k) coord[k] = m.dims[nodes[k].second]++;

    const size_t ne = edges.size();
    // sign constraints from the moment-map relation: for every two-step
    // descending path x -> y -> z with vertex(x) = vertex(z), the signed
    // products over the middle vertices must cancel
    struct Term {
        size_t e1, e2;
        long orient;
    };
    std::map<std::pair<int, int>, std::vector<Term>> constraints;
    for (size_t e1 = 0; e1 < ne; ++e1) {
        for (size_t e2 = 0; e2 < ne; ++e2) {
            auto [x, y1] = edges[e1];
            auto [y2, z] = edges[e2];
            if (y1 != y2) continue;
            int v = nodes[x].second;
            if (nodes[z].second != v) continue;
            int w = nodes[y1].second;
            constraints[{x, z}].push_back({e1, e2, (w < v) ? 1L : -1L});
        }
    }
    auto satisfied = [&](const std::vector<long>& sign) {
        for (const auto& [key, terms] : constraints) {
            long s = 0;
            for (const auto& t : terms) s += t.orient * sign[t.e1] * sign[t.e2];
            if (s != 0) return false;
        }
        return true;
    };
    std::vector<long> sign(ne, 1);
    if (!satisfied(sign)) {
        if (ne > 20) throw error("diagram too large for sign search");
        bool found = false;
        for (unsigned long mask = 1; mask < (1ul << ne) && !found; ++mask) {
            for (size_t e = 0; e < ne; ++e) sign[e] = ((mask >> e) & 1) ? -1 : 1;
            if (satisfied(sign)) found = true;
        }
        if (!found) throw error("diagram violates the preprojective relations");
    }

    for (size_t e = 0; e < ne; ++e) {
        auto [u, l] = edges[e];
        int vu = nodes[u].second, vl = nodes[l].second;
        auto key = std::make_pair(vu, vl);
        if (!m.maps.count(key)) m.maps[key] = zero_mat(m.dims[vl], m.dims[vu]);
        m.maps[key][coord[l]][coord[u]] = sign[e];
    }
    if (!check_relations(m)) throw error("diagram signs failed relation check");
    return m;
}

// ---- Hom / Ext ----

std::vector<std::vector<Mat>> hom_space(const PModule& m, const PModule& n) {
    if (m.cartan.label != n.cartan.label) throw error("hom_space: quiver mismatch");
    const int rank = m.cartan.rank;
    std::vector<int> offset(rank + 1, 0);
    for (int v = 0; v < rank; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    const int vars = offset[rank];
    Mat sys(0, vars);
    for (const auto& [i, j] : doubled_arrows(m.cartan)) {
        // g_j A^m_{ij} = A^n_{ij} g_i, entrywise (row r in n_j, col c in m_i)
        const IntMat* am = m.map(i, j);
        const IntMat* an = n.map(i, j);
        for (int r = 0; r < n.dims[j]; ++r) {
            for (int c = 0; c < m.dims[i]; ++c) {
                std::vector<Rat> row(vars, Rat(0));
                bool nz = false;
                if (am)
                    for (int k = 0; k < m.dims[j]; ++k) {
                        if ((*am)[k][c] == 0) continue;
                        row[offset[j] + r * m.dims[j] + k] += Rat((*am)[k][c]);
                        nz = true;
                    }
                if (an)
                    for (int k = 0; k < n.dims[i]; ++k) {
                        if ((*an)[r][k] == 0) continue;
                        row[offset[i] + k * m.dims[i] + c] -= Rat((*an)[r][k]);
                        nz = true;
                    }
                if (nz) sys.append_row(row);
            }
        }
    }
    std::vector<std::vector<Mat>> basis;
    for (const auto& sol : nullspace(sys)) {
        std::vector<Mat> maps;
        for (int v = 0; v < rank; ++v) {
            Mat g(n.dims[v], m.dims[v]);
            for (int r = 0; r < n.dims[v]; ++r)
                for (int c = 0; c < m.dims[v]; ++c)
                    g(r, c) = sol[offset[v] + r * m.dims[v] + c];
            maps.push_back(std::move(g));
        }
        basis.push_back(std::move(maps));
    }
    return basis;
}

long hom_dim(const PModule& m, const PModule& n) { return long(hom_space(m, n).size()); }

long ext1_dim(const PModule& m, const PModule& n) {
    Rat form = symmetrized_form(m.cartan, m.dimvec(), n.dimvec());
    Rat v = Rat(hom_dim(m, n)) + Rat(hom_dim(n, m)) - form;
    if (denominator(v) != 1 || v < 0) throw error("ext1_dim: negative or fractional value");
    return v.convert_to<long>();
}

std::pair<std::vector<int>, std::vector<int>> head_socle_multiplicities(const PModule& m) {
    const int rank = m.cartan.rank;
    std::vector<int> head(rank, 0), socle(rank, 0);
    for (int v = 0; v < rank; ++v) {
        if (m.dims[v] == 0) continue;
        // head: dim of M_v / sum of incoming images
        Mat in(m.dims[v], 0);
        std::vector<std::vector<Rat>> cols;
        for (int w = 0; w < rank; ++w) {
            const IntMat* a = m.map(w, v);
            if (!a) continue;
            for (int c = 0; c < m.dims[w]; ++c) {
                std::vector<Rat> col(m.dims[v]);
                for (int r = 0; r < m.dims[v]; ++r) col[r] = Rat((*a)[r][c]);
                cols.push_back(std::move(col));
            }
        }
        Mat incoming(0, m.dims[v]);
        for (auto& col : cols) incoming.append_row(col); // rows = transposed columns
        head[v] = m.dims[v] - rref(incoming).rank;
        // socle: common kernel of outgoing maps
        Mat outgoing(0, m.dims[v]);
        for (int w = 0; w < rank; ++w) {
            const IntMat* a = m.map(v, w);
            if (!a) continue;
            for (int r = 0; r < m.dims[w]; ++r) {
                std::vector<Rat> row(m.dims[v]);
                for (int c = 0; c < m.dims[v]; ++c) row[c] = Rat((*a)[r][c]);
                outgoing.append_row(row);
            }
        }
        socle[v] = m.dims[v] - rref(outgoing).rank;
    }
    return {head, socle};
}

// ---- F_p linear algebra ----

namespace {

using FpMat = std::vector<std::vector<long>>; // row-major, entries in [0,p)

long fp_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
}

FpMat fp_from_int(const IntMat& m, long p) {
    FpMat out(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        out[r].resize(m[r].size());
        for (size_t c = 0; c < m[r].size(); ++c) out[r][c] = ((m[r][c] % p) + p) % p;
    }
    return out;
}

// reduced row echelon form in place; returns pivot columns
std::vector<int> fp_rref(FpMat& m, long p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int nr = int(m.size()), nc = int(m[0].size());
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int sel = -1;
        for (int i = row; i < nr; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        long inv = fp_inv(m[row][col], p);
        for (int j = col; j < nc; ++j) m[row][j] = m[row][j] * inv % p;
        for (int i = 0; i < nr; ++i) {
            if (i == row || m[i][col] == 0) continue;
            long f = m[i][col];
            for (int j = col; j < nc; ++j)
                m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

struct FpModule {
    long p = 2;
    std::vector<int> dims;
    std::map<std::pair<int, int>, FpMat> maps; // all arrows present (possibly zero)
};

FpModule fp_module(const PModule& m, long p) {
    FpModule out;
    out.p = p;
    out.dims = m.dims;
    for (const auto& [i, j] : doubled_arrows(m.cartan)) {
        const IntMat* a = m.map(i, j);
        if (a)
            out.maps[{i, j}] = fp_from_int(*a, p);
        else
            out.maps[{i, j}] = FpMat(size_t(m.dims[j]), std::vector<long>(size_t(m.dims[i]), 0));
    }
    return out;
}

bool fp_is_zero(const FpMat& m) {
    for (const auto& row : m)
        for (long x : row)
            if (x != 0) return false;
    return true;
}

// solve K x = b where K (d x k) has full column rank; b must be in the span
std::vector<long> fp_solve_full(const FpMat& k, const std::vector<long>& b, long p) {
    const int d = int(k.size());
    const int kc = k.empty() ? 0 : int(k[0].size());
    FpMat aug(d, std::vector<long>(kc + 1));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < kc; ++c) aug[r][c] = k[r][c];
        aug[r][kc] = b[r] % p;
    }
    FpMat work = aug;
    std::vector<int> piv = fp_rref(work, p);
    std::vector<long> x(kc, 0);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == kc) throw error("fp_solve_full: inconsistent system");
        x[piv[i]] = work[i][kc];
    }
    return x;
}

// the submodule with the hyperplane ker(phi) at vertex i
FpModule fp_restrict(const FpModule& m, int i, const std::vector<long>& phi,
                     const std::vector<std::pair<int, int>>& arrows) {
    const long p = m.p;
    const int d = m.dims[i];
    // kernel basis of the functional: columns of K (d x (d-1))
    int lead = -1;
    for (int c = 0; c < d; ++c)
        if (phi[c] != 0) { lead = c; break; }
    FpMat k(size_t(d), std::vector<long>(size_t(d - 1), 0));
    long inv = fp_inv(phi[lead], p);
    int col = 0;
    for (int c = 0; c < d; ++c) {
        if (c == lead) continue;
        // basis vector e_c - (phi_c / phi_lead) e_lead
        k[c][col] = 1;
        k[lead][col] = ((-phi[c] * inv) % p + p) % p;
        ++col;
    }
    FpModule out;
    out.p = p;
    out.dims = m.dims;
    out.dims[i] = d - 1;
    for (const auto& arrow : arrows) {
        auto [from, to] = arrow;
        const FpMat& a = m.maps.at(arrow);
        if (from != i && to != i) {
            out.maps[arrow] = a;
            continue;
        }
        if (from == i && to == i) throw error("loop arrow");
        if (to == i) {
            // express the columns of a in the kernel basis
            FpMat x(size_t(d - 1), std::vector<long>(a.empty() ? 0 : a[0].size(), 0));
            const int cols = a.empty() ? 0 : int(a[0].size());
            for (int c = 0; c < cols; ++c) {
                std::vector<long> b(d);
                for (int r = 0; r < d; ++r) b[r] = a[r][c];
                std::vector<long> sol = fp_solve_full(k, b, p);
                for (int r = 0; r < d - 1; ++r) x[r][c] = sol[r];
            }
            out.maps[arrow] = std::move(x);
        } else {
            // restrict: a * k
            const int rows = int(a.size());
            FpMat x(size_t(rows), std::vector<long>(size_t(d - 1), 0));
            for (int r = 0; r < rows; ++r)
                for (int c2 = 0; c2 < d - 1; ++c2) {
                    long s = 0;
                    for (int t = 0; t < d; ++t) s += a[r][t] * k[t][c2] % p;
                    x[r][c2] = s % p;
                }
            out.maps[arrow] = std::move(x);
        }
    }
    return out;
}

Rat fp_pow(long p, int e) {
    Rat out(1);
    for (int k = 0; k < e; ++k) out *= p;
    return out;
}

Rat count_flags_rec(const FpModule& m, const Word& word, size_t len,
                    const std::vector<std::pair<int, int>>& arrows) {
    if (len == 0) return Rat(1);
    const long p = m.p;
    const int i = word[len - 1];
    const int d = m.dims[i];
    if (d == 0) return Rat(0);
    // U = span of incoming images; valid hyperplanes contain U
    FpMat rows; // row space of U^T: incoming image vectors as rows
    for (const auto& arrow : arrows) {
        if (arrow.second != i) continue;
        const FpMat& a = m.maps.at(arrow);
        const int cols = a.empty() ? 0 : int(a[0].size());
        for (int c = 0; c < cols; ++c) {
            std::vector<long> vec(d);
            bool nz = false;
            for (int r = 0; r < d; ++r) {
                vec[r] = a[r][c];
                if (vec[r] != 0) nz = true;
            }
            if (nz) rows.push_back(std::move(vec));
        }
    }
    fp_rref(rows, p);
    const int u = int(rows.size());
    const int mfree = d - u;
    if (mfree == 0) return Rat(0);
    // functionals vanishing on U: kernel of the row space matrix
    FpMat ur = rows;
    std::vector<int> piv;
    {
        FpMat tmp = ur;
        piv = fp_rref(tmp, p);
        ur = tmp;
    }
    std::vector<bool> is_piv(d, false);
    for (int c : piv) is_piv[c] = true;
    // basis of the annihilator (one per free column)
    FpMat ann;
    for (int fc = 0; fc < d; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<long> v(d, 0);
        v[fc] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = ((-ur[r][fc]) % p + p) % p;
        ann.push_back(std::move(v));
    }
    bool out_zero = true;
    for (const auto& arrow : arrows)
        if (arrow.first == i && !fp_is_zero(m.maps.at(arrow))) out_zero = false;
    if (out_zero) {
        // all hyperplanes above U give isomorphic restrictions
        Rat hcount = (fp_pow(p, mfree) - 1) / Rat(p - 1);
        FpModule n = fp_restrict(m, i, ann[0], arrows);
        return hcount * count_flags_rec(n, word, len - 1, arrows);
    }
    // enumerate the functionals up to scalar (first nonzero = 1)
    Rat total(0);
    std::vector<long> coef(mfree, 0);
    for (int leadpos = 0; leadpos < mfree; ++leadpos) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[leadpos] = 1;
        // iterate remaining coordinates over F_p
        const int tail = mfree - leadpos - 1;
        long limit = 1;
        for (int t = 0; t < tail; ++t) limit *= p;
        for (long code = 0; code < limit; ++code) {
            long rem = code;
            for (int t = 0; t < tail; ++t) {
                coef[leadpos + 1 + t] = rem % p;
                rem /= p;
            }
            std::vector<long> phi(d, 0);
            for (int b = 0; b < mfree; ++b) {
                if (coef[b] == 0) continue;
                for (int c = 0; c < d; ++c) phi[c] = (phi[c] + coef[b] * ann[b][c]) % p;
            }
            FpModule n = fp_restrict(m, i, phi, arrows);
            total += count_flags_rec(n, word, len - 1, arrows);
        }
    }
    return total;
}

const long kPrimes[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                        41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,
                        97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                        157, 163, 167, 173, 179, 181, 191, 193, 197, 199};

// Lagrange interpolation through (x_i, y_i); exact rational coefficients.
std::vector<Rat> interpolate(const std::vector<long>& xs, const std::vector<Rat>& ys) {
    const size_t n = xs.size();
    std::vector<Rat> coeffs(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rat> poly{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= Rat(xs[i] - xs[j]);
            std::vector<Rat> next(poly.size() + 1, Rat(0));
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * xs[j];
            }
            poly = next;
        }
        Rat f = ys[i] / denom;
        for (size_t k = 0; k < poly.size(); ++k) coeffs[k] += poly[k] * f;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

Rat poly_eval(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat out(0);
    for (size_t k = coeffs.size(); k-- > 0;) out = out * x + coeffs[k];
    return out;
}

} // namespace

FlagCount flag_euler(const Word& word, const PModule& m, long dim_bound) {
    FlagCount out;
    out.word = word;
    if (word_weight(word, m.cartan.rank) != m.dimvec())
        throw error("flag_euler: word weight differs from the dimension vector");
    if (m.total_dim() > dim_bound) throw error("flag_euler: module exceeds dimension bound");

    long degree_bound = 0;
    for (int d : m.dims) degree_bound += long(d) * (d - 1) / 2;
    const size_t need = size_t(degree_bound) + 3; // interpolation nodes + 2 controls
    if (need > sizeof(kPrimes) / sizeof(kPrimes[0]))
        throw error("flag_euler: degree bound too large");

    auto arrows = doubled_arrows(m.cartan);
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (size_t k = 0; k < need; ++k) {
        long p = kPrimes[k];
        FpModule fp = fp_module(m, p);
        Rat cnt = count_flags_rec(fp, word, word.size(), arrows);
        out.counts[p] = cnt;
        xs.push_back(p);
        ys.push_back(cnt);
    }
    std::vector<long> xs_interp(xs.begin(), xs.end() - 2);
    std::vector<Rat> ys_interp(ys.begin(), ys.end() - 2);
    std::vector<Rat> poly = interpolate(xs_interp, ys_interp);
    for (const Rat& c : poly)
        if (denominator(c) != 1)
            throw error("flag_euler: count polynomial has fractional coefficients");
    for (size_t k = need - 2; k < need; ++k)
        if (poly_eval(poly, Rat(xs[k])) != ys[k])
            throw error("flag_euler: interpolation inconsistent at a control prime");
    Rat euler = poly_eval(poly, Rat(1));
    out.euler = euler.convert_to<long>();
    return out;
}

Functional phi(const Algebra& alg, const PModule& m, long dim_bound) {
    const Weight nu = m.dimvec();
    if (!nu.in_q_plus()) throw error("phi: bad dimension vector");
    Functional f = functional_zero(alg, -nu);
    const auto& ws = alg.words(nu);
    for (size_t wi = 0; wi < ws.size(); ++wi)
        f.values[wi] = Rat(flag_euler(ws[wi], m, dim_bound).euler);
    if (!check_in_o(alg, f)) throw error("phi: functional does not kill the Serre ideal");
    return f;
}

bool phi_product_check(const Algebra& alg, const PModule& a, const PModule& b,
                       long dim_bound) {
    Functional lhs = multiply(alg, phi(alg, a, dim_bound), phi(alg, b, dim_bound));
    Functional rhs = phi(alg, direct_sum(a, b), dim_bound);
    return lhs == rhs;
}

// ---- submodules ----

namespace {

// connected coordinate components; a module splits as the direct sum over
// them, and submodule dimvec sets add up (Minkowski) over the pieces
std::vector<PModule> split_components(const PModule& m) {
    const int rank = m.cartan.rank;
    std::vector<std::pair<int, int>> nodes; // (vertex, index)
    std::map<std::pair<int, int>, int> id;
    for (int v = 0; v < rank; ++v)
        for (int k = 0; k < m.dims[v]; ++k) {
            id[{v, k}] = int(nodes.size());
            nodes.push_back({v, k});
        }
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (const auto& [arrow, mat] : m.maps) {
        auto [i, j] = arrow;
        for (int r = 0; r < m.dims[j]; ++r)
            for (int c = 0; c < m.dims[i]; ++c)
                if (mat[r][c] != 0)
                    parent[find(find, id[{i, c}])] = find(find, id[{j, r}]);
    }
    std::map<int, std::vector<int>> groups;
    for (size_t n = 0; n < nodes.size(); ++n) groups[find(find, int(n))].push_back(int(n));
    std::vector<PModule> out;
    for (const auto& [root, members] : groups) {
        PModule piece = zero_module(m.cartan);
        std::map<std::pair<int, int>, int> newidx;
        for (int n : members) {
            auto [v, k] = nodes[n];
            newidx[{v, k}] = piece.dims[v]++;
        }
        for (const auto& [arrow, mat] : m.maps) {
            auto [i, j] = arrow;
            IntMat blk = zero_mat(piece.dims[j], piece.dims[i]);
            bool nz = false;
            for (int r = 0; r < m.dims[j]; ++r)
                for (int c = 0; c < m.dims[i]; ++c) {
                    if (mat[r][c] == 0) continue;
                    auto itc = newidx.find({i, c});
                    auto itr = newidx.find({j, r});
                    if (itc == newidx.end() || itr == newidx.end()) continue;
                    blk[itr->second][itc->second] = mat[r][c];
                    nz = true;
                }
            if (nz) piece.maps[arrow] = std::move(blk);
        }
        out.push_back(std::move(piece));
    }
    return out;
}

// all subspaces of F_p^d as column-basis matrices (RREF canonical)
std::vector<FpMat> all_subspaces(int d, long p) {
    std::vector<FpMat> out;
    // k-dim subspaces as k x d RREF rows
    for (int k = 0; k <= d; ++k) {
        // choose pivot columns
        std::vector<int> piv(k);
        auto rec_piv = [&](auto&& self, int pos, int start) -> void {
            if (pos == k) {
                // fill free entries: entry (i, c) free iff c > piv[i] and c not a pivot
                std::vector<std::pair<int, int>> free_pos;
                std::vector<bool> is_piv(d, false);
                for (int i = 0; i < k; ++i) is_piv[piv[i]] = true;
                for (int i = 0; i < k; ++i)
                    for (int c = piv[i] + 1; c < d; ++c)
                        if (!is_piv[c]) free_pos.push_back({i, c});
                long total = 1;
                for (size_t t = 0; t < free_pos.size(); ++t) total *= p;
                for (long code = 0; code < total; ++code) {
                    FpMat rows(size_t(k), std::vector<long>(size_t(d), 0));
                    for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
                    long rem = code;
                    for (const auto& [i, c] : free_pos) {
                        rows[i][c] = rem % p;
                        rem /= p;
                    }
                    // transpose to column basis
                    FpMat cols(size_t(d), std::vector<long>(size_t(k), 0));
                    for (int i = 0; i < k; ++i)
                        for (int c = 0; c < d; ++c) cols[c][i] = rows[i][c];
                    out.push_back(std::move(cols));
                }
                return;
            }
            for (int c = start; c < d; ++c) {
                piv[pos] = c;
                self(self, pos + 1, c + 1);
            }
        };
        rec_piv(rec_piv, 0, 0);
    }
    return out;
}

// is the column span of b contained in the column span of basis?
bool fp_cols_in_span(const FpMat& basis, const FpMat& b, long p) {
    const int d = int(b.size());
    const int kb = b.empty() ? 0 : int(b[0].size());
    const int ks = basis.empty() ? 0 : int(basis[0].size());
    if (kb == 0) return true;
    FpMat rows;
    for (int c = 0; c < ks; ++c) {
        std::vector<long> v(d);
        for (int r = 0; r < d; ++r) v[r] = basis[r][c];
        rows.push_back(std::move(v));
    }
    FpMat probe = rows;
    std::vector<int> base_piv = fp_rref(probe, p);
    for (int c = 0; c < kb; ++c) {
        FpMat aug = probe;
        std::vector<long> v(d);
        for (int r = 0; r < d; ++r) v[r] = b[r][c];
        aug.push_back(v);
        FpMat tmp = aug;
        if (fp_rref(tmp, p).size() != base_piv.size()) return false;
    }
    return true;
}

std::set<std::vector<int>> component_submodule_dimvecs(const PModule& m) {
    std::set<std::vector<int>> found;
    const int rank = m.cartan.rank;
    auto arrows = doubled_arrows(m.cartan);
    for (long q : {2L, 3L, 5L}) {
        FpModule fp = fp_module(m, q);
        std::vector<std::vector<FpMat>> per_vertex(rank);
        for (int v = 0; v < rank; ++v) per_vertex[v] = all_subspaces(m.dims[v], q);
        std::vector<size_t> pick(rank, 0);
        for (;;) {
            bool closed = true;
            for (const auto& arrow : arrows) {
                auto [i, j] = arrow;
                const FpMat& a = fp.maps.at(arrow);
                // a * basis_i must lie in span(basis_j)
                const FpMat& bi = per_vertex[i][pick[i]];
                const int ki = bi.empty() ? 0 : int(bi[0].size());
                FpMat image(size_t(m.dims[j]), std::vector<long>(size_t(ki), 0));
                for (int r = 0; r < m.dims[j]; ++r)
                    for (int c = 0; c < ki; ++c) {
                        long s = 0;
                        for (int t = 0; t < m.dims[i]; ++t) s += a[r][t] * bi[t][c] % q;
                        image[r][c] = s % q;
                    }
                if (!fp_cols_in_span(per_vertex[j][pick[j]], image, q)) {
                    closed = false;
                    break;
                }
            }
            if (closed) {
                std::vector<int> dv(rank);
                for (int v = 0; v < rank; ++v) {
                    const FpMat& b = per_vertex[v][pick[v]];
                    dv[v] = b.empty() ? 0 : int(b[0].size());
                }
                found.insert(dv);
            }
            int v = rank - 1;
            while (v >= 0 && ++pick[v] == per_vertex[v].size()) pick[v--] = 0;
            if (v < 0) break;
        }
    }
    return found;
}

} // namespace

std::vector<Weight> submodule_dimvecs(const PModule& m) {
    std::set<std::vector<int>> total{std::vector<int>(m.cartan.rank, 0)};
    for (const PModule& piece : split_components(m)) {
        auto part = component_submodule_dimvecs(piece);
        std::set<std::vector<int>> next;
        for (const auto& a : total)
            for (const auto& b : part) {
                std::vector<int> s(a.size());
                for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
                next.insert(s);
            }
        total = std::move(next);
    }
    std::vector<Weight> out;
    for (const auto& v : total) out.push_back(Weight(v));
    return out;
}

RationalPolytope hn_polytope(const PModule& m) {
    std::vector<std::vector<Rat>> pts;
    for (const Weight& w : submodule_dimvecs(m)) {
        std::vector<Rat> v;
        for (int c : w.c) v.push_back(Rat(c));
        pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
}

// ---- catalogs ----

const CatalogEntry* Catalog::find(const std::string& label) const {
    for (const auto& e : entries)
        if (e.label == label) return &e;
    return nullptr;
}

int Catalog::index_of(const std::string& label) const {
    for (size_t k = 0; k < entries.size(); ++k)
        if (entries[k].label == label) return int(k);
    return -1;
}

const Functional& Catalog::phi_of(const Algebra& alg, size_t idx) const {
    std::lock_guard<std::mutex> lk(*mu_);
    if (phi_cache_.size() != entries.size())
        phi_cache_.assign(entries.size(), Functional{});
    if (phi_cache_[idx].values.empty())
        phi_cache_[idx] = phi(alg, entries[idx].module);
    return phi_cache_[idx];
}

std::string catalog_path(const std::string& data_dir, const std::string& label) {
    std::string lower = label;
    for (char& c : lower) c = char(std::tolower(c));
    return data_dir + "/catalog_" + lower + ".str";
}

Catalog load_catalog(const Algebra& alg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open catalog file: " + path);
    Catalog cat;
    cat.cartan = alg.cartan();
    std::string line;
    std::string label;
    std::vector<std::string> block;
    auto flush = [&]() {
        if (label.empty()) return;
        while (!block.empty() && block.back().empty()) block.pop_back();
        if (block.empty()) throw error("catalog entry without diagram: " + label);
        CatalogEntry e;
        e.label = label;
        e.diagram = parse_diagram(block, cat.cartan);
        e.module = string_module(cat.cartan, e.diagram);
        cat.entries.push_back(std::move(e));
        label.clear();
        block.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        if (!line.empty() && line[0] == '[') {
            flush();
            auto end = line.find(']');
            if (end == std::string::npos) throw error("bad catalog header: " + line);
            label = line.substr(1, end - 1);
        } else if (!label.empty()) {
            block.push_back(line);
        }
    }
    flush();
    // Ext table; self-extensions must vanish
    const size_t n = cat.entries.size();
    cat.ext1.assign(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            cat.ext1[i][j] = ext1_dim(cat.entries[i].module, cat.entries[j].module);
    for (size_t i = 0; i < n; ++i)
        if (cat.ext1[i][i] != 0)
            throw error("catalog entry has self-extensions: " + cat.entries[i].label);
    return cat;
}

std::vector<BasisElement> semicanonical_basis(const Algebra& alg, const Catalog& cat,
                                              const Weight& nu) {
    if (!nu.in_q_plus()) throw error("semicanonical_basis: weight outside Q+");
    std::vector<BasisElement> out;
    const size_t n = cat.entries.size();
    std::vector<int> mults(n, 0);
    auto emit = [&]() {
        BasisElement b;
        b.mults = mults;
        PModule mod = zero_module(cat.cartan);
        Functional val = functional_one(alg);
        std::string label;
        for (size_t k = 0; k < n; ++k) {
            for (int t = 0; t < mults[k]; ++t) {
                mod = direct_sum(mod, cat.entries[k].module);
                val = multiply(alg, val, cat.phi_of(alg, k));
            }
            if (mults[k] > 0) {
                if (!label.empty()) label += "+";
                label += cat.entries[k].label;
                if (mults[k] > 1) label += "^" + std::to_string(mults[k]);
            }
        }
        if (label.empty()) label = "1";
        b.label = label;
        b.module = std::move(mod);
        b.value = std::move(val);
        out.push_back(std::move(b));
    };
    auto rec = [&](auto&& self, size_t idx, Weight remaining) -> void {
        if (remaining.is_zero()) {
            emit();
            return;
        }
        if (idx == n) return;
        // multiplicity 0 first, then positive ones if Ext-compatible
        self(self, idx + 1, remaining);
        bool compatible = true;
        for (size_t j = 0; j < idx; ++j)
            if (mults[j] > 0 && (cat.ext1[idx][j] != 0 || cat.ext1[j][idx] != 0))
                compatible = false;
        if (!compatible) return;
        Weight rest = remaining;
        int count = 0;
        for (;;) {
            rest = rest - cat.entries[idx].module.dimvec();
            if (!rest.in_q_plus()) break;
            ++count;
            mults[idx] = count;
            self(self, idx + 1, rest);
        }
        mults[idx] = 0;
    };
    rec(rec, 0, nu);

    if (long(out.size()) != alg.kostant(nu))
        throw error("semicanonical_basis: rigid class count differs from the Kostant number");
    if (!nu.is_zero()) {
        Mat rows(0, int(alg.words(nu).size()));
        for (const auto& b : out) rows.append_row(b.value.values);
        if (rref(rows).rank != int(out.size()))
            throw error("semicanonical_basis: functionals are linearly dependent");
    }
    std::sort(out.begin(), out.end(),
              [](const BasisElement& a, const BasisElement& b) { return a.label < b.label; });
    return out;
}

} // namespace ggms

#include "ggms/envalg.hpp"

#include <algorithm>

namespace ggms {

std::string word_str(const Word& w) {
    std::string s;
    for (int l : w) s += char('1' + l);
    return s;
}

Word word_parse(const std::string& s, int rank) {
    Word w;
    for (char ch : s) {
        int l = ch - '1';
        if (l < 0 || l >= rank) throw error("bad letter in word: " + s);
        w.push_back(l);
    }
    return w;
}

Weight word_weight(const Word& w, int rank) {
    Weight nu = Weight::zero(rank);
    for (int l : w) nu.c[l] += 1;
    return nu;
}

void WordVector::add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

WordVector& WordVector::operator+=(const WordVector& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

WordVector& WordVector::operator*=(const Rat& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [w, c] : terms) c *= s;
    return *this;
}

WordVector concat(const WordVector& x, const WordVector& y) {
    WordVector out;
    out.weight = x.weight + y.weight;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            out.add(w, cx * cy);
        }
    return out;
}

std::vector<Word> words_of_weight(const CartanData& cartan, const Weight& nu) {
    if (!nu.in_q_plus()) throw error("words_of_weight: weight outside Q+");
    std::vector<Word> out;
    Word cur;
    std::vector<int> left = nu.c;
    auto rec = [&](auto&& self) -> void {
        bool done = true;
        for (int i = 0; i < cartan.rank; ++i) {
            if (left[i] > 0) {
                done = false;
                left[i] -= 1;
                cur.push_back(i);
                self(self);
                cur.pop_back();
                left[i] += 1;
            }
        }
        if (done) out.push_back(cur);
    };
    rec(rec);
    return out; // lexicographic by construction
}

struct Algebra::Cache {
    std::mutex mu;
    std::vector<Weight> roots;
    std::map<Weight, long> kostant;
    std::map<Weight, std::vector<Word>> words;
    std::map<Weight, SerreSpan> serre;
    std::map<Weight, std::vector<std::vector<Rat>>> obasis;
    std::map<std::pair<Weight, Weight>, Rref> ideal_pair;
};

Algebra::Algebra(CartanData cartan)
    : cartan_(std::move(cartan)), cache_(std::make_unique<Cache>()) {}

Algebra::~Algebra() = default;

const std::vector<Weight>& Algebra::roots() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (cache_->roots.empty()) cache_->roots = positive_roots(cartan_);
    return cache_->roots;
}

long Algebra::kostant(const Weight& nu) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->kostant.find(nu);
    if (it != cache_->kostant.end()) return it->second;
    long v = kostant_dim(cartan_, nu);
    cache_->kostant.emplace(nu, v);
    return v;
}

const std::vector<Word>& Algebra::words(const Weight& nu) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->words.find(nu);
    if (it != cache_->words.end()) return it->second;
    auto ws = words_of_weight(cartan_, nu);
    return cache_->words.emplace(nu, std::move(ws)).first->second;
}

int Algebra::word_index(const Weight& nu, const Word& w) const {
    const auto& ws = words(nu);
    auto it = std::lower_bound(ws.begin(), ws.end(), w);
    if (it == ws.end() || *it != w) throw error("word not of the requested weight");
    return int(it - ws.begin());
}

const SerreSpan& Algebra::serre(const Weight& nu) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->serre.find(nu);
        if (it != cache_->serre.end()) return it->second;
    }
    SerreSpan span = serre_span(*this, nu);
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->serre.emplace(nu, std::move(span)).first->second;
}

long Algebra::u_dim(const Weight& nu) const {
    return long(words(nu).size()) - serre(nu).rank();
}

const std::vector<std::vector<Rat>>& Algebra::o_basis(const Weight& lambda) const {
    if (!lambda.in_q_minus()) throw error("o_basis: weight outside Q-");
    const Weight nu = -lambda;
    const SerreSpan& span = serre(nu); // also primes the word cache
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->obasis.find(lambda);
        if (it != cache_->obasis.end()) return it->second;
    }
    // O_lambda = annihilator of the ideal slice = nullspace of the span rows
    const auto& ws = words(nu);
    Mat rows(0, int(ws.size()));
    for (const auto& v : span.basis) {
        std::vector<Rat> row(ws.size(), Rat(0));
        for (const auto& [w, c] : v.terms) row[word_index(nu, w)] = c;
        rows.append_row(row);
    }
    auto basis = nullspace(rows);
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->obasis.emplace(lambda, std::move(basis)).first->second;
}

const Rref& Algebra::ideal_pair_span(const Weight& mu, const Weight& rest) const {
    auto key = std::make_pair(mu, rest);
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->ideal_pair.find(key);
        if (it != cache_->ideal_pair.end()) return it->second;
    }
    const auto& ls = words(mu);
    const auto& rs = words(rest);
    const int cols = int(ls.size() * rs.size());
    Mat rows(0, cols);
    for (const auto& v : serre(mu).basis) {
        std::vector<Rat> flat(ls.size(), Rat(0));
        for (const auto& [w, c] : v.terms) flat[word_index(mu, w)] = c;
        for (size_t ri = 0; ri < rs.size(); ++ri) {
            std::vector<Rat> row(cols, Rat(0));
            for (size_t li = 0; li < ls.size(); ++li) row[li * rs.size() + ri] = flat[li];
            rows.append_row(row);
        }
    }
    for (const auto& v : serre(rest).basis) {
        std::vector<Rat> flat(rs.size(), Rat(0));
        for (const auto& [w, c] : v.terms) flat[word_index(rest, w)] = c;
        for (size_t li = 0; li < ls.size(); ++li) {
            std::vector<Rat> row(cols, Rat(0));
            for (size_t ri = 0; ri < rs.size(); ++ri) row[li * rs.size() + ri] = flat[ri];
            rows.append_row(row);
        }
    }
    Rref red = rref(rows);
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->ideal_pair.emplace(key, std::move(red)).first->second;
}

SerreSpan serre_span(const Algebra& alg, const Weight& nu) {
    const CartanData& cartan = alg.cartan();
    if (!nu.in_q_plus()) throw error("serre_span: weight outside Q+");
    SerreSpan out;
    out.weight = nu;
    const auto& ws = alg.words(nu);
    out.reduced = Rref{};
    out.reduced.r = Mat(0, int(ws.size()));

    auto try_add = [&](const WordVector& v) {
        std::vector<Rat> row(ws.size(), Rat(0));
        for (const auto& [w, c] : v.terms) row[alg.word_index(nu, w)] = c;
        std::vector<Rat> res = residue(out.reduced, row);
        int piv = -1;
        for (int j = 0; j < int(res.size()); ++j)
            if (res[j] != 0) { piv = j; break; }
        if (piv < 0) return;
        Rat inv = Rat(1) / res[piv];
        for (auto& x : res) x *= inv;
        // keep the echelon rows mutually reduced
        Mat stacked = out.reduced.r;
        stacked.append_row(res);
        out.reduced = rref(stacked);
        out.basis.push_back(v);
    };

    for (int i = 0; i < cartan.rank; ++i) {
        for (int j = 0; j < cartan.rank; ++j) {
            if (i == j) continue;
            const int m = 1 - cartan.a[i][j]; // e_i-degree of the relation
            Weight rho = Weight::zero(cartan.rank);
            rho.c[i] = m;
            rho.c[j] += 1;
            Weight pad = nu - rho;
            if (!pad.in_q_plus()) continue;
            // binomial coefficients C(m, k)
            std::vector<long> binom(m + 1, 1);
            for (int k = 1; k <= m; ++k)
                binom[k] = binom[k - 1] * (m - k + 1) / k;
            for (const Weight& mu1 : weights_below(pad)) {
                Weight mu2 = pad - mu1;
                for (const Word& u : alg.words(mu1)) {
                    for (const Word& v : alg.words(mu2)) {
                        WordVector padded;
                        padded.weight = nu;
                        for (int k = 0; k <= m; ++k) {
                            Word w = u;
                            for (int t = 0; t < m - k; ++t) w.push_back(i);
                            w.push_back(j);
                            for (int t = 0; t < k; ++t) w.push_back(i);
                            w.insert(w.end(), v.begin(), v.end());
                            Rat c = Rat((k % 2 == 0) ? binom[k] : -binom[k]);
                            padded.add(w, c);
                        }
                        try_add(padded);
                    }
                }
            }
        }
    }
    return out;
}

long u_dim(const Algebra& alg, const Weight& nu) { return alg.u_dim(nu); }

CoproductPairs u_coproduct_pairs(const CartanData& cartan, const WordVector& x) {
    CoproductPairs out;
    std::map<std::pair<Weight, Weight>, std::map<std::pair<Word, Word>, Rat>> acc;
    for (const auto& [w, c] : x.terms) {
        const int n = int(w.size());
        if (n > 24) throw error("u_coproduct_pairs: word too long");
        for (unsigned long s = 0; s < (1ul << n); ++s) {
            Word left, right;
            for (int p = 0; p < n; ++p)
                ((s >> p) & 1 ? left : right).push_back(w[p]);
            auto key = std::make_pair(word_weight(left, cartan.rank),
                                      word_weight(right, cartan.rank));
            acc[key][{left, right}] += c;
        }
    }
    for (auto& [key, terms] : acc) {
        std::vector<std::tuple<Word, Word, Rat>> list;
        for (auto& [pr, c] : terms)
            if (c != 0) list.emplace_back(pr.first, pr.second, c);
        if (!list.empty()) out.emplace(key, std::move(list));
    }
    return out;
}

} // namespace ggms

#pragma once

#include "ggms/linalg.hpp"
#include "ggms/rootsys.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ggms {

// Word in the alphabet I (0-based letters); weight(word) = sum of alpha_i.
using Word = std::vector<int>;

std::string word_str(const Word& w);          // "121" (1-based digits)
Word word_parse(const std::string& s, int rank);
Weight word_weight(const Word& w, int rank);

// Homogeneous element of the free algebra on {e_i}, of fixed weight in Q+.
struct WordVector {
    Weight weight;
    std::map<Word, Rat> terms; // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const Rat& c);
    WordVector& operator+=(const WordVector& o);
    WordVector& operator*=(const Rat& s);
};

// Concatenation product of the free algebra.
WordVector concat(const WordVector& x, const WordVector& y);

// Spanning data for the weight-nu slice of the Serre ideal.
struct SerreSpan {
    Weight weight;
    std::vector<WordVector> basis; // independent word-paddings of Serre relations
    Rref reduced;                  // echelon form over the word index of weight nu
    int rank() const { return reduced.rank; }
};

// Shared computation context for a fixed Cartan datum.  All accessors are
// lazily cached and safe for concurrent use.
class Algebra {
public:
    explicit Algebra(CartanData cartan);
    ~Algebra();
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const CartanData& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank; }

    const std::vector<Weight>& roots() const;
    long kostant(const Weight& nu) const;

    // All words of weight nu in lexicographic order.
    const std::vector<Word>& words(const Weight& nu) const;
    int word_index(const Weight& nu, const Word& w) const;

    const SerreSpan& serre(const Weight& nu) const;
    long u_dim(const Weight& nu) const;

    // Echelonized basis of the annihilator of the Serre ideal slice: the
    // value vectors (over words(-lambda)) of a basis of O_lambda.
    const std::vector<std::vector<Rat>>& o_basis(const Weight& lambda) const;

    // Echelon form of I_mu (x) F_rest + F_mu (x) I_rest inside the word
    // tensor square, flattened row-major over (left word, right word).
    const Rref& ideal_pair_span(const Weight& mu, const Weight& rest) const;

private:
    struct Cache;
    CartanData cartan_;
    std::unique_ptr<Cache> cache_;
};

std::vector<Word> words_of_weight(const CartanData& cartan, const Weight& nu);
SerreSpan serre_span(const Algebra& alg, const Weight& nu);
long u_dim(const Algebra& alg, const Weight& nu);

// Coproduct of a homogeneous free-algebra element, as the sum over all
// ways of splitting each word into a subsequence and its complement.
// Keyed by the (left, right) weight pair.
using CoproductPairs =
    std::map<std::pair<Weight, Weight>, std::vector<std::tuple<Word, Word, Rat>>>;
CoproductPairs u_coproduct_pairs(const CartanData& cartan, const WordVector& x);

} // namespace ggms

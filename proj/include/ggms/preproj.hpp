#pragma once

#include "ggms/polytope.hpp"

#include <mutex>
#include <optional>

namespace ggms {

using IntMat = std::vector<std::vector<long>>; // row-major, maps act on columns

// Module over the preprojective algebra of a simply-laced diagram:
// vertex spaces of the given dimensions and an integer matrix per
// oriented arrow of the doubled quiver.  The moment-map relation at
// every vertex (incoming minus outgoing two-step paths, for the
// orientation "small index to large index") must vanish.
struct PModule {
    CartanData cartan;
    std::vector<int> dims;
    std::map<std::pair<int, int>, IntMat> maps; // (from, to), absent = zero

    Weight dimvec() const { return Weight(dims); }
    long total_dim() const {
        long s = 0;
        for (int d : dims) s += d;
        return s;
    }
    const IntMat* map(int from, int to) const {
        auto it = maps.find({from, to});
        return it == maps.end() ? nullptr : &it->second;
    }
};

bool check_relations(const PModule& m);
PModule direct_sum(const PModule& a, const PModule& b);
PModule zero_module(const CartanData& cartan);

// Layered text diagram: digit rows alternating with edge rows of '/'
// and '\'.  A '\' at (r,c) joins the digit at (r-1,c-1) to the digit at
// (r+1,c+1); a '/' at (r,c) joins (r-1,c+1) to (r+1,c-1).  Upper nodes
// map to lower nodes.
struct StringDiagram {
    std::vector<std::string> lines;
    struct Node {
        int row, col, vertex;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges; // (upper node, lower node) indices
};

StringDiagram parse_diagram(const std::vector<std::string>& lines, const CartanData& cartan);

// Builds the module: basis indexed by diagram nodes, each edge acting by
// +-1 from the upper node to the lower node.  Signs are chosen (all +1
// when possible) so the preprojective relations hold; a diagram with no
// consistent signing is rejected.
PModule string_module(const CartanData& cartan, const StringDiagram& diagram);

// Same construction from an abstract layered graph: nodes carry
// (layer, vertex), edges join consecutive layers at adjacent vertices.
PModule layered_module(const CartanData& cartan,
                       const std::vector<std::pair<int, int>>& nodes,
                       const std::vector<std::pair<int, int>>& edges);

// ---- linear algebra over the path algebra ----

long hom_dim(const PModule& m, const PModule& n);
// Basis of intertwiners, each as one matrix per vertex.
std::vector<std::vector<Mat>> hom_space(const PModule& m, const PModule& n);

// Crawley-Boevey: dim Ext^1(M,N) = hom(M,N) + hom(N,M) - (dim M, dim N).
long ext1_dim(const PModule& m, const PModule& n);

// (head multiplicities, socle multiplicities) per vertex.
std::pair<std::vector<int>, std::vector<int>> head_socle_multiplicities(const PModule& m);

// ---- flag counting ----

struct FlagCount {
    Word word;
    std::map<long, Rat> counts; // prime -> number of F_p flags
    long euler = 0;             // interpolated polynomial evaluated at 1
};

// Counts composition flags with simple subquotients ordered by the word,
// over enough primes to pin down the counting polynomial (degree bound
// sum_v C(dim_v, 2) plus two control primes); inconsistency aborts.
FlagCount flag_euler(const Word& word, const PModule& m, long dim_bound = 8);

// The functional <e_w, phi_M> = euler characteristic of the flag variety.
Functional phi(const Algebra& alg, const PModule& m, long dim_bound = 8);

// Multiplicativity cross-check: phi(M (+) N) = phi(M) phi(N).
bool phi_product_check(const Algebra& alg, const PModule& a, const PModule& b,
                       long dim_bound = 8);

// Dimension vectors of submodules, decided by quiver-Grassmannian point
// counts over F_q, q in {2,3,5}.
std::vector<Weight> submodule_dimvecs(const PModule& m);

// Convex hull of the submodule dimension vectors.
RationalPolytope hn_polytope(const PModule& m);

// ---- catalogs and the dual semicanonical basis ----

struct CatalogEntry {
    std::string label;
    StringDiagram diagram;
    PModule module;
};

struct Catalog {
    CartanData cartan;
    std::vector<CatalogEntry> entries;
    std::vector<std::vector<long>> ext1; // pairwise Ext^1 table

    const CatalogEntry* find(const std::string& label) const;
    int index_of(const std::string& label) const;
    // phi of an entry, computed on first use (the 7-dimensional entries
    // are expensive and rarely needed)
    const Functional& phi_of(const Algebra& alg, size_t idx) const;

private:
    mutable std::vector<Functional> phi_cache_;
    mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
    friend Catalog load_catalog(const Algebra&, const std::string&);
};

// Loads a catalog file, verifying relations and Ext self-vanishing for
// every entry.
Catalog load_catalog(const Algebra& alg, const std::string& path);

// Default location of the catalog for a Cartan label ("<dir>/catalog_a2.str").
std::string catalog_path(const std::string& data_dir, const std::string& label);

struct BasisElement {
    std::string label;      // e.g. "1.2^2+2" (catalog labels with multiplicities)
    std::vector<int> mults; // per catalog entry
    PModule module;
    Functional value;
};

// Rigid combinations of catalog modules in the given dimension vector;
// count must equal the Kostant number and the values must be linearly
// independent, otherwise an error is raised.
std::vector<BasisElement> semicanonical_basis(const Algebra& alg, const Catalog& cat,
                                              const Weight& nu);

} // namespace ggms

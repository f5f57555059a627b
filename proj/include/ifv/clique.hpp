#ifndef IFV_CLIQUE_HPP
#define IFV_CLIQUE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifv/domains.hpp"

namespace ifv {

// Fixed-universe bitset; the solver's working currency.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    std::size_t size() const { return n_; }
    std::size_t count() const;
    bool any() const;
    int first() const;  // lowest set bit, or -1

    void and_with(const BitSet& o);
    static void and_into(const BitSet& a, const BitSet& b, BitSet& out);
    void and_not_with(const BitSet& o);

    template <typename F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Graph on all elements t-intersecting the anchor; u ~ v iff
// t <= intersection_size(u,v) < n (equal elements excluded).
struct IntersectionGraph {
    DomainDescriptor desc;
    int t = 0;
    Elem anchor;
    std::vector<Elem> vertices;  // canonical (lexicographic) order
    std::vector<BitSet> adj;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t degree(std::size_t v) const { return adj[v].count(); }
};

IntersectionGraph build_graph(DomainKind kind, int n, int t,
                              const std::optional<Elem>& anchor = std::nullopt,
                              int threads = 1);

// Adjacency-matrix graphs for the solver oracle tests.
IntersectionGraph graph_from_adjacency(const std::vector<std::vector<bool>>& adj);

struct CliqueReport {
    std::uint64_t clique_number = 0;
    std::uint64_t maximum_clique_count = 0;
    std::vector<std::vector<std::uint32_t>> cliques;  // sorted vertex indices, list sorted
    std::chrono::duration<double> elapsed{0};
};

// Exact branch and bound with greedy-coloring bounds over bitset candidate
// sets.
int max_clique_size(const IntersectionGraph& g);

// Enumerates every maximum-cardinality clique (second search pass with the
// clique number as an exact target). The stored clique list is capped at
// max_stored; the count is always exact.
CliqueReport enumerate_maximum_cliques(const IntersectionGraph& g,
                                       std::uint64_t max_stored = 1 << 20);

// The small-n verification: clique number (n-2)! resp. (2n-5)!!, exactly
// C(n,2) maximum cliques, and every maximum clique is the vertex set of a
// 2-coset through the anchor. n in {2,3} is checked directly.
struct UniquenessResult {
    bool pass = false;
    std::string failure;  // names the first offending clique or count
    CliqueReport report;
};

UniquenessResult verify_uniqueness(DomainKind kind, int n, int threads = 1);

// DIMACS-style edge list with a header comment naming kind/n/t/anchor.
std::string dump_dimacs(const IntersectionGraph& g);

}  // namespace ifv

#endif

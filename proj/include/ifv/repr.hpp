#ifndef IFV_REPR_HPP
#define IFV_REPR_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ifv/boolfn.hpp"
#include "ifv/domains.hpp"
#include "ifv/linalg.hpp"

namespace ifv {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    explicit Partition(std::vector<int> p);
    int sum() const;
    int first() const { return parts.empty() ? 0 : parts.front(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// The doubled partition 2*lambda (each part doubled), the shapes carrying
// the perfect-matching components.
Partition doubled(const Partition& lambda);

// A filling of a left-justified row arrangement with the numbers 1..n, each
// exactly once. Proof-internal constructions (tableau_move_row) can produce
// arrangements whose row lengths are not weakly decreasing; the e/chi
// machinery below is insensitive to row order, so these are accepted
// everywhere except where a partition shape is explicitly required.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    static YoungTableau of_rows(std::vector<std::vector<int>> rows);
    int entry_count() const;
    std::vector<int> shape() const;  // row lengths as given
    bool partition_shape() const;
};

// An element of the column stabilizer C(t): a permutation of the entries
// moving each entry only within its column, with the product of the
// per-column signs.
struct SignedColumnPermutation {
    std::vector<int> map;  // 1-indexed: map[x] = pi(x); map[0] unused
    int sign;
};

std::vector<SignedColumnPermutation> column_stabilizer(const YoungTableau& t);
YoungTableau apply_to_entries(const YoungTableau& t, const std::vector<int>& map);

// e_{s,t}(alpha) = 1 iff alpha maps every entry of row k of s into the set
// of entries of row k of t, for all k.
int eval_e_sym(const YoungTableau& s, const YoungTableau& t, const Elem& alpha);

// e_t(m) = 1 iff every matched pair of m lies within one row of t.
int eval_e_pm(const YoungTableau& t, const Elem& m);

// chi_{s,t} = sum over pi in C(t) of sign(pi) * e_{s,t^pi}, as an integer
// vector over the domain in canonical rank order. The range of the symmetric
// group version is provably {-1,0,1}; a violation raises InternalError.
std::vector<int> chi_vector_sym(const YoungTableau& s, const YoungTableau& t,
                                const DomainDescriptor& d, const std::vector<Elem>& domain);
std::vector<int> chi_vector_sym(const YoungTableau& s, const YoungTableau& t,
                                const DomainDescriptor& d);

// chi_t = sum over pi in C(t) of sign(pi) * e_{t^pi}. The analogous range
// claim fails on the perfect matching scheme (distinct pi can contribute to
// the same matching); violations of the claimed range are collected when
// a sink is supplied, never silently discarded upstream of it.
struct ChiRangeViolation {
    std::vector<std::vector<int>> tableau_rows;
    Elem elem;
    int value;
};

std::vector<int> chi_vector_pm(const YoungTableau& t, const DomainDescriptor& d,
                               const std::vector<Elem>& domain,
                               std::vector<ChiRangeViolation>* violations = nullptr);
std::vector<int> chi_vector_pm(const YoungTableau& t, const DomainDescriptor& d);

// Number of standard Young tableaux of a partition shape, by direct
// enumeration. This is the independent dimension oracle; nothing is copied
// from tables.
std::uint64_t syt_count(const std::vector<int>& shape);

// dim V^lambda = syt(lambda)^2 for Sym; dim V^{2 lambda} = syt(2 lambda) for PM.
std::uint64_t component_dimension(const DomainDescriptor& d, const Partition& lambda);

// Streams all fillings of the shape in lexicographic row-major order until
// the visitor returns false.
void for_each_filling(const std::vector<int>& shape,
                      const std::function<bool(const YoungTableau&)>& visit);

struct IsotypicComponent {
    Partition partition;
    RatVec vec;  // indexed by canonical rank
    std::uint64_t dimension;

    Rat norm_sq() const;
    bool is_zero() const;
};

// Orthogonal projection of f onto the rational span of the chi generators
// of shape lambda (pairs (s,t) for Sym, single t of shape 2*lambda for PM),
// with respect to <f,g> = sum_x f(x) g(x). Exact.
IsotypicComponent isotypic_project(const BooleanFunction& f, const Partition& lambda);
IsotypicComponent isotypic_project(const DomainDescriptor& d, const RatVec& f,
                                   const Partition& lambda);

std::vector<IsotypicComponent> isotypic_decomposition(const BooleanFunction& f);

// max over nonzero components of n - lambda_1; 0 for constants and the zero
// function. Equal to polynomial_degree by the spectral characterization.
int spectral_degree(const BooleanFunction& f);

// Proof constructions of the degree-reduction lemmas.
// Sym: append the singleton row {n+1} to both tableaux (entries 1..n).
std::pair<YoungTableau, YoungTableau> extend_tableau_fixed_row(const YoungTableau& s,
                                                               const YoungTableau& t);
// PM: append the row {2n+1, 2n+2} (entries 1..2n).
YoungTableau extend_tableau_pm(const YoungTableau& t);

// t^r: move the first two entries of row r to a new final row; delete row r
// if emptied, otherwise slide its remainder left. Row r must have even
// length >= 2.
YoungTableau tableau_move_row(const YoungTableau& t, int r);

// The landing-row contribution of the matching degree-reduction argument:
// the signed sum over C(t) -- not C(t^r), whose columns regroup when a long
// row slides -- of e over the arrangement t^r. Rows of length 2 reproduce
// chi_t; r = R+1 denotes t itself. Summed over r = 1..R+1 this equals
// <f, chi_{t'}> for every f supported in the coset pairing 2n+1 with 2n+2.
std::vector<int> chi_pm_landing_row(const YoungTableau& t, int r, const DomainDescriptor& d,
                                    const std::vector<Elem>& domain);

// Integer inner product sum_x f(x) v(x) of a truth vector with an integer
// vector in rank order.
long long int_inner(const std::vector<std::uint8_t>& truth, const std::vector<int>& v);

}  // namespace ifv

#endif

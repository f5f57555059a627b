#ifndef IFV_BOOLFN_HPP
#define IFV_BOOLFN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ifv/domains.hpp"
#include "ifv/linalg.hpp"

namespace ifv {

// A 0/1-valued function on S_n or M_2n, stored as a truth vector indexed
// by canonical rank.
struct BooleanFunction {
    DomainDescriptor desc;
    std::vector<std::uint8_t> truth;

    static BooleanFunction constant(const DomainDescriptor& d, int value);
    bool operator==(const BooleanFunction& o) const {
        return desc == o.desc && truth == o.truth;
    }
    std::uint64_t weight() const;
};

BooleanFunction indicator_of_family(const DomainDescriptor& d, const std::vector<Elem>& members);

// Monomials in the indicator variables x_{ij} up to a degree cap. Products
// that vanish identically on the domain (two variables sharing an index
// inconsistently) are dropped. Column (alpha, M) is 1 iff alpha satisfies
// every variable of M.
struct MonomialBasis {
    DomainDescriptor desc;
    int degree_cap;
    std::vector<std::vector<std::pair<int, int>>> monomials;
    std::vector<std::vector<std::uint8_t>> columns;  // column-major, 0/1
};

MonomialBasis build_monomial_basis(const DomainDescriptor& d, int degree_cap);

// Minimum d such that the truth vector lies in the rational span of the
// degree-<=d monomial columns. Decided by exact rational rank; never by
// floating point. Domains above max_domain_size raise CapacityError.
int polynomial_degree(const BooleanFunction& f, std::uint64_t max_domain_size = 2000);

// Row-echelon basis of the degree-<=d monomial span, cached per
// (kind, n, d); shared by polynomial_degree and bulk scans.
const RowBasis& monomial_span_basis(const DomainDescriptor& d, int degree);

// --- functions on the Boolean cube ---

struct CubeFunction {
    int arity;                         // k
    std::vector<std::uint8_t> truth;   // length 2^k, index = y as bitmask (y_i = bit i-1)

    bool operator==(const CubeFunction& o) const {
        return arity == o.arity && truth == o.truth;
    }
};

// Degree of the unique multilinear representation (Moebius transform over
// subsets; exact integer arithmetic).
int cube_degree(const CubeFunction& g);

// Number of coordinate flips at `point` that change the value.
int sensitivity_at(const CubeFunction& g, unsigned point);

// Scans all 2^(2^k) truth tables in ascending order for a function of
// degree <= 2 with sensitivity >= s at the origin. Returns the first
// witness, or nullopt if none exists (the k = 4, s = 4 case).
std::optional<CubeFunction> degree2_sensitivity_scan(int k, int s);

// --- lifting and restriction ---

// Sym: swap the images at positions a and b (right multiplication by the
// transposition (a b)).
struct TranspositionSpec {
    int a, b;
};

// PM: the base matching must contain the edges {a1,a2} and {b1,b2}; the
// selected operation replaces them with {a1,b2} and {a2,b1}.
struct EdgeSwapSpec {
    int a1, a2, b1, b2;
};

// g(y) = f(base modified by the specs selected by y). Specs must touch
// pairwise disjoint positions/vertices.
CubeFunction lift_to_cube(const BooleanFunction& f, const Elem& base,
                          const std::vector<TranspositionSpec>& specs);
CubeFunction lift_to_cube(const BooleanFunction& f, const Elem& base,
                          const std::vector<EdgeSwapSpec>& specs);

// Restriction of f to the coset fixed by `pair`, as a function on the
// (n-1)-domain under the canonical renumbering (delete the constrained
// indices, keep relative order).
BooleanFunction restrict_to_coset(const BooleanFunction& f, std::pair<int, int> pair);

// Embedding inverse to the restriction: the domain element of the full
// domain corresponding to `e` in the restricted (n-1)-domain.
Elem embed_from_coset(const DomainDescriptor& full, std::pair<int, int> pair, const Elem& e);

// --- degree-1 classification ---

struct Degree1Form {
    enum class Kind { RowDictator, ColDictator, PMDictator, Triangle, AntiTriangle };
    Kind kind;
    int index = 0;          // i for row/PM dictators, j for column dictators
    std::vector<int> set;   // J or I (sorted); {i,j,k} for (anti-)triangles
};

// Requires polynomial_degree(f) <= 1. The returned form reproduces f
// exactly; a degree-<=1 function matching no listed form would falsify the
// classification theorems and raises InternalError.
Degree1Form classify_degree1(const BooleanFunction& f);

BooleanFunction evaluate_form(const DomainDescriptor& d, const Degree1Form& form);

}  // namespace ifv

#endif

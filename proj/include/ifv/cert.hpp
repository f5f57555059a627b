#ifndef IFV_CERT_HPP
#define IFV_CERT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifv/boolfn.hpp"
#include "ifv/domains.hpp"

namespace ifv {

// A certificate with an optional forbidden triangle {i,j,k}: a matching
// satisfies it when it satisfies the base and avoids all three edges
// {i,j},{i,k},{j,k}. Counts as |base| + 1 toward certificate size.
struct ExtendedCertificate {
    Certificate base;
    std::optional<std::array<int, 3>> forbidden;

    static ExtendedCertificate plain(Certificate base);
    static ExtendedCertificate with_triple(const DomainDescriptor& d, Certificate base,
                                           std::array<int, 3> triple);
    std::size_t size() const { return base.size() + (forbidden ? 1 : 0); }
};

bool satisfies(const DomainDescriptor& d, const Elem& x, const Certificate& c);
bool extended_satisfies(const DomainDescriptor& d, const Elem& m, const ExtendedCertificate& ec);

// Minimum certificate for x with respect to f: subsets of x's own pair
// representation are searched in ascending size, then lexicographically by
// position indices; the first subset all of whose coset shares f's value at
// x is returned. Size is always at most n-1.
struct MinCertificate {
    int size;
    Certificate cert;
};

MinCertificate min_certificate(const BooleanFunction& f, const Elem& x);

struct CertLimits {
    // full-domain exhaustion cap; S_6 and M_10 pass, S_7 and up require the
    // one-sided variant over a supplied family
    std::uint64_t max_enumerated_inputs = 1000;
};

// C(f) = max over all inputs of the minimum certificate size.
int certificate_complexity(const BooleanFunction& f, const CertLimits& limits = {});
// C_1(f): the same maximum restricted to 1-inputs.
int one_side_certificate_complexity(const BooleanFunction& f, const CertLimits& limits = {});

// The constructive step of the minimum-certificate intersection lemmas:
// an element satisfying c_a whose full pair representation meets c_b in
// exactly c_a's pairs. Requires |c_a| <= n-2 (the construction needs two
// free indices and genuinely fails at n-1) and both certificates consistent.
Elem complete_avoiding(const DomainDescriptor& d, const Certificate& c_a, const Certificate& c_b);

// For the indicator of a 2-intersecting family with C(f) <= n-2: any two
// 1-inputs' minimum certificates share at least two pairs.
struct PairwiseIntersectionReport {
    bool precondition_ok = false;
    std::string precondition_failure;  // empty when ok
    int complexity = 0;
    bool pass = false;
    struct Violation {
        Elem a, b;
        Certificate cert_a, cert_b;
        int overlap;
    };
    std::vector<Violation> violations;
};

PairwiseIntersectionReport check_pairwise_certificate_intersection(const BooleanFunction& f);

// Brute-force instance check of the extended-certificate replacement lemma
// over M_2n: if every matching satisfying c1 2-intersects every matching
// satisfying c2, the same holds with c1 replaced by its base. Returns
// whether the implication held on this instance.
bool check_extended_reduction(int n, const ExtendedCertificate& c1,
                              const ExtendedCertificate& c2);

// A family is r-covered when it lies in a union of r pairwise compatible
// cosets (compatible = nonempty pairwise intersection; for PM this means
// equal or vertex-disjoint edges).
struct Cover {
    std::vector<std::pair<int, int>> cosets;
    int r() const { return static_cast<int>(cosets.size()); }
};

bool cosets_compatible(const DomainDescriptor& d, std::pair<int, int> a, std::pair<int, int> b);

// Exact backtracking over the cosets hit by at least one member; first
// cover found in deterministic order, using at most r cosets.
std::optional<Cover> find_cover(const BooleanFunction& f, int r);
bool is_r_covered(const BooleanFunction& f, int r);

// T = 2*floor(C/2)*(C-1)!/2^floor(C/2); the number of C(f)-cosets that can
// carry a 2-intersecting family under the covering bound. C >= 2.
std::uint64_t bound_T(int c);

// Number of distinct minimum certificates realized across 1-inputs.
std::uint64_t count_min_certificate_classes(const BooleanFunction& f,
                                            const CertLimits& limits = {});

}  // namespace ifv

#endif

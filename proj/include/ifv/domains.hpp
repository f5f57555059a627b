#ifndef IFV_DOMAINS_HPP
#define IFV_DOMAINS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ifv/common.hpp"

namespace ifv {

enum class DomainKind { Sym, PM };

// Canonical element storage, 1-indexed values:
//   Sym: images array of length n,   elem[i-1] = alpha(i)
//   PM:  partner array of length 2n, elem[i-1] = m(i)
// The lexicographic order on these arrays is the canonical total order.
using Elem = std::vector<int>;

struct DomainDescriptor {
    DomainKind kind;
    int n;               // S_n or M_2n
    std::uint64_t size;  // n! or (2n-1)!!

    int ground() const { return kind == DomainKind::Sym ? n : 2 * n; }
    bool operator==(const DomainDescriptor& o) const { return kind == o.kind && n == o.n; }
};

DomainDescriptor make_descriptor(DomainKind kind, int n);

// Validated views of the two element kinds.
struct Permutation {
    Elem images;

    explicit Permutation(Elem imgs);
    static Permutation identity(int n);
    int n() const { return static_cast<int>(images.size()); }
};

struct PerfectMatching {
    Elem partner;

    explicit PerfectMatching(Elem p);  // checks fixed-point-free involution
    static PerfectMatching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
    // the anchor {1,n+1},{2,n+2},...,{n,2n}
    static PerfectMatching canonical_anchor(int n);
    int n() const { return static_cast<int>(partner.size()) / 2; }
    std::vector<std::pair<int, int>> pairs() const;  // (min,max), sorted
};

bool valid_element(const DomainDescriptor& d, const Elem& e);

// Default anchors: identity permutation / the canonical matching.
Elem default_anchor(const DomainDescriptor& d);

// The certificate vocabulary (shared with module cert). For Sym a pair
// (i,j) constrains alpha(i) = j; for PM it is the edge {i,j}, stored as
// (min,max). A certificate is consistent when its constraints can be
// satisfied simultaneously; inconsistent certificates denote empty cosets
// and are legal inputs to coset_elements.
struct Certificate {
    std::vector<std::pair<int, int>> pairs;

    static Certificate of_pairs(const DomainDescriptor& d, std::vector<std::pair<int, int>> pairs);
    std::size_t size() const { return pairs.size(); }
    bool operator==(const Certificate& o) const { return pairs == o.pairs; }
    bool operator<(const Certificate& o) const { return pairs < o.pairs; }
};

bool certificate_consistent(const DomainDescriptor& d, const Certificate& c);

// Full pair representation of an element: {(1,a(1)),...,(n,a(n))} for Sym,
// the edge set for PM.
Certificate certificate_representation(const DomainDescriptor& d, const Elem& e);

// --- enumeration and rank maps (lexicographic on the canonical arrays) ---

std::vector<Elem> enumerate_domain(const DomainDescriptor& d);
std::uint64_t rank_of(const DomainDescriptor& d, const Elem& e);
Elem unrank(const DomainDescriptor& d, std::uint64_t r);

// --- intersection predicates ---

// Sym: number of common fixed positions; PM: number of common edges.
int intersection_size(const DomainDescriptor& d, const Elem& a, const Elem& b);
bool is_t_intersecting(const DomainDescriptor& d, const Elem& a, const Elem& b, int t);

// All elements satisfying the certificate, in canonical order. Empty when
// the constraints conflict.
std::vector<Elem> coset_elements(const DomainDescriptor& d, const Certificate& c);

}  // namespace ifv

#endif

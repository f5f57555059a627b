#ifndef IFV_LINALG_HPP
#define IFV_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ifv {

// All degree and projection decisions are made over the exact rationals.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

std::string rat_to_string(const Rat& r);  // "p/q", or "p" when q = 1

Rat inner_product(const RatVec& a, const RatVec& b);
RatVec to_rat_vec(const std::vector<int>& v);
RatVec to_rat_vec(const std::vector<unsigned char>& v);
bool is_zero_vec(const RatVec& v);

// Row-echelon basis of a subspace of Q^dim, grown one vector at a time.
// Supports rank tracking and span-membership tests.
class RowBasis {
public:
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    // Reduces v against the basis; if a nonzero remainder is left, it joins
    // the basis. Returns true if the rank grew.
    bool insert(RatVec v);

    bool contains(RatVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    void reduce(RatVec& v) const;

    std::size_t dim_;
    std::vector<RatVec> rows_;        // each normalized to leading coefficient 1
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Pairwise-orthogonal (unnormalized) basis built by exact Gram-Schmidt,
// with projection onto its span.
class OrthoBasis {
public:
    explicit OrthoBasis(std::size_t dim) : dim_(dim) {}

    bool insert(const RatVec& v);  // true if the span grew
    RatVec project(const RatVec& f) const;
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t dim_;
    std::vector<RatVec> basis_;
    std::vector<Rat> norms_;  // <b,b> for each basis vector
};

}  // namespace ifv

#endif

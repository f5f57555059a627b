#include "ifv/linalg.hpp"

#include "ifv/common.hpp"

namespace ifv {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat inner_product(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw UsageError("inner product of vectors of different length");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

RatVec to_rat_vec(const std::vector<int>& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

RatVec to_rat_vec(const std::vector<unsigned char>& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<int>(v[i]);
    return r;
}

bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

void RowBasis::reduce(RatVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat factor = c;  // row leading coefficient is 1
            for (std::size_t j = pivots_[r]; j < dim_; ++j) {
                if (rows_[r][j] != 0) v[j] -= factor * rows_[r][j];
            }
        }
    }
}

bool RowBasis::insert(RatVec v) {
    if (v.size() != dim_) throw UsageError("RowBasis: wrong vector length");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rat lead = v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowBasis::contains(RatVec v) const {
    if (v.size() != dim_) throw UsageError("RowBasis: wrong vector length");
    reduce(v);
    return is_zero_vec(v);
}

bool OrthoBasis::insert(const RatVec& v) {
    if (v.size() != dim_) throw UsageError("OrthoBasis: wrong vector length");
    RatVec w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Rat c = inner_product(w, basis_[r]) / norms_[r];
        if (c != 0)
            for (std::size_t j = 0; j < dim_; ++j)
                if (basis_[r][j] != 0) w[j] -= c * basis_[r][j];
    }
    if (is_zero_vec(w)) return false;
    Rat n = inner_product(w, w);
    basis_.push_back(std::move(w));
    norms_.push_back(std::move(n));
    return true;
}

RatVec OrthoBasis::project(const RatVec& f) const {
    if (f.size() != dim_) throw UsageError("OrthoBasis: wrong vector length");
    RatVec p(dim_, Rat(0));
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Rat c = inner_product(f, basis_[r]) / norms_[r];
        if (c != 0)
            for (std::size_t j = 0; j < dim_; ++j)
                if (basis_[r][j] != 0) p[j] += c * basis_[r][j];
    }
    return p;
}

}  // namespace ifv

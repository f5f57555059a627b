#include "ifv/domains.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ifv {

DomainDescriptor make_descriptor(DomainKind kind, int n) {
    if (n < 1) throw UsageError("domain requires n >= 1");
    std::uint64_t size =
        kind == DomainKind::Sym ? factorial_checked(n) : double_factorial_checked(n);
    return DomainDescriptor{kind, n, size};
}

Permutation::Permutation(Elem imgs) : images(std::move(imgs)) {
    int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw UsageError("permutation images are not a bijection of {1..n}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    Elem e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

PerfectMatching::PerfectMatching(Elem p) : partner(std::move(p)) {
    int m = static_cast<int>(partner.size());
    if (m == 0 || m % 2 != 0) throw UsageError("partner array must have even positive length");
    for (int i = 1; i <= m; ++i) {
        int j = partner[static_cast<std::size_t>(i - 1)];
        if (j < 1 || j > m || j == i || partner[static_cast<std::size_t>(j - 1)] != i)
            throw UsageError("partner array is not a fixed-point-free involution");
    }
}

PerfectMatching PerfectMatching::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Elem p(static_cast<std::size_t>(2 * n), 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
            throw UsageError("matching pair out of range");
        if (p[static_cast<std::size_t>(a - 1)] != 0 || p[static_cast<std::size_t>(b - 1)] != 0)
            throw UsageError("matching pairs overlap");
        p[static_cast<std::size_t>(a - 1)] = b;
        p[static_cast<std::size_t>(b - 1)] = a;
    }
    return PerfectMatching(std::move(p));
}

PerfectMatching PerfectMatching::canonical_anchor(int n) {
    Elem p(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        p[static_cast<std::size_t>(i - 1)] = n + i;
        p[static_cast<std::size_t>(n + i - 1)] = i;
    }
    return PerfectMatching(std::move(p));
}

std::vector<std::pair<int, int>> PerfectMatching::pairs() const {
    std::vector<std::pair<int, int>> out;
    int m = static_cast<int>(partner.size());
    for (int i = 1; i <= m; ++i) {
        int j = partner[static_cast<std::size_t>(i - 1)];
        if (i < j) out.emplace_back(i, j);
    }
    return out;
}

bool valid_element(const DomainDescriptor& d, const Elem& e) {
    int g = d.ground();
    if (static_cast<int>(e.size()) != g) return false;
    if (d.kind == DomainKind::Sym) {
        std::vector<char> seen(static_cast<std::size_t>(g) + 1, 0);
        for (int v : e) {
            if (v < 1 || v > g || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return true;
    }
    for (int i = 1; i <= g; ++i) {
        int j = e[static_cast<std::size_t>(i - 1)];
        if (j < 1 || j > g || j == i || e[static_cast<std::size_t>(j - 1)] != i) return false;
    }
    return true;
}

Elem default_anchor(const DomainDescriptor& d) {
    if (d.kind == DomainKind::Sym) return Permutation::identity(d.n).images;
    return PerfectMatching::canonical_anchor(d.n).partner;
}

Certificate Certificate::of_pairs(const DomainDescriptor& d,
                                  std::vector<std::pair<int, int>> pairs) {
    int g = d.ground();
    for (auto& [i, j] : pairs) {
        if (i < 1 || i > g || j < 1 || j > g) throw UsageError("certificate index out of range");
        if (d.kind == DomainKind::PM) {
            if (i == j) throw UsageError("matching certificate edge must join distinct vertices");
            if (i > j) std::swap(i, j);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Certificate{std::move(pairs)};
}

static void check_certificate_syntax(const DomainDescriptor& d, const Certificate& c) {
    int g = d.ground();
    for (auto [i, j] : c.pairs) {
        if (i < 1 || i > g || j < 1 || j > g)
            throw UsageError("certificate index out of range");
        if (d.kind == DomainKind::PM && i == j)
            throw UsageError("matching certificate edge must join distinct vertices");
    }
}

bool certificate_consistent(const DomainDescriptor& d, const Certificate& c) {
    check_certificate_syntax(d, c);
    int g = d.ground();
    if (d.kind == DomainKind::Sym) {
        std::vector<char> src(static_cast<std::size_t>(g) + 1, 0), dst(src);
        for (auto [i, j] : c.pairs) {
            if (src[static_cast<std::size_t>(i)] || dst[static_cast<std::size_t>(j)]) return false;
            src[static_cast<std::size_t>(i)] = dst[static_cast<std::size_t>(j)] = 1;
        }
        return true;
    }
    std::vector<char> used(static_cast<std::size_t>(g) + 1, 0);
    for (auto [i, j] : c.pairs) {
        if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)]) return false;
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 1;
    }
    return true;
}

Certificate certificate_representation(const DomainDescriptor& d, const Elem& e) {
    std::vector<std::pair<int, int>> pairs;
    if (d.kind == DomainKind::Sym) {
        for (int i = 1; i <= d.n; ++i) pairs.emplace_back(i, e[static_cast<std::size_t>(i - 1)]);
    } else {
        for (int i = 1; i <= 2 * d.n; ++i) {
            int j = e[static_cast<std::size_t>(i - 1)];
            if (i < j) pairs.emplace_back(i, j);
        }
    }
    return Certificate{std::move(pairs)};
}

// --- enumeration ----------------------------------------------------------
//
// Lexicographic order on the canonical arrays coincides with the natural
// recursive generation: Sym fills positions 1..n choosing the smallest
// unused value first; PM repeatedly matches the smallest unmatched vertex
// to its candidates in increasing order.

static void enumerate_sym(int n, std::vector<Elem>& out) {
    Elem cur(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(0);
}

static void enumerate_pm_constrained(int two_n, Elem& cur, std::vector<Elem>& out) {
    int v = 0;
    for (int i = 1; i <= two_n; ++i) {
        if (cur[static_cast<std::size_t>(i - 1)] == 0) {
            v = i;
            break;
        }
    }
    if (v == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = v + 1; j <= two_n; ++j) {
        if (cur[static_cast<std::size_t>(j - 1)] != 0) continue;
        cur[static_cast<std::size_t>(v - 1)] = j;
        cur[static_cast<std::size_t>(j - 1)] = v;
        enumerate_pm_constrained(two_n, cur, out);
        cur[static_cast<std::size_t>(v - 1)] = 0;
        cur[static_cast<std::size_t>(j - 1)] = 0;
    }
}

std::vector<Elem> enumerate_domain(const DomainDescriptor& d) {
    // the size computation in make_descriptor already rejects overflow;
    // cap full enumeration at what fits in memory comfortably
    if (d.size > 100'000'000ull)
        throw CapacityError("domain too large to enumerate: " + std::to_string(d.size));
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(d.size));
    if (d.kind == DomainKind::Sym) {
        enumerate_sym(d.n, out);
    } else {
        Elem cur(static_cast<std::size_t>(2 * d.n), 0);
        enumerate_pm_constrained(2 * d.n, cur, out);
    }
    if (out.size() != d.size) throw InternalError("enumeration count mismatch");
    return out;
}

std::uint64_t rank_of(const DomainDescriptor& d, const Elem& e) {
    if (!valid_element(d, e)) throw UsageError("rank_of: element not in domain");
    if (d.kind == DomainKind::Sym) {
        // factorial number system
        int n = d.n;
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n; ++j)
                if (e[static_cast<std::size_t>(j)] < e[static_cast<std::size_t>(i)]) ++smaller;
            r += static_cast<std::uint64_t>(smaller) * factorial_checked(n - 1 - i);
        }
        return r;
    }
    int g = 2 * d.n;
    std::vector<char> gone(static_cast<std::size_t>(g) + 1, 0);
    std::uint64_t r = 0;
    int remaining_pairs = d.n;
    for (int v = 1; v <= g; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        int j = e[static_cast<std::size_t>(v - 1)];
        int idx = 0;
        for (int w = v + 1; w < j; ++w)
            if (!gone[static_cast<std::size_t>(w)]) ++idx;
        r += static_cast<std::uint64_t>(idx) * double_factorial_checked(remaining_pairs - 1);
        gone[static_cast<std::size_t>(v)] = gone[static_cast<std::size_t>(j)] = 1;
        --remaining_pairs;
    }
    return r;
}

Elem unrank(const DomainDescriptor& d, std::uint64_t r) {
    if (r >= d.size) throw UsageError("unrank: rank out of range");
    if (d.kind == DomainKind::Sym) {
        int n = d.n;
        std::vector<int> avail(static_cast<std::size_t>(n));
        std::iota(avail.begin(), avail.end(), 1);
        Elem e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::uint64_t block = factorial_checked(n - 1 - i);
            std::size_t idx = static_cast<std::size_t>(r / block);
            r %= block;
            e[static_cast<std::size_t>(i)] = avail[idx];
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
        }
        return e;
    }
    int g = 2 * d.n;
    Elem e(static_cast<std::size_t>(g), 0);
    int remaining_pairs = d.n;
    for (int v = 1; v <= g; ++v) {
        if (e[static_cast<std::size_t>(v - 1)] != 0) continue;
        std::uint64_t block = double_factorial_checked(remaining_pairs - 1);
        std::uint64_t idx = r / block;
        r %= block;
        int j = 0, count = 0;
        for (int w = v + 1; w <= g; ++w) {
            if (e[static_cast<std::size_t>(w - 1)] == 0) {
                if (static_cast<std::uint64_t>(count) == idx) {
                    j = w;
                    break;
                }
                ++count;
            }
        }
        if (j == 0) throw InternalError("unrank: candidate index out of range");
        e[static_cast<std::size_t>(v - 1)] = j;
        e[static_cast<std::size_t>(j - 1)] = v;
        --remaining_pairs;
    }
    return e;
}

int intersection_size(const DomainDescriptor& d, const Elem& a, const Elem& b) {
    if (a.size() != b.size() || static_cast<int>(a.size()) != d.ground())
        throw UsageError("intersection_size: mismatched domains");
    int agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) ++agree;
    return d.kind == DomainKind::Sym ? agree : agree / 2;
}

bool is_t_intersecting(const DomainDescriptor& d, const Elem& a, const Elem& b, int t) {
    if (t < 0) throw UsageError("is_t_intersecting: t must be >= 0");
    return intersection_size(d, a, b) >= t;
}

std::vector<Elem> coset_elements(const DomainDescriptor& d, const Certificate& c) {
    check_certificate_syntax(d, c);
    std::vector<Elem> out;
    int g = d.ground();
    if (d.kind == DomainKind::Sym) {
        Elem cur(static_cast<std::size_t>(g), 0);
        std::vector<char> used(static_cast<std::size_t>(g) + 1, 0);
        for (auto [i, j] : c.pairs) {
            int& slot = cur[static_cast<std::size_t>(i - 1)];
            if (slot != 0 && slot != j) return out;  // conflicting images
            if (slot == 0) {
                if (used[static_cast<std::size_t>(j)]) return out;  // value reused
                slot = j;
                used[static_cast<std::size_t>(j)] = 1;
            }
        }
        std::function<void(int)> rec = [&](int pos) {
            if (pos == g) {
                out.push_back(cur);
                return;
            }
            if (cur[static_cast<std::size_t>(pos)] != 0) {
                rec(pos + 1);
                return;
            }
            for (int v = 1; v <= g; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                used[static_cast<std::size_t>(v)] = 1;
                cur[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1);
                cur[static_cast<std::size_t>(pos)] = 0;
                used[static_cast<std::size_t>(v)] = 0;
            }
        };
        rec(0);
        return out;
    }
    Elem cur(static_cast<std::size_t>(g), 0);
    for (auto [i, j] : c.pairs) {
        int& si = cur[static_cast<std::size_t>(i - 1)];
        int& sj = cur[static_cast<std::size_t>(j - 1)];
        if ((si != 0 && si != j) || (sj != 0 && sj != i)) return out;
        si = j;
        sj = i;
    }
    enumerate_pm_constrained(g, cur, out);
    return out;
}

}  // namespace ifv

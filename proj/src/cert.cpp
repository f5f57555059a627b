#include "ifv/cert.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace ifv {

ExtendedCertificate ExtendedCertificate::plain(Certificate base) {
    return ExtendedCertificate{std::move(base), std::nullopt};
}

ExtendedCertificate ExtendedCertificate::with_triple(const DomainDescriptor& d, Certificate base,
                                                     std::array<int, 3> triple) {
    if (d.kind != DomainKind::PM) throw UsageError("extended certificates live on M_2n");
    std::sort(triple.begin(), triple.end());
    if (triple[0] == triple[1] || triple[1] == triple[2])
        throw UsageError("forbidden triple must have distinct elements");
    for (int v : triple) {
        if (v < 1 || v > d.ground()) throw UsageError("forbidden triple out of range");
        for (auto [i, j] : base.pairs)
            if (i == v || j == v)
                throw UsageError("forbidden triple must avoid the base certificate");
    }
    return ExtendedCertificate{std::move(base), triple};
}

bool satisfies(const DomainDescriptor& d, const Elem& x, const Certificate& c) {
    if (!valid_element(d, x)) throw UsageError("satisfies: element not in domain");
    int g = d.ground();
    for (auto [i, j] : c.pairs) {
        if (i < 1 || i > g || j < 1 || j > g)
            throw UsageError("satisfies: malformed certificate");
        if (x[static_cast<std::size_t>(i - 1)] != j) return false;
    }
    return true;
}

bool extended_satisfies(const DomainDescriptor& d, const Elem& m, const ExtendedCertificate& ec) {
    if (d.kind != DomainKind::PM) throw UsageError("extended_satisfies: requires M_2n");
    if (!satisfies(d, m, ec.base)) return false;
    if (ec.forbidden) {
        auto [i, j, k] = *ec.forbidden;
        if (m[static_cast<std::size_t>(i - 1)] == j || m[static_cast<std::size_t>(i - 1)] == k ||
            m[static_cast<std::size_t>(j - 1)] == k)
            return false;
    }
    return true;
}

MinCertificate min_certificate(const BooleanFunction& f, const Elem& x) {
    const DomainDescriptor& d = f.desc;
    if (!valid_element(d, x)) throw UsageError("min_certificate: element not in domain");
    std::uint8_t value = f.truth[static_cast<std::size_t>(rank_of(d, x))];
    Certificate rep = certificate_representation(d, x);
    int p = static_cast<int>(rep.pairs.size());  // n for both kinds

    auto certifies = [&](const Certificate& c) {
        for (const Elem& e : coset_elements(d, c))
            if (f.truth[static_cast<std::size_t>(rank_of(d, e))] != value) return false;
        return true;
    };

    for (int k = 0; k <= d.n - 1; ++k) {
        // combinations of position indices in lexicographic order
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<std::pair<int, int>> pairs;
            for (int i : idx) pairs.push_back(rep.pairs[static_cast<std::size_t>(i)]);
            Certificate c{pairs};
            if (certifies(c)) return MinCertificate{k, c};
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw InternalError("min_certificate: no certificate of size <= n-1 found");
}

int certificate_complexity(const BooleanFunction& f, const CertLimits& limits) {
    if (f.desc.size > limits.max_enumerated_inputs)
        throw CapacityError("certificate_complexity: domain size " + std::to_string(f.desc.size) +
                            " above the exhaustion limit");
    int best = 0;
    for (const Elem& x : enumerate_domain(f.desc))
        best = std::max(best, min_certificate(f, x).size);
    return best;
}

int one_side_certificate_complexity(const BooleanFunction& f, const CertLimits& limits) {
    if (f.weight() > limits.max_enumerated_inputs)
        throw CapacityError("one_side_certificate_complexity: family too large");
    int best = 0;
    std::vector<Elem> domain = enumerate_domain(f.desc);
    for (std::size_t r = 0; r < domain.size(); ++r)
        if (f.truth[r]) best = std::max(best, min_certificate(f, domain[r]).size);
    return best;
}

Elem complete_avoiding(const DomainDescriptor& d, const Certificate& c_a,
                       const Certificate& c_b) {
    if (static_cast<int>(c_a.size()) > d.n - 2)
        throw UsageError("complete_avoiding requires |c_a| <= n-2");
    if (!certificate_consistent(d, c_a) || !certificate_consistent(d, c_b))
        throw UsageError("complete_avoiding requires consistent certificates");

    if (d.kind == DomainKind::Sym) {
        int n = d.n;
        std::vector<char> i_used(static_cast<std::size_t>(n) + 1, 0), j_used(i_used);
        for (auto [i, j] : c_a.pairs) {
            i_used[static_cast<std::size_t>(i)] = 1;
            j_used[static_cast<std::size_t>(j)] = 1;
        }
        // c_b pairs living entirely on the free indices must sit at equal
        // positions of the two free lists; the cyclic shift then avoids them
        std::vector<int> free_i, free_j;
        std::vector<char> placed_i(static_cast<std::size_t>(n) + 1, 0), placed_j(placed_i);
        for (auto [i, j] : c_b.pairs) {
            if (!i_used[static_cast<std::size_t>(i)] && !j_used[static_cast<std::size_t>(j)]) {
                free_i.push_back(i);
                free_j.push_back(j);
                placed_i[static_cast<std::size_t>(i)] = 1;
                placed_j[static_cast<std::size_t>(j)] = 1;
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (!i_used[static_cast<std::size_t>(v)] && !placed_i[static_cast<std::size_t>(v)])
                free_i.push_back(v);
            if (!j_used[static_cast<std::size_t>(v)] && !placed_j[static_cast<std::size_t>(v)])
                free_j.push_back(v);
        }
        std::size_t q = free_i.size();  // = n - |c_a| >= 2
        Elem out(static_cast<std::size_t>(n), 0);
        for (auto [i, j] : c_a.pairs) out[static_cast<std::size_t>(i - 1)] = j;
        for (std::size_t s = 0; s < q; ++s)
            out[static_cast<std::size_t>(free_i[s] - 1)] = free_j[(s + 1) % q];
        return out;
    }

    int g = d.ground();
    std::vector<char> used(static_cast<std::size_t>(g) + 1, 0);
    for (auto [i, j] : c_a.pairs) {
        used[static_cast<std::size_t>(i)] = 1;
        used[static_cast<std::size_t>(j)] = 1;
    }
    // slots for the free vertices: each c_b edge inside the free set takes an
    // adjacent slot pair (2l-1, 2l); the crossing {k_s, k_{q+s}} then misses
    // every such edge because q >= 2
    std::vector<int> slots;
    std::vector<char> placed(static_cast<std::size_t>(g) + 1, 0);
    for (auto [i, j] : c_b.pairs) {
        if (!used[static_cast<std::size_t>(i)] && !used[static_cast<std::size_t>(j)]) {
            slots.push_back(i);
            slots.push_back(j);
            placed[static_cast<std::size_t>(i)] = 1;
            placed[static_cast<std::size_t>(j)] = 1;
        }
    }
    for (int v = 1; v <= g; ++v)
        if (!used[static_cast<std::size_t>(v)] && !placed[static_cast<std::size_t>(v)])
            slots.push_back(v);
    std::size_t q = slots.size() / 2;  // = n - |c_a| >= 2
    Elem out(static_cast<std::size_t>(g), 0);
    for (auto [i, j] : c_a.pairs) {
        out[static_cast<std::size_t>(i - 1)] = j;
        out[static_cast<std::size_t>(j - 1)] = i;
    }
    for (std::size_t s = 0; s < q; ++s) {
        int a = slots[s], b = slots[q + s];
        out[static_cast<std::size_t>(a - 1)] = b;
        out[static_cast<std::size_t>(b - 1)] = a;
    }
    return out;
}

PairwiseIntersectionReport check_pairwise_certificate_intersection(const BooleanFunction& f) {
    PairwiseIntersectionReport report;
    const DomainDescriptor& d = f.desc;
    std::vector<Elem> domain = enumerate_domain(d);
    std::vector<const Elem*> members;
    for (std::size_t r = 0; r < domain.size(); ++r)
        if (f.truth[r]) members.push_back(&domain[r]);

    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!is_t_intersecting(d, *members[a], *members[b], 2)) {
                report.precondition_failure = "family is not 2-intersecting";
                return report;
            }
    int cf = certificate_complexity(f);
    report.complexity = cf;
    if (cf > d.n - 2) {
        report.precondition_failure = "C(f) = " + std::to_string(cf) + " exceeds n-2";
        return report;
    }
    report.precondition_ok = true;

    std::vector<Certificate> certs;
    certs.reserve(members.size());
    for (const Elem* m : members) certs.push_back(min_certificate(f, *m).cert);

    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a; b < members.size(); ++b) {
            int overlap = 0;
            for (const auto& p : certs[a].pairs)
                if (std::find(certs[b].pairs.begin(), certs[b].pairs.end(), p) !=
                    certs[b].pairs.end())
                    ++overlap;
            if (overlap < 2)
                report.violations.push_back(PairwiseIntersectionReport::Violation{
                    *members[a], *members[b], certs[a], certs[b], overlap});
        }
    report.pass = report.violations.empty();
    return report;
}

bool check_extended_reduction(int n, const ExtendedCertificate& c1,
                              const ExtendedCertificate& c2) {
    if (!c1.forbidden) throw UsageError("check_extended_reduction: c1 needs a forbidden triple");
    DomainDescriptor d = make_descriptor(DomainKind::PM, n);
    if (static_cast<int>(c1.size()) > n - 2 || static_cast<int>(c2.size()) > n - 2)
        throw UsageError("check_extended_reduction: certificate sizes must be <= n-2");
    std::vector<Elem> domain = enumerate_domain(d);
    std::vector<const Elem*> sat1, sat2, sat_base;
    for (const Elem& m : domain) {
        if (extended_satisfies(d, m, c1)) sat1.push_back(&m);
        if (extended_satisfies(d, m, c2)) sat2.push_back(&m);
        if (satisfies(d, m, c1.base)) sat_base.push_back(&m);
    }
    auto all_pairs_2int = [&](const std::vector<const Elem*>& as,
                              const std::vector<const Elem*>& bs) {
        for (const Elem* a : as)
            for (const Elem* b : bs)
                if (!is_t_intersecting(d, *a, *b, 2)) return false;
        return true;
    };
    if (!all_pairs_2int(sat1, sat2)) return true;  // hypothesis fails, vacuously fine
    return all_pairs_2int(sat_base, sat2);
}

bool cosets_compatible(const DomainDescriptor& d, std::pair<int, int> a, std::pair<int, int> b) {
    if (a == b) return true;
    if (d.kind == DomainKind::Sym) return a.first != b.first && a.second != b.second;
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
}

std::optional<Cover> find_cover(const BooleanFunction& f, int r) {
    if (r < 1) throw UsageError("find_cover: r must be >= 1");
    if (r > 64 || f.desc.size > 1'000'000) throw CapacityError("find_cover: instance too large");
    const DomainDescriptor& d = f.desc;
    std::vector<Elem> domain = enumerate_domain(d);
    std::vector<const Elem*> members;
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (f.truth[i]) members.push_back(&domain[i]);
    if (members.empty()) return Cover{{}};

    std::vector<std::pair<int, int>> chosen;
    std::function<bool(int)> search = [&](int depth) -> bool {
        const Elem* uncovered = nullptr;
        for (const Elem* m : members) {
            bool covered = false;
            for (auto p : chosen)
                if ((*m)[static_cast<std::size_t>(p.first - 1)] == p.second) {
                    covered = true;
                    break;
                }
            if (!covered) {
                uncovered = m;
                break;
            }
        }
        if (!uncovered) return true;
        if (depth == r) return false;
        // any covering coset of this member corresponds to one of its pairs
        for (auto p : certificate_representation(d, *uncovered).pairs) {
            bool ok = true;
            for (auto q : chosen)
                if (!cosets_compatible(d, p, q)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(p);
            if (search(depth + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(0)) return Cover{chosen};
    return std::nullopt;
}

bool is_r_covered(const BooleanFunction& f, int r) { return find_cover(f, r).has_value(); }

std::uint64_t bound_T(int c) {
    if (c < 2) throw UsageError("bound_T requires C >= 2");
    std::uint64_t half = static_cast<std::uint64_t>(c / 2);
    std::uint64_t num = 2 * half * factorial_checked(c - 1);
    std::uint64_t den = 1ull << half;
    if (num % den != 0) throw InternalError("bound_T: closed form is not an integer");
    return num / den;
}

std::uint64_t count_min_certificate_classes(const BooleanFunction& f, const CertLimits& limits) {
    if (f.weight() > limits.max_enumerated_inputs)
        throw CapacityError("count_min_certificate_classes: family too large");
    std::set<Certificate> seen;
    std::vector<Elem> domain = enumerate_domain(f.desc);
    for (std::size_t r = 0; r < domain.size(); ++r)
        if (f.truth[r]) seen.insert(min_certificate(f, domain[r]).cert);
    return seen.size();
}

}  // namespace ifv

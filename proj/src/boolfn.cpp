#include "ifv/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace ifv {

BooleanFunction BooleanFunction::constant(const DomainDescriptor& d, int value) {
    return BooleanFunction{d, std::vector<std::uint8_t>(static_cast<std::size_t>(d.size),
                                                        value ? 1u : 0u)};
}

std::uint64_t BooleanFunction::weight() const {
    std::uint64_t w = 0;
    for (auto b : truth) w += b;
    return w;
}

BooleanFunction indicator_of_family(const DomainDescriptor& d, const std::vector<Elem>& members) {
    BooleanFunction f = BooleanFunction::constant(d, 0);
    for (const Elem& e : members) {
        if (!valid_element(d, e)) throw UsageError("indicator_of_family: member outside domain");
        f.truth[static_cast<std::size_t>(rank_of(d, e))] = 1;
    }
    return f;
}

// --- monomial basis --------------------------------------------------------

static bool elem_satisfies_pair(const DomainDescriptor& d, const Elem& e,
                                std::pair<int, int> p) {
    if (d.kind == DomainKind::Sym) return e[static_cast<std::size_t>(p.first - 1)] == p.second;
    return e[static_cast<std::size_t>(p.first - 1)] == p.second;
}

MonomialBasis build_monomial_basis(const DomainDescriptor& d, int degree_cap) {
    if (degree_cap < 0) throw UsageError("degree cap must be >= 0");
    MonomialBasis basis{d, degree_cap, {}, {}};

    // variables in lexicographic order; monomials grown recursively with
    // compatibility pruning
    std::vector<std::pair<int, int>> vars;
    int g = d.ground();
    if (d.kind == DomainKind::Sym) {
        for (int i = 1; i <= g; ++i)
            for (int j = 1; j <= g; ++j) vars.emplace_back(i, j);
    } else {
        for (int i = 1; i <= g; ++i)
            for (int j = i + 1; j <= g; ++j) vars.emplace_back(i, j);
    }

    auto compatible = [&](const std::vector<std::pair<int, int>>& mono,
                          std::pair<int, int> v) {
        for (auto [i, j] : mono) {
            if (d.kind == DomainKind::Sym) {
                if (i == v.first || j == v.second) return false;
            } else {
                if (i == v.first || i == v.second || j == v.first || j == v.second) return false;
            }
        }
        return true;
    };

    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        basis.monomials.push_back(cur);
        if (static_cast<int>(cur.size()) == degree_cap) return;
        for (std::size_t v = start; v < vars.size(); ++v) {
            if (!compatible(cur, vars[v])) continue;
            cur.push_back(vars[v]);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);

    std::vector<Elem> domain = enumerate_domain(d);
    basis.columns.reserve(basis.monomials.size());
    for (const auto& mono : basis.monomials) {
        std::vector<std::uint8_t> col(domain.size());
        for (std::size_t r = 0; r < domain.size(); ++r) {
            bool all = true;
            for (auto p : mono)
                if (!elem_satisfies_pair(d, domain[r], p)) {
                    all = false;
                    break;
                }
            col[r] = all ? 1u : 0u;
        }
        basis.columns.push_back(std::move(col));
    }
    return basis;
}

namespace {
struct SpanKey {
    int kind;
    int n;
    int degree;
    bool operator<(const SpanKey& o) const {
        return std::tie(kind, n, degree) < std::tie(o.kind, o.n, o.degree);
    }
};
std::map<SpanKey, RowBasis> g_span_cache;
std::mutex g_span_mutex;
}  // namespace

const RowBasis& monomial_span_basis(const DomainDescriptor& d, int degree) {
    SpanKey key{static_cast<int>(d.kind), d.n, degree};
    std::lock_guard<std::mutex> lock(g_span_mutex);
    auto it = g_span_cache.find(key);
    if (it != g_span_cache.end()) return it->second;
    MonomialBasis mb = build_monomial_basis(d, degree);
    RowBasis rb(static_cast<std::size_t>(d.size));
    for (const auto& col : mb.columns) {
        if (rb.rank() == rb.dim()) break;
        rb.insert(to_rat_vec(col));
    }
    return g_span_cache.emplace(key, std::move(rb)).first->second;
}

int polynomial_degree(const BooleanFunction& f, std::uint64_t max_domain_size) {
    const DomainDescriptor& d = f.desc;
    if (f.truth.size() != d.size) throw UsageError("truth vector length mismatch");
    if (d.size > max_domain_size)
        throw CapacityError("polynomial_degree: domain size " + std::to_string(d.size) +
                            " exceeds limit " + std::to_string(max_domain_size));
    RatVec v = to_rat_vec(f.truth);
    for (int deg = 0; deg <= d.n - 1; ++deg) {
        if (monomial_span_basis(d, deg).contains(v)) return deg;
    }
    // every function is a polynomial of degree at most n-1
    throw InternalError("polynomial_degree: membership failed at the n-1 cap");
}

// --- cube functions --------------------------------------------------------

int cube_degree(const CubeFunction& g) {
    if (g.arity < 0 || g.truth.size() != (1ull << g.arity))
        throw UsageError("cube function truth table length mismatch");
    std::vector<int> c(g.truth.begin(), g.truth.end());
    std::size_t size = c.size();
    for (int b = 0; b < g.arity; ++b) {
        std::size_t bit = 1ull << b;
        for (std::size_t s = 0; s < size; ++s)
            if (s & bit) c[s] -= c[s ^ bit];
    }
    int deg = 0;
    for (std::size_t s = 0; s < size; ++s)
        if (c[s] != 0) deg = std::max(deg, std::popcount(s));
    return deg;
}

int sensitivity_at(const CubeFunction& g, unsigned point) {
    if (point >= g.truth.size()) throw UsageError("sensitivity point out of range");
    int s = 0;
    for (int b = 0; b < g.arity; ++b)
        if (g.truth[point] != g.truth[point ^ (1u << b)]) ++s;
    return s;
}

std::optional<CubeFunction> degree2_sensitivity_scan(int k, int s) {
    if (k < 1 || k > 5)
        throw CapacityError("degree2_sensitivity_scan supports 1 <= k <= 5");
    if (s < 0 || s > k) throw UsageError("sensitivity target must lie in [0, k]");
    std::size_t points = 1ull << k;      // <= 32
    std::uint64_t tables = 1ull << points;

    // tables enumerated in lexicographic order of (g(0), g(1), ..., g(2^k-1)),
    // i.e. the value at point p sits at bit points-1-p
    CubeFunction g{k, std::vector<std::uint8_t>(points)};
    for (std::uint64_t m = 0; m < tables; ++m) {
        // cheap filter: sensitivity at the origin
        int sens = 0;
        int at_zero = static_cast<int>((m >> (points - 1)) & 1u);
        for (int b = 0; b < k; ++b)
            if (static_cast<int>((m >> (points - 1 - (1u << b))) & 1u) != at_zero) ++sens;
        if (sens < s) continue;
        for (std::size_t p = 0; p < points; ++p)
            g.truth[p] = static_cast<std::uint8_t>((m >> (points - 1 - p)) & 1u);
        if (cube_degree(g) <= 2) return g;
    }
    return std::nullopt;
}

// --- lifting ---------------------------------------------------------------

static CubeFunction lift_impl(const BooleanFunction& f, const Elem& base,
                              const std::vector<std::function<void(Elem&)>>& appliers) {
    int k = static_cast<int>(appliers.size());
    CubeFunction g{k, std::vector<std::uint8_t>(1ull << k)};
    for (std::size_t y = 0; y < g.truth.size(); ++y) {
        Elem e = base;
        for (int b = 0; b < k; ++b)
            if (y & (1ull << b)) appliers[static_cast<std::size_t>(b)](e);
        g.truth[y] = f.truth[static_cast<std::size_t>(rank_of(f.desc, e))];
    }
    return g;
}

CubeFunction lift_to_cube(const BooleanFunction& f, const Elem& base,
                          const std::vector<TranspositionSpec>& specs) {
    if (f.desc.kind != DomainKind::Sym) throw UsageError("transposition specs require Sym");
    if (!valid_element(f.desc, base)) throw UsageError("lift base not in domain");
    std::vector<char> touched(static_cast<std::size_t>(f.desc.ground()) + 1, 0);
    std::vector<std::function<void(Elem&)>> appliers;
    for (auto spec : specs) {
        if (spec.a < 1 || spec.a > f.desc.n || spec.b < 1 || spec.b > f.desc.n || spec.a == spec.b)
            throw UsageError("transposition positions out of range");
        if (touched[static_cast<std::size_t>(spec.a)] || touched[static_cast<std::size_t>(spec.b)])
            throw UsageError("lift specs must be disjoint");
        touched[static_cast<std::size_t>(spec.a)] = touched[static_cast<std::size_t>(spec.b)] = 1;
        appliers.emplace_back([spec](Elem& e) {
            std::swap(e[static_cast<std::size_t>(spec.a - 1)],
                      e[static_cast<std::size_t>(spec.b - 1)]);
        });
    }
    return lift_impl(f, base, appliers);
}

CubeFunction lift_to_cube(const BooleanFunction& f, const Elem& base,
                          const std::vector<EdgeSwapSpec>& specs) {
    if (f.desc.kind != DomainKind::PM) throw UsageError("edge-swap specs require PM");
    if (!valid_element(f.desc, base)) throw UsageError("lift base not in domain");
    std::vector<char> touched(static_cast<std::size_t>(f.desc.ground()) + 1, 0);
    std::vector<std::function<void(Elem&)>> appliers;
    for (auto spec : specs) {
        int vs[4] = {spec.a1, spec.a2, spec.b1, spec.b2};
        for (int v : vs) {
            if (v < 1 || v > f.desc.ground()) throw UsageError("edge swap vertex out of range");
            if (touched[static_cast<std::size_t>(v)])
                throw UsageError("lift specs must be disjoint");
            touched[static_cast<std::size_t>(v)] = 1;
        }
        if (base[static_cast<std::size_t>(spec.a1 - 1)] != spec.a2 ||
            base[static_cast<std::size_t>(spec.b1 - 1)] != spec.b2)
            throw UsageError("edge swap requires the base edges {a1,a2},{b1,b2}");
        appliers.emplace_back([spec](Elem& e) {
            e[static_cast<std::size_t>(spec.a1 - 1)] = spec.b2;
            e[static_cast<std::size_t>(spec.b2 - 1)] = spec.a1;
            e[static_cast<std::size_t>(spec.a2 - 1)] = spec.b1;
            e[static_cast<std::size_t>(spec.b1 - 1)] = spec.a2;
        });
    }
    return lift_impl(f, base, appliers);
}

// --- restriction -----------------------------------------------------------

Elem embed_from_coset(const DomainDescriptor& full, std::pair<int, int> pair, const Elem& e) {
    auto [i, j] = pair;
    int g = full.ground();
    if (full.kind == DomainKind::Sym) {
        std::vector<int> src, tgt;
        for (int v = 1; v <= g; ++v) {
            if (v != i) src.push_back(v);
            if (v != j) tgt.push_back(v);
        }
        Elem out(static_cast<std::size_t>(g));
        out[static_cast<std::size_t>(i - 1)] = j;
        for (std::size_t p = 0; p < src.size(); ++p)
            out[static_cast<std::size_t>(src[p] - 1)] =
                tgt[static_cast<std::size_t>(e[p] - 1)];
        return out;
    }
    std::vector<int> verts;
    for (int v = 1; v <= g; ++v)
        if (v != i && v != j) verts.push_back(v);
    Elem out(static_cast<std::size_t>(g));
    out[static_cast<std::size_t>(i - 1)] = j;
    out[static_cast<std::size_t>(j - 1)] = i;
    for (std::size_t p = 0; p < verts.size(); ++p)
        out[static_cast<std::size_t>(verts[p] - 1)] =
            verts[static_cast<std::size_t>(e[p] - 1)];
    return out;
}

BooleanFunction restrict_to_coset(const BooleanFunction& f, std::pair<int, int> pair) {
    const DomainDescriptor& d = f.desc;
    auto [i, j] = pair;
    int g = d.ground();
    if (i < 1 || i > g || j < 1 || j > g) throw UsageError("restriction pair out of range");
    if (d.kind == DomainKind::PM && i == j)
        throw UsageError("restriction to an empty coset (i = j)");
    if (d.n < 2) throw UsageError("cannot restrict a domain with n < 2");

    DomainDescriptor sub = make_descriptor(d.kind, d.n - 1);
    BooleanFunction out{sub, std::vector<std::uint8_t>(static_cast<std::size_t>(sub.size))};
    std::vector<Elem> sub_elems = enumerate_domain(sub);
    for (std::size_t r = 0; r < sub_elems.size(); ++r) {
        Elem e = embed_from_coset(d, pair, sub_elems[r]);
        out.truth[r] = f.truth[static_cast<std::size_t>(rank_of(d, e))];
    }
    return out;
}

// --- degree-1 classification -----------------------------------------------

BooleanFunction evaluate_form(const DomainDescriptor& d, const Degree1Form& form) {
    std::vector<Elem> domain = enumerate_domain(d);
    BooleanFunction f = BooleanFunction::constant(d, 0);
    auto in_set = [&](int v) {
        return std::binary_search(form.set.begin(), form.set.end(), v);
    };
    for (std::size_t r = 0; r < domain.size(); ++r) {
        const Elem& e = domain[r];
        bool val = false;
        switch (form.kind) {
            case Degree1Form::Kind::RowDictator:
            case Degree1Form::Kind::PMDictator:
                val = in_set(e[static_cast<std::size_t>(form.index - 1)]);
                break;
            case Degree1Form::Kind::ColDictator: {
                int pre = 0;
                for (int i = 1; i <= d.n; ++i)
                    if (e[static_cast<std::size_t>(i - 1)] == form.index) {
                        pre = i;
                        break;
                    }
                val = in_set(pre);
                break;
            }
            case Degree1Form::Kind::Triangle:
            case Degree1Form::Kind::AntiTriangle: {
                int a = form.set[0], b = form.set[1], c = form.set[2];
                bool hit = e[static_cast<std::size_t>(a - 1)] == b ||
                           e[static_cast<std::size_t>(a - 1)] == c ||
                           e[static_cast<std::size_t>(b - 1)] == c;
                val = form.kind == Degree1Form::Kind::Triangle ? hit : !hit;
                break;
            }
        }
        f.truth[r] = val ? 1u : 0u;
    }
    return f;
}

Degree1Form classify_degree1(const BooleanFunction& f) {
    const DomainDescriptor& d = f.desc;
    if (polynomial_degree(f) > 1)
        throw UsageError("classify_degree1: function has degree > 1");
    std::vector<Elem> domain = enumerate_domain(d);
    int g = d.ground();

    if (d.kind == DomainKind::Sym) {
        // row dictators first, smallest i — deterministic for constants
        for (int i = 1; i <= d.n; ++i) {
            std::vector<int> J;
            for (int v = 1; v <= d.n; ++v) {
                for (std::size_t r = 0; r < domain.size(); ++r) {
                    if (domain[r][static_cast<std::size_t>(i - 1)] == v && f.truth[r]) {
                        J.push_back(v);
                        break;
                    }
                }
            }
            Degree1Form form{Degree1Form::Kind::RowDictator, i, J};
            if (evaluate_form(d, form) == f) return form;
        }
        for (int j = 1; j <= d.n; ++j) {
            std::vector<int> I;
            for (int pre = 1; pre <= d.n; ++pre) {
                for (std::size_t r = 0; r < domain.size(); ++r) {
                    if (domain[r][static_cast<std::size_t>(pre - 1)] == j && f.truth[r]) {
                        I.push_back(pre);
                        break;
                    }
                }
            }
            Degree1Form form{Degree1Form::Kind::ColDictator, j, I};
            if (evaluate_form(d, form) == f) return form;
        }
        throw InternalError("degree-<=1 function on S_n matches no dictator form");
    }

    for (int i = 1; i <= g; ++i) {
        std::vector<int> J;
        for (int v = 1; v <= g; ++v) {
            if (v == i) continue;
            for (std::size_t r = 0; r < domain.size(); ++r) {
                if (domain[r][static_cast<std::size_t>(i - 1)] == v && f.truth[r]) {
                    J.push_back(v);
                    break;
                }
            }
        }
        Degree1Form form{Degree1Form::Kind::PMDictator, i, J};
        if (evaluate_form(d, form) == f) return form;
    }
    for (int a = 1; a <= g; ++a)
        for (int b = a + 1; b <= g; ++b)
            for (int c = b + 1; c <= g; ++c) {
                Degree1Form tri{Degree1Form::Kind::Triangle, 0, {a, b, c}};
                if (evaluate_form(d, tri) == f) return tri;
                Degree1Form anti{Degree1Form::Kind::AntiTriangle, 0, {a, b, c}};
                if (evaluate_form(d, anti) == f) return anti;
            }
    throw InternalError("degree-<=1 function on M_2n matches no classified form");
}

}  // namespace ifv

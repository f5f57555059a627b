#include "ifv/repr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace ifv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw UsageError("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition doubled(const Partition& lambda) {
    std::vector<int> p = lambda.parts;
    for (int& x : p) x *= 2;
    return Partition(std::move(p));
}

YoungTableau YoungTableau::of_rows(std::vector<std::vector<int>> rows) {
    int n = 0;
    for (const auto& row : rows) {
        if (row.empty()) throw UsageError("tableau rows must be nonempty");
        n += static_cast<int>(row.size());
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : rows)
        for (int x : row) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
                throw UsageError("tableau must contain 1..n exactly once");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    return YoungTableau{std::move(rows)};
}

int YoungTableau::entry_count() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

std::vector<int> YoungTableau::shape() const {
    std::vector<int> s;
    for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
    return s;
}

bool YoungTableau::partition_shape() const {
    auto s = shape();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[i - 1]) return false;
    return true;
}

// Columns of a left-justified arrangement: column c holds the c-th entry of
// every row long enough. Row order does not change the column sets, which
// is why the chi machinery is row-order insensitive.
static std::vector<std::vector<int>> columns_of(const YoungTableau& t) {
    std::size_t width = 0;
    for (const auto& row : t.rows) width = std::max(width, row.size());
    std::vector<std::vector<int>> cols(width);
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

static int permutation_sign(const std::vector<int>& perm) {
    // perm maps positions 0..k-1; count cycles
    int k = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    int sign = 1;
    for (int i = 0; i < k; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            j = perm[static_cast<std::size_t>(j)];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<SignedColumnPermutation> column_stabilizer(const YoungTableau& t) {
    int n = t.entry_count();
    std::vector<std::vector<int>> cols = columns_of(t);
    std::vector<SignedColumnPermutation> out;

    std::vector<int> base(static_cast<std::size_t>(n) + 1);
    std::iota(base.begin(), base.end(), 0);
    SignedColumnPermutation cur{base, 1};

    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cols.size()) {
            out.push_back(cur);
            return;
        }
        const std::vector<int>& col = cols[c];
        std::vector<int> idx(col.size());
        std::iota(idx.begin(), idx.end(), 0);
        // iterate all permutations of this column in lexicographic order
        do {
            for (std::size_t p = 0; p < col.size(); ++p)
                cur.map[static_cast<std::size_t>(col[p])] = col[static_cast<std::size_t>(idx[p])];
            int sgn = permutation_sign(idx);
            int saved = cur.sign;
            cur.sign *= sgn;
            rec(c + 1);
            cur.sign = saved;
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (std::size_t p = 0; p < col.size(); ++p)
            cur.map[static_cast<std::size_t>(col[p])] = col[p];
    };
    rec(0);
    return out;
}

YoungTableau apply_to_entries(const YoungTableau& t, const std::vector<int>& map) {
    YoungTableau out = t;
    for (auto& row : out.rows)
        for (int& x : row) x = map[static_cast<std::size_t>(x)];
    return out;
}

static std::vector<int> row_index_of_entries(const YoungTableau& t) {
    std::vector<int> row_of(static_cast<std::size_t>(t.entry_count()) + 1, -1);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int x : t.rows[r]) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
    return row_of;
}

int eval_e_sym(const YoungTableau& s, const YoungTableau& t, const Elem& alpha) {
    if (s.shape() != t.shape()) throw UsageError("e_{s,t} requires tableaux of one shape");
    if (static_cast<int>(alpha.size()) != s.entry_count())
        throw UsageError("e_{s,t}: element size does not match tableau");
    std::vector<int> row_of_t = row_index_of_entries(t);
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        for (int x : s.rows[r])
            if (row_of_t[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x - 1)])] !=
                static_cast<int>(r))
                return 0;
    return 1;
}

int eval_e_pm(const YoungTableau& t, const Elem& m) {
    for (const auto& row : t.rows)
        if (row.size() % 2 != 0) throw UsageError("e_t on matchings requires even row lengths");
    if (static_cast<int>(m.size()) != t.entry_count())
        throw UsageError("e_t: element size does not match tableau");
    std::vector<int> row_of = row_index_of_entries(t);
    for (int i = 1; i <= static_cast<int>(m.size()); ++i)
        if (row_of[static_cast<std::size_t>(i)] !=
            row_of[static_cast<std::size_t>(m[static_cast<std::size_t>(i - 1)])])
            return 0;
    return 1;
}

std::vector<int> chi_vector_sym(const YoungTableau& s, const YoungTableau& t,
                                const DomainDescriptor& d, const std::vector<Elem>& domain) {
    if (d.kind != DomainKind::Sym || s.entry_count() != d.n)
        throw UsageError("chi_vector_sym: tableau does not match domain");
    std::vector<int> chi(domain.size(), 0);
    for (const SignedColumnPermutation& pi : column_stabilizer(t)) {
        YoungTableau tp = apply_to_entries(t, pi.map);
        std::vector<int> row_of_tp = row_index_of_entries(tp);
        for (std::size_t r = 0; r < domain.size(); ++r) {
            const Elem& alpha = domain[r];
            bool ok = true;
            for (std::size_t k = 0; k < s.rows.size() && ok; ++k)
                for (int x : s.rows[k])
                    if (row_of_tp[static_cast<std::size_t>(
                            alpha[static_cast<std::size_t>(x - 1)])] != static_cast<int>(k)) {
                        ok = false;
                        break;
                    }
            if (ok) chi[r] += pi.sign;
        }
    }
    for (std::size_t r = 0; r < chi.size(); ++r)
        if (chi[r] < -1 || chi[r] > 1)
            throw InternalError("chi_{s,t} left the range {-1,0,1} at rank " + std::to_string(r) +
                                " with value " + std::to_string(chi[r]));
    return chi;
}

std::vector<int> chi_vector_sym(const YoungTableau& s, const YoungTableau& t,
                                const DomainDescriptor& d) {
    return chi_vector_sym(s, t, d, enumerate_domain(d));
}

std::vector<int> chi_vector_pm(const YoungTableau& t, const DomainDescriptor& d,
                               const std::vector<Elem>& domain,
                               std::vector<ChiRangeViolation>* violations) {
    if (d.kind != DomainKind::PM || t.entry_count() != d.ground())
        throw UsageError("chi_vector_pm: tableau does not match domain");
    std::vector<int> chi(domain.size(), 0);
    for (const SignedColumnPermutation& pi : column_stabilizer(t)) {
        YoungTableau tp = apply_to_entries(t, pi.map);
        std::vector<int> row_of = row_index_of_entries(tp);
        for (std::size_t r = 0; r < domain.size(); ++r) {
            const Elem& m = domain[r];
            bool ok = true;
            for (int i = 1; i <= d.ground(); ++i)
                if (row_of[static_cast<std::size_t>(i)] !=
                    row_of[static_cast<std::size_t>(m[static_cast<std::size_t>(i - 1)])]) {
                    ok = false;
                    break;
                }
            if (ok) chi[r] += pi.sign;
        }
    }
    if (violations) {
        for (std::size_t r = 0; r < chi.size(); ++r)
            if (chi[r] < -1 || chi[r] > 1)
                violations->push_back(ChiRangeViolation{t.rows, domain[r], chi[r]});
    }
    return chi;
}

std::vector<int> chi_vector_pm(const YoungTableau& t, const DomainDescriptor& d) {
    return chi_vector_pm(t, d, enumerate_domain(d), nullptr);
}

// --- standard tableaux and dimensions --------------------------------------

namespace {
std::map<std::vector<int>, std::uint64_t> g_syt_cache;
std::mutex g_syt_mutex;
}  // namespace

static std::uint64_t syt_count_rec(const std::vector<int>& shape, std::vector<int>& filled,
                                   int placed, int n) {
    if (placed == n) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] >= shape[r]) continue;
        if (r > 0 && filled[r] >= filled[r - 1]) continue;  // column must grow downward
        ++filled[r];
        total += syt_count_rec(shape, filled, placed + 1, n);
        --filled[r];
    }
    return total;
}

std::uint64_t syt_count(const std::vector<int>& shape) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] <= 0) throw UsageError("syt_count: invalid shape");
        if (i > 0 && shape[i] > shape[i - 1]) throw UsageError("syt_count: shape not a partition");
    }
    std::lock_guard<std::mutex> lock(g_syt_mutex);
    auto it = g_syt_cache.find(shape);
    if (it != g_syt_cache.end()) return it->second;
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> filled(shape.size(), 0);
    std::uint64_t c = syt_count_rec(shape, filled, 0, n);
    g_syt_cache[shape] = c;
    return c;
}

std::uint64_t component_dimension(const DomainDescriptor& d, const Partition& lambda) {
    if (lambda.sum() != d.n) throw UsageError("component_dimension: lambda must partition n");
    if (d.kind == DomainKind::Sym) {
        std::uint64_t f = syt_count(lambda.parts);
        return f * f;
    }
    return syt_count(doubled(lambda).parts);
}

void for_each_filling(const std::vector<int>& shape,
                      const std::function<bool(const YoungTableau&)>& visit) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.push_back(std::vector<int>(static_cast<std::size_t>(len), 0));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    bool stop = false;
    std::function<void(int)> rec = [&](int cell) {
        if (stop) return;
        if (cell == n) {
            if (!visit(YoungTableau{rows})) stop = true;
            return;
        }
        // row-major cell order
        int c = cell;
        std::size_t r = 0;
        while (c >= static_cast<int>(rows[r].size())) {
            c -= static_cast<int>(rows[r].size());
            ++r;
        }
        for (int v = 1; v <= n && !stop; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            rows[r][static_cast<std::size_t>(c)] = v;
            rec(cell + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(0);
}

// --- projection -------------------------------------------------------------

namespace {
struct ComponentKey {
    int kind;
    int n;
    std::vector<int> parts;
    bool operator<(const ComponentKey& o) const {
        return std::tie(kind, n, parts) < std::tie(o.kind, o.n, o.parts);
    }
};
std::map<ComponentKey, OrthoBasis> g_component_cache;
std::mutex g_component_mutex;

// Canonical-representative pruning for the PM generator stream: chi is
// invariant (up to sign) under column permutations and exactly invariant
// under row reorderings, so fillings with strictly increasing columns and
// equal-length row blocks sorted by first entry already span the component.
bool pm_canonical_filling(const YoungTableau& t) {
    auto cols = columns_of(t);
    for (const auto& col : cols)
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i] <= col[i - 1]) return false;
    for (std::size_t r = 1; r < t.rows.size(); ++r)
        if (t.rows[r].size() == t.rows[r - 1].size() && t.rows[r][0] < t.rows[r - 1][0])
            return false;
    return true;
}

const OrthoBasis& component_basis(const DomainDescriptor& d, const Partition& lambda) {
    ComponentKey key{static_cast<int>(d.kind), d.n, lambda.parts};
    std::lock_guard<std::mutex> lock(g_component_mutex);
    auto it = g_component_cache.find(key);
    if (it != g_component_cache.end()) return it->second;

    std::uint64_t dim = component_dimension(d, lambda);
    std::vector<Elem> domain = enumerate_domain(d);
    OrthoBasis basis(static_cast<std::size_t>(d.size));

    if (d.kind == DomainKind::Sym) {
        for_each_filling(lambda.parts, [&](const YoungTableau& s) {
            for_each_filling(lambda.parts, [&](const YoungTableau& t) {
                std::vector<int> chi = chi_vector_sym(s, t, d, domain);
                basis.insert(to_rat_vec(chi));
                return basis.rank() < dim;
            });
            return basis.rank() < dim;
        });
    } else {
        Partition shape = doubled(lambda);
        for_each_filling(shape.parts, [&](const YoungTableau& t) {
            if (pm_canonical_filling(t)) {
                std::vector<int> chi = chi_vector_pm(t, d, domain, nullptr);
                basis.insert(to_rat_vec(chi));
            }
            return basis.rank() < dim;
        });
    }
    if (basis.rank() != dim)
        throw InternalError("chi generators span rank " + std::to_string(basis.rank()) +
                            " but the component dimension is " + std::to_string(dim));
    return g_component_cache.emplace(key, std::move(basis)).first->second;
}
}  // namespace

Rat IsotypicComponent::norm_sq() const {
    Rat s = 0;
    for (const Rat& x : vec) s += x * x;
    return s;
}

bool IsotypicComponent::is_zero() const { return is_zero_vec(vec); }

IsotypicComponent isotypic_project(const DomainDescriptor& d, const RatVec& f,
                                   const Partition& lambda) {
    if (f.size() != d.size) throw UsageError("isotypic_project: vector length mismatch");
    const OrthoBasis& basis = component_basis(d, lambda);
    return IsotypicComponent{lambda, basis.project(f), component_dimension(d, lambda)};
}

IsotypicComponent isotypic_project(const BooleanFunction& f, const Partition& lambda) {
    return isotypic_project(f.desc, to_rat_vec(f.truth), lambda);
}

std::vector<IsotypicComponent> isotypic_decomposition(const BooleanFunction& f) {
    std::vector<IsotypicComponent> out;
    RatVec v = to_rat_vec(f.truth);
    for (const Partition& lambda : partitions_of(f.desc.n))
        out.push_back(isotypic_project(f.desc, v, lambda));
    return out;
}

int spectral_degree(const BooleanFunction& f) {
    RatVec v = to_rat_vec(f.truth);
    std::vector<Partition> parts = partitions_of(f.desc.n);
    // visit smallest lambda_1 first: the first nonzero component decides
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Partition& a, const Partition& b) { return a.first() < b.first(); });
    for (const Partition& lambda : parts)
        if (!isotypic_project(f.desc, v, lambda).is_zero()) return f.desc.n - lambda.first();
    return 0;  // the zero function
}

// --- proof constructions ----------------------------------------------------

std::pair<YoungTableau, YoungTableau> extend_tableau_fixed_row(const YoungTableau& s,
                                                               const YoungTableau& t) {
    if (s.shape() != t.shape()) throw UsageError("extend: tableaux must share a shape");
    int n = s.entry_count();
    YoungTableau s2 = s, t2 = t;
    s2.rows.push_back({n + 1});
    t2.rows.push_back({n + 1});
    return {s2, t2};
}

YoungTableau extend_tableau_pm(const YoungTableau& t) {
    int n = t.entry_count();
    YoungTableau t2 = t;
    t2.rows.push_back({n + 1, n + 2});
    return t2;
}

YoungTableau tableau_move_row(const YoungTableau& t, int r) {
    if (r < 1 || r > static_cast<int>(t.rows.size()))
        throw UsageError("tableau_move_row: no such row");
    const std::vector<int>& row = t.rows[static_cast<std::size_t>(r - 1)];
    if (row.size() < 2 || row.size() % 2 != 0)
        throw UsageError("tableau_move_row: row must have even length >= 2");
    YoungTableau out = t;
    std::vector<int> moved{row[0], row[1]};
    std::vector<int>& target = out.rows[static_cast<std::size_t>(r - 1)];
    target.erase(target.begin(), target.begin() + 2);
    if (target.empty()) out.rows.erase(out.rows.begin() + (r - 1));
    out.rows.push_back(std::move(moved));
    return out;
}

std::vector<int> chi_pm_landing_row(const YoungTableau& t, int r, const DomainDescriptor& d,
                                    const std::vector<Elem>& domain) {
    if (d.kind != DomainKind::PM || t.entry_count() != d.ground())
        throw UsageError("chi_pm_landing_row: tableau does not match domain");
    if (r < 1 || r > static_cast<int>(t.rows.size()) + 1)
        throw UsageError("chi_pm_landing_row: row out of range");
    YoungTableau tr = r <= static_cast<int>(t.rows.size()) ? tableau_move_row(t, r) : t;
    std::vector<int> out(domain.size(), 0);
    for (const SignedColumnPermutation& pi : column_stabilizer(t)) {
        YoungTableau moved = apply_to_entries(tr, pi.map);
        for (std::size_t i = 0; i < domain.size(); ++i)
            out[i] += pi.sign * eval_e_pm(moved, domain[i]);
    }
    return out;
}

long long int_inner(const std::vector<std::uint8_t>& truth, const std::vector<int>& v) {
    if (truth.size() != v.size()) throw UsageError("int_inner: length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (truth[i]) s += v[i];
    return s;
}

}  // namespace ifv

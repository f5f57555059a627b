#include "ifv/clique.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace ifv {

std::size_t BitSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool BitSet::any() const {
    for (std::uint64_t w : w_)
        if (w) return true;
    return false;
}

int BitSet::first() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
        if (w_[wi]) return static_cast<int>(wi * 64 + static_cast<unsigned>(__builtin_ctzll(w_[wi])));
    return -1;
}

void BitSet::and_with(const BitSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
}

void BitSet::and_into(const BitSet& a, const BitSet& b, BitSet& out) {
    for (std::size_t i = 0; i < a.w_.size(); ++i) out.w_[i] = a.w_[i] & b.w_[i];
}

void BitSet::and_not_with(const BitSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
}

IntersectionGraph build_graph(DomainKind kind, int n, int t, const std::optional<Elem>& anchor,
                              int threads) {
    if (t < 1) throw UsageError("build_graph: t must be >= 1");
    DomainDescriptor d = make_descriptor(kind, n);
    if (d.size > 50'000'000ull) throw CapacityError("build_graph: domain too large");
    Elem anc = anchor.value_or(default_anchor(d));
    if (!valid_element(d, anc)) throw UsageError("build_graph: anchor not in domain");

    IntersectionGraph g;
    g.desc = d;
    g.t = t;
    g.anchor = anc;
    for (const Elem& e : enumerate_domain(d))
        if (intersection_size(d, e, anc) >= t) g.vertices.push_back(e);

    std::size_t v = g.vertices.size();
    g.adj.assign(v, BitSet(v));
    auto fill_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < v; ++b) {
                if (a == b) continue;
                int isz = intersection_size(d, g.vertices[a], g.vertices[b]);
                if (isz >= t && isz < n) g.adj[a].set(b);
            }
    };
    int workers = std::max(1, threads);
    if (workers == 1 || v < 256) {
        fill_rows(0, v);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (v + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = static_cast<std::size_t>(w) * chunk;
            std::size_t hi = std::min(v, lo + chunk);
            if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return g;
}

IntersectionGraph graph_from_adjacency(const std::vector<std::vector<bool>>& adj) {
    IntersectionGraph g;
    g.desc = DomainDescriptor{DomainKind::Sym, 0, 0};
    std::size_t v = adj.size();
    g.vertices.assign(v, Elem{});
    g.adj.assign(v, BitSet(v));
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b)
            if (a != b && adj[a][b]) g.adj[a].set(b);
    return g;
}

namespace {

// Branch-and-bound core in a degree-descending vertex order. Candidate sets
// are expressed in solver indices; `orig` maps back.
struct Solver {
    std::size_t n;
    std::vector<BitSet> adj;             // permuted adjacency
    std::vector<std::uint32_t> orig;     // solver index -> input index
    std::vector<std::uint32_t> clique;   // current clique, solver indices

    // find mode
    std::size_t best = 0;
    std::vector<std::uint32_t> best_clique;

    // enumerate mode
    bool enumerating = false;
    std::uint64_t target = 0;
    std::uint64_t found = 0;
    std::uint64_t max_stored = 0;
    std::vector<std::vector<std::uint32_t>>* sink = nullptr;

    explicit Solver(const IntersectionGraph& g) {
        n = g.vertex_count();
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0u);
        std::vector<std::size_t> deg(n);
        for (std::size_t i = 0; i < n; ++i) deg[i] = g.adj[i].count();
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return a < b;  // ties by canonical rank
        });
        orig = order;
        std::vector<std::uint32_t> inv(n);
        for (std::size_t i = 0; i < n; ++i) inv[order[i]] = static_cast<std::uint32_t>(i);
        adj.assign(n, BitSet(n));
        for (std::size_t a = 0; a < n; ++a)
            g.adj[orig[a]].for_each([&](std::size_t b) { adj[a].set(inv[b]); });
    }

    // Greedy sequential coloring of P; emits vertices in color-ascending
    // order with their color (1-based).
    void color_sort(const BitSet& p, std::vector<std::uint32_t>& verts,
                    std::vector<std::uint32_t>& colors) {
        verts.clear();
        colors.clear();
        BitSet uncolored = p;
        std::uint32_t c = 0;
        BitSet cls(n);
        while (uncolored.any()) {
            ++c;
            cls = uncolored;
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                verts.push_back(static_cast<std::uint32_t>(v));
                colors.push_back(c);
                uncolored.reset(static_cast<std::size_t>(v));
                cls.reset(static_cast<std::size_t>(v));
                cls.and_not_with(adj[static_cast<std::size_t>(v)]);
            }
        }
    }

    void record_found() {
        ++found;
        if (sink && found <= max_stored) {
            std::vector<std::uint32_t> out;
            out.reserve(clique.size());
            for (std::uint32_t v : clique) out.push_back(orig[v]);
            std::sort(out.begin(), out.end());
            sink->push_back(std::move(out));
        }
    }

    void expand(BitSet& p) {
        std::vector<std::uint32_t> verts, colors;
        color_sort(p, verts, colors);
        BitSet next(n);
        for (std::size_t i = verts.size(); i-- > 0;) {
            std::uint32_t v = verts[i], c = colors[i];
            if (!enumerating) {
                if (clique.size() + c <= best) return;
            } else {
                if (clique.size() + c < target) return;
            }
            BitSet::and_into(p, adj[v], next);
            clique.push_back(v);
            if (enumerating && clique.size() == target) {
                if (next.any())
                    throw InternalError("maximum clique extends beyond the clique number");
                record_found();
            } else if (!next.any()) {
                if (!enumerating && clique.size() > best) {
                    best = clique.size();
                    best_clique = clique;
                }
            } else {
                BitSet sub = next;
                expand(sub);
            }
            clique.pop_back();
            p.reset(v);
        }
    }

    void run() {
        BitSet p(n);
        for (std::size_t i = 0; i < n; ++i) p.set(i);
        expand(p);
    }
};

}  // namespace

int max_clique_size(const IntersectionGraph& g) {
    if (g.vertex_count() == 0) return 0;
    Solver solver(g);
    solver.run();
    return static_cast<int>(solver.best);
}

CliqueReport enumerate_maximum_cliques(const IntersectionGraph& g, std::uint64_t max_stored) {
    CliqueReport report;
    auto start = std::chrono::steady_clock::now();
    if (g.vertex_count() == 0) return report;

    Solver finder(g);
    finder.run();
    std::uint64_t omega = finder.best;

    Solver enumerator(g);
    enumerator.enumerating = true;
    enumerator.target = omega;
    enumerator.max_stored = max_stored;
    enumerator.sink = &report.cliques;
    enumerator.run();

    report.clique_number = omega;
    report.maximum_clique_count = enumerator.found;
    std::sort(report.cliques.begin(), report.cliques.end());
    report.cliques.erase(std::unique(report.cliques.begin(), report.cliques.end()),
                         report.cliques.end());
    if (report.maximum_clique_count <= max_stored &&
        report.cliques.size() != report.maximum_clique_count)
        throw InternalError("maximum clique enumeration produced duplicates");
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

UniquenessResult verify_uniqueness(DomainKind kind, int n, int threads) {
    if (n < 2 || n > 7) throw CapacityError("verify_uniqueness covers 2 <= n <= 7");
    UniquenessResult result;
    DomainDescriptor d = make_descriptor(kind, n);
    Elem anchor = default_anchor(d);
    std::uint64_t expected_size = kind == DomainKind::Sym ? factorial_checked(n - 2)
                                                          : double_factorial_checked(n - 2);

    IntersectionGraph g = build_graph(kind, n, 2, anchor, threads);
    result.report = enumerate_maximum_cliques(g);

    if (result.report.clique_number != expected_size) {
        result.failure = "clique number " + std::to_string(result.report.clique_number) +
                         " != " + std::to_string(expected_size);
        return result;
    }

    // vertex sets of the 2-cosets through the anchor, as sorted index lists
    std::vector<std::vector<std::uint32_t>> coset_sets;
    Certificate rep = certificate_representation(d, anchor);
    for (std::size_t a = 0; a < rep.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < rep.pairs.size(); ++b) {
            Certificate c = Certificate::of_pairs(d, {rep.pairs[a], rep.pairs[b]});
            std::vector<std::uint32_t> set;
            for (const Elem& e : coset_elements(d, c)) {
                auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), e);
                if (it == g.vertices.end() || *it != e) {
                    result.failure = "2-coset member missing from the graph";
                    return result;
                }
                set.push_back(static_cast<std::uint32_t>(it - g.vertices.begin()));
            }
            std::sort(set.begin(), set.end());
            coset_sets.push_back(std::move(set));
        }
    std::sort(coset_sets.begin(), coset_sets.end());
    coset_sets.erase(std::unique(coset_sets.begin(), coset_sets.end()), coset_sets.end());

    if (n >= 4) {
        std::uint64_t expected_count = binomial(n, 2);
        if (result.report.maximum_clique_count != expected_count) {
            result.failure = "maximum clique count " +
                             std::to_string(result.report.maximum_clique_count) + " != " +
                             std::to_string(expected_count);
            return result;
        }
    }
    // every maximum clique must be one of the 2-cosets (for n <= 3 the
    // 2-cosets through the anchor all collapse to {anchor})
    for (const auto& clique : result.report.cliques) {
        if (!std::binary_search(coset_sets.begin(), coset_sets.end(), clique)) {
            std::ostringstream os;
            os << "maximum clique {";
            for (std::size_t i = 0; i < clique.size() && i < 8; ++i)
                os << (i ? "," : "") << clique[i];
            if (clique.size() > 8) os << ",...";
            os << "} is not a 2-coset";
            result.failure = os.str();
            return result;
        }
    }
    result.pass = true;
    return result;
}

std::string dump_dimacs(const IntersectionGraph& g) {
    std::ostringstream os;
    os << "c ifv intersection graph kind="
       << (g.desc.kind == DomainKind::Sym ? "sym" : "pm") << " n=" << g.desc.n << " t=" << g.t
       << " anchor=[";
    for (std::size_t i = 0; i < g.anchor.size(); ++i) os << (i ? "," : "") << g.anchor[i];
    os << "]\n";
    std::uint64_t edges = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) edges += g.adj[v].count();
    edges /= 2;
    os << "p edge " << g.vertex_count() << " " << edges << "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        g.adj[v].for_each([&](std::size_t u) {
            if (v < u) os << "e " << v + 1 << " " << u + 1 << "\n";
        });
    return os.str();
}

}  // namespace ifv

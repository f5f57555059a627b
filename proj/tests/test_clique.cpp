#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ifv/clique.hpp"

using namespace ifv;

namespace {

// Naive exponential maximum clique for the solver oracle.
int naive_max_clique(const std::vector<std::vector<bool>>& adj) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int a = 0; a < n && clique; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = a + 1; b < n && clique; ++b) {
                if (!(mask & (1u << b))) continue;
                if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) clique = false;
            }
        }
        if (clique) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("graph construction: vertex counts") {
    CHECK(build_graph(DomainKind::Sym, 4, 2).vertex_count() == 7);
    CHECK(build_graph(DomainKind::PM, 4, 2).vertex_count() == 13);
    CHECK(build_graph(DomainKind::Sym, 7, 2).vertex_count() == 1331);

    // brute-force census cross-check for small n: permutations with >= 2
    // agreements with the anchor
    for (int n : {4, 5}) {
        DomainDescriptor d = make_descriptor(DomainKind::Sym, n);
        Elem anchor = default_anchor(d);
        std::size_t count = 0;
        for (const Elem& e : enumerate_domain(d))
            if (intersection_size(d, e, anchor) >= 2) ++count;
        CHECK(build_graph(DomainKind::Sym, n, 2).vertex_count() == count);
    }
}

TEST_CASE("graph edges respect the strict upper bound") {
    IntersectionGraph g = build_graph(DomainKind::Sym, 4, 2);
    // the anchor (identity) is a vertex; no self loop
    auto it = std::find(g.vertices.begin(), g.vertices.end(), g.anchor);
    REQUIRE(it != g.vertices.end());
    std::size_t a = static_cast<std::size_t>(it - g.vertices.begin());
    CHECK_FALSE(g.adj[a].test(a));
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (u == v) continue;
            int isz = intersection_size(g.desc, g.vertices[u], g.vertices[v]);
            CHECK(g.adj[u].test(v) == (isz >= 2 && isz < 4));
            CHECK(g.adj[u].test(v) == g.adj[v].test(u));
        }
}

TEST_CASE("solver equals naive enumeration on random graphs") {
    Rng rng(57);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + static_cast<int>(rng.below(14));  // up to 18 vertices for the naive side
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.below(100) < 55) {
                    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
                }
        IntersectionGraph g = graph_from_adjacency(adj);
        CHECK(max_clique_size(g) == naive_max_clique(adj));
    }
}

TEST_CASE("enumeration completeness on the n = 4 graph") {
    IntersectionGraph g = build_graph(DomainKind::Sym, 4, 2);
    CliqueReport report = enumerate_maximum_cliques(g);
    CHECK(report.clique_number == 2);
    CHECK(report.maximum_clique_count == 6);

    // exhaustive subset scan over the 7 vertices
    int n = static_cast<int>(g.vertex_count());
    std::vector<std::vector<std::uint32_t>> expect;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != 2) continue;
        std::vector<std::uint32_t> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(static_cast<std::uint32_t>(v));
        if (g.adj[verts[0]].test(verts[1])) expect.push_back(verts);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(report.cliques == expect);

    // every enumerated clique is pairwise 2-intersecting
    for (const auto& clique : report.cliques)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                CHECK(is_t_intersecting(g.desc, g.vertices[clique[a]], g.vertices[clique[b]], 2));
}

TEST_CASE("anchor invariance of the report") {
    for (int n : {4, 5}) {
        DomainDescriptor d = make_descriptor(DomainKind::Sym, n);
        CliqueReport base = enumerate_maximum_cliques(build_graph(DomainKind::Sym, n, 2));
        Rng rng(71 + static_cast<std::uint64_t>(n));
        Elem anchor = unrank(d, rng.below(d.size));
        CliqueReport other =
            enumerate_maximum_cliques(build_graph(DomainKind::Sym, n, 2, anchor));
        CHECK(base.clique_number == other.clique_number);
        CHECK(base.maximum_clique_count == other.maximum_clique_count);
    }
}

TEST_CASE("verify_uniqueness across the small cases") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        for (int n = 2; n <= 5; ++n) {
            UniquenessResult r = verify_uniqueness(kind, n);
            CHECK(r.pass);
            if (n >= 4) CHECK(r.report.maximum_clique_count == binomial(n, 2));
        }
        // at n = 2, 3 only the anchor 2-intersects the anchor, so the graph
        // degenerates to a single vertex and the check is the direct one
        for (int n = 2; n <= 3; ++n) CHECK(build_graph(kind, n, 2).vertex_count() == 1);
    }
    CHECK(verify_uniqueness(DomainKind::Sym, 2).report.clique_number == 1);
    CHECK_THROWS_AS(verify_uniqueness(DomainKind::Sym, 8), CapacityError);
}

TEST_CASE("solver reports are deterministic") {
    IntersectionGraph g = build_graph(DomainKind::PM, 4, 2);
    CliqueReport a = enumerate_maximum_cliques(g);
    CliqueReport b = enumerate_maximum_cliques(g);
    CHECK(a.clique_number == b.clique_number);
    CHECK(a.cliques == b.cliques);
    // thread count affects only the build, not the result
    IntersectionGraph g4 = build_graph(DomainKind::PM, 4, 2, std::nullopt, 4);
    CHECK(g4.vertices == g.vertices);
    CliqueReport c = enumerate_maximum_cliques(g4);
    CHECK(c.cliques == a.cliques);
}

TEST_CASE("dimacs dump shape") {
    IntersectionGraph g = build_graph(DomainKind::Sym, 4, 2);
    std::string dump = dump_dimacs(g);
    CHECK(dump.find("c ifv intersection graph kind=sym n=4 t=2") != std::string::npos);
    CHECK(dump.find("p edge 7 ") != std::string::npos);
    std::istringstream is(dump);
    std::string line;
    std::size_t edge_lines = 0, expect_edges = 0;
    while (std::getline(is, line)) {
        if (line.rfind("e ", 0) == 0) ++edge_lines;
        if (line.rfind("p edge", 0) == 0) {
            std::istringstream ps(line);
            std::string p, e;
            std::size_t v;
            ps >> p >> e >> v >> expect_edges;
        }
    }
    CHECK(edge_lines == expect_edges);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "ifv/cert.hpp"
#include "ifv/clique.hpp"

using namespace ifv;

namespace {

std::vector<std::pair<int, int>> common_pairs(const Certificate& a, const Certificate& b) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : a.pairs)
        if (std::find(b.pairs.begin(), b.pairs.end(), p) != b.pairs.end()) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("satisfies: permutations and matchings") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    Elem id4 = Permutation::identity(4).images;
    CHECK(satisfies(s4, id4, Certificate::of_pairs(s4, {{1, 1}, {2, 2}})));
    CHECK_FALSE(satisfies(s4, id4, Certificate::of_pairs(s4, {{1, 2}})));

    DomainDescriptor m6 = make_descriptor(DomainKind::PM, 3);
    Elem m = PerfectMatching::from_pairs(3, {{1, 2}, {3, 4}, {5, 6}}).partner;
    CHECK(satisfies(m6, m, Certificate::of_pairs(m6, {{1, 2}})));
    CHECK_FALSE(satisfies(m6, m, Certificate::of_pairs(m6, {{1, 3}})));

    ExtendedCertificate anti =
        ExtendedCertificate::with_triple(m6, Certificate{{}}, {1, 3, 5});
    CHECK(extended_satisfies(m6, m, anti));  // m avoids {1,3},{1,5},{3,5}
    Elem m2 = PerfectMatching::from_pairs(3, {{1, 3}, {2, 4}, {5, 6}}).partner;
    CHECK_FALSE(extended_satisfies(m6, m2, anti));

    CHECK_THROWS_AS(ExtendedCertificate::with_triple(
                        m6, Certificate::of_pairs(m6, {{1, 2}}), {1, 3, 5}),
                    UsageError);
}

TEST_CASE("minimum certificates") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    BooleanFunction c1 = BooleanFunction::constant(s4, 1);
    Elem id4 = Permutation::identity(4).images;
    MinCertificate mc = min_certificate(c1, id4);
    CHECK(mc.size == 0);
    CHECK(mc.cert.pairs.empty());

    // the worked S_5 example: F = {id, (1 2 3)}, C(f, id) = 4 via the
    // diagonal certificate
    DomainDescriptor s5 = make_descriptor(DomainKind::Sym, 5);
    Elem id5 = Permutation::identity(5).images;
    Elem cyc{2, 3, 1, 4, 5};
    BooleanFunction f = indicator_of_family(s5, {id5, cyc});
    MinCertificate mid = min_certificate(f, id5);
    CHECK(mid.size == 4);
    CHECK(mid.cert.pairs ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    MinCertificate mcyc = min_certificate(f, cyc);
    CHECK(mcyc.size == 4);
    // their intersection has exactly one pair, as the worked example notes
    CHECK(common_pairs(mid.cert, mcyc.cert).size() == 1);

    // 2-coset member: the defining pairs, and no size-1 subset certifies
    Certificate c2 = Certificate::of_pairs(s4, {{1, 1}, {2, 2}});
    BooleanFunction coset = indicator_of_family(s4, coset_elements(s4, c2));
    MinCertificate mcoset = min_certificate(coset, id4);
    CHECK(mcoset.size == 2);
    CHECK(mcoset.cert == c2);
}

TEST_CASE("minimum certificates always certify and fit within n-1") {
    Rng rng(17);
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        std::vector<Elem> dom = enumerate_domain(d);
        for (int trial = 0; trial < 10; ++trial) {
            BooleanFunction f = BooleanFunction::constant(d, 0);
            for (auto& b : f.truth) b = static_cast<std::uint8_t>(rng.bit());
            for (const Elem& x : {dom.front(), dom[dom.size() / 2], dom.back()}) {
                MinCertificate mc = min_certificate(f, x);
                CHECK(mc.size <= d.n - 1);
                CHECK(satisfies(d, x, mc.cert));
                std::uint8_t v = f.truth[static_cast<std::size_t>(rank_of(d, x))];
                for (const Elem& y : coset_elements(d, mc.cert))
                    CHECK(f.truth[static_cast<std::size_t>(rank_of(d, y))] == v);
            }
        }
    }
}

TEST_CASE("certificate complexity") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    CHECK(certificate_complexity(BooleanFunction::constant(s4, 0)) == 0);
    CHECK(one_side_certificate_complexity(BooleanFunction::constant(s4, 0)) == 0);

    // the anti-triangle on M_6 has certificate complexity exactly 2
    DomainDescriptor m6 = make_descriptor(DomainKind::PM, 3);
    std::vector<Elem> dom6 = enumerate_domain(m6);
    BooleanFunction anti = BooleanFunction::constant(m6, 0);
    for (std::size_t r = 0; r < dom6.size(); ++r) {
        const Elem& m = dom6[r];
        bool hit = m[0] == 2 || m[0] == 3 || m[1] == 3;
        anti.truth[r] = hit ? 0 : 1;
    }
    CHECK(certificate_complexity(anti) == 2);

    DomainDescriptor s7 = make_descriptor(DomainKind::Sym, 7);
    CHECK_THROWS_AS(certificate_complexity(BooleanFunction::constant(s7, 0)), CapacityError);
}

TEST_CASE("complete_avoiding construction") {
    // contract instance from the lemma
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    Certificate ca = Certificate::of_pairs(s4, {{1, 1}});
    Certificate cb = Certificate::of_pairs(s4, {{2, 2}});
    Elem x = complete_avoiding(s4, ca, cb);
    CHECK(valid_element(s4, x));
    CHECK(x[0] == 1);
    CHECK(x[1] != 2);

    // c_a = c_b: result satisfies c_a
    Elem y = complete_avoiding(s4, ca, ca);
    CHECK(satisfies(s4, y, ca));

    // the precondition |c_a| <= n-2 is enforced
    Certificate big = Certificate::of_pairs(s4, {{1, 1}, {2, 2}, {3, 3}});
    CHECK_THROWS_AS(complete_avoiding(s4, big, ca), UsageError);

    // 500 random instances per domain, recomputed independently
    Rng rng(23);
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        for (int i = 0; i < 500; ++i) {
            int n = 4 + static_cast<int>(i % 3);
            DomainDescriptor d = make_descriptor(kind, n);
            Elem ea = unrank(d, rng.below(d.size));
            Elem eb = unrank(d, rng.below(d.size));
            Certificate rep_a = certificate_representation(d, ea);
            Certificate rep_b = certificate_representation(d, eb);
            int size_a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            int size_b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            Certificate c_a{std::vector<std::pair<int, int>>(rep_a.pairs.begin(),
                                                             rep_a.pairs.begin() + size_a)};
            Certificate c_b{std::vector<std::pair<int, int>>(rep_b.pairs.begin(),
                                                             rep_b.pairs.begin() + size_b)};
            Elem z = complete_avoiding(d, c_a, c_b);
            REQUIRE(valid_element(d, z));
            REQUIRE(satisfies(d, z, c_a));
            Certificate zrep = certificate_representation(d, z);
            CHECK(common_pairs(zrep, c_b) == common_pairs(c_a, c_b));
        }
    }
}

TEST_CASE("pairwise certificate intersection check") {
    // a 2-coset family passes (all certificates coincide)
    DomainDescriptor s5 = make_descriptor(DomainKind::Sym, 5);
    Certificate c2 = Certificate::of_pairs(s5, {{1, 1}, {2, 2}});
    BooleanFunction coset = indicator_of_family(s5, coset_elements(s5, c2));
    PairwiseIntersectionReport r = check_pairwise_certificate_intersection(coset);
    CHECK(r.precondition_ok);
    CHECK(r.pass);
    CHECK(r.complexity == 2);

    // F = {id, (1 2 3)} on S_5: C(f) = n-1, precondition reported as failed
    Elem id5 = Permutation::identity(5).images;
    Elem cyc{2, 3, 1, 4, 5};
    BooleanFunction f = indicator_of_family(s5, {id5, cyc});
    PairwiseIntersectionReport r2 = check_pairwise_certificate_intersection(f);
    CHECK_FALSE(r2.precondition_ok);
    CHECK(r2.complexity == 4);

    // a non-2-intersecting family is reported, not silently accepted
    BooleanFunction all1 = BooleanFunction::constant(s5, 1);
    PairwiseIntersectionReport r3 = check_pairwise_certificate_intersection(all1);
    CHECK_FALSE(r3.precondition_ok);

    // maximum cliques found by search pass the check (n = 4, both kinds)
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        IntersectionGraph g = build_graph(kind, 4, 2);
        CliqueReport report = enumerate_maximum_cliques(g);
        REQUIRE(!report.cliques.empty());
        for (const auto& clique : report.cliques) {
            std::vector<Elem> members;
            for (std::uint32_t v : clique) members.push_back(g.vertices[v]);
            PairwiseIntersectionReport rr =
                check_pairwise_certificate_intersection(indicator_of_family(d, members));
            CHECK(rr.precondition_ok);
            CHECK(rr.pass);
        }
    }
}

TEST_CASE("extended certificate reduction") {
    DomainDescriptor m8 = make_descriptor(DomainKind::PM, 4);
    // C1 base unsatisfiable -> hypothesis vacuous -> implication holds
    // (needs n = 5 so an inconsistent base plus the triple fits in n-2)
    Certificate dead{{{1, 2}, {1, 3}}};
    ExtendedCertificate c1 = ExtendedCertificate{dead, std::array<int, 3>{4, 5, 6}};
    ExtendedCertificate c2 = ExtendedCertificate::plain(Certificate::of_pairs(m8, {{1, 2}}));
    CHECK(check_extended_reduction(5, c1, c2));

    // C2 = C1 without the triple
    Certificate base = Certificate::of_pairs(m8, {{1, 2}});
    ExtendedCertificate e1 = ExtendedCertificate::with_triple(m8, base, {3, 4, 5});
    CHECK(check_extended_reduction(4, e1, ExtendedCertificate::plain(base)));

    CHECK_THROWS_AS(check_extended_reduction(4, ExtendedCertificate::plain(base), c2),
                    UsageError);

    // random instances at n = 4, 5
    Rng rng(29);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        int n = 4 + static_cast<int>(i % 2);
        DomainDescriptor d = make_descriptor(DomainKind::PM, n);
        Elem e = unrank(d, rng.below(d.size));
        Certificate rep = certificate_representation(d, e);
        int bsize = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        Certificate b{std::vector<std::pair<int, int>>(rep.pairs.begin(),
                                                       rep.pairs.begin() + bsize)};
        std::vector<char> used(static_cast<std::size_t>(2 * n) + 1, 0);
        for (auto [p, q] : b.pairs) used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(q)] = 1;
        std::vector<int> free_vs;
        for (int v = 1; v <= 2 * n; ++v)
            if (!used[static_cast<std::size_t>(v)]) free_vs.push_back(v);
        ExtendedCertificate x1 =
            ExtendedCertificate::with_triple(d, b, {free_vs[0], free_vs[1], free_vs[2]});
        Elem e2 = unrank(d, rng.below(d.size));
        Certificate rep2 = certificate_representation(d, e2);
        int b2size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        ExtendedCertificate x2 = ExtendedCertificate::plain(Certificate{
            std::vector<std::pair<int, int>>(rep2.pairs.begin(), rep2.pairs.begin() + b2size)});
        CHECK(check_extended_reduction(n, x1, x2));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("covers") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    Certificate c2 = Certificate::of_pairs(s4, {{1, 1}, {2, 2}});
    BooleanFunction coset = indicator_of_family(s4, coset_elements(s4, c2));
    // a 2-coset family is 1-covered by either defining coset
    auto cover = find_cover(coset, 1);
    REQUIRE(cover.has_value());
    CHECK(cover->r() == 1);
    CHECK((cover->cosets[0] == std::pair<int, int>{1, 1} ||
           cover->cosets[0] == std::pair<int, int>{2, 2}));

    // a family built inside U_1^1 union U_2^2 is 2-covered
    std::vector<Elem> members;
    for (const Elem& e : enumerate_domain(s4))
        if (e[0] == 1 || e[1] == 2) members.push_back(e);
    BooleanFunction two = indicator_of_family(s4, members);
    CHECK(is_r_covered(two, 2));

    // the full domain is not coverable with r = 1
    CHECK_FALSE(is_r_covered(BooleanFunction::constant(s4, 1), 1));

    // the empty family has the empty cover
    auto empty_cover = find_cover(BooleanFunction::constant(s4, 0), 1);
    REQUIRE(empty_cover.has_value());
    CHECK(empty_cover->r() == 0);

    // covering lemma on clique families: dropping any one pair of a member's
    // minimum certificate leaves a cover
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 5);
        IntersectionGraph g = build_graph(kind, 5, 2);
        CliqueReport report = enumerate_maximum_cliques(g);
        const auto& clique = report.cliques.front();
        std::vector<Elem> fam;
        for (std::uint32_t v : clique) fam.push_back(g.vertices[v]);
        BooleanFunction f = indicator_of_family(d, fam);
        MinCertificate mc = min_certificate(f, fam.front());
        REQUIRE(mc.size >= 2);
        for (std::size_t drop = 0; drop < mc.cert.pairs.size(); ++drop) {
            std::vector<std::pair<int, int>> kept;
            for (std::size_t i = 0; i < mc.cert.pairs.size(); ++i)
                if (i != drop) kept.push_back(mc.cert.pairs[i]);
            // every member lies in one of the kept cosets
            for (const Elem& m : fam) {
                bool covered = false;
                for (auto [i, j] : kept)
                    if (m[static_cast<std::size_t>(i - 1)] == j) covered = true;
                CHECK(covered);
            }
        }
        CHECK(is_r_covered(f, mc.size - 1));
    }
}

TEST_CASE("compatibility of cosets") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    CHECK(cosets_compatible(s4, {1, 1}, {2, 2}));
    CHECK(cosets_compatible(s4, {1, 1}, {1, 1}));
    CHECK_FALSE(cosets_compatible(s4, {1, 1}, {1, 2}));
    CHECK_FALSE(cosets_compatible(s4, {1, 1}, {2, 1}));
    DomainDescriptor m8 = make_descriptor(DomainKind::PM, 4);
    CHECK(cosets_compatible(m8, {1, 2}, {3, 4}));
    CHECK_FALSE(cosets_compatible(m8, {1, 2}, {2, 3}));
}

TEST_CASE("bound T and certificate classes") {
    CHECK(bound_T(2) == 1);
    CHECK(bound_T(3) == 2);
    CHECK(bound_T(4) == 6);
    CHECK_THROWS_AS(bound_T(1), UsageError);
    for (int r = 1; r <= 5; ++r)
        CHECK(bound_T(2 * r) == factorial_checked(2 * r) / (1ull << r));

    DomainDescriptor s6 = make_descriptor(DomainKind::Sym, 6);
    Certificate c2 = Certificate::of_pairs(s6, {{1, 1}, {2, 2}});
    BooleanFunction coset = indicator_of_family(s6, coset_elements(s6, c2));
    CHECK(count_min_certificate_classes(coset) == 1);
}

TEST_CASE("a maximum clique family keeps complexity 2 at S_6") {
    DomainDescriptor d = make_descriptor(DomainKind::Sym, 6);
    IntersectionGraph g = build_graph(DomainKind::Sym, 6, 2);
    CliqueReport report = enumerate_maximum_cliques(g);
    REQUIRE(!report.cliques.empty());
    std::vector<Elem> members;
    for (std::uint32_t v : report.cliques.front()) members.push_back(g.vertices[v]);
    BooleanFunction f = indicator_of_family(d, members);
    CHECK(certificate_complexity(f) == 2);
    MinCertificate mc = min_certificate(f, members.front());
    CHECK(coset_elements(d, mc.cert) == members);
}

TEST_CASE("maximum cliques at small n are 2-cosets with complexity 2") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        for (int n : {4, 5}) {
            DomainDescriptor d = make_descriptor(kind, n);
            IntersectionGraph g = build_graph(kind, n, 2);
            CliqueReport report = enumerate_maximum_cliques(g);
            for (const auto& clique : report.cliques) {
                std::vector<Elem> members;
                for (std::uint32_t v : clique) members.push_back(g.vertices[v]);
                BooleanFunction f = indicator_of_family(d, members);
                CHECK(certificate_complexity(f) == 2);
                // the family equals the 2-coset of any member's minimum certificate
                MinCertificate mc = min_certificate(f, members.front());
                REQUIRE(mc.size == 2);
                std::vector<Elem> coset = coset_elements(d, mc.cert);
                CHECK(coset == members);
            }
        }
    }
}

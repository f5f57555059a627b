#include <doctest.h>

#include <algorithm>
#include <set>

#include "ifv/domains.hpp"

using namespace ifv;

TEST_CASE("descriptor sizes match the closed forms") {
    CHECK(make_descriptor(DomainKind::Sym, 3).size == 6);
    CHECK(make_descriptor(DomainKind::PM, 3).size == 15);
    CHECK(make_descriptor(DomainKind::PM, 7).size == 135135);
    for (int n = 1; n <= 7; ++n) {
        CHECK(make_descriptor(DomainKind::Sym, n).size == factorial_checked(n));
        CHECK(make_descriptor(DomainKind::PM, n).size == double_factorial_checked(n));
    }
}

TEST_CASE("oversized domains raise capacity errors") {
    CHECK_THROWS_AS(make_descriptor(DomainKind::Sym, 21), CapacityError);
    CHECK_THROWS_AS(make_descriptor(DomainKind::PM, 18), CapacityError);
}

TEST_CASE("enumeration is lexicographic, distinct and complete") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        for (int n = 1; n <= (kind == DomainKind::Sym ? 6 : 5); ++n) {
            DomainDescriptor d = make_descriptor(kind, n);
            std::vector<Elem> all = enumerate_domain(d);
            CHECK(all.size() == d.size);
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const Elem& e : all) CHECK(valid_element(d, e));
        }
    }
    // counts stay exact out to n = 7
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 7);
        CHECK(enumerate_domain(d).size() == d.size);
    }
}

TEST_CASE("rank and unrank round-trip over the full domain") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        for (int n = 1; n <= 5; ++n) {
            DomainDescriptor d = make_descriptor(kind, n);
            std::vector<Elem> all = enumerate_domain(d);
            for (std::uint64_t r = 0; r < d.size; ++r) {
                CHECK(unrank(d, r) == all[static_cast<std::size_t>(r)]);
                CHECK(rank_of(d, all[static_cast<std::size_t>(r)]) == r);
            }
        }
    }
}

TEST_CASE("intersection sizes") {
    DomainDescriptor s5 = make_descriptor(DomainKind::Sym, 5);
    Elem id5 = Permutation::identity(5).images;
    Elem cycle{2, 3, 1, 4, 5};  // the 3-cycle moving 1,2,3
    CHECK(intersection_size(s5, id5, cycle) == 2);
    CHECK(intersection_size(s5, id5, id5) == 5);

    DomainDescriptor m6 = make_descriptor(DomainKind::PM, 3);
    Elem a = PerfectMatching::from_pairs(3, {{1, 2}, {3, 4}, {5, 6}}).partner;
    Elem b = PerfectMatching::from_pairs(3, {{1, 2}, {3, 5}, {4, 6}}).partner;
    CHECK(intersection_size(m6, a, b) == 1);
    CHECK(intersection_size(m6, a, a) == 3);

    CHECK_THROWS_AS(intersection_size(s5, id5, Elem{1, 2, 3}), UsageError);
}

TEST_CASE("intersection size is symmetric, exhaustively on S_4 and M_8") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        std::vector<Elem> all = enumerate_domain(d);
        for (const Elem& a : all)
            for (const Elem& b : all)
                CHECK(intersection_size(d, a, b) == intersection_size(d, b, a));
    }
}

TEST_CASE("t-intersection predicate") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    Elem id4 = Permutation::identity(4).images;
    CHECK(is_t_intersecting(s4, id4, Elem{2, 1, 3, 4}, 2));
    CHECK_FALSE(is_t_intersecting(s4, id4, Elem{2, 3, 4, 1}, 1));
    DomainDescriptor m8 = make_descriptor(DomainKind::PM, 4);
    Elem anchor = default_anchor(m8);
    CHECK(is_t_intersecting(m8, anchor, anchor, 4));
}

TEST_CASE("coset elements: sizes, conflicts, order") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    Certificate c = Certificate::of_pairs(s4, {{1, 1}, {2, 2}});
    std::vector<Elem> coset = coset_elements(s4, c);
    REQUIRE(coset.size() == 2);
    CHECK(coset[0] == Elem{1, 2, 3, 4});
    CHECK(coset[1] == Elem{1, 2, 4, 3});

    Certificate conflict{{{1, 1}, {2, 1}}};
    CHECK(coset_elements(s4, conflict).empty());
    CHECK_FALSE(certificate_consistent(s4, conflict));

    DomainDescriptor m6 = make_descriptor(DomainKind::PM, 3);
    CHECK(coset_elements(m6, Certificate::of_pairs(m6, {{1, 2}})).size() == 3);

    // t-coset sizes across t, and the members pairwise t-intersect
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        std::vector<Elem> all = enumerate_domain(d);
        for (int t = 1; t <= 2; ++t) {
            // every certificate drawn from an element's representation is consistent
            for (const Elem& e : {all[0], all[all.size() / 2], all.back()}) {
                Certificate rep = certificate_representation(d, e);
                Certificate sub{std::vector<std::pair<int, int>>(rep.pairs.begin(),
                                                                 rep.pairs.begin() + t)};
                std::vector<Elem> members = coset_elements(d, sub);
                std::uint64_t expected = kind == DomainKind::Sym
                                             ? factorial_checked(4 - t)
                                             : double_factorial_checked(4 - t);
                CHECK(members.size() == expected);
                for (const Elem& x : members)
                    for (const Elem& y : members)
                        CHECK(is_t_intersecting(d, x, y, t));
            }
        }
    }
}

TEST_CASE("every pair of members of every consistent 2-coset is 2-intersecting (S_4, M_8)") {
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        int g = d.ground();
        // all 1-cosets first
        for (int i = 1; i <= g; ++i)
            for (int j = 1; j <= g; ++j) {
                if (kind == DomainKind::PM && i >= j) continue;
                std::vector<Elem> members =
                    coset_elements(d, Certificate::of_pairs(d, {{i, j}}));
                for (const Elem& x : members)
                    for (const Elem& y : members) CHECK(is_t_intersecting(d, x, y, 1));
            }
        for (int i1 = 1; i1 <= g; ++i1)
            for (int j1 = 1; j1 <= g; ++j1)
                for (int i2 = i1; i2 <= g; ++i2)
                    for (int j2 = 1; j2 <= g; ++j2) {
                        if (kind == DomainKind::PM && (i1 >= j1 || i2 >= j2)) continue;
                        Certificate c{{{i1, j1}, {i2, j2}}};
                        if (!certificate_consistent(d, c) || c.pairs.size() != 2) continue;
                        std::vector<Elem> members = coset_elements(d, c);
                        for (const Elem& x : members)
                            for (const Elem& y : members)
                                CHECK(is_t_intersecting(d, x, y, 2));
                    }
    }
}

TEST_CASE("validated element types") {
    CHECK_THROWS_AS(Permutation({1, 1, 3}), UsageError);
    CHECK_THROWS_AS(PerfectMatching({2, 1, 3, 4}), UsageError);  // 3,4 fixed points
    CHECK_THROWS_AS(PerfectMatching({1, 2}), UsageError);
    CHECK(PerfectMatching::canonical_anchor(3).pairs() ==
          std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(Permutation::identity(4).images == Elem{1, 2, 3, 4});
}

TEST_CASE("unrank rejects out-of-range ranks") {
    DomainDescriptor d = make_descriptor(DomainKind::Sym, 4);
    CHECK_THROWS_AS(unrank(d, 24), UsageError);
}

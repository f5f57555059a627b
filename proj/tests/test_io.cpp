#include <doctest.h>

#include "ifv/io.hpp"
#include "ifv/suites.hpp"

using namespace ifv;

TEST_CASE("family files round-trip") {
    DomainDescriptor s4 = make_descriptor(DomainKind::Sym, 4);
    std::vector<Elem> fam{{1, 2, 3, 4}, {2, 1, 3, 4}};
    FamilyFile parsed = parse_family_json(family_to_json(s4, fam));
    CHECK(parsed.desc == s4);
    CHECK(parsed.elements == fam);

    DomainDescriptor m6 = make_descriptor(DomainKind::PM, 3);
    std::vector<Elem> mfam{PerfectMatching::from_pairs(3, {{1, 2}, {3, 4}, {5, 6}}).partner,
                           PerfectMatching::from_pairs(3, {{1, 4}, {2, 5}, {3, 6}}).partner};
    FamilyFile mparsed = parse_family_json(family_to_json(m6, mfam));
    CHECK(mparsed.elements == mfam);

    CHECK_THROWS_AS(parse_family_json("{"), UsageError);
    CHECK_THROWS_AS(parse_family_json(R"({"kind":"sym","n":3,"elements":[[1,1,2]]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_family_json(R"({"kind":"wat","n":3,"elements":[]})"), UsageError);
}

TEST_CASE("bit-vector fixtures round-trip as functions") {
    Rng rng(91);
    for (auto kind : {DomainKind::Sym, DomainKind::PM}) {
        DomainDescriptor d = make_descriptor(kind, 4);
        BooleanFunction f = BooleanFunction::constant(d, 0);
        for (auto& b : f.truth) b = static_cast<std::uint8_t>(rng.bit());
        BooleanFunction g = parse_function_json(function_to_json_bits(f));
        CHECK(f == g);
    }
    CHECK_THROWS_AS(parse_function_json(R"({"kind":"sym","n":4,"bits":"AA=="})"), UsageError);
}

TEST_CASE("base64 corners") {
    CHECK(base64_encode({}) == "");
    CHECK(base64_encode({'M'}) == "TQ==");
    CHECK(base64_encode({'M', 'a'}) == "TWE=");
    CHECK(base64_encode({'M', 'a', 'n'}) == "TWFu");
    CHECK(base64_decode("TWFu") == std::vector<std::uint8_t>{'M', 'a', 'n'});
    CHECK_THROWS_AS(base64_decode("@@@@"), UsageError);
    Rng rng(13);
    for (int len = 0; len < 40; ++len) {
        std::vector<std::uint8_t> bytes(static_cast<std::size_t>(len));
        for (auto& b : bytes) b = static_cast<std::uint8_t>(rng.below(256));
        CHECK(base64_decode(base64_encode(bytes)) == bytes);
    }
}

TEST_CASE("certificate serialization") {
    DomainDescriptor m8 = make_descriptor(DomainKind::PM, 4);
    Certificate c = Certificate::of_pairs(m8, {{3, 1}, {5, 6}});
    CHECK(certificate_to_json(c) == "[[1,3],[5,6]]");
    ExtendedCertificate ec = ExtendedCertificate::with_triple(m8, c, {7, 2, 4});
    CHECK(extended_certificate_to_json(ec) ==
          R"({"forbidden":[2,4,7],"pairs":[[1,3],[5,6]]})");
}

TEST_CASE("suite reports are byte-stable and timing is opt-in") {
    VerificationSuite a = suite_bound_arithmetic();
    VerificationSuite b = suite_bound_arithmetic();
    CHECK(suite_to_json(a) == suite_to_json(b));
    CHECK(suite_to_json(a).find("elapsed") == std::string::npos);
    CHECK(suite_to_json(a, true).find("elapsed_seconds") != std::string::npos);
}

TEST_CASE("seeded suites are reproducible") {
    VerificationSuite a = suite_degree_equivalence(123, 5);
    VerificationSuite b = suite_degree_equivalence(123, 5);
    CHECK(suite_to_json(a) == suite_to_json(b));
    CHECK(a.pass);
}

TEST_CASE("reports do not depend on the thread count") {
    VerificationSuite one = suite_verify(DomainKind::PM, 4, 5, 1);
    VerificationSuite four = suite_verify(DomainKind::PM, 4, 5, 4);
    CHECK(suite_to_json(one) == suite_to_json(four));
}

#ifndef IFV_SUITES_HPP
#define IFV_SUITES_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ifv/clique.hpp"
#include "ifv/domains.hpp"

namespace ifv {

// One batch verification: a named reproduction of a computational claim,
// with machine-readable evidence. Status is pass only when every
// sub-assertion passed.
struct VerificationSuite {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = false;
    std::string evidence;        // JSON object payload, byte-stable
    std::string evidence_timed;  // optional variant with timings; used when
                                 // the caller asks for them
    std::chrono::duration<double> elapsed{0};
};

// Serialized suite report; timings are excluded unless requested so that
// reports stay byte-stable across runs and thread counts.
std::string suite_to_json(const VerificationSuite& s, bool with_timings = false);

// The degree-2 sensitivity scan on {0,1}^k: span dimension and witness
// search. For (k,s) = (4,4) a witness would falsify the claim the toolkit
// reproduces, so pass requires "none"; for other parameters the witness is
// informational.
VerificationSuite suite_sensitivity_scan(int k, int s);

// Maximum-clique uniqueness verification over a range of n.
VerificationSuite suite_verify(DomainKind kind, int n_lo, int n_hi, int threads = 1,
                               std::vector<CliqueReport>* reports_out = nullptr);

// spectral_degree == polynomial_degree on seeded random functions.
VerificationSuite suite_degree_equivalence(std::uint64_t seed, int count);

// Completeness, orthogonality and Parseval for the isotypic decomposition,
// plus dimension sums.
VerificationSuite suite_decomposition(std::uint64_t seed, int count);

// Exhaustive degree-1 classification and certificate bounds on S_3 and M_6.
VerificationSuite suite_degree1_structure();

// complete_avoiding, pairwise minimum-certificate intersection on maximum
// cliques, extended-certificate reduction.
VerificationSuite suite_constructive_lemmas(std::uint64_t seed);

// Degree reduction under restriction, and the tableau-extension inner
// product identity.
VerificationSuite suite_degree_reduction(std::uint64_t seed);

// Closed-form T values and their even/odd product forms.
VerificationSuite suite_bound_arithmetic();

// Range scan of the chi generators. The symmetric-group range {-1,0,1} is
// asserted; the analogous claim on the perfect matching scheme is false and
// the suite reports concrete counterexamples as evidence.
VerificationSuite suite_chi_range();

// Default seed used by the CLI when none is supplied.
inline constexpr std::uint64_t kDefaultSeed = 20240901ull;

}  // namespace ifv

#endif

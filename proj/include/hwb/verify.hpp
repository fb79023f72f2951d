#ifndef HWB_VERIFY_HPP
#define HWB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hwb/autos.hpp"

namespace hwb {

using Json = nlohmann::ordered_json;

/// Outcome of one machine check. A failed check carries a witness in details.
struct CheckReport {
    std::string name;
    Json params = Json::object();
    bool passed = false;
    Json details = Json::object();
};

using IntMatrix = std::vector<std::vector<Integer>>;

/// Rank over the rationals by fraction-free elimination; rows are kept
/// primitive (divided by their content) so entries stay small.
std::size_t integer_matrix_rank(IntMatrix m);

/// Sparse vector with coordinates (component, monomial): a polynomial uses
/// component 0, a derivation uses component i for its i-th tangent.
using SparseVector = std::map<std::pair<int, Monomial>, Integer>;

SparseVector to_sparse(const ReducedPoly& p);
SparseVector to_sparse(const TangentialDerivation& d);
/// Rank of a family of sparse vectors; splits into independent blocks of
/// coordinates before eliminating.
std::size_t sparse_rank(const std::vector<SparseVector>& vectors);

// Closed formulas.
Integer factorial(int k);
Integer binomial(int n, int k);
Integer expected_rank_rlie(int n, int k);       // (k-1)! C(n,k)
Integer expected_rank_der_tau(int n, int k);    // n (k-1)! C(n-1,k)
Integer expected_rank_hp(int n, int k);         // (k-1)! C(n,k+1)
Integer expected_hirsch_hpsigma(int n);
Integer expected_hirsch_hp(int n);

/// Degree-k slices of C_i - 1, whatever the actual degree of phi.
TangentialDerivation degree_slice(const WeldedAuto& phi, int k);

enum class Family { HPSigma, HP };
std::string to_string(Family f);
/// chi_ij (i != j) for hPSigma, artin(i,j) (i < j) for hP.
std::vector<WeldedAuto> generators(Family f, int n);

/// Group elements of Gamma_k whose degree-k Johnson slices form a basis of
/// the span of all such slices. Built degree by degree from brackets
/// [generator, basis element of degree k-1]. Index 0 is unused.
struct GradedSpan {
    std::vector<std::vector<WeldedAuto>> basis;
    std::vector<std::size_t> rank;
};
GradedSpan graded_span(Family f, int n);

CheckReport check_mccool(int n);
CheckReport check_mccool_mutation(int n);
CheckReport check_homotopy_relations(int n, int max_w_len = 3);
CheckReport check_homotopy_mutation(int n, int max_w_len = 3);
CheckReport check_goldsmith(int n, int max_w_len = 3);
CheckReport check_goldsmith_mutation(int n);
CheckReport rank_rlie(int n, int k);
CheckReport rank_der_tau(int n, int k);
CheckReport hirsch(int n, Family f);
CheckReport center_check(int n);
/// Exhaustive over all right-nested k-fold generator commutators.
CheckReport graded_andreadakis_check(int n, int k, Family f);
CheckReport check_lie_presentations(int n);
CheckReport check_lie_mutation(int n);
CheckReport check_hpsigma2();
/// Random pure words: comb round trip and agreement of comb equality with
/// conjugator equality.
CheckReport check_comb_roundtrip(int count, int max_len, int max_n, std::uint64_t seed);

std::vector<std::string> suite_names();
/// Runs one named suite (or "all") up to max_n; reports sorted by name.
std::vector<CheckReport> run_suite(const std::string& name, int max_n, std::uint64_t seed);

} // namespace hwb

#endif

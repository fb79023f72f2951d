#ifndef HWB_AUTOS_HPP
#define HWB_AUTOS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hwb/reduced_algebra.hpp"
#include "hwb/rfree.hpp"
#include "hwb/rlie.hpp"

namespace hwb {

/// A welded braid up to homotopy: the automorphism of RF_n sending x_i to
/// x_{perm(i)}^{w_i}. Only the class of w_i modulo the normal closure of
/// x_{perm(i)} matters; it is stored as C_i, the expansion of w_i with every
/// monomial containing y_{perm(i)} removed.
class WeldedAuto {
public:
    explicit WeldedAuto(int rank = 0);
    static WeldedAuto identity(int rank) { return WeldedAuto(rank); }
    /// perm is 1-based (perm[i-1] = image index of strand i). Conjugators
    /// are canonicalized; a conjugator whose projection is not a unit with
    /// constant term 1 is rejected.
    WeldedAuto(std::vector<int> perm, std::vector<ReducedPoly> conjugators);

    int rank() const { return rank_; }
    int perm(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& permutation() const { return perm_; }
    const ReducedPoly& conjugator(int i) const { return conj_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<ReducedPoly>& conjugators() const { return conj_; }
    bool is_pure() const;
    bool is_identity() const { return *this == WeldedAuto(rank_); }

    friend bool operator==(const WeldedAuto& a, const WeldedAuto& b) = default;

private:
    int rank_;
    std::vector<int> perm_;
    std::vector<ReducedPoly> conj_;
};

// Generators. chi(i,j): x_i -> x_i^{x_j}. sigma(i): x_i -> x_i x_{i+1} x_i^-1,
// x_{i+1} -> x_i. rho(i): swaps x_i and x_{i+1}.
WeldedAuto chi(int i, int j, int n);
WeldedAuto sigma(int i, int n);
WeldedAuto sigma_inverse(int i, int n);
WeldedAuto rho(int i, int n);
/// sigma(j-1)...sigma(i+1) sigma(i)^2 sigma(i+1)^-1 ... sigma(j-1)^-1.
WeldedAuto artin(int i, int j, int n);

/// The algebra endomorphism of A[Y] induced by an automorphism:
/// y_j -> C_j^-1 y_{perm(j)} C_j. Images of monomials are memoized per object.
class InducedEndomorphism {
public:
    explicit InducedEndomorphism(const WeldedAuto& phi);
    ReducedPoly apply(const ReducedPoly& p);
    /// Solves apply(x) = b by back-substitution along the degree filtration
    /// (the induced matrix is triangular with a permutation on the diagonal).
    ReducedPoly solve(const ReducedPoly& b);

private:
    const ReducedPoly& image(const Monomial& m);

    int rank_;
    std::vector<int> perm_;
    std::vector<int> inverse_perm_;
    std::map<Monomial, ReducedPoly> memo_;
};

/// phi o psi (psi applied first).
WeldedAuto compose(const WeldedAuto& phi, const WeldedAuto& psi);
WeldedAuto inverse(const WeldedAuto& phi);
/// phi psi phi^-1 psi^-1
WeldedAuto commutator(const WeldedAuto& phi, const WeldedAuto& psi);
WeldedAuto power(const WeldedAuto& phi, long e);
/// Right-nested [g_1, [g_2, [..., g_k]]].
WeldedAuto nested_commutator(const std::vector<WeldedAuto>& gs);

RFElement act(const WeldedAuto& phi, const RFElement& g);
bool eq(const WeldedAuto& phi, const WeldedAuto& psi);
bool fixes_boundary(const WeldedAuto& phi);

/// min_i valuation(C_i - 1); kInfinity for the identity. Throws NotPure.
int andreadakis_degree(const WeldedAuto& phi);

/// Coefficient of y_{I_1} ... y_{I_d} in C_strand.
Integer milnor(const WeldedAuto& phi, int strand, const Word& indices);

struct JohnsonImage {
    int degree;
    TangentialDerivation derivation;
};
/// Leading Johnson data: degree d and tangents t_i = degree-d part of C_i - 1.
std::optional<JohnsonImage> johnson(const WeldedAuto& phi);

/// Exponents of u (an element of the normal closure of x_target inside RF
/// on the letters of `alphabet`) on the group Lyndon monomials P_w, w a
/// square-free Lyndon word over `alphabet` containing `target`.
LyndonCoords abelian_coordinates(const ReducedPoly& u, IndexSet alphabet, int target);

/// Product of P_w^e over the coordinates (expansions; the factors commute).
ReducedPoly from_abelian_coordinates(const LyndonCoords& coords, int rank);

// Pieces of the semi-direct product decomposition at level m (rank m).
/// Drops strand m and kills y_m in every conjugator.
WeldedAuto restrict_last(const WeldedAuto& phi);
/// Extends to rank m+1 fixing x_{m+1}.
WeldedAuto embed(const WeldedAuto& phi);
/// Conjugates x_m by v (an expansion over letters < m) and fixes the others.
WeldedAuto conjugate_last(const ReducedPoly& v, int m);
/// Conjugates only x_i, by u.
WeldedAuto conjugate_strand(int i, const ReducedPoly& u, int m);

struct CombLevel {
    int m = 0;
    ReducedPoly residual;                                  // over letters < m
    std::vector<std::pair<int, LyndonCoords>> coords;      // i = 1..m-1, ascending
    friend bool operator==(const CombLevel&, const CombLevel&) = default;
};

struct NormalForm {
    int n = 0;
    std::vector<CombLevel> levels;                         // m = n down to 2
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm comb(const WeldedAuto& phi);
WeldedAuto uncomb(const NormalForm& nf);

} // namespace hwb

#endif

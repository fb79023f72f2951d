#ifndef HWB_RLIE_HPP
#define HWB_RLIE_HPP

#include <map>
#include <vector>

#include "hwb/lyndon.hpp"
#include "hwb/reduced_algebra.hpp"

namespace hwb {

using LyndonCoords = std::map<Word, Integer, DegLexLess>;

/// Element of the reduced free Lie ring, represented by its associative
/// expansion inside A[Y]. Elements built through the public factory are
/// certified to lie in the Lie subring.
class LieElement {
public:
    explicit LieElement(int rank = 0) : value_(rank) {}
    static LieElement generator(int rank, int i);
    /// Throws NotLie if p is not in the Lie subring generated by the y_i.
    static LieElement from_poly(const ReducedPoly& p);
    static LieElement from_coordinates(const LyndonCoords& coords, int rank);

    int rank() const { return value_.rank(); }
    const ReducedPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    friend LieElement operator+(const LieElement& a, const LieElement& b) { return LieElement(a.value_ + b.value_, 0); }
    friend LieElement operator-(const LieElement& a, const LieElement& b) { return LieElement(a.value_ - b.value_, 0); }
    friend LieElement operator*(const LieElement& a, const Integer& c) { return LieElement(a.value_ * c, 0); }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.value_ == b.value_; }

private:
    friend LieElement lie_bracket(const LieElement& p, const LieElement& q);
    friend LieElement lyndon_expansion(const Word& w, int rank);
    friend class TangentialDerivation;
    LieElement(ReducedPoly p, int /*unchecked*/) : value_(std::move(p)) {}

    ReducedPoly value_;
};

/// [p, q] = pq - qp.
LieElement lie_bracket(const LieElement& p, const LieElement& q);
ReducedPoly lie_bracket(const ReducedPoly& p, const ReducedPoly& q);

/// Expansion of the Lyndon monomial P_w (bracketing of w).
LieElement lyndon_expansion(const Word& w, int rank);

/// Coordinates on square-free Lyndon monomials via triangular peeling:
/// the smallest remaining monomial must be a Lyndon word w, whose coefficient
/// is the coordinate of P_w. Throws NotLie when peeling gets stuck.
LyndonCoords to_lyndon_coordinates(const ReducedPoly& p);

/// Every nonzero coordinate sits on a word containing i.
bool ideal_membership(const LieElement& p, int i);

/// Index sequences of k distinct letters <= n whose last letter is the maximum.
std::vector<Word> linear_basis(int n, int k);

/// Right-nested bracket [y_{i1}, [y_{i2}, [..., y_{ik}]]].
LieElement linear_bracket(const Word& indices, int rank);

/// Derivation y_i -> [y_i, t_i]. Each tangent is stored modulo the ideal
/// <y_i>, i.e. with every monomial containing y_i removed.
class TangentialDerivation {
public:
    explicit TangentialDerivation(int rank = 0);
    /// Throws NotLie if a tangent is not a Lie element.
    static TangentialDerivation from_tangents(int rank, const std::vector<ReducedPoly>& tangents);
    /// d_ij: y_i -> [y_i, y_j], other generators to 0.
    static TangentialDerivation elementary(int i, int j, int rank);

    int rank() const { return rank_; }
    const ReducedPoly& tangent(int i) const { return tangents_.at(static_cast<std::size_t>(i - 1)); }
    bool is_zero() const;
    /// The derivation restricted to its homogeneous degree-d component.
    TangentialDerivation homogeneous_part(int degree) const;

    friend TangentialDerivation operator+(const TangentialDerivation& a, const TangentialDerivation& b);
    friend TangentialDerivation operator-(const TangentialDerivation& a, const TangentialDerivation& b);
    friend bool operator==(const TangentialDerivation& a, const TangentialDerivation& b) = default;

private:
    friend TangentialDerivation tangential_bracket(const TangentialDerivation& d, const TangentialDerivation& e);
    void canonicalize();

    int rank_;
    std::vector<ReducedPoly> tangents_;
};

/// Leibniz extension of y_i -> [y_i, t_i] to A[Y].
ReducedPoly apply_tangential(const TangentialDerivation& d, const ReducedPoly& p);

/// [d, e] has tangent [t_i, s_i] + d(s_i) - e(t_i) at i.
TangentialDerivation tangential_bracket(const TangentialDerivation& d, const TangentialDerivation& e);

} // namespace hwb

#endif

#ifndef HWB_REDUCED_ALGEBRA_HPP
#define HWB_REDUCED_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hwb/lyndon.hpp"

namespace hwb {

using Integer = boost::multiprecision::cpp_int;

/// Sentinel degree of the zero polynomial / the trivial group element.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

std::string degree_to_string(int d);

/// Bitmask over generator indices: bit i set <=> index i present.
using IndexSet = std::uint32_t;

IndexSet index_set(std::initializer_list<int> indices);

/// A square-free monomial y_{i1} ... y_{ik}. Letters are packed four bits
/// each with the first letter most significant, so that for equal degree
/// integer comparison of the packing is dictionary order.
class Monomial {
public:
    static constexpr int kMaxRank = 15;

    Monomial() = default;

    /// Throws InvalidInput on repeated or out-of-range indices.
    static Monomial from_word(const Word& w);
    static Monomial letter(int i);

    int degree() const { return len_; }
    IndexSet support() const { return mask_; }
    bool contains(int i) const { return (mask_ >> i) & 1U; }
    bool is_unit() const { return len_ == 0; }
    int operator[](int pos) const {
        return static_cast<int>((packed_ >> (4 * (len_ - 1 - pos))) & 0xFU);
    }
    Word word() const;
    std::string key() const { return to_string(word()); }

    friend bool disjoint(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }
    /// Concatenation; callers must check disjoint() first.
    friend Monomial concat(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.packed_ <=> b.packed_;
    }

private:
    std::uint64_t packed_ = 0;
    IndexSet mask_ = 0;
    std::uint8_t len_ = 0;
};

/// Element of the reduced free algebra A[y_1..y_n]: tensor algebra modulo all
/// monomials with a repeated letter. Terms are kept in (degree, dictionary)
/// order with zero coefficients pruned, so equality is map equality.
class ReducedPoly {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit ReducedPoly(int rank = 0);
    static ReducedPoly one(int rank);
    static ReducedPoly constant(int rank, const Integer& c);
    static ReducedPoly generator(int rank, int i);                 // y_i
    static ReducedPoly monomial(int rank, const Monomial& m, const Integer& c = 1);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    Integer constant_term() const { return coefficient(Monomial()); }

    /// Adds c * m, pruning a resulting zero.
    void add_term(const Monomial& m, const Integer& c);

    ReducedPoly& operator+=(const ReducedPoly& q);
    ReducedPoly& operator-=(const ReducedPoly& q);
    ReducedPoly& operator*=(const Integer& c);
    friend ReducedPoly operator+(ReducedPoly p, const ReducedPoly& q) { return p += q; }
    friend ReducedPoly operator-(ReducedPoly p, const ReducedPoly& q) { return p -= q; }
    friend ReducedPoly operator-(ReducedPoly p) { return p *= Integer(-1); }
    friend ReducedPoly operator*(ReducedPoly p, const Integer& c) { return p *= c; }
    friend ReducedPoly operator*(const ReducedPoly& p, const ReducedPoly& q);

    friend bool operator==(const ReducedPoly& a, const ReducedPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Same coefficients, viewed in a different rank (indices must fit).
    ReducedPoly with_rank(int rank) const;

private:
    int rank_;
    Terms terms_;
};

ReducedPoly mul(const ReducedPoly& p, const ReducedPoly& q);

/// Inverse of a unit (constant term +1 or -1); the remainder is nilpotent
/// so the geometric series stops at degree n.
ReducedPoly unit_inverse(const ReducedPoly& p);

/// p^e for a unit p with constant term 1, via the binomial series.
ReducedPoly unit_power(const ReducedPoly& p, const Integer& e);

/// Least degree with a nonzero homogeneous part, kInfinity for zero.
int valuation(const ReducedPoly& p);
ReducedPoly homogeneous_part(const ReducedPoly& p, int degree);

/// Ring morphism sending y_i to 0 for every i in kill.
ReducedPoly project(const ReducedPoly& p, IndexSet kill);

/// p - 1 for a unit-like element, convenient for valuations of group elements.
ReducedPoly augmentation_part(const ReducedPoly& p);

/// Number of square-free monomials over n letters: sum_k k! C(n,k).
std::vector<Monomial> monomial_basis(int n);
std::vector<Monomial> monomial_basis(int n, int degree);

std::string to_string(const ReducedPoly& p);

} // namespace hwb

#endif

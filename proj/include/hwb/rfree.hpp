#ifndef HWB_RFREE_HPP
#define HWB_RFREE_HPP

#include <string>
#include <vector>

#include "hwb/lyndon.hpp"
#include "hwb/reduced_algebra.hpp"

namespace hwb {

struct Letter {
    int index = 1;
    int sign = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;

GroupWord inverse_word(const GroupWord& w);
/// Cancels adjacent x x^-1 pairs.
GroupWord free_reduce(const GroupWord& w);
std::string to_string(const GroupWord& w);  // "x1 X2 ...", "1" for the empty word

/// Element of the reduced free group RF_n, stored as a witness word together
/// with its Magnus expansion x_i -> 1 + y_i. The expansion is a complete
/// invariant; the word is only a representative.
class RFElement {
public:
    explicit RFElement(int rank = 0);
    static RFElement generator(int rank, int i, int sign = 1);

    int rank() const { return rank_; }
    const GroupWord& word() const { return word_; }
    const ReducedPoly& expansion() const { return expansion_; }
    bool is_identity() const;

    /// Builds an element from an expansion, synthesizing a word by collecting
    /// Lyndon commutators degree by degree. Throws NotInGroup when the
    /// polynomial is not the expansion of a group element.
    static RFElement from_expansion(const ReducedPoly& expansion);

    friend bool operator==(const RFElement& g, const RFElement& h);

private:
    friend RFElement magnus_expand(const GroupWord& w, int rank);
    friend RFElement mul(const RFElement& g, const RFElement& h);
    friend RFElement inv(const RFElement& g);
    friend RFElement project_strands(const RFElement& g, IndexSet kill);

    RFElement(int rank, GroupWord word, ReducedPoly expansion);

    int rank_;
    GroupWord word_;
    ReducedPoly expansion_;
};

/// Expansion of x_i^{+-1}.
ReducedPoly letter_expansion(int rank, const Letter& l);

RFElement magnus_expand(const GroupWord& w, int rank);
RFElement mul(const RFElement& g, const RFElement& h);
RFElement inv(const RFElement& g);
/// h^-1 g h
RFElement conj(const RFElement& g, const RFElement& h);
/// g h g^-1 h^-1
RFElement comm(const RFElement& g, const RFElement& h);
RFElement power(const RFElement& g, long e);
bool eq(const RFElement& g, const RFElement& h);

/// Largest d with g in the d-th lower central term; kInfinity for 1.
int lcs_degree(const RFElement& g);

/// Deletes the killed letters; the expansion is projected alongside.
RFElement project_strands(const RFElement& g, IndexSet kill);

/// g lies in the normal closure of x_i (= the centralizer of x_i).
bool in_normal_closure(const RFElement& g, int i);

bool is_central(const RFElement& g);

/// Group Lyndon monomial: the bracketing tree of w read with commutators.
RFElement group_lyndon_monomial(const Word& w, int rank);

/// Right-nested commutator [g_1, [g_2, [..., g_k]]].
RFElement nested_commutator(const std::vector<RFElement>& gs);

} // namespace hwb

#endif

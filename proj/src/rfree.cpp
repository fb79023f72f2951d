#include "hwb/rfree.hpp"

#include <algorithm>

#include "hwb/error.hpp"
#include "hwb/rlie.hpp"

namespace hwb {

GroupWord inverse_word(const GroupWord& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (Letter& l : out) l.sign = -l.sign;
    return out;
}

GroupWord free_reduce(const GroupWord& w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::string to_string(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += (w[i].sign > 0 ? 'x' : 'X');
        out += std::to_string(w[i].index);
    }
    return out;
}

ReducedPoly letter_expansion(int rank, const Letter& l) {
    if (l.index < 1 || l.index > rank) fail(ErrorKind::InvalidInput, "letter x" + std::to_string(l.index) + " out of range");
    ReducedPoly y = ReducedPoly::generator(rank, l.index);
    return l.sign > 0 ? ReducedPoly::one(rank) + y : ReducedPoly::one(rank) - y;
}

RFElement::RFElement(int rank) : rank_(rank), expansion_(ReducedPoly::one(rank)) {}

RFElement::RFElement(int rank, GroupWord word, ReducedPoly expansion)
    : rank_(rank), word_(std::move(word)), expansion_(std::move(expansion)) {}

RFElement RFElement::generator(int rank, int i, int sign) {
    return magnus_expand({Letter{i, sign}}, rank);
}

bool RFElement::is_identity() const { return expansion_ == ReducedPoly::one(rank_); }

bool operator==(const RFElement& g, const RFElement& h) { return eq(g, h); }

RFElement magnus_expand(const GroupWord& w, int rank) {
    ReducedPoly e = ReducedPoly::one(rank);
    for (const Letter& l : w) {
        if (l.sign != 1 && l.sign != -1) fail(ErrorKind::InvalidInput, "letter sign must be +-1");
        e = e * letter_expansion(rank, l);
    }
    return RFElement(rank, w, std::move(e));
}

RFElement mul(const RFElement& g, const RFElement& h) {
    if (g.rank_ != h.rank_) fail(ErrorKind::RankMismatch, "product of elements of different ranks");
    GroupWord w = g.word_;
    w.insert(w.end(), h.word_.begin(), h.word_.end());
    return RFElement(g.rank_, free_reduce(w), g.expansion_ * h.expansion_);
}

RFElement inv(const RFElement& g) {
    return RFElement(g.rank_, inverse_word(g.word_), unit_inverse(g.expansion_));
}

RFElement conj(const RFElement& g, const RFElement& h) { return mul(mul(inv(h), g), h); }

RFElement comm(const RFElement& g, const RFElement& h) { return mul(mul(g, h), mul(inv(g), inv(h))); }

RFElement power(const RFElement& g, long e) {
    const RFElement base = e < 0 ? inv(g) : g;
    RFElement acc(g.rank());
    for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = mul(acc, base);
    return acc;
}

bool eq(const RFElement& g, const RFElement& h) {
    if (g.rank() != h.rank()) fail(ErrorKind::RankMismatch, "comparison of elements of different ranks");
    return g.expansion() == h.expansion();
}

int lcs_degree(const RFElement& g) { return valuation(augmentation_part(g.expansion())); }

RFElement project_strands(const RFElement& g, IndexSet kill) {
    GroupWord w;
    for (const Letter& l : g.word_)
        if (((kill >> l.index) & 1U) == 0) w.push_back(l);
    return RFElement(g.rank_, free_reduce(w), project(g.expansion_, kill));
}

bool in_normal_closure(const RFElement& g, int i) {
    if (i < 1 || i > g.rank()) fail(ErrorKind::InvalidInput, "generator index out of range");
    return project(g.expansion(), IndexSet{1} << i) == ReducedPoly::one(g.rank());
}

bool is_central(const RFElement& g) {
    const bool by_degree = lcs_degree(g) >= g.rank();
    bool by_commuting = true;
    for (int i = 1; i <= g.rank() && by_commuting; ++i)
        by_commuting = comm(g, RFElement::generator(g.rank(), i)).is_identity();
    if (by_degree != by_commuting) fail(ErrorKind::InvariantViolation, "center: degree test and commutation test disagree");
    return by_degree;
}

namespace {

RFElement tree_commutator(const LyndonTree& t, int rank) {
    if (t.is_leaf()) return RFElement::generator(rank, t.letter());
    return comm(tree_commutator(t.left(), rank), tree_commutator(t.right(), rank));
}

} // namespace

RFElement group_lyndon_monomial(const Word& w, int rank) {
    return tree_commutator(bracketing(w), rank);
}

RFElement nested_commutator(const std::vector<RFElement>& gs) {
    if (gs.empty()) fail(ErrorKind::InvalidInput, "nested_commutator: no arguments");
    RFElement acc = gs.back();
    for (auto it = gs.rbegin() + 1; it != gs.rend(); ++it) acc = comm(*it, acc);
    return acc;
}

RFElement RFElement::from_expansion(const ReducedPoly& expansion) {
    const int n = expansion.rank();
    if (expansion.constant_term() != 1) fail(ErrorKind::NotInGroup, "constant term must be 1");
    RFElement collected(n);
    ReducedPoly rest = expansion;
    const ReducedPoly one = ReducedPoly::one(n);
    // Peel one lower-central layer per pass: the degree-d part of rest - 1 is
    // a Lie element whose Lyndon coordinates are the exponents of the group
    // Lyndon monomials in that layer.
    for (int pass = 0; rest != one; ++pass) {
        if (pass > n) fail(ErrorKind::InvariantViolation, "collection did not terminate");
        const int d = valuation(rest - one);
        LyndonCoords coords;
        try {
            coords = to_lyndon_coordinates(homogeneous_part(rest, d));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotLie) throw;
            fail(ErrorKind::NotInGroup, std::string("not a group element: ") + e.what());
        }
        RFElement layer(n);
        for (const auto& [w, c] : coords) {
            const RFElement p = group_lyndon_monomial(w, n);
            layer = mul(layer, power(p, c.convert_to<long>()));
        }
        collected = mul(collected, layer);
        rest = unit_inverse(layer.expansion()) * rest;
    }
    if (collected.expansion() != expansion) fail(ErrorKind::InvariantViolation, "collection reproduced a different element");
    return collected;
}

} // namespace hwb

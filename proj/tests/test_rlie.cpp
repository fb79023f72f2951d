#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hwb/error.hpp"
#include "hwb/rlie.hpp"
#include "hwb/verify.hpp"

using namespace hwb;

namespace {

ReducedPoly y(int n, int i) { return ReducedPoly::generator(n, i); }
ReducedPoly mono(int n, const Word& w, long c = 1) { return ReducedPoly::monomial(n, Monomial::from_word(w), c); }
LieElement gen(int n, int i) { return LieElement::generator(n, i); }

// Oracle: expand a bracketing tree over plain words, then drop repetitions.
std::map<Word, long> tree_words(const LyndonTree& t) {
    if (t.is_leaf()) return {{Word{t.letter()}, 1}};
    const auto a = tree_words(t.left()), b = tree_words(t.right());
    std::map<Word, long> out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            out[uv] += cu * cv;
            out[vu] -= cu * cv;
        }
    return out;
}

ReducedPoly oracle_expansion(const Word& w, int n) {
    ReducedPoly p(n);
    for (const auto& [word, c] : tree_words(bracketing(w)))
        if (!has_repeated_letter(word)) p.add_term(Monomial::from_word(word), c);
    return p;
}

LieElement random_lie(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    LieElement out(n);
    for (int k = 1; k <= n; ++k)
        for (const Word& w : enumerate_lyndon(n, k, true))
            if (rng() % 3 == 0) out = out + lyndon_expansion(w, n) * Integer(coeff(rng));
    return out;
}

TangentialDerivation random_derivation(std::mt19937_64& rng, int n) {
    std::vector<ReducedPoly> t;
    for (int i = 1; i <= n; ++i) t.push_back(random_lie(rng, n).value());
    return TangentialDerivation::from_tangents(n, t);
}

} // namespace

TEST_CASE("lie bracket examples") {
    CHECK(lie_bracket(gen(2, 1), gen(2, 2)).value() == mono(2, {1, 2}) - mono(2, {2, 1}));
    CHECK(lie_bracket(gen(2, 1), lie_bracket(gen(2, 1), gen(2, 2))).is_zero());
    CHECK(lie_bracket(gen(2, 1), gen(2, 1)).is_zero());
    CHECK_THROWS_AS(lie_bracket(gen(2, 1), gen(3, 1)), Error);
}

TEST_CASE("lyndon expansion examples") {
    CHECK(lyndon_expansion({1, 2}, 2).value() == mono(2, {1, 2}) - mono(2, {2, 1}));
    CHECK(lyndon_expansion({1, 2, 3}, 3).value() ==
          mono(3, {1, 2, 3}) - mono(3, {1, 3, 2}) - mono(3, {2, 3, 1}) + mono(3, {3, 2, 1}));
    CHECK(lyndon_expansion({1, 3, 2}, 3).value() ==
          mono(3, {1, 3, 2}) - mono(3, {3, 1, 2}) - mono(3, {2, 1, 3}) + mono(3, {2, 3, 1}));
    CHECK_THROWS_AS(lyndon_expansion({2, 1}, 2), Error);
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (const Word& w : enumerate_lyndon(n, k, true))
                CHECK(lyndon_expansion(w, n).value() == oracle_expansion(w, n));
}

TEST_CASE("lyndon coordinates") {
    CHECK(to_lyndon_coordinates(mono(2, {1, 2}) - mono(2, {2, 1})) == LyndonCoords{{{1, 2}, 1}});
    const LieElement left = lie_bracket(lie_bracket(gen(3, 1), gen(3, 2)), gen(3, 3));
    CHECK(to_lyndon_coordinates(left.value()) == LyndonCoords{{{1, 2, 3}, 1}, {{1, 3, 2}, 1}});
    CHECK_THROWS_AS(to_lyndon_coordinates(mono(2, {1, 2}) + mono(2, {2, 1})), Error);
    CHECK_THROWS_AS(LieElement::from_poly(ReducedPoly::one(2)), Error);
    try {
        to_lyndon_coordinates(mono(2, {1, 2}) + mono(2, {2, 1}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotLie);
    }
}

TEST_CASE("triangularity of lyndon monomials") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (const Word& w : enumerate_lyndon(n, k, true)) {
                const ReducedPoly p = lyndon_expansion(w, n).value();
                const Monomial lead = Monomial::from_word(w);
                CHECK(p.coefficient(lead) == 1);
                for (const auto& [m, c] : p.terms()) {
                    CHECK(m.degree() == k);
                    if (m != lead) CHECK(lead < m);
                }
                CHECK(to_lyndon_coordinates(p) == LyndonCoords{{w, 1}});
            }
}

TEST_CASE("ideal membership") {
    CHECK(ideal_membership(lie_bracket(gen(2, 1), gen(2, 2)), 1));
    CHECK_FALSE(ideal_membership(gen(2, 2), 1));
    CHECK(ideal_membership(lie_bracket(lie_bracket(gen(3, 1), gen(3, 2)), gen(3, 3)), 2));
}

TEST_CASE("linear basis") {
    CHECK(linear_basis(3, 3) == std::vector<Word>{{1, 2, 3}, {2, 1, 3}});
    CHECK(linear_basis(3, 2) == std::vector<Word>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(linear_basis(2, 3).empty());
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) {
            std::vector<SparseVector> vs;
            for (const Word& w : linear_basis(n, k)) vs.push_back(to_sparse(linear_bracket(w, n).value()));
            CHECK(Integer(vs.size()) == expected_rank_rlie(n, k));
            CHECK(sparse_rank(vs) == vs.size());
        }
}

TEST_CASE("brackets of distinct letters span a module of the expected rank") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<SparseVector> vs;
            Word letters(static_cast<std::size_t>(n));
            std::iota(letters.begin(), letters.end(), 1);
            std::vector<bool> chosen(static_cast<std::size_t>(n), false);
            std::fill(chosen.begin(), chosen.begin() + k, true);
            do {
                Word w;
                for (int i = 0; i < n; ++i)
                    if (chosen[static_cast<std::size_t>(i)]) w.push_back(i + 1);
                do {
                    const LieElement b = linear_bracket(w, n);
                    vs.push_back(to_sparse(b.value()));
                    CHECK(LieElement::from_coordinates(to_lyndon_coordinates(b.value()), n) == b);
                } while (std::next_permutation(w.begin(), w.end()));
            } while (std::prev_permutation(chosen.begin(), chosen.end()));
            CHECK(Integer(sparse_rank(vs)) == expected_rank_rlie(n, k));
        }
}

TEST_CASE("jacobi identity and antisymmetry") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 4;
        const LieElement a = random_lie(rng, n), b = random_lie(rng, n), c = random_lie(rng, n);
        CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
        CHECK((lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b)))
                  .is_zero());
    }
}

TEST_CASE("tangential derivations act by Leibniz") {
    const int n = 3;
    const TangentialDerivation d12 = TangentialDerivation::elementary(1, 2, n);
    CHECK(apply_tangential(d12, y(n, 1)) == mono(n, {1, 2}) - mono(n, {2, 1}));
    CHECK(apply_tangential(d12, y(n, 2)).is_zero());
    CHECK(apply_tangential(d12, mono(n, {1, 3})) == (mono(n, {1, 2}) - mono(n, {2, 1})) * y(n, 3));
    CHECK_THROWS_AS(apply_tangential(d12, y(2, 1)), Error);
}

TEST_CASE("tangents are canonical modulo the ideal of their generator") {
    const int n = 3;
    const TangentialDerivation a = TangentialDerivation::from_tangents(n, {y(n, 2) + y(n, 1), ReducedPoly(n), ReducedPoly(n)});
    CHECK(a == TangentialDerivation::elementary(1, 2, n));
    CHECK(TangentialDerivation::from_tangents(n, {y(n, 1), ReducedPoly(n), ReducedPoly(n)}).is_zero());
    CHECK_THROWS_AS(TangentialDerivation::from_tangents(n, {mono(n, {2, 3}), ReducedPoly(n), ReducedPoly(n)}), Error);
}

TEST_CASE("tangential bracket examples") {
    auto d = [](int i, int j, int n) { return TangentialDerivation::elementary(i, j, n); };
    const TangentialDerivation b = tangential_bracket(d(1, 2, 3), d(1, 3, 3));
    CHECK(b.tangent(1) == mono(3, {2, 3}) - mono(3, {3, 2}));
    CHECK(b.tangent(2).is_zero());
    CHECK(b.tangent(3).is_zero());
    CHECK(tangential_bracket(d(1, 2, 3), d(1, 2, 3)).is_zero());
    CHECK(tangential_bracket(d(1, 2, 4), d(3, 4, 4)).is_zero());
}

TEST_CASE("tangential bracket is the commutator of the actions") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 3;
        const TangentialDerivation a = random_derivation(rng, n), b = random_derivation(rng, n);
        const TangentialDerivation c = tangential_bracket(a, b);
        for (int i = 1; i <= n; ++i) {
            const ReducedPoly yi = y(n, i);
            CHECK(apply_tangential(c, yi) ==
                  apply_tangential(a, apply_tangential(b, yi)) - apply_tangential(b, apply_tangential(a, yi)));
        }
        CHECK((tangential_bracket(a, b) + tangential_bracket(b, a)).is_zero());
    }
}

#include "doctest.h"

#include <algorithm>
#include <functional>

#include "hwb/error.hpp"
#include "hwb/lyndon.hpp"

using namespace hwb;

namespace {

// Oracle: a word is Lyndon iff it is strictly smaller than each proper
// rotation (classical equivalent definition).
bool lyndon_by_rotations(const Word& w) {
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

std::vector<Word> all_words(int letters, int len) {
    std::vector<Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int a = 1; a <= letters; ++a) {
                Word v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

// Oracle: all ways to cut w into Lyndon factors in non-increasing order.
std::vector<std::vector<Word>> nonincreasing_factorizations(const Word& w) {
    std::vector<std::vector<Word>> found;
    std::vector<Word> current;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (start == w.size()) {
            found.push_back(current);
            return;
        }
        for (std::size_t end = start + 1; end <= w.size(); ++end) {
            Word piece(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(end));
            if (!lyndon_by_rotations(piece)) continue;
            if (!current.empty() && current.back() < piece) continue;
            current.push_back(piece);
            go(end);
            current.pop_back();
        }
    };
    go(0);
    return found;
}

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }
long binomial(int n, int k) { return k < 0 || k > n ? 0 : factorial(n) / (factorial(k) * factorial(n - k)); }

} // namespace

TEST_CASE("is_lyndon examples") {
    CHECK(is_lyndon({1, 2}));
    CHECK_FALSE(is_lyndon({2, 1}));
    CHECK_FALSE(is_lyndon({1, 1}));
    CHECK(is_lyndon({3}));
    CHECK_THROWS_AS(is_lyndon({}), Error);
}

TEST_CASE("is_lyndon agrees with the rotation oracle") {
    for (int len = 1; len <= 7; ++len)
        for (const Word& w : all_words(3, len)) CHECK(is_lyndon(w) == lyndon_by_rotations(w));
}

TEST_CASE("standard factorization") {
    CHECK(standard_factorization({1, 2}) == std::make_pair(Word{1}, Word{2}));
    CHECK(standard_factorization({1, 1, 2, 1, 2}) == std::make_pair(Word{1, 1, 2}, Word{1, 2}));
    CHECK(standard_factorization({1, 1, 2}) == std::make_pair(Word{1}, Word{1, 2}));
    CHECK_THROWS_AS(standard_factorization({1}), Error);
    for (int len = 2; len <= 6; ++len)
        for (const Word& w : all_words(3, len)) {
            if (!is_lyndon(w)) continue;
            const auto [u, v] = standard_factorization(w);
            CHECK(is_lyndon(u));
            CHECK(is_lyndon(v));
        }
}

TEST_CASE("lyndon factorization examples") {
    CHECK(lyndon_factorization({2, 1, 2}) == std::vector<Word>{{2}, {1, 2}});
    CHECK(lyndon_factorization({1, 2, 3}) == std::vector<Word>{{1, 2, 3}});
    CHECK(lyndon_factorization({3, 2, 1}) == std::vector<Word>{{3}, {2}, {1}});
    CHECK_THROWS_AS(lyndon_factorization({}), Error);
}

TEST_CASE("duval agrees with the brute-force factorization oracle up to length 8") {
    for (int len = 1; len <= 8; ++len)
        for (const Word& w : all_words(3, len)) {
            const auto oracle = nonincreasing_factorizations(w);
            REQUIRE(oracle.size() == 1);
            CHECK(lyndon_factorization(w) == oracle.front());
        }
}

TEST_CASE("concatenation of Lyndon words is Lyndon iff u < v") {
    for (int total = 2; total <= 6; ++total)
        for (int lu = 1; lu < total; ++lu)
            for (const Word& u : all_words(3, lu)) {
                if (!is_lyndon(u)) continue;
                for (const Word& v : all_words(3, total - lu)) {
                    if (!is_lyndon(v)) continue;
                    Word uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    CHECK(is_lyndon(uv) == (u < v));
                }
            }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_lyndon(3, 3, true) == std::vector<Word>{{1, 2, 3}, {1, 3, 2}});
    CHECK(enumerate_lyndon(2, 2, false) == std::vector<Word>{{1, 2}});
    CHECK(enumerate_lyndon(3, 1, true) == std::vector<Word>{{1}, {2}, {3}});
    CHECK(enumerate_lyndon(2, 3, true).empty());
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto words = enumerate_lyndon(n, k, true);
            CHECK(static_cast<long>(words.size()) == factorial(k - 1) * binomial(n, k));
            CHECK(std::is_sorted(words.begin(), words.end()));
        }
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 6; ++k) {
            std::vector<Word> oracle;
            for (const Word& w : all_words(n, k))
                if (lyndon_by_rotations(w)) oracle.push_back(w);
            CHECK(enumerate_lyndon(n, k, false) == oracle);
        }
}

TEST_CASE("bracketing") {
    CHECK(bracketing({1, 2}) == LyndonTree(LyndonTree(1), LyndonTree(2)));
    CHECK(bracketing({1, 2, 3}) == LyndonTree(LyndonTree(1), LyndonTree(LyndonTree(2), LyndonTree(3))));
    CHECK(bracketing({1, 3, 2}) == LyndonTree(LyndonTree(LyndonTree(1), LyndonTree(3)), LyndonTree(2)));
    CHECK_THROWS_AS(bracketing({2, 1}), Error);
    std::function<void(const LyndonTree&)> check_node = [&](const LyndonTree& t) {
        CHECK(is_lyndon(t.frontier()));
        if (t.is_leaf()) return;
        CHECK(standard_factorization(t.frontier()).second == t.right().frontier());
        check_node(t.left());
        check_node(t.right());
    };
    for (int k = 1; k <= 6; ++k)
        for (const Word& w : enumerate_lyndon(3, k, false)) {
            const LyndonTree t = bracketing(w);
            CHECK(t.frontier() == w);
            check_node(t);
        }
}

TEST_CASE("word text round trip") {
    CHECK(to_string(Word{1, 2, 3}) == "1,2,3");
    CHECK(parse_word("3,1,2") == Word{3, 1, 2});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("1,,2"), Error);
    CHECK_THROWS_AS(parse_word("1,a"), Error);
}

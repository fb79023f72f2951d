#include "hwb/lyndon.hpp"

#include <algorithm>
#include <sstream>

#include "hwb/error.hpp"

namespace hwb {

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 6 || item.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::InvalidInput, "malformed index list '" + text + "'");
        w.push_back(std::stoi(item));
    }
    return w;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) fail(ErrorKind::InvalidInput, "is_lyndon: empty word");
    for (std::size_t j = 1; j < w.size(); ++j) {
        if (!(w < Word(w.begin() + static_cast<std::ptrdiff_t>(j), w.end()))) return false;
    }
    return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) fail(ErrorKind::InvalidInput, "standard_factorization: word shorter than 2");
    auto suffix = [&](std::size_t j) { return Word(w.begin() + static_cast<std::ptrdiff_t>(j), w.end()); };
    std::size_t best = 1;
    for (std::size_t j = 2; j < w.size(); ++j) {
        if (suffix(j) < suffix(best)) best = j;
    }
    auto cut = w.begin() + static_cast<std::ptrdiff_t>(best);
    return {Word(w.begin(), cut), Word(cut, w.end())};
}

std::vector<Word> lyndon_factorization(const Word& w) {
    if (w.empty()) fail(ErrorKind::InvalidInput, "lyndon_factorization: empty word");
    std::vector<Word> factors;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        std::size_t k = i;
        while (j < n && w[k] <= w[j]) {
            k = (w[k] < w[j]) ? i : k + 1;
            ++j;
        }
        const std::size_t period = j - k;
        while (i <= k) {
            factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                                 w.begin() + static_cast<std::ptrdiff_t>(i + period));
            i += period;
        }
    }
    return factors;
}

std::vector<Word> enumerate_lyndon(int n, int k, bool square_free) {
    if (n < 1 || k < 1) fail(ErrorKind::InvalidInput, "enumerate_lyndon: n and k must be positive");
    std::vector<Word> out;
    if (square_free) {
        if (k > n) return out;
        // A word with distinct letters is Lyndon iff its first letter is the smallest.
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            Word letters;
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) letters.push_back(i + 1);
            Word rest(letters.begin() + 1, letters.end());
            do {
                Word w{letters.front()};
                w.insert(w.end(), rest.begin(), rest.end());
                out.push_back(std::move(w));
            } while (std::next_permutation(rest.begin(), rest.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::sort(out.begin(), out.end());
        return out;
    }
    // Duval's generation of Lyndon words of length <= k, lexicographic order.
    Word w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        const std::size_t m = w.size();
        while (w.size() < static_cast<std::size_t>(k)) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

LyndonTree::LyndonTree(LyndonTree left, LyndonTree right)
    : left_(std::make_shared<const LyndonTree>(std::move(left))),
      right_(std::make_shared<const LyndonTree>(std::move(right))) {}

Word LyndonTree::frontier() const {
    if (is_leaf()) return {letter_};
    Word w = left_->frontier();
    Word r = right_->frontier();
    w.insert(w.end(), r.begin(), r.end());
    return w;
}

bool operator==(const LyndonTree& a, const LyndonTree& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.letter_ == b.letter_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

LyndonTree bracketing(const Word& w) {
    if (w.empty() || !is_lyndon(w)) fail(ErrorKind::InvalidInput, "bracketing: '" + to_string(w) + "' is not Lyndon");
    if (w.size() == 1) return LyndonTree(w.front());
    auto [u, v] = standard_factorization(w);
    return LyndonTree(bracketing(u), bracketing(v));
}

bool has_repeated_letter(const Word& w) {
    Word s = w;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) != s.end();
}

} // namespace hwb

#ifndef HWB_LYNDON_HPP
#define HWB_LYNDON_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hwb {

/// A word over the ordered alphabet 1 < 2 < ... < n. Words compare in
/// dictionary order (std::vector's operator<), a proper prefix being smaller.
using Word = std::vector<int>;

/// Degree first, then dictionary order. This is the canonical order for
/// monomials and for Lyndon coordinates.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::string to_string(const Word& w);            // "1,2,3"
Word parse_word(const std::string& text);        // inverse of to_string

bool is_lyndon(const Word& w);

/// w = u v with v the smallest proper suffix of w.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Chen-Fox-Lyndon factorization l_1 >= l_2 >= ... >= l_k (Duval's scan).
std::vector<Word> lyndon_factorization(const Word& w);

/// All Lyndon words of length k over 1..n in ascending order; with
/// square_free only the words with pairwise distinct letters.
std::vector<Word> enumerate_lyndon(int n, int k, bool square_free);

class LyndonTree {
public:
    explicit LyndonTree(int letter) : letter_(letter) {}
    LyndonTree(LyndonTree left, LyndonTree right);

    bool is_leaf() const { return !left_; }
    int letter() const { return letter_; }
    const LyndonTree& left() const { return *left_; }
    const LyndonTree& right() const { return *right_; }
    Word frontier() const;

    friend bool operator==(const LyndonTree& a, const LyndonTree& b);

private:
    int letter_ = 0;
    std::shared_ptr<const LyndonTree> left_;
    std::shared_ptr<const LyndonTree> right_;
};

/// Iterated standard factorization of a Lyndon word.
LyndonTree bracketing(const Word& w);

bool has_repeated_letter(const Word& w);

} // namespace hwb

#endif

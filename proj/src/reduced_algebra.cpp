#include "hwb/reduced_algebra.hpp"

#include <algorithm>

#include "hwb/error.hpp"

namespace hwb {

std::string degree_to_string(int d) {
    return d == kInfinity ? "infinity" : std::to_string(d);
}

IndexSet index_set(std::initializer_list<int> indices) {
    IndexSet s = 0;
    for (int i : indices) s |= IndexSet{1} << i;
    return s;
}

Monomial Monomial::from_word(const Word& w) {
    if (static_cast<int>(w.size()) > kMaxRank) fail(ErrorKind::InvalidInput, "monomial longer than the maximal rank");
    Monomial m;
    for (int i : w) {
        if (i < 1 || i > kMaxRank) fail(ErrorKind::InvalidInput, "monomial index out of range: " + std::to_string(i));
        if (m.contains(i)) fail(ErrorKind::InvalidInput, "monomial with repeated index: " + to_string(w));
        m.packed_ = (m.packed_ << 4) | static_cast<std::uint64_t>(i);
        m.mask_ |= IndexSet{1} << i;
        ++m.len_;
    }
    return m;
}

Monomial Monomial::letter(int i) { return from_word({i}); }

Word Monomial::word() const {
    Word w(len_);
    for (int p = 0; p < len_; ++p) w[static_cast<std::size_t>(p)] = (*this)[p];
    return w;
}

Monomial concat(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.packed_ = (a.packed_ << (4 * b.len_)) | b.packed_;
    m.mask_ = a.mask_ | b.mask_;
    m.len_ = static_cast<std::uint8_t>(a.len_ + b.len_);
    return m;
}

ReducedPoly::ReducedPoly(int rank) : rank_(rank) {
    if (rank < 0 || rank > Monomial::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range");
}

ReducedPoly ReducedPoly::one(int rank) { return constant(rank, 1); }

ReducedPoly ReducedPoly::constant(int rank, const Integer& c) {
    ReducedPoly p(rank);
    p.add_term(Monomial(), c);
    return p;
}

ReducedPoly ReducedPoly::generator(int rank, int i) {
    if (i < 1 || i > rank) fail(ErrorKind::InvalidInput, "generator index out of range");
    return monomial(rank, Monomial::letter(i));
}

ReducedPoly ReducedPoly::monomial(int rank, const Monomial& m, const Integer& c) {
    ReducedPoly p(rank);
    for (int pos = 0; pos < m.degree(); ++pos)
        if (m[pos] > rank) fail(ErrorKind::InvalidInput, "monomial index exceeds rank");
    p.add_term(m, c);
    return p;
}

Integer ReducedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void ReducedPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ReducedPoly& ReducedPoly::operator+=(const ReducedPoly& q) {
    if (q.rank_ != rank_) fail(ErrorKind::RankMismatch, "addition of polynomials of different ranks");
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

ReducedPoly& ReducedPoly::operator-=(const ReducedPoly& q) {
    if (q.rank_ != rank_) fail(ErrorKind::RankMismatch, "subtraction of polynomials of different ranks");
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

ReducedPoly& ReducedPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ReducedPoly operator*(const ReducedPoly& p, const ReducedPoly& q) {
    if (p.rank_ != q.rank_) fail(ErrorKind::RankMismatch, "product of polynomials of different ranks");
    ReducedPoly r(p.rank_);
    for (const auto& [a, ca] : p.terms_) {
        for (const auto& [b, cb] : q.terms_) {
            if (!disjoint(a, b)) continue;
            r.add_term(concat(a, b), ca * cb);
        }
    }
    return r;
}

ReducedPoly ReducedPoly::with_rank(int rank) const {
    ReducedPoly r(rank);
    const IndexSet allowed = rank >= 31 ? ~IndexSet{0} : ((IndexSet{1} << (rank + 1)) - 2);
    for (const auto& [m, c] : terms_) {
        if ((m.support() & ~allowed) != 0) fail(ErrorKind::RankMismatch, "polynomial does not fit in rank " + std::to_string(rank));
        r.terms_.emplace(m, c);
    }
    return r;
}

ReducedPoly mul(const ReducedPoly& p, const ReducedPoly& q) { return p * q; }

ReducedPoly unit_inverse(const ReducedPoly& p) {
    const Integer c = p.constant_term();
    if (c == -1) return -unit_inverse(-p);
    if (c != 1) fail(ErrorKind::NotAUnit, "constant term is not +-1");
    const ReducedPoly minus_a = ReducedPoly::one(p.rank()) - p;  // -(p - 1)
    ReducedPoly result = ReducedPoly::one(p.rank());
    ReducedPoly power = ReducedPoly::one(p.rank());
    for (int k = 1; k <= p.rank(); ++k) {
        power = power * minus_a;
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

ReducedPoly unit_power(const ReducedPoly& p, const Integer& e) {
    if (p.constant_term() != 1) fail(ErrorKind::NotAUnit, "unit_power expects constant term 1");
    if (e < 0) return unit_power(unit_inverse(p), -e);
    // (1 + a)^e = sum_k binom(e, k) a^k, and a^k = 0 for k > n.
    const ReducedPoly a = augmentation_part(p);
    ReducedPoly result = ReducedPoly::one(p.rank());
    ReducedPoly power = ReducedPoly::one(p.rank());
    Integer binom = 1;
    for (int k = 1; k <= p.rank() && k <= e; ++k) {
        power = power * a;
        if (power.is_zero()) break;
        binom = binom * (e - (k - 1)) / k;
        result += power * binom;
    }
    return result;
}

int valuation(const ReducedPoly& p) {
    if (p.is_zero()) return kInfinity;
    return p.terms().begin()->first.degree();
}

ReducedPoly homogeneous_part(const ReducedPoly& p, int degree) {
    ReducedPoly r(p.rank());
    for (const auto& [m, c] : p.terms())
        if (m.degree() == degree) r.add_term(m, c);
    return r;
}

ReducedPoly project(const ReducedPoly& p, IndexSet kill) {
    if (kill == 0) return p;
    ReducedPoly r(p.rank());
    for (const auto& [m, c] : p.terms())
        if ((m.support() & kill) == 0) r.add_term(m, c);
    return r;
}

ReducedPoly augmentation_part(const ReducedPoly& p) {
    return p - ReducedPoly::one(p.rank());
}

std::vector<Monomial> monomial_basis(int n) {
    std::vector<Monomial> out;
    for (int d = 0; d <= n; ++d) {
        auto part = monomial_basis(n, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Monomial> monomial_basis(int n, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || degree > n) return out;
    if (degree == 0) return {Monomial()};
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + degree, true);
    do {
        Word letters;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) letters.push_back(i + 1);
        do {
            out.push_back(Monomial::from_word(letters));
        } while (std::next_permutation(letters.begin(), letters.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const ReducedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_unit()) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        for (int pos = 0; pos < m.degree(); ++pos) {
            if (pos) out += "*";
            out += "y" + std::to_string(m[pos]);
        }
    }
    return out;
}

} // namespace hwb

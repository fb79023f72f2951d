#include "hwb/rlie.hpp"

#include <algorithm>
#include <mutex>

#include "hwb/error.hpp"

namespace hwb {

namespace {

// P_w depends only on w; expansions are shared across calls. Entries are
// never erased, so returned references stay valid.
const ReducedPoly& cached_lyndon_poly(const Word& w, int rank) {
    static std::mutex mutex;
    static std::map<std::pair<int, Word>, ReducedPoly> cache;
    auto key = std::make_pair(rank, w);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ReducedPoly value(rank);
    if (w.size() == 1) {
        value = ReducedPoly::generator(rank, w.front());
    } else {
        auto [u, v] = standard_factorization(w);
        const ReducedPoly& pu = cached_lyndon_poly(u, rank);
        const ReducedPoly& pv = cached_lyndon_poly(v, rank);
        value = pu * pv - pv * pu;
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

} // namespace

LieElement LieElement::generator(int rank, int i) {
    return LieElement(ReducedPoly::generator(rank, i), 0);
}

LieElement LieElement::from_poly(const ReducedPoly& p) {
    to_lyndon_coordinates(p);
    return LieElement(p, 0);
}

LieElement LieElement::from_coordinates(const LyndonCoords& coords, int rank) {
    ReducedPoly p(rank);
    for (const auto& [w, c] : coords) {
        if (has_repeated_letter(w)) fail(ErrorKind::InvalidInput, "coordinate on a word with repetition: " + to_string(w));
        p += lyndon_expansion(w, rank).value() * c;
    }
    return LieElement(std::move(p), 0);
}

ReducedPoly lie_bracket(const ReducedPoly& p, const ReducedPoly& q) {
    return p * q - q * p;
}

LieElement lie_bracket(const LieElement& p, const LieElement& q) {
    return LieElement(lie_bracket(p.value_, q.value_), 0);
}

LieElement lyndon_expansion(const Word& w, int rank) {
    if (w.empty() || !is_lyndon(w)) fail(ErrorKind::InvalidInput, "lyndon_expansion: '" + to_string(w) + "' is not Lyndon");
    for (int i : w)
        if (i < 1 || i > rank) fail(ErrorKind::InvalidInput, "lyndon_expansion: letter out of range");
    return LieElement(cached_lyndon_poly(w, rank), 0);
}

LyndonCoords to_lyndon_coordinates(const ReducedPoly& p) {
    LyndonCoords coords;
    ReducedPoly rest = p;
    while (!rest.is_zero()) {
        const auto& [m, lambda] = *rest.terms().begin();
        if (m.is_unit()) fail(ErrorKind::NotLie, "nonzero constant term");
        const Word w = m.word();
        if (!is_lyndon(w)) fail(ErrorKind::NotLie, "leading monomial " + to_string(w) + " is not a Lyndon word");
        const Integer c = lambda;
        coords[w] += c;
        rest -= cached_lyndon_poly(w, p.rank()) * c;
    }
    return coords;
}

bool ideal_membership(const LieElement& p, int i) {
    for (const auto& [w, c] : to_lyndon_coordinates(p.value())) {
        if (std::find(w.begin(), w.end(), i) == w.end()) return false;
    }
    return true;
}

std::vector<Word> linear_basis(int n, int k) {
    std::vector<Word> out;
    if (k < 1 || k > n) return out;
    for (const Monomial& m : monomial_basis(n, k)) {
        Word w = m.word();
        if (w.back() == *std::max_element(w.begin(), w.end())) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

LieElement linear_bracket(const Word& indices, int rank) {
    if (indices.empty()) fail(ErrorKind::InvalidInput, "linear_bracket: empty index sequence");
    LieElement acc = LieElement::generator(rank, indices.back());
    for (auto it = indices.rbegin() + 1; it != indices.rend(); ++it)
        acc = lie_bracket(LieElement::generator(rank, *it), acc);
    return acc;
}

TangentialDerivation::TangentialDerivation(int rank)
    : rank_(rank), tangents_(static_cast<std::size_t>(rank), ReducedPoly(rank)) {}

TangentialDerivation TangentialDerivation::from_tangents(int rank, const std::vector<ReducedPoly>& tangents) {
    if (static_cast<int>(tangents.size()) != rank) fail(ErrorKind::InvalidInput, "expected one tangent per generator");
    TangentialDerivation d(rank);
    for (int i = 1; i <= rank; ++i) {
        const ReducedPoly& t = tangents[static_cast<std::size_t>(i - 1)];
        if (t.rank() != rank) fail(ErrorKind::RankMismatch, "tangent of the wrong rank");
        to_lyndon_coordinates(t);
        d.tangents_[static_cast<std::size_t>(i - 1)] = t;
    }
    d.canonicalize();
    return d;
}

TangentialDerivation TangentialDerivation::elementary(int i, int j, int rank) {
    if (i == j || i < 1 || j < 1 || i > rank || j > rank) fail(ErrorKind::InvalidInput, "d_ij needs distinct indices in range");
    TangentialDerivation d(rank);
    d.tangents_[static_cast<std::size_t>(i - 1)] = ReducedPoly::generator(rank, j);
    return d;
}

void TangentialDerivation::canonicalize() {
    for (int i = 1; i <= rank_; ++i) {
        auto& t = tangents_[static_cast<std::size_t>(i - 1)];
        t = project(t, IndexSet{1} << i);
    }
}

bool TangentialDerivation::is_zero() const {
    return std::all_of(tangents_.begin(), tangents_.end(), [](const ReducedPoly& t) { return t.is_zero(); });
}

TangentialDerivation TangentialDerivation::homogeneous_part(int degree) const {
    TangentialDerivation d(rank_);
    for (std::size_t i = 0; i < tangents_.size(); ++i) d.tangents_[i] = hwb::homogeneous_part(tangents_[i], degree);
    return d;
}

TangentialDerivation operator+(const TangentialDerivation& a, const TangentialDerivation& b) {
    if (a.rank_ != b.rank_) fail(ErrorKind::RankMismatch, "sum of derivations of different ranks");
    TangentialDerivation d = a;
    for (std::size_t i = 0; i < d.tangents_.size(); ++i) d.tangents_[i] += b.tangents_[i];
    return d;
}

TangentialDerivation operator-(const TangentialDerivation& a, const TangentialDerivation& b) {
    if (a.rank_ != b.rank_) fail(ErrorKind::RankMismatch, "difference of derivations of different ranks");
    TangentialDerivation d = a;
    for (std::size_t i = 0; i < d.tangents_.size(); ++i) d.tangents_[i] -= b.tangents_[i];
    return d;
}

ReducedPoly apply_tangential(const TangentialDerivation& d, const ReducedPoly& p) {
    if (d.rank() != p.rank()) fail(ErrorKind::RankMismatch, "derivation and polynomial of different ranks");
    const int n = d.rank();
    std::vector<ReducedPoly> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images.push_back(lie_bracket(ReducedPoly::generator(n, i), d.tangent(i)));

    ReducedPoly result(n);
    for (const auto& [m, c] : p.terms()) {
        const Word w = m.word();
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const ReducedPoly& image = images[static_cast<std::size_t>(w[pos] - 1)];
            if (image.is_zero()) continue;
            const Monomial prefix = Monomial::from_word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos)));
            const Monomial suffix = Monomial::from_word(Word(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end()));
            result += ReducedPoly::monomial(n, prefix, c) * image * ReducedPoly::monomial(n, suffix);
        }
    }
    return result;
}

TangentialDerivation tangential_bracket(const TangentialDerivation& d, const TangentialDerivation& e) {
    if (d.rank() != e.rank()) fail(ErrorKind::RankMismatch, "bracket of derivations of different ranks");
    TangentialDerivation out(d.rank());
    for (int i = 1; i <= d.rank(); ++i) {
        const ReducedPoly& t = d.tangent(i);
        const ReducedPoly& s = e.tangent(i);
        out.tangents_[static_cast<std::size_t>(i - 1)] = lie_bracket(t, s) + apply_tangential(d, s) - apply_tangential(e, t);
    }
    out.canonicalize();
    return out;
}

} // namespace hwb

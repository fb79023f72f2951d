#include "hwb/autos.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "hwb/error.hpp"

namespace hwb {

namespace {

IndexSet bit(int i) { return IndexSet{1} << i; }

void require_pure(const WeldedAuto& phi, const char* what) {
    if (!phi.is_pure()) fail(ErrorKind::NotPure, std::string(what) + ": automorphism is not pure");
}

void require_same_rank(const WeldedAuto& a, const WeldedAuto& b, const char* what) {
    if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, std::string(what) + ": ranks differ");
}

// Expansion of the group Lyndon monomial P_w; shared across calls.
const ReducedPoly& group_lyndon_expansion(const Word& w, int rank) {
    static std::mutex mutex;
    static std::map<std::pair<int, Word>, ReducedPoly> cache;
    auto key = std::make_pair(rank, w);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ReducedPoly value = group_lyndon_monomial(w, rank).expansion();
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

} // namespace

WeldedAuto::WeldedAuto(int rank) : rank_(rank) {
    if (rank < 0 || rank > Monomial::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range");
    perm_.resize(static_cast<std::size_t>(rank));
    std::iota(perm_.begin(), perm_.end(), 1);
    conj_.assign(static_cast<std::size_t>(rank), ReducedPoly::one(rank));
}

WeldedAuto::WeldedAuto(std::vector<int> perm, std::vector<ReducedPoly> conjugators)
    : rank_(static_cast<int>(perm.size())), perm_(std::move(perm)), conj_(std::move(conjugators)) {
    if (rank_ < 1 || rank_ > Monomial::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range");
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < rank_; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1) fail(ErrorKind::InvalidInput, "perm is not a permutation of 1..n");
    if (static_cast<int>(conj_.size()) != rank_) fail(ErrorKind::InvalidInput, "expected one conjugator per strand");
    for (int i = 1; i <= rank_; ++i) {
        ReducedPoly& c = conj_[static_cast<std::size_t>(i - 1)];
        if (c.rank() != rank_) fail(ErrorKind::RankMismatch, "conjugator of the wrong rank");
        c = project(c, bit(perm_[static_cast<std::size_t>(i - 1)]));
        if (c.constant_term() != 1) fail(ErrorKind::InvalidInput, "conjugator must have constant term 1");
    }
}

bool WeldedAuto::is_pure() const {
    for (int i = 1; i <= rank_; ++i)
        if (perm(i) != i) return false;
    return true;
}

WeldedAuto chi(int i, int j, int n) {
    if (i == j) fail(ErrorKind::InvalidInput, "chi(i,j) needs i != j");
    if (i < 1 || j < 1 || i > n || j > n) fail(ErrorKind::InvalidInput, "chi index out of range");
    WeldedAuto id(n);
    std::vector<ReducedPoly> c = id.conjugators();
    c[static_cast<std::size_t>(i - 1)] = ReducedPoly::one(n) + ReducedPoly::generator(n, j);
    return WeldedAuto(id.permutation(), std::move(c));
}

namespace {

void require_adjacent(int i, int n, const char* what) {
    if (i < 1 || i >= n) fail(ErrorKind::InvalidInput, std::string(what) + " index out of range");
}

std::vector<int> transposition(int i, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    return p;
}

} // namespace

WeldedAuto sigma(int i, int n) {
    require_adjacent(i, n, "sigma");
    // x_i -> x_{i+1}^{x_i^-1}, x_{i+1} -> x_i
    std::vector<ReducedPoly> c(static_cast<std::size_t>(n), ReducedPoly::one(n));
    c[static_cast<std::size_t>(i - 1)] = ReducedPoly::one(n) - ReducedPoly::generator(n, i);
    return WeldedAuto(transposition(i, n), std::move(c));
}

WeldedAuto sigma_inverse(int i, int n) {
    require_adjacent(i, n, "sigma");
    // x_i -> x_{i+1}, x_{i+1} -> x_i^{x_{i+1}}
    std::vector<ReducedPoly> c(static_cast<std::size_t>(n), ReducedPoly::one(n));
    c[static_cast<std::size_t>(i)] = ReducedPoly::one(n) + ReducedPoly::generator(n, i + 1);
    return WeldedAuto(transposition(i, n), std::move(c));
}

WeldedAuto rho(int i, int n) {
    require_adjacent(i, n, "rho");
    return WeldedAuto(transposition(i, n), std::vector<ReducedPoly>(static_cast<std::size_t>(n), ReducedPoly::one(n)));
}

WeldedAuto artin(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) fail(ErrorKind::InvalidInput, "artin(i,j) needs 1 <= i < j <= n");
    WeldedAuto result = compose(sigma(i, n), sigma(i, n));
    for (int k = i + 1; k < j; ++k)
        result = compose(compose(sigma(k, n), result), sigma_inverse(k, n));
    if (!result.is_pure()) fail(ErrorKind::InvariantViolation, "artin generator is not pure");
    if (!fixes_boundary(result)) fail(ErrorKind::InvariantViolation, "artin generator moves the boundary element");
    return result;
}

InducedEndomorphism::InducedEndomorphism(const WeldedAuto& phi)
    : rank_(phi.rank()), perm_(phi.permutation()), inverse_perm_(perm_.size()) {
    for (int i = 1; i <= rank_; ++i) inverse_perm_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i - 1)] - 1)] = i;
    memo_.emplace(Monomial(), ReducedPoly::one(rank_));
    for (int j = 1; j <= rank_; ++j) {
        const ReducedPoly& c = phi.conjugator(j);
        memo_.emplace(Monomial::letter(j), unit_inverse(c) * ReducedPoly::generator(rank_, phi.perm(j)) * c);
    }
}

const ReducedPoly& InducedEndomorphism::image(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Word w = m.word();
    const int last = w.back();
    w.pop_back();
    ReducedPoly value = image(Monomial::from_word(w)) * image(Monomial::letter(last));
    return memo_.emplace(m, std::move(value)).first->second;
}

ReducedPoly InducedEndomorphism::apply(const ReducedPoly& p) {
    if (p.rank() != rank_) fail(ErrorKind::RankMismatch, "endomorphism applied to a polynomial of another rank");
    ReducedPoly out(rank_);
    for (const auto& [m, c] : p.terms()) out += image(m) * c;
    return out;
}

ReducedPoly InducedEndomorphism::solve(const ReducedPoly& b) {
    if (b.rank() != rank_) fail(ErrorKind::RankMismatch, "endomorphism solve with a polynomial of another rank");
    ReducedPoly x(rank_);
    ReducedPoly rest = b;
    for (int pass = 0; !rest.is_zero(); ++pass) {
        if (pass > rank_) fail(ErrorKind::InvariantViolation, "back-substitution did not terminate");
        const int d = valuation(rest);
        const ReducedPoly layer = homogeneous_part(rest, d);
        for (const auto& [m, c] : layer.terms()) {
            Word w = m.word();
            for (int& letter : w) letter = inverse_perm_[static_cast<std::size_t>(letter - 1)];
            const Monomial pre = Monomial::from_word(w);
            x.add_term(pre, c);
            rest -= image(pre) * c;
        }
        if (valuation(rest) <= d) fail(ErrorKind::InvariantViolation, "induced endomorphism is not triangular");
    }
    return x;
}

WeldedAuto compose(const WeldedAuto& phi, const WeldedAuto& psi) {
    require_same_rank(phi, psi, "compose");
    const int n = phi.rank();
    InducedEndomorphism induced(phi);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<ReducedPoly> conj;
    conj.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int k = psi.perm(i);
        perm[static_cast<std::size_t>(i - 1)] = phi.perm(k);
        conj.push_back(phi.conjugator(k) * induced.apply(psi.conjugator(i)));
    }
    return WeldedAuto(std::move(perm), std::move(conj));
}

WeldedAuto inverse(const WeldedAuto& phi) {
    const int n = phi.rank();
    InducedEndomorphism induced(phi);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(phi.perm(i) - 1)] = i;
    std::vector<ReducedPoly> conj;
    conj.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        conj.push_back(induced.solve(unit_inverse(phi.conjugator(perm[static_cast<std::size_t>(j - 1)]))));
    WeldedAuto result(std::move(perm), std::move(conj));
    if (!compose(phi, result).is_identity()) fail(ErrorKind::InvariantViolation, "inverse does not compose to the identity");
    return result;
}

WeldedAuto commutator(const WeldedAuto& phi, const WeldedAuto& psi) {
    return compose(compose(phi, psi), compose(inverse(phi), inverse(psi)));
}

WeldedAuto power(const WeldedAuto& phi, long e) {
    const WeldedAuto base = e < 0 ? inverse(phi) : phi;
    WeldedAuto acc(phi.rank());
    for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = compose(acc, base);
    return acc;
}

WeldedAuto nested_commutator(const std::vector<WeldedAuto>& gs) {
    if (gs.empty()) fail(ErrorKind::InvalidInput, "nested_commutator: no arguments");
    WeldedAuto acc = gs.back();
    for (auto it = gs.rbegin() + 1; it != gs.rend(); ++it) acc = commutator(*it, acc);
    return acc;
}

RFElement act(const WeldedAuto& phi, const RFElement& g) {
    if (phi.rank() != g.rank()) fail(ErrorKind::RankMismatch, "act: ranks differ");
    const int n = phi.rank();
    std::vector<RFElement> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const RFElement w = RFElement::from_expansion(phi.conjugator(i));
        images.push_back(conj(RFElement::generator(n, phi.perm(i)), w));
    }
    RFElement out(n);
    for (const Letter& l : g.word()) {
        const RFElement& x = images[static_cast<std::size_t>(l.index - 1)];
        out = mul(out, l.sign > 0 ? x : inv(x));
    }
    return out;
}

bool eq(const WeldedAuto& phi, const WeldedAuto& psi) {
    require_same_rank(phi, psi, "eq");
    return phi == psi;
}

bool fixes_boundary(const WeldedAuto& phi) {
    const int n = phi.rank();
    GroupWord boundary;
    for (int i = 1; i <= n; ++i) boundary.push_back(Letter{i, 1});
    const ReducedPoly e = magnus_expand(boundary, n).expansion();
    InducedEndomorphism induced(phi);
    return induced.apply(e) == e;
}

int andreadakis_degree(const WeldedAuto& phi) {
    require_pure(phi, "andreadakis_degree");
    int d = kInfinity;
    for (const ReducedPoly& c : phi.conjugators()) d = std::min(d, valuation(augmentation_part(c)));
    return d;
}

Integer milnor(const WeldedAuto& phi, int strand, const Word& indices) {
    require_pure(phi, "milnor");
    if (strand < 1 || strand > phi.rank()) fail(ErrorKind::InvalidIndex, "strand out of range");
    for (int i : indices) {
        if (i < 1 || i > phi.rank()) fail(ErrorKind::InvalidIndex, "Milnor index out of range");
        if (i == strand) fail(ErrorKind::InvalidIndex, "Milnor index sequence contains its own strand");
    }
    if (has_repeated_letter(indices)) fail(ErrorKind::InvalidIndex, "Milnor index sequence has a repetition");
    return phi.conjugator(strand).coefficient(Monomial::from_word(indices));
}

std::optional<JohnsonImage> johnson(const WeldedAuto& phi) {
    const int d = andreadakis_degree(phi);
    if (d == kInfinity) return std::nullopt;
    std::vector<ReducedPoly> tangents;
    for (const ReducedPoly& c : phi.conjugators()) tangents.push_back(homogeneous_part(c, d));
    try {
        return JohnsonImage{d, TangentialDerivation::from_tangents(phi.rank(), tangents)};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotLie) throw;
        fail(ErrorKind::InvariantViolation, std::string("leading conjugator layer is not Lie: ") + e.what());
    }
}

LyndonCoords abelian_coordinates(const ReducedPoly& u, IndexSet alphabet, int target) {
    const int n = u.rank();
    if (((alphabet >> target) & 1U) == 0) fail(ErrorKind::InvalidInput, "target letter not in the alphabet");
    for (const auto& [m, c] : u.terms())
        if ((m.support() & ~alphabet) != 0) fail(ErrorKind::InvalidInput, "expansion uses letters outside the alphabet");
    const ReducedPoly one = ReducedPoly::one(n);
    if (project(u, bit(target)) != one)
        fail(ErrorKind::NotInClosure, "element is not in the normal closure of x" + std::to_string(target));

    LyndonCoords coords;
    ReducedPoly rest = u;
    for (int pass = 0; rest != one; ++pass) {
        if (pass > n) fail(ErrorKind::InvariantViolation, "abelian peeling did not terminate");
        const int d = valuation(rest - one);
        const LyndonCoords layer = to_lyndon_coordinates(homogeneous_part(rest, d));
        ReducedPoly factor = one;
        for (const auto& [w, e] : layer) {
            if (std::find(w.begin(), w.end(), target) == w.end())
                fail(ErrorKind::NotLie, "layer supported on a word without the target letter");
            coords[w] += e;
            factor = factor * unit_power(group_lyndon_expansion(w, n), e);
        }
        rest = unit_inverse(factor) * rest;
    }
    for (auto it = coords.begin(); it != coords.end();) it = it->second == 0 ? coords.erase(it) : std::next(it);
    return coords;
}

ReducedPoly from_abelian_coordinates(const LyndonCoords& coords, int rank) {
    ReducedPoly out = ReducedPoly::one(rank);
    for (const auto& [w, e] : coords) out = out * unit_power(group_lyndon_expansion(w, rank), e);
    return out;
}

WeldedAuto restrict_last(const WeldedAuto& phi) {
    const int m = phi.rank();
    if (m < 2) fail(ErrorKind::InvalidInput, "restrict_last needs rank >= 2");
    if (phi.perm(m) != m) fail(ErrorKind::NotPure, "restrict_last: last strand is permuted");
    std::vector<int> perm(phi.permutation().begin(), phi.permutation().end() - 1);
    std::vector<ReducedPoly> conj;
    for (int i = 1; i < m; ++i) conj.push_back(project(phi.conjugator(i), bit(m)).with_rank(m - 1));
    return WeldedAuto(std::move(perm), std::move(conj));
}

WeldedAuto embed(const WeldedAuto& phi) {
    const int m = phi.rank() + 1;
    std::vector<int> perm = phi.permutation();
    perm.push_back(m);
    std::vector<ReducedPoly> conj;
    for (const ReducedPoly& c : phi.conjugators()) conj.push_back(c.with_rank(m));
    conj.push_back(ReducedPoly::one(m));
    return WeldedAuto(std::move(perm), std::move(conj));
}

WeldedAuto conjugate_last(const ReducedPoly& v, int m) {
    return conjugate_strand(m, v.with_rank(m), m);
}

WeldedAuto conjugate_strand(int i, const ReducedPoly& u, int m) {
    WeldedAuto id(m);
    std::vector<ReducedPoly> conj = id.conjugators();
    conj[static_cast<std::size_t>(i - 1)] = u;
    return WeldedAuto(id.permutation(), std::move(conj));
}

NormalForm comb(const WeldedAuto& phi) {
    require_pure(phi, "comb");
    NormalForm nf;
    nf.n = phi.rank();
    WeldedAuto current = phi;
    for (int m = phi.rank(); m >= 2; --m) {
        const WeldedAuto lower = restrict_last(current);
        const WeldedAuto kernel_part = compose(current, inverse(embed(lower)));
        if (!restrict_last(kernel_part).is_identity())
            fail(ErrorKind::InvariantViolation, "comb: kernel part does not project to the identity");

        CombLevel level;
        level.m = m;
        level.residual = kernel_part.conjugator(m).with_rank(m - 1);
        const WeldedAuto abelian_part = compose(kernel_part, inverse(conjugate_last(level.residual, m)));
        if (abelian_part.conjugator(m) != ReducedPoly::one(m))
            fail(ErrorKind::InvariantViolation, "comb: abelian part moves the last generator");
        const IndexSet all = (IndexSet{1} << (m + 1)) - 2;
        for (int i = 1; i < m; ++i)
            level.coords.emplace_back(i, abelian_coordinates(abelian_part.conjugator(i), all & ~bit(i), m));
        nf.levels.push_back(std::move(level));
        current = lower;
    }
    return nf;
}

namespace {

void validate_level(const CombLevel& level) {
    const int m = level.m;
    if (level.residual.rank() != m - 1) fail(ErrorKind::InvalidInput, "residual has the wrong rank");
    if (level.residual.constant_term() != 1) fail(ErrorKind::InvalidInput, "residual must have constant term 1");
    int previous = 0;
    for (const auto& [i, coords] : level.coords) {
        if (i <= previous || i >= m) fail(ErrorKind::InvalidInput, "coordinate strands must ascend within 1..m-1");
        previous = i;
        for (const auto& [w, e] : coords) {
            const bool ok = !w.empty() && !has_repeated_letter(w) &&
                            std::all_of(w.begin(), w.end(), [&](int x) { return x >= 1 && x <= m && x != i; }) &&
                            std::find(w.begin(), w.end(), m) != w.end() && is_lyndon(w);
            if (!ok) fail(ErrorKind::InvalidInput, "bad coordinate word " + to_string(w) + " at level " + std::to_string(m));
        }
    }
}

} // namespace

WeldedAuto uncomb(const NormalForm& nf) {
    if (nf.n < 1) fail(ErrorKind::InvalidInput, "normal form rank must be positive");
    if (static_cast<int>(nf.levels.size()) != nf.n - 1) fail(ErrorKind::InvalidInput, "normal form needs levels n..2");
    WeldedAuto current(1);
    for (auto it = nf.levels.rbegin(); it != nf.levels.rend(); ++it) {
        const CombLevel& level = *it;
        const int m = current.rank() + 1;
        if (level.m != m) fail(ErrorKind::InvalidInput, "normal form levels out of order");
        validate_level(level);
        WeldedAuto abelian_part(m);
        for (const auto& [i, coords] : level.coords)
            abelian_part = compose(abelian_part, conjugate_strand(i, from_abelian_coordinates(coords, m), m));
        current = compose(compose(abelian_part, conjugate_last(level.residual, m)), embed(current));
    }
    return current;
}

} // namespace hwb

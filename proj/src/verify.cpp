#include "hwb/verify.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>

#include <boost/integer/common_factor.hpp>

#include "hwb/error.hpp"

namespace hwb {

namespace {

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Echelon basis over sparse integer rows: each stored row has a distinct
// leading coordinate and is primitive.
class Echelon {
public:
    /// Reduces v against the basis; stores it and returns true if it is new.
    bool insert(SparseVector v) {
        while (!v.empty()) {
            auto row = rows_.find(v.begin()->first);
            if (row == rows_.end()) break;
            eliminate(v, row->second);
        }
        if (v.empty()) return false;
        make_primitive(v);
        rows_.emplace(v.begin()->first, std::move(v));
        return true;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    static void eliminate(SparseVector& v, const SparseVector& row) {
        const Integer a = v.begin()->second;
        const Integer b = row.begin()->second;
        const Integer g = boost::integer::gcd(a, b);
        const Integer va = b / g;
        const Integer ra = a / g;
        if (va != 1)
            for (auto& [key, c] : v) c *= va;
        for (const auto& [key, c] : row) {
            auto it = v.find(key);
            if (it == v.end()) {
                v.emplace(key, -ra * c);
            } else {
                it->second -= ra * c;
                if (it->second == 0) v.erase(it);
            }
        }
        make_primitive(v);
    }

    static void make_primitive(SparseVector& v) {
        Integer g = 0;
        for (const auto& [key, c] : v) {
            g = boost::integer::gcd(g, abs_value(c));
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [key, c] : v) c /= g;
    }

    std::map<std::pair<int, Monomial>, SparseVector> rows_;
};

std::string degree_json(int d) { return degree_to_string(d); }

Json conjugators_json(const WeldedAuto& phi) {
    Json out = Json::array();
    for (const ReducedPoly& c : phi.conjugators()) out.push_back(to_string(c));
    return out;
}

Json witness(const std::string& label, const WeldedAuto& phi) {
    Json w;
    w["relation"] = label;
    if (phi.is_pure()) w["andreadakis_degree"] = degree_json(andreadakis_degree(phi));
    w["conjugators"] = conjugators_json(phi);
    return w;
}

Json witness(const std::string& label, const TangentialDerivation& d) {
    Json w;
    w["relation"] = label;
    Json tangents = Json::array();
    for (int i = 1; i <= d.rank(); ++i) tangents.push_back(to_string(d.tangent(i)));
    w["tangents"] = tangents;
    return w;
}

// Collects relations that should hold; keeps the first failure as witness.
class RelationLog {
public:
    void expect_identity(const std::string& label, const WeldedAuto& r) {
        ++checked_;
        if (!failure_ && !r.is_identity()) failure_ = witness(label, r);
    }
    void expect_zero(const std::string& label, const TangentialDerivation& d) {
        ++checked_;
        if (!failure_ && !d.is_zero()) failure_ = witness(label, d);
    }
    CheckReport report(std::string name, Json params) const {
        CheckReport r{std::move(name), std::move(params), !failure_, Json::object()};
        r.details["relations_checked"] = checked_;
        if (failure_) r.details["witness"] = *failure_;
        return r;
    }

private:
    std::size_t checked_ = 0;
    std::optional<Json> failure_;
};

std::string chi_label(int i, int j, int sign = 1) {
    return (sign > 0 ? "c" : "C") + std::to_string(i) + "." + std::to_string(j);
}

std::string artin_label(int i, int j, int sign = 1) {
    return (sign > 0 ? "a" : "A") + std::to_string(i) + "." + std::to_string(j);
}

struct Labelled {
    std::string label;
    WeldedAuto value;
};

std::string join_label(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    return a + " " + b;
}

/// All products of at most max_len letters, skipping a letter followed by
/// its inverse (letters[k ^ 1] is the inverse of letters[k] when signed).
std::vector<Labelled> words_upto(int rank, const std::vector<Labelled>& letters, int max_len, bool signed_letters) {
    std::vector<Labelled> all{{"", WeldedAuto(rank)}};
    std::vector<std::pair<Labelled, int>> frontier{{all.front(), -1}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<Labelled, int>> next;
        for (const auto& [w, last] : frontier) {
            for (int k = 0; k < static_cast<int>(letters.size()); ++k) {
                if (signed_letters && last >= 0 && (k ^ 1) == last) continue;
                const Labelled& x = letters[static_cast<std::size_t>(k)];
                next.push_back({{join_label(w.label, x.label), compose(w.value, x.value)}, k});
            }
        }
        for (const auto& entry : next) all.push_back(entry.first);
        frontier = std::move(next);
    }
    return all;
}

std::string bracket_label(const std::string& a, const std::string& w, const std::string& b) {
    return "[" + a + ", " + (w.empty() ? "1" : w) + ", " + b + "]";
}

// Calls f on every sequence of k distinct letters from 1..n.
void for_each_distinct_sequence(int n, int k, const std::function<void(const Word&)>& f) {
    if (k < 1 || k > n) return;
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::fill(chosen.begin(), chosen.begin() + k, true);
    do {
        Word w;
        for (int i = 0; i < n; ++i)
            if (chosen[static_cast<std::size_t>(i)]) w.push_back(i + 1);
        do {
            f(w);
        } while (std::next_permutation(w.begin(), w.end()));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
}

// Rank of the degree-k reduced free Lie ring on n letters, from the
// right-nested brackets of distinct letters.
std::size_t lie_rank(int n, int k) {
    Echelon e;
    for_each_distinct_sequence(n, k, [&](const Word& w) { e.insert(to_sparse(linear_bracket(w, n).value())); });
    return e.rank();
}

std::size_t exhaustive_span_rank(Family f, int n, int k, std::size_t& checked, std::optional<Json>& low_degree) {
    const std::vector<WeldedAuto> gens = generators(f, n);
    std::vector<WeldedAuto> layer = gens;
    for (int level = 2; level <= k; ++level) {
        std::vector<WeldedAuto> next;
        next.reserve(layer.size() * gens.size());
        for (const WeldedAuto& g : gens)
            for (const WeldedAuto& c : layer) next.push_back(commutator(g, c));
        layer = std::move(next);
    }
    Echelon e;
    for (const WeldedAuto& c : layer) {
        ++checked;
        if (!low_degree && andreadakis_degree(c) < k) low_degree = witness("commutator of degree below k", c);
        e.insert(to_sparse(degree_slice(c, k)));
    }
    return e.rank();
}

} // namespace

std::size_t integer_matrix_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) fail(ErrorKind::InvalidInput, "matrix is not rectangular");
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const auto& p = m[rank];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            auto& row = m[r];
            if (row[c] == 0) continue;
            const Integer g = boost::integer::gcd(row[c], p[c]);
            const Integer a = p[c] / g;
            const Integer b = row[c] / g;
            Integer content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                row[j] = a * row[j] - b * p[j];
                if (content != 1) content = boost::integer::gcd(content, abs_value(row[j]));
            }
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j) row[j] /= content;
        }
        ++rank;
    }
    return rank;
}

SparseVector to_sparse(const ReducedPoly& p) {
    SparseVector v;
    for (const auto& [m, c] : p.terms()) v.emplace(std::make_pair(0, m), c);
    return v;
}

SparseVector to_sparse(const TangentialDerivation& d) {
    SparseVector v;
    for (int i = 1; i <= d.rank(); ++i)
        for (const auto& [m, c] : d.tangent(i).terms()) v.emplace(std::make_pair(i, m), c);
    return v;
}

std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
    // Coordinates linked through a common vector fall into one block.
    std::map<std::pair<int, Monomial>, std::size_t> column;
    for (const SparseVector& v : vectors)
        for (const auto& entry : v) column.emplace(entry.first, column.size());
    std::vector<std::size_t> parent(column.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const SparseVector& v : vectors)
        for (const auto& entry : v) parent[root(column[entry.first])] = root(column[v.begin()->first]);

    std::map<std::size_t, std::vector<const SparseVector*>> blocks;
    for (const SparseVector& v : vectors)
        if (!v.empty()) blocks[root(column[v.begin()->first])].push_back(&v);
    std::size_t rank = 0;
    for (const auto& [r, members] : blocks) {
        std::map<std::size_t, std::size_t> local;
        for (const auto& [key, index] : column)
            if (root(index) == r) local.emplace(index, local.size());
        IntMatrix m(members.size(), std::vector<Integer>(local.size()));
        for (std::size_t row = 0; row < members.size(); ++row)
            for (const auto& [key, c] : *members[row]) m[row][local[column[key]]] = c;
        rank += integer_matrix_rank(std::move(m));
    }
    return rank;
}

Integer factorial(int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Integer expected_rank_rlie(int n, int k) { return k < 1 ? Integer(0) : factorial(k - 1) * binomial(n, k); }
Integer expected_rank_der_tau(int n, int k) { return n * expected_rank_rlie(n - 1, k); }
Integer expected_rank_hp(int n, int k) { return k < 1 ? Integer(0) : factorial(k - 1) * binomial(n, k + 1); }

Integer expected_hirsch_hpsigma(int n) {
    Integer sum = 0;
    for (int k = 1; k <= n - 1; ++k) sum += factorial(n) / (factorial(n - k - 1) * k);
    return sum;
}

Integer expected_hirsch_hp(int n) {
    Integer sum = 0;
    for (int k = 1; k <= n - 1; ++k) sum += expected_rank_hp(n, k);
    return sum;
}

TangentialDerivation degree_slice(const WeldedAuto& phi, int k) {
    std::vector<ReducedPoly> tangents;
    for (const ReducedPoly& c : phi.conjugators()) tangents.push_back(homogeneous_part(c, k));
    return TangentialDerivation::from_tangents(phi.rank(), tangents);
}

std::string to_string(Family f) { return f == Family::HPSigma ? "hPSigma" : "hP"; }

std::vector<WeldedAuto> generators(Family f, int n) {
    std::vector<WeldedAuto> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (f == Family::HPSigma && i != j) gens.push_back(chi(i, j, n));
            if (f == Family::HP && i < j) gens.push_back(artin(i, j, n));
        }
    return gens;
}

GradedSpan graded_span(Family f, int n) {
    static std::mutex mutex;
    static std::map<std::pair<Family, int>, GradedSpan> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({f, n}); it != cache.end()) return it->second;
    }
    GradedSpan span;
    span.basis.resize(static_cast<std::size_t>(n));
    span.rank.assign(static_cast<std::size_t>(n), 0);
    const std::vector<WeldedAuto> gens = generators(f, n);
    for (int k = 1; k < n; ++k) {
        Echelon e;
        auto offer = [&](const WeldedAuto& c) {
            if (andreadakis_degree(c) < k)
                fail(ErrorKind::InvariantViolation, "commutator of " + std::to_string(k) + " generators has lower degree");
            if (e.insert(to_sparse(degree_slice(c, k)))) span.basis[static_cast<std::size_t>(k)].push_back(c);
        };
        if (k == 1) {
            for (const WeldedAuto& g : gens) offer(g);
        } else {
            for (const WeldedAuto& g : gens)
                for (const WeldedAuto& b : span.basis[static_cast<std::size_t>(k - 1)]) offer(commutator(g, b));
        }
        span.rank[static_cast<std::size_t>(k)] = e.rank();
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(f, n), std::move(span)).first->second;
}

CheckReport check_mccool(int n) {
    RelationLog log;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const WeldedAuto cik = chi(i, k, n), cjk = chi(j, k, n), cij = chi(i, j, n);
                log.expect_identity("[" + chi_label(i, k) + " " + chi_label(j, k) + ", " + chi_label(i, j) + "]",
                                    commutator(compose(cik, cjk), cij));
                log.expect_identity("[" + chi_label(i, k) + ", " + chi_label(j, k) + "]", commutator(cik, cjk));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i == j || k == l || i == k || i == l || j == k || j == l) continue;
                    log.expect_identity("[" + chi_label(i, j) + ", " + chi_label(k, l) + "]",
                                        commutator(chi(i, j, n), chi(k, l, n)));
                }
    return log.report("mccool", {{"n", n}});
}

CheckReport check_mccool_mutation(int n) {
    const WeldedAuto r = commutator(chi(1, 2, n), chi(1, 3, n));
    CheckReport report{"mccool/mutation", {{"n", n}}, !r.is_identity(), Json::object()};
    report.details["mutated_relation"] = "[c1.2, c1.3] = 1";
    report.details["witness"] = witness("[c1.2, c1.3]", r);
    return report;
}

CheckReport check_homotopy_relations(int n, int max_w_len) {
    RelationLog log;
    for (int m = 2; m <= n; ++m) {
        std::vector<Labelled> letters;
        for (int k = 1; k < m; ++k) letters.push_back({chi_label(m, k), chi(m, k, n)});
        const std::vector<Labelled> words = words_upto(n, letters, max_w_len, false);
        for (int i = 1; i < m; ++i) {
            const WeldedAuto cmi = chi(m, i, n), cim = chi(i, m, n);
            for (const Labelled& w : words)
                log.expect_identity("R1 " + bracket_label(chi_label(m, i), w.label, chi_label(m, i)),
                                    commutator(cmi, commutator(w.value, cmi)));
            for (int j = 1; j < m; ++j) {
                const WeldedAuto cjm = chi(j, m, n);
                for (const Labelled& w : words)
                    log.expect_identity("R2 " + bracket_label(chi_label(i, m), w.label, chi_label(j, m)),
                                        commutator(cim, commutator(w.value, cjm)));
            }
            std::vector<Labelled> allowed;
            for (const Labelled& l : letters)
                if (l.label != chi_label(m, i)) allowed.push_back(l);
            for (const Labelled& w : words_upto(n, allowed, max_w_len, false))
                log.expect_identity("R3 " + bracket_label(chi_label(i, m), w.label, chi_label(m, i)),
                                    commutator(cim, commutator(w.value, cmi)));
        }
    }
    return log.report("homotopy", {{"n", n}, {"max_w_len", max_w_len}});
}

CheckReport check_homotopy_mutation(int n, int max_w_len) {
    // R3 with its last entry c m.i replaced by c m.k, k != i.
    CheckReport report{"homotopy/mutation", {{"n", n}, {"max_w_len", max_w_len}}, false, Json::object()};
    report.details["mutated_relation"] = "[c i.m, w, c m.k] = 1 with k != i";
    for (int m = 3; m <= n && !report.passed; ++m) {
        std::vector<Labelled> letters;
        for (int k = 1; k < m; ++k) letters.push_back({chi_label(m, k), chi(m, k, n)});
        const std::vector<Labelled> words = words_upto(n, letters, max_w_len, false);
        for (int i = 1; i < m && !report.passed; ++i)
            for (int k = 1; k < m && !report.passed; ++k) {
                if (k == i) continue;
                for (const Labelled& w : words) {
                    const WeldedAuto r = commutator(chi(i, m, n), commutator(w.value, chi(m, k, n)));
                    if (!r.is_identity()) {
                        report.passed = true;
                        report.details["witness"] = witness(bracket_label(chi_label(i, m), w.label, chi_label(m, k)), r);
                        break;
                    }
                }
            }
    }
    return report;
}

CheckReport check_goldsmith(int n, int max_w_len) {
    RelationLog log;
    for (int k = 2; k <= n; ++k) {
        std::vector<Labelled> letters;
        for (int i = 1; i < k; ++i) {
            const WeldedAuto a = artin(i, k, n);
            letters.push_back({artin_label(i, k), a});
            letters.push_back({artin_label(i, k, -1), inverse(a)});
        }
        const std::vector<Labelled> words = words_upto(n, letters, max_w_len, true);
        for (int j = 1; j < k; ++j) {
            const WeldedAuto a = letters[static_cast<std::size_t>(2 * (j - 1))].value;
            for (const Labelled& w : words) {
                const WeldedAuto conjugate = compose(inverse(w.value), compose(a, w.value));
                log.expect_identity("[" + artin_label(j, k) + ", " + artin_label(j, k) + "^(" +
                                        (w.label.empty() ? "1" : w.label) + ")]",
                                    commutator(a, conjugate));
            }
        }
    }
    return log.report("goldsmith", {{"n", n}, {"max_w_len", max_w_len}});
}

CheckReport check_goldsmith_mutation(int n) {
    const WeldedAuto r = commutator(artin(1, 3, n), artin(2, 3, n));
    CheckReport report{"goldsmith/mutation", {{"n", n}}, !r.is_identity(), Json::object()};
    report.details["mutated_relation"] = "[a1.3, a2.3] = 1";
    report.details["witness"] = witness("[a1.3, a2.3]", r);
    return report;
}

CheckReport rank_rlie(int n, int k) {
    CheckReport report{"rank_rlie", {{"n", n}, {"k", k}}, true, Json::object()};
    std::vector<SparseVector> brackets;
    bool spanning = true;
    for_each_distinct_sequence(n, k, [&](const Word& w) {
        const LieElement b = linear_bracket(w, n);
        brackets.push_back(to_sparse(b.value()));
        if (spanning && LieElement::from_coordinates(to_lyndon_coordinates(b.value()), n) != b) {
            spanning = false;
            report.details["witness"] = "bracket " + to_string(w) + " is not recovered from its Lyndon coordinates";
        }
    });
    const std::size_t computed = sparse_rank(brackets);
    std::vector<SparseVector> lyndon;
    for (const Word& w : enumerate_lyndon(n, k, true)) lyndon.push_back(to_sparse(lyndon_expansion(w, n).value()));
    const std::size_t lyndon_rank = sparse_rank(lyndon);
    const Integer expected = expected_rank_rlie(n, k);
    report.details["brackets"] = brackets.size();
    report.details["computed"] = computed;
    report.details["expected"] = expected.str();
    report.details["lyndon_words"] = lyndon.size();
    report.details["lyndon_rank"] = lyndon_rank;
    report.passed = spanning && Integer(computed) == expected && Integer(lyndon.size()) == expected &&
                    lyndon_rank == lyndon.size();
    return report;
}

CheckReport rank_der_tau(int n, int k) {
    CheckReport report{"rank_der_tau", {{"n", n}, {"k", k}}, true, Json::object()};
    const std::size_t from_lie = static_cast<std::size_t>(n) * lie_rank(n - 1, k);
    std::size_t from_johnson = 0;
    if (k < n) {
        if (n <= 4) {
            std::size_t checked = 0;
            std::optional<Json> low;
            from_johnson = exhaustive_span_rank(Family::HPSigma, n, k, checked, low);
            report.details["method"] = "exhaustive";
            report.details["commutators"] = checked;
            if (low) {
                report.passed = false;
                report.details["witness"] = *low;
            }
        } else {
            from_johnson = graded_span(Family::HPSigma, n).rank[static_cast<std::size_t>(k)];
            report.details["method"] = "graded span";
        }
    }
    const Integer expected = expected_rank_der_tau(n, k);
    report.details["computed_from_lie_ring"] = from_lie;
    report.details["computed_from_johnson"] = from_johnson;
    report.details["expected"] = expected.str();
    report.passed = report.passed && Integer(from_lie) == expected && Integer(from_johnson) == expected;
    return report;
}

CheckReport hirsch(int n, Family f) {
    CheckReport report{"hirsch", {{"n", n}, {"group", to_string(f)}}, true, Json::object()};
    const GradedSpan& span = graded_span(f, n);
    std::size_t graded = 0;
    Json ranks = Json::array();
    for (int k = 1; k < n; ++k) {
        graded += span.rank[static_cast<std::size_t>(k)];
        ranks.push_back(span.rank[static_cast<std::size_t>(k)]);
    }
    // Second count from the reduced free Lie ring: n copies of RL_{n-1} for
    // hPSigma, RL_1 + ... + RL_{n-1} for hP.
    std::size_t from_lie = 0;
    for (int k = 1; k < n; ++k) {
        if (f == Family::HPSigma) {
            from_lie += static_cast<std::size_t>(n) * lie_rank(n - 1, k);
        } else {
            for (int m = 1; m < n; ++m) from_lie += lie_rank(m, k);
        }
    }
    const Integer formula = f == Family::HPSigma ? expected_hirsch_hpsigma(n) : expected_hirsch_hp(n);
    report.details["graded_ranks"] = ranks;
    report.details["graded_sum"] = graded;
    report.details["lie_ring_sum"] = from_lie;
    report.details["formula"] = formula.str();
    report.passed = Integer(graded) == formula && Integer(from_lie) == formula;
    return report;
}

CheckReport center_check(int n) {
    CheckReport report{"center", {{"n", n}}, true, Json::object()};
    Json words = Json::array();
    std::vector<SparseVector> vectors;
    for (const Word& w : enumerate_lyndon(n, n, true)) {
        const RFElement g = group_lyndon_monomial(w, n);
        words.push_back(to_string(g.word()));
        if (!is_central(g)) {
            report.passed = false;
            report.details["witness"] = "commutator on " + to_string(w) + " is not central";
        }
        vectors.push_back(to_sparse(augmentation_part(g.expansion())));
    }
    const std::size_t rank = sparse_rank(vectors);
    const Integer expected = factorial(n - 1);
    report.details["central_words"] = words;
    report.details["rank"] = rank;
    report.details["expected"] = expected.str();
    report.passed = report.passed && Integer(rank) == expected && Integer(vectors.size()) == expected;
    return report;
}

CheckReport graded_andreadakis_check(int n, int k, Family f) {
    CheckReport report{"andreadakis", {{"n", n}, {"k", k}, {"group", to_string(f)}}, true, Json::object()};
    std::size_t checked = 0;
    std::optional<Json> low;
    const std::size_t span = exhaustive_span_rank(f, n, k, checked, low);
    std::size_t from_lie = 0;
    if (f == Family::HPSigma) {
        from_lie = static_cast<std::size_t>(n) * lie_rank(n - 1, k);
    } else {
        for (int m = 1; m < n; ++m) from_lie += lie_rank(m, k);
    }
    const Integer formula = f == Family::HPSigma ? expected_rank_der_tau(n, k) : expected_rank_hp(n, k);
    report.details["commutators"] = checked;
    report.details["span_rank"] = span;
    report.details["lie_ring_rank"] = from_lie;
    report.details["formula"] = formula.str();
    if (low) report.details["witness"] = *low;
    report.passed = !low && Integer(span) == formula && Integer(from_lie) == formula;
    return report;
}

namespace {

std::string d_label(int i, int j) { return "d" + std::to_string(i) + "." + std::to_string(j); }

// Right-nested brackets of at most max_len letters (repetition allowed).
std::vector<std::pair<std::string, TangentialDerivation>> lie_monomials(
    const std::vector<std::pair<std::string, TangentialDerivation>>& letters, int max_len) {
    std::vector<std::pair<std::string, TangentialDerivation>> all = letters, layer = letters;
    for (int len = 2; len <= max_len; ++len) {
        std::vector<std::pair<std::string, TangentialDerivation>> next;
        for (const auto& [a, da] : letters)
            for (const auto& [t, dt] : layer) next.emplace_back("[" + a + ", " + t + "]", tangential_bracket(da, dt));
        for (const auto& entry : next) all.push_back(entry);
        layer = std::move(next);
    }
    return all;
}

} // namespace

CheckReport check_lie_presentations(int n) {
    RelationLog log;
    auto d = [n](int i, int j) { return TangentialDerivation::elementary(i, j, n); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                log.expect_zero("[" + d_label(i, k) + " + " + d_label(j, k) + ", " + d_label(i, j) + "]",
                                tangential_bracket(d(i, k) + d(j, k), d(i, j)));
                log.expect_zero("[" + d_label(i, k) + ", " + d_label(j, k) + "]", tangential_bracket(d(i, k), d(j, k)));
                for (int l = 1; l <= n; ++l)
                    if (l != i && l != j && l != k)
                        log.expect_zero("[" + d_label(i, j) + ", " + d_label(k, l) + "]",
                                        tangential_bracket(d(i, j), d(k, l)));
            }
    for (int m = 2; m <= n; ++m) {
        std::vector<std::pair<std::string, TangentialDerivation>> letters;
        for (int k = 1; k < m; ++k) letters.emplace_back(d_label(m, k), d(m, k));
        const auto monomials = lie_monomials(letters, m);
        for (int i = 1; i < m; ++i) {
            for (const auto& [t, dt] : monomials) {
                log.expect_zero("[" + d_label(m, i) + ", [" + d_label(m, i) + ", " + t + "]]",
                                tangential_bracket(d(m, i), tangential_bracket(d(m, i), dt)));
                for (int j = 1; j < m; ++j)
                    log.expect_zero("[" + d_label(i, m) + ", [" + d_label(j, m) + ", " + t + "]]",
                                    tangential_bracket(d(i, m), tangential_bracket(d(j, m), dt)));
            }
            std::vector<std::pair<std::string, TangentialDerivation>> allowed;
            for (const auto& l : letters)
                if (l.first != d_label(m, i)) allowed.push_back(l);
            if (allowed.empty()) continue;
            for (const auto& [t, dt] : lie_monomials(allowed, m))
                log.expect_zero("[" + d_label(i, m) + ", [" + d_label(m, i) + ", " + t + "]]",
                                tangential_bracket(d(i, m), tangential_bracket(d(m, i), dt)));
        }
    }

    // Infinitesimal braids: t_ij is the Johnson image of artin(i,j).
    std::map<std::pair<int, int>, TangentialDerivation> t;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto image = johnson(artin(i, j, n));
            if (!image || image->degree != 1) fail(ErrorKind::InvariantViolation, "artin generator is not of degree 1");
            t[{i, j}] = t[{j, i}] = image->derivation;
        }
    auto t_label = [](int i, int j) { return "t" + std::to_string(i) + "." + std::to_string(j); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                log.expect_zero("[" + t_label(i, j) + ", " + t_label(i, k) + " + " + t_label(k, j) + "]",
                                tangential_bracket(t[{i, j}], t[{i, k}] + t[{k, j}]));
                for (int l = 1; l <= n; ++l)
                    if (l != i && l != j && l != k)
                        log.expect_zero("[" + t_label(i, j) + ", " + t_label(k, l) + "]",
                                        tangential_bracket(t[{i, j}], t[{k, l}]));
            }
    for (int m = 2; m <= n; ++m) {
        std::vector<std::pair<std::string, TangentialDerivation>> letters;
        for (int i = 1; i < m; ++i) letters.emplace_back(t_label(i, m), t[{i, m}]);
        // Right-nested monomials with a repeated letter, tracked by index tuple.
        std::vector<std::pair<Word, TangentialDerivation>> layer;
        for (int i = 1; i < m; ++i) layer.emplace_back(Word{i}, t[{i, m}]);
        for (int len = 2; len <= m; ++len) {
            std::vector<std::pair<Word, TangentialDerivation>> next;
            for (int i = 1; i < m; ++i)
                for (const auto& [w, dw] : layer) {
                    Word v{i};
                    v.insert(v.end(), w.begin(), w.end());
                    TangentialDerivation b = tangential_bracket(t[{i, m}], dw);
                    if (has_repeated_letter(v)) {
                        std::string label;
                        for (int x : v) label += (label.empty() ? "" : " ") + t_label(x, m);
                        log.expect_zero("repeated monomial (" + label + ")", b);
                    }
                    next.emplace_back(std::move(v), std::move(b));
                }
            layer = std::move(next);
        }
    }
    return log.report("lie_presentations", {{"n", n}});
}

CheckReport check_lie_mutation(int n) {
    const TangentialDerivation b =
        tangential_bracket(TangentialDerivation::elementary(1, 2, n), TangentialDerivation::elementary(1, 3, n));
    CheckReport report{"lie_presentations/mutation", {{"n", n}}, !b.is_zero(), Json::object()};
    report.details["mutated_relation"] = "[d1.2, d1.3] = 0";
    report.details["witness"] = witness("[d1.2, d1.3]", b);
    return report;
}

CheckReport check_hpsigma2() {
    CheckReport report{"hpsigma2", Json::object(), true, Json::object()};
    const WeldedAuto two = commutator(chi(1, 2, 2), chi(2, 1, 2));
    const std::size_t rank = sparse_rank({to_sparse(degree_slice(chi(1, 2, 2), 1)), to_sparse(degree_slice(chi(2, 1, 2), 1))});
    // The rank-2 commutator stays trivial once embedded; a commutator with a
    // third strand does not.
    const WeldedAuto embedded = commutator(chi(1, 2, 3), chi(2, 1, 3));
    const WeldedAuto three = commutator(chi(1, 2, 3), chi(1, 3, 3));
    const auto image = johnson(three);
    report.details["commutator_c1.2_c2.1_n2_identity"] = two.is_identity();
    report.details["generator_rank"] = rank;
    report.details["commutator_c1.2_c2.1_n3_identity"] = embedded.is_identity();
    report.details["commutator_c1.2_c1.3_n3"] = witness("[c1.2, c1.3]", three);
    if (image) report.details["johnson_c1.2_c1.3"] = witness("johnson [c1.2, c1.3]", image->derivation);
    report.passed = two.is_identity() && rank == 2 && embedded.is_identity() && image && image->degree == 2 &&
                    !image->derivation.is_zero();
    return report;
}

CheckReport check_comb_roundtrip(int count, int max_len, int max_n, std::uint64_t seed) {
    CheckReport report{"comb", {{"count", count}, {"max_len", max_len}, {"max_n", max_n}, {"seed", seed}}, true, Json::object()};
    std::mt19937_64 rng(seed);
    std::size_t equal_pairs = 0, unequal_pairs = 0;
    auto fail_with = [&](int trial, const std::string& what, const std::string& word) {
        if (!report.passed) return;
        report.passed = false;
        report.details["witness"] = {{"trial", trial}, {"problem", what}, {"word", word}};
    };
    for (int trial = 0; trial < count; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, std::max(2, max_n))(rng);
        const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
        std::vector<Labelled> letters;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                letters.push_back({chi_label(i, j), chi(i, j, n)});
                letters.push_back({chi_label(i, j, -1), inverse(chi(i, j, n))});
                if (i < j) {
                    letters.push_back({artin_label(i, j), artin(i, j, n)});
                    letters.push_back({artin_label(i, j, -1), inverse(artin(i, j, n))});
                }
            }
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        Labelled phi{"", WeldedAuto(n)};
        for (int s = 0; s < len; ++s) {
            const Labelled& x = letters[pick(rng)];
            phi = {join_label(phi.label, x.label), compose(phi.value, x.value)};
        }
        const NormalForm nf = comb(phi.value);
        if (uncomb(nf) != phi.value) fail_with(trial, "uncomb(comb(phi)) != phi", phi.label);

        // Same element through a different word: append a relator.
        const WeldedAuto relator = n >= 3 ? commutator(compose(chi(1, 3, n), chi(2, 3, n)), chi(1, 2, n))
                                          : commutator(chi(1, 2, n), chi(2, 1, n));
        const WeldedAuto same = compose(phi.value, relator);
        const WeldedAuto other = compose(phi.value, letters[pick(rng)].value);
        for (const WeldedAuto& psi : {same, other}) {
            const bool by_comb = comb(psi) == nf;
            const bool by_conjugators = psi == phi.value;
            (by_conjugators ? equal_pairs : unequal_pairs) += 1;
            if (by_comb != by_conjugators) fail_with(trial, "comb equality disagrees with conjugator equality", phi.label);
        }
    }
    report.details["equal_pairs"] = equal_pairs;
    report.details["unequal_pairs"] = unequal_pairs;
    return report;
}

std::vector<std::string> suite_names() {
    return {"rlie", "der_tau", "hirsch", "center", "andreadakis", "mccool", "homotopy",
            "goldsmith", "lie", "hpsigma2", "comb"};
}

std::vector<CheckReport> run_suite(const std::string& name, int max_n, std::uint64_t seed) {
    if (max_n < 1) fail(ErrorKind::InvalidInput, "max-n must be positive");
    const auto names = suite_names();
    if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
        fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
    if (name == "all") {
        std::vector<CheckReport> all;
        for (const std::string& s : names)
            for (CheckReport& r : run_suite(s, max_n, seed)) all.push_back(std::move(r));
        return all;
    }
    std::vector<CheckReport> out;
    const int small = std::min(max_n, 4);
    if (name == "rlie") {
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k) out.push_back(rank_rlie(n, k));
    } else if (name == "der_tau") {
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k < n; ++k) out.push_back(rank_der_tau(n, k));
    } else if (name == "hirsch") {
        for (int n = 2; n <= max_n; ++n) out.push_back(hirsch(n, Family::HPSigma));
        for (int n = 2; n <= max_n; ++n) out.push_back(hirsch(n, Family::HP));
    } else if (name == "center") {
        for (int n = 2; n <= small; ++n) out.push_back(center_check(n));
    } else if (name == "andreadakis") {
        for (Family f : {Family::HPSigma, Family::HP})
            for (int n = 2; n <= small; ++n)
                for (int k = 1; k < n; ++k) out.push_back(graded_andreadakis_check(n, k, f));
    } else if (name == "mccool") {
        for (int n = 3; n <= max_n; ++n) out.push_back(check_mccool(n));
        if (max_n >= 3) out.push_back(check_mccool_mutation(3));
    } else if (name == "homotopy") {
        for (int n = 3; n <= max_n; ++n) out.push_back(check_homotopy_relations(n, 3));
        if (max_n >= 3) out.push_back(check_homotopy_mutation(4, 3));
    } else if (name == "goldsmith") {
        for (int n = 3; n <= max_n; ++n) out.push_back(check_goldsmith(n, 3));
        if (max_n >= 3) out.push_back(check_goldsmith_mutation(3));
    } else if (name == "lie") {
        for (int n = 3; n <= small; ++n) out.push_back(check_lie_presentations(n));
        if (max_n >= 3) out.push_back(check_lie_mutation(3));
    } else if (name == "hpsigma2") {
        out.push_back(check_hpsigma2());
    } else if (name == "comb") {
        out.push_back(check_comb_roundtrip(200, 20, std::max(2, std::min(max_n, 5)), seed));
    }
    return out;
}

} // namespace hwb

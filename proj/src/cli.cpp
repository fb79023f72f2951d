#include "hwb/cli.hpp"

#include <algorithm>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "hwb/error.hpp"
#include "hwb/json_io.hpp"
#include "hwb/verify.hpp"

namespace hwb {

namespace {

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

int parse_index(const std::string& digits, int n, const std::string& token) {
    if (digits.size() > 6) fail(ErrorKind::InvalidInput, "index out of range in token '" + token + "'");
    const int i = std::stoi(digits);
    if (i < 1 || i > n) fail(ErrorKind::InvalidInput, "index out of range in token '" + token + "'");
    return i;
}

void require_rank(int n) {
    if (n < 1 || n > Monomial::kMaxRank)
        fail(ErrorKind::InvalidInput, "--n must be between 1 and " + std::to_string(Monomial::kMaxRank));
}

bool is_group_token(const std::string& t) { return !t.empty() && (t[0] == 'x' || t[0] == 'X'); }

WeldedAuto token_auto(const std::string& t, int n) {
    static const std::regex pair_re("([cCaA])([0-9]+)\\.([0-9]+)");
    static const std::regex single_re("([sSr])([0-9]+)");
    std::smatch m;
    if (std::regex_match(t, m, pair_re)) {
        const int i = parse_index(m[2], n, t), j = parse_index(m[3], n, t);
        const char kind = m[1].str()[0];
        const WeldedAuto g = (kind == 'c' || kind == 'C') ? chi(i, j, n) : artin(i, j, n);
        return (kind == 'C' || kind == 'A') ? inverse(g) : g;
    }
    if (std::regex_match(t, m, single_re)) {
        const int i = parse_index(m[2], n, t);
        switch (m[1].str()[0]) {
            case 's': return sigma(i, n);
            case 'S': return sigma_inverse(i, n);
            default: return rho(i, n);
        }
    }
    fail(ErrorKind::InvalidInput, "unrecognized automorphism token '" + t + "'");
}

std::string degree_text(int d) { return degree_to_string(d); }

std::string report_line(const CheckReport& r) {
    return std::string(r.passed ? "PASS " : "FAIL ") + r.name + " " + r.params.dump() + " " + r.details.dump();
}

std::string normal_form_text(const NormalForm& nf) {
    std::ostringstream s;
    for (const CombLevel& level : nf.levels) {
        s << "level " << level.m << ": residual " << to_string(level.residual) << "\n";
        for (const auto& [i, coords] : level.coords) {
            s << "  u" << i << ":";
            if (coords.empty()) s << " 0";
            for (const auto& [w, e] : coords) s << " (" << to_string(w) << ")^" << e;
            s << "\n";
        }
    }
    return s.str();
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::InvariantViolation ? 3 : 2; }

} // namespace

GroupWord parse_group_word(const std::string& text, int n) {
    require_rank(n);
    static const std::regex re("([xX])([0-9]+)");
    GroupWord w;
    for (const std::string& t : tokens(text)) {
        std::smatch m;
        if (!std::regex_match(t, m, re)) fail(ErrorKind::InvalidInput, "unrecognized group token '" + t + "'");
        w.push_back(Letter{parse_index(m[2], n, t), m[1] == "x" ? 1 : -1});
    }
    return w;
}

WeldedAuto parse_auto_word(const std::string& text, int n) {
    require_rank(n);
    WeldedAuto acc(n);
    for (const std::string& t : tokens(text)) acc = compose(acc, token_auto(t, n));
    return acc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
    std::ostringstream buffer;
    int status = 0;

    CLI::App app{"Welded braids up to homotopy: expansions, invariants, normal forms and checks", "hwb"};
    app.require_subcommand(1);
    int n = 0;
    bool json = false;
    std::string word1, word2;

    auto* expand = app.add_subcommand("expand", "Magnus expansion of a reduced free group word");
    expand->add_option("--n", n, "rank")->required();
    expand->add_option("word", word1, "group word, e.g. \"x1 x2 X1 X2\"")->required();
    expand->add_flag("--json", json, "JSON output (default)");

    auto* eqc = app.add_subcommand("eq", "equality of two reduced free group words");
    eqc->add_option("--n", n, "rank")->required();
    eqc->add_option("w1", word1)->required();
    eqc->add_option("w2", word2)->required();
    eqc->add_flag("--json", json);

    auto* autoeq = app.add_subcommand("auto-eq", "equality of two automorphism words");
    autoeq->add_option("--n", n, "rank")->required();
    autoeq->add_option("u1", word1)->required();
    autoeq->add_option("u2", word2)->required();
    autoeq->add_flag("--json", json);

    auto* degree = app.add_subcommand("degree", "lower central series degree of a group word or Andreadakis degree of an automorphism word");
    degree->add_option("--n", n, "rank")->required();
    degree->add_option("word", word1)->required();
    degree->add_flag("--json", json);

    int strand = 0;
    std::string index_list;
    auto* milnorc = app.add_subcommand("milnor", "Milnor invariant of a pure automorphism word");
    milnorc->add_option("--n", n, "rank")->required();
    milnorc->add_option("--strand", strand)->required();
    milnorc->add_option("--index", index_list, "comma-separated indices")->required();
    milnorc->add_option("word", word1)->required();
    milnorc->add_flag("--json", json);

    auto* combc = app.add_subcommand("comb", "combing normal form of a pure automorphism word");
    combc->add_option("--n", n, "rank")->required();
    combc->add_option("word", word1)->required();
    combc->add_flag("--json", json);

    std::vector<int> enumerate;
    std::string factorize;
    bool square_free = false;
    auto* lyndon = app.add_subcommand("lyndon", "Lyndon word enumeration and factorization");
    auto* enum_opt = lyndon->add_option("--enumerate", enumerate, "N K")->expected(2);
    auto* fact_opt = lyndon->add_option("--factorize", factorize, "i1,i2,...");
    enum_opt->excludes(fact_opt);
    lyndon->add_flag("--square-free", square_free);
    lyndon->add_flag("--json", json);

    int max_n = 4;
    auto* ranks = app.add_subcommand("ranks", "rank and Hirsch tables, computed against closed formulas");
    ranks->add_option("--max-n", max_n)->check(CLI::Range(1, 6));
    ranks->add_flag("--json", json);

    std::string suite = "all";
    std::uint64_t seed = 42;
    int verify_max_n = 4;
    auto* verifyc = app.add_subcommand("verify", "run verification suites");
    verifyc->add_option("--suite", suite, "suite name or 'all'");
    verifyc->add_option("--max-n", verify_max_n)->check(CLI::Range(1, 6));
    verifyc->add_option("--seed", seed);
    verifyc->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (expand->parsed()) {
            buffer << to_json(magnus_expand(parse_group_word(word1, n), n).expansion()).dump() << "\n";
        } else if (eqc->parsed()) {
            const bool same = eq(magnus_expand(parse_group_word(word1, n), n), magnus_expand(parse_group_word(word2, n), n));
            buffer << (json ? Json{{"equal", same}}.dump() : std::string(same ? "true" : "false")) << "\n";
            status = same ? 0 : 1;
        } else if (autoeq->parsed()) {
            const bool same = eq(parse_auto_word(word1, n), parse_auto_word(word2, n));
            buffer << (json ? Json{{"equal", same}}.dump() : std::string(same ? "true" : "false")) << "\n";
            status = same ? 0 : 1;
        } else if (degree->parsed()) {
            const auto ts = tokens(word1);
            const bool group = !ts.empty() && std::all_of(ts.begin(), ts.end(), is_group_token);
            const int d = group ? lcs_degree(magnus_expand(parse_group_word(word1, n), n))
                                : andreadakis_degree(parse_auto_word(word1, n));
            if (json) {
                Json j;
                j["degree"] = d == kInfinity ? Json("infinity") : Json(d);
                buffer << j.dump() << "\n";
            } else {
                buffer << degree_text(d) << "\n";
            }
        } else if (milnorc->parsed()) {
            const Integer value = milnor(parse_auto_word(word1, n), strand, parse_word(index_list));
            buffer << (json ? Json{{"milnor", integer_to_json(value)}}.dump() : value.str()) << "\n";
        } else if (combc->parsed()) {
            const NormalForm nf = comb(parse_auto_word(word1, n));
            buffer << (json ? to_json(nf).dump() + "\n" : normal_form_text(nf));
        } else if (lyndon->parsed()) {
            std::vector<Word> words;
            if (enum_opt->count() > 0) {
                if (enumerate[0] < 1 || enumerate[0] > Monomial::kMaxRank || enumerate[1] < 1 || enumerate[1] > 12)
                    fail(ErrorKind::InvalidInput, "--enumerate needs 1 <= N <= 15 and 1 <= K <= 12");
                words = enumerate_lyndon(enumerate[0], enumerate[1], square_free);
            } else if (fact_opt->count() > 0) {
                const Word w = parse_word(factorize);
                if (w.empty()) fail(ErrorKind::InvalidInput, "--factorize needs a nonempty word");
                words = lyndon_factorization(w);
            } else {
                fail(ErrorKind::InvalidInput, "lyndon needs --enumerate N K or --factorize i1,i2,...");
            }
            if (json) {
                Json j = Json::array();
                for (const Word& w : words) j.push_back(to_string(w));
                buffer << j.dump() << "\n";
            } else {
                for (const Word& w : words) buffer << to_string(w) << "\n";
            }
        } else if (ranks->parsed()) {
            std::vector<CheckReport> reports;
            for (int a = 1; a <= max_n; ++a)
                for (int k = 1; k <= a; ++k) reports.push_back(rank_rlie(a, k));
            for (int a = 2; a <= std::min(max_n, 5); ++a)
                for (int k = 1; k < a; ++k) reports.push_back(rank_der_tau(a, k));
            for (Family f : {Family::HPSigma, Family::HP})
                for (int a = 2; a <= std::min(max_n, 5); ++a) reports.push_back(hirsch(a, f));
            if (json) {
                Json j = Json::array();
                for (const CheckReport& r : reports) j.push_back(to_json(r));
                buffer << j.dump() << "\n";
            } else {
                for (const CheckReport& r : reports) buffer << report_line(r) << "\n";
            }
            for (const CheckReport& r : reports)
                if (!r.passed) status = 1;
        } else if (verifyc->parsed()) {
            const std::vector<CheckReport> reports = run_suite(suite, verify_max_n, seed);
            if (json) {
                Json j = Json::array();
                for (const CheckReport& r : reports) j.push_back(to_json(r));
                buffer << j.dump() << "\n";
            } else {
                for (const CheckReport& r : reports) buffer << report_line(r) << "\n";
            }
            for (const CheckReport& r : reports)
                if (!r.passed) status = 1;
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (json_mode) {
            err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const Error& e) {
        if (json_mode) {
            err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        }
        return exit_code(e.kind());
    }
    out << buffer.str();
    return status;
}

} // namespace hwb

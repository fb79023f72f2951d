#include "hwb/json_io.hpp"

#include <limits>

#include "hwb/error.hpp"

namespace hwb {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(ErrorKind::InvalidInput, std::string("missing field '") + name + "'");
    return j.at(name);
}

int small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

Json integer_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return c.convert_to<std::int64_t>();
    return c.str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail(ErrorKind::InvalidInput, "bad integer string '" + s + "'");
        return Integer(s);
    }
    fail(ErrorKind::InvalidInput, "coefficient must be an integer or a decimal string");
}

Json to_json(const ReducedPoly& p) {
    Json j = Json::object();
    for (const auto& [m, c] : p.terms()) j[m.key()] = integer_to_json(c);
    return j;
}

ReducedPoly poly_from_json(const Json& j, int rank) {
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "polynomial must be a JSON object");
    ReducedPoly p(rank);
    for (const auto& [key, value] : j.items()) {
        const Monomial m = key.empty() ? Monomial() : Monomial::from_word(parse_word(key));
        if (m.degree() > 0 && (m.support() >> (rank + 1)) != 0)
            fail(ErrorKind::InvalidInput, "monomial " + key + " exceeds rank " + std::to_string(rank));
        p.add_term(m, integer_from_json(value));
    }
    return p;
}

Json to_json(const LyndonCoords& coords) {
    Json j = Json::object();
    for (const auto& [w, e] : coords) j[to_string(w)] = integer_to_json(e);
    return j;
}

LyndonCoords coords_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "coordinate vector must be a JSON object");
    LyndonCoords coords;
    for (const auto& [key, value] : j.items()) {
        const Integer e = integer_from_json(value);
        if (e != 0) coords[parse_word(key)] = e;
    }
    return coords;
}

Json to_json(const WeldedAuto& phi) {
    Json j;
    j["n"] = phi.rank();
    j["perm"] = phi.permutation();
    Json conj = Json::array();
    for (const ReducedPoly& c : phi.conjugators()) conj.push_back(to_json(c));
    j["conj"] = conj;
    return j;
}

WeldedAuto auto_from_json(const Json& j) {
    const int n = small_int(field(j, "n"), "n");
    if (n < 1 || n > Monomial::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range");
    const Json& perm = field(j, "perm");
    const Json& conj = field(j, "conj");
    if (!perm.is_array() || !conj.is_array() || static_cast<int>(perm.size()) != n || static_cast<int>(conj.size()) != n)
        fail(ErrorKind::InvalidInput, "perm and conj must be arrays of length n");
    std::vector<int> p;
    std::vector<ReducedPoly> c;
    for (const Json& x : perm) p.push_back(small_int(x, "perm entry"));
    for (const Json& x : conj) c.push_back(poly_from_json(x, n));
    WeldedAuto phi(std::move(p), c);
    for (int i = 1; i <= n; ++i)
        if (phi.conjugator(i) != c[static_cast<std::size_t>(i - 1)])
            fail(ErrorKind::InvalidInput, "conjugator " + std::to_string(i) + " is not in canonical form");
    return phi;
}

Json to_json(const NormalForm& nf) {
    Json j;
    j["n"] = nf.n;
    Json levels = Json::array();
    for (const CombLevel& level : nf.levels) {
        Json l;
        l["m"] = level.m;
        l["residual"] = to_json(level.residual);
        Json coords = Json::array();
        for (const auto& [i, v] : level.coords) coords.push_back({{"i", i}, {"vector", to_json(v)}});
        l["coords"] = coords;
        levels.push_back(l);
    }
    j["levels"] = levels;
    return j;
}

NormalForm normal_form_from_json(const Json& j) {
    NormalForm nf;
    nf.n = small_int(field(j, "n"), "n");
    if (nf.n < 1 || nf.n > Monomial::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range");
    const Json& levels = field(j, "levels");
    if (!levels.is_array()) fail(ErrorKind::InvalidInput, "levels must be an array");
    for (const Json& l : levels) {
        CombLevel level;
        level.m = small_int(field(l, "m"), "m");
        if (level.m < 2 || level.m > nf.n) fail(ErrorKind::InvalidInput, "level index out of range");
        level.residual = poly_from_json(field(l, "residual"), level.m - 1);
        const Json& coords = field(l, "coords");
        if (!coords.is_array()) fail(ErrorKind::InvalidInput, "coords must be an array");
        for (const Json& c : coords)
            level.coords.emplace_back(small_int(field(c, "i"), "i"), coords_from_json(field(c, "vector")));
        nf.levels.push_back(std::move(level));
    }
    return nf;
}

Json to_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["passed"] = r.passed;
    j["details"] = r.details;
    return j;
}

} // namespace hwb

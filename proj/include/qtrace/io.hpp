#pragma once

// JSON fixture loading and element serialization.
//
// Fixture formats (all JSON):
//   skew form        { "n": int, "names": [string], "P": [[int]], "punctures": int? }
//   surface          { "genus": int, "boundary": [int], "interior": int }
//   surface + form   { "surface": {...}, "form": {...} }
//   SL_2 point       { "m": [[s, s], [s, s]], "expect_nondegenerate": bool? }
//     where each s is an integer, a string rational like "1/2", or a scalar
//     expression such as "q^2" or "-1+zeta".
//
// Any malformed fixture raises FixtureInvalid, which the command-line tool
// maps to exit code 2.

#include <qtrace/expr.hpp>
#include <qtrace/oq.hpp>
#include <qtrace/qtorus.hpp>
#include <qtrace/surface.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

using Json = nlohmann::ordered_json;

struct FixtureInvalid : std::runtime_error {
    explicit FixtureInvalid(const std::string& what) : std::runtime_error(what) {}
};

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureInvalid("cannot open fixture file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw FixtureInvalid("fixture " + path + " is not valid JSON: " + e.what());
    }
}

namespace detail {

inline const Json& require_key(const Json& j, const std::string& key, const std::string& what) {
    if (!j.is_object() || !j.contains(key))
        throw FixtureInvalid(what + " fixture is missing the \"" + key + "\" key");
    return j.at(key);
}

inline long long require_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw FixtureInvalid(what + " must be an integer, got " + j.dump());
    return j.get<long long>();
}

}  // namespace detail

// { "n": int, "names": [string], "P": [[int]] }; antisymmetry is validated by
// the SkewForm constructor.
inline SkewForm skew_form_from_json(const Json& j) {
    const long long n = detail::require_int(detail::require_key(j, "n", "skew form"), "\"n\"");
    if (n < 1) throw FixtureInvalid("skew form rank must be positive");
    const Json& names_j = detail::require_key(j, "names", "skew form");
    const Json& p_j = detail::require_key(j, "P", "skew form");
    if (!names_j.is_array() || static_cast<long long>(names_j.size()) != n)
        throw FixtureInvalid("\"names\" must list exactly n generator names");
    std::vector<std::string> names;
    for (const Json& s : names_j) {
        if (!s.is_string()) throw FixtureInvalid("generator names must be strings");
        names.push_back(s.get<std::string>());
    }
    if (!p_j.is_array() || static_cast<long long>(p_j.size()) != n)
        throw FixtureInvalid("\"P\" must be an n-by-n integer matrix");
    std::vector<std::vector<long long>> p;
    for (const Json& row : p_j) {
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw FixtureInvalid("\"P\" must be an n-by-n integer matrix");
        std::vector<long long> r;
        for (const Json& e : row) r.push_back(detail::require_int(e, "entry of \"P\""));
        p.push_back(std::move(r));
    }
    try {
        return SkewForm(std::move(names), std::move(p));
    } catch (const std::exception& e) {
        throw FixtureInvalid(std::string("invalid skew form: ") + e.what());
    }
}

inline std::size_t punctures_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("punctures")) return 0;
    long long p = detail::require_int(j.at("punctures"), "\"punctures\"");
    if (p < 0) throw FixtureInvalid("\"punctures\" must be nonnegative");
    return static_cast<std::size_t>(p);
}

// { "genus": int, "boundary": [int], "interior": int }
inline PbSurface surface_from_json(const Json& j) {
    const long long g = detail::require_int(detail::require_key(j, "genus", "surface"), "\"genus\"");
    const long long p =
        detail::require_int(detail::require_key(j, "interior", "surface"), "\"interior\"");
    const Json& b_j = detail::require_key(j, "boundary", "surface");
    if (g < 0 || p < 0) throw FixtureInvalid("surface counts must be nonnegative");
    if (!b_j.is_array()) throw FixtureInvalid("\"boundary\" must list punctures per boundary circle");
    std::vector<unsigned> boundary;
    for (const Json& t : b_j) {
        long long v = detail::require_int(t, "boundary circle puncture count");
        if (v < 0) throw FixtureInvalid("boundary circle puncture count must be nonnegative");
        boundary.push_back(static_cast<unsigned>(v));
    }
    try {
        return PbSurface(static_cast<unsigned>(g), std::move(boundary), static_cast<unsigned>(p));
    } catch (const std::exception& e) {
        throw FixtureInvalid(std::string("invalid surface: ") + e.what());
    }
}

// Combined surface-plus-form fixture. The form must match the arc layout of
// the surface, make every alternating boundary pattern central mod N, and
// contain the pattern subgroup inside the central lattice.
struct SurfaceFormFixture {
    PbSurface surface;
    TauBarLayout layout;
    SkewForm form;
    std::size_t punctures = 0;
};

inline SurfaceFormFixture surface_form_from_json(const Json& j, unsigned n) {
    PbSurface s = surface_from_json(detail::require_key(j, "surface", "surface form"));
    SkewForm form = skew_form_from_json(detail::require_key(j, "form", "surface form"));
    TauBarLayout layout;
    try {
        layout = TauBarLayout::standard(s);
        validate_surface_form(s, layout, form, n);
    } catch (const std::exception& e) {
        throw FixtureInvalid(std::string("surface form fixture rejected: ") + e.what());
    }
    BSpec spec{layout, n};
    if (!b_subset_of_central(spec, form))
        throw FixtureInvalid("pattern subgroup is not contained in the central lattice of the form");
    const std::size_t punctures = s.interior_punctures();
    return SurfaceFormFixture{std::move(s), std::move(layout), std::move(form), punctures};
}

// { "m": [[s, s], [s, s]] } with determinant 1; entries parsed as scalar
// expressions over the ambient root of unity.
inline SLPoint sl_point_from_json(const Json& j, const RootPtr& root) {
    const Json& m = detail::require_key(j, "m", "point");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
        m[0].size() != 2 || m[1].size() != 2)
        throw FixtureInvalid("\"m\" must be a 2-by-2 matrix");
    auto entry = [&](std::size_t r, std::size_t c) -> Cyclotomic {
        const Json& e = m[r][c];
        try {
            if (e.is_number_integer())
                return Cyclotomic(root, Rational(static_cast<long>(e.get<long long>())));
            if (e.is_string()) return parse_scalar(root, e.get<std::string>());
        } catch (const std::exception& ex) {
            throw FixtureInvalid("cannot parse matrix entry " + e.dump() + ": " + ex.what());
        }
        throw FixtureInvalid("matrix entries must be integers or scalar strings, got " + e.dump());
    };
    try {
        return SLPoint(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
    } catch (const std::exception& e) {
        throw FixtureInvalid(std::string("invalid point: ") + e.what());
    }
}

inline std::optional<bool> expect_nondegenerate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("expect_nondegenerate")) return std::nullopt;
    const Json& v = j.at("expect_nondegenerate");
    if (!v.is_boolean()) throw FixtureInvalid("\"expect_nondegenerate\" must be a boolean");
    return v.get<bool>();
}

// ---------------------------------------------------------------------------
// Element serialization: lists of { "alpha": {p: int}, "k": [int], "coef": s }.

inline Json torus_element_to_json(const TorusElement& t) {
    Json out = Json::array();
    for (const auto& [k, coef] : t.terms())
        for (const auto& [a, c] : coef.terms()) {
            Json alpha = Json::object();
            for (std::size_t p = 0; p < a.size(); ++p)
                if (a[p] != 0) alpha[std::to_string(p)] = a[p];
            out.push_back(Json{{"alpha", std::move(alpha)}, {"k", k}, {"coef", c.to_string()}});
        }
    return out;
}

inline Json oq_element_to_json(const OqElement& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back(Json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}, {"coef", c.to_string()}});
    return out;
}

}  // namespace qtrace

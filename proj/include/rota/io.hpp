// JSON text format for every entity kind, bundled entity files, and reports.
//
// A file is a JSON object. A member named after a kind ("lie_algebra",
// "representation", ...) is an entity of that kind keyed by the kind name; any
// other member must wrap exactly one kind, as in {"sl2": {"lie_algebra": {...}}}.
// References have the form "file.json#key" or just "file.json", the latter
// naming the unique entity of the required kind in that file.
#pragma once

#include "rota/homotopy.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rota::io {

using json = nlohmann::ordered_json;

class ParseError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void fail(const std::string& path, const std::string& msg)
{
    throw ParseError((path.empty() ? std::string("/") : path) + ": " + msg);
}

inline std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const json& member(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path, "missing field \"" + key + "\"");
    return *it;
}

inline const json* optional_member(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline const json& array(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

inline int integer(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

inline Rational rational(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        fail(path, "expected a rational as \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

inline json to_json(const Rational& r) { return to_string(r); }

inline std::vector<std::string> name_list(const json& j, const std::string& path)
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        if (!j[i].is_string() || j[i].get<std::string>().empty())
            fail(at(path, i), "expected a nonempty name");
        if (!seen.insert(j[i].get<std::string>()).second)
            fail(at(path, i), "duplicate basis name \"" + j[i].get<std::string>() + "\"");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

/// A basis element given by name or by 1-based position.
inline int index_of(const std::vector<std::string>& names, const json& j, const std::string& path)
{
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 1 || i > static_cast<int>(names.size()))
            fail(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(names.size()));
        return i - 1;
    }
    if (j.is_string()) {
        auto it = std::find(names.begin(), names.end(), j.get<std::string>());
        if (it == names.end())
            fail(path, "unknown basis element \"" + j.get<std::string>() + "\"");
        return static_cast<int>(it - names.begin());
    }
    fail(path, "expected a basis name or a 1-based index");
}

inline std::vector<int> index_list(const std::vector<std::string>& names, const json& j, const std::string& path)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        out.push_back(index_of(names, j[i], at(path, i)));
    return out;
}

/// {"e1": "1/2", ...}; unlisted coordinates are zero.
inline Vec coeffs(const json& j, const std::vector<std::string>& names, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object of coefficients");
    Vec v = zero_vec(names.size());
    for (const auto& [k, x] : j.items()) {
        auto it = std::find(names.begin(), names.end(), k);
        if (it == names.end())
            fail(at(path, k), "unknown basis element \"" + k + "\"");
        v[it - names.begin()] = rational(x, at(path, k));
    }
    return v;
}

inline json coeffs_json(const Vec& v, const std::vector<std::string>& names)
{
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out[names[i]] = to_json(v[i]);
    return out;
}

inline Matrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    if (array(j, path).size() != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = at(path, r);
        if (array(j[r], rp).size() != cols)
            fail(rp, "expected " + std::to_string(cols) + " columns, got " + std::to_string(j[r].size()));
        for (std::size_t c = 0; c < cols; ++c)
            M(r, c) = rational(j[r][c], at(rp, c));
    }
    return M;
}

inline json matrix_json(const Matrix& M)
{
    json rows = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols(); ++c)
            row.push_back(to_json(M(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- ungraded entities ----

/// Reads a bracket-style table [{"left","right","value"}]. A listed entry
/// (a,b) also fills (b,a) through `partner` unless (b,a) is listed itself.
template <class Partner>
std::vector<std::vector<Vec>> product_table(const json& j, const std::vector<std::string>& names,
                                            const std::string& path, Partner partner)
{
    const std::size_t n = names.size();
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, zero_vec(n)));
    std::set<std::pair<int, int>> listed;
    std::vector<std::tuple<int, int, Vec>> entries;
    for (std::size_t e = 0; e < array(j, path).size(); ++e) {
        const std::string ep = at(path, e);
        int a = index_of(names, member(j[e], "left", ep), at(ep, "left"));
        int b = index_of(names, member(j[e], "right", ep), at(ep, "right"));
        if (!listed.insert({a, b}).second)
            fail(ep, "duplicate entry for (" + names[a] + ", " + names[b] + ")");
        entries.emplace_back(a, b, coeffs(member(j[e], "value", ep), names, at(ep, "value")));
    }
    for (const auto& [a, b, v] : entries) {
        t[a][b] = v;
        if (a != b && !listed.count({b, a}))
            t[b][a] = partner(a, b, v);
    }
    return t;
}

/// Lists (a,b) for a <= b, plus (b,a) whenever it is not the partner of (a,b).
template <class Partner>
json table_json(const std::vector<std::vector<Vec>>& t, const std::vector<std::string>& names, Partner partner)
{
    json out = json::array();
    auto entry = [&](std::size_t a, std::size_t b) {
        out.push_back({{"left", names[a]}, {"right", names[b]}, {"value", coeffs_json(t[a][b], names)}});
    };
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a; b < names.size(); ++b) {
            const bool own = !is_zero(t[a][b]);
            const bool paired = a != b && t[b][a] == partner(a, b, t[a][b]);
            if (own || (a != b && !paired))
                entry(a, b);
            if (a != b && !paired)
                entry(b, a);
        }
    return out;
}

inline LieAlgebra parse_lie_algebra(const json& j, const std::string& path = "/lie_algebra")
{
    LieAlgebra L(name_list(member(j, "basis", path), at(path, "basis")));
    if (auto* b = optional_member(j, "brackets", path))
        L.c = product_table(*b, L.basis, at(path, "brackets"), [](int, int, const Vec& v) { return Rational(-1) * v; });
    return L;
}

inline json to_json(const LieAlgebra& L)
{
    return {{"basis", L.basis},
            {"brackets", table_json(L.c, L.basis, [](int, int, const Vec& v) { return Rational(-1) * v; })}};
}

/// A representation together with the names of its module basis.
struct NamedRep {
    std::vector<std::string> space;
    Representation rep;
};

inline NamedRep parse_representation(const json& j, const LieAlgebra& L, const std::string& path = "/representation")
{
    NamedRep out{name_list(member(j, "space", path), at(path, "space")), {}};
    const std::size_t d = out.space.size();
    out.rep = {d, std::vector<Matrix>(L.dim(), Matrix(d, d))};
    if (auto* a = optional_member(j, "action", path)) {
        if (!a->is_object())
            fail(at(path, "action"), "expected an object keyed by algebra basis names");
        for (const auto& [k, m] : a->items()) {
            auto it = std::find(L.basis.begin(), L.basis.end(), k);
            if (it == L.basis.end())
                fail(at(at(path, "action"), k), "unknown algebra basis element \"" + k + "\"");
            out.rep.action[it - L.basis.begin()] = matrix(m, d, d, at(at(path, "action"), k));
        }
    }
    return out;
}

inline json to_json(const NamedRep& R, const LieAlgebra& L)
{
    json action = json::object();
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!R.rep.action[i].is_zero())
            action[L.basis[i]] = matrix_json(R.rep.action[i]);
    return {{"space", R.space}, {"action", action}};
}

inline NamedRep adjoint_named(const LieAlgebra& L) { return {L.basis, adjoint(L)}; }

/// {"rows": [...]}: rows index the codomain (the algebra), columns the domain.
inline LinearOperator parse_operator(const json& j, std::size_t rows, std::size_t cols,
                                     const std::string& path = "/operator")
{
    return {matrix(member(j, "rows", path), rows, cols, at(path, "rows")), Space::V, Space::G};
}

inline json to_json(const LinearOperator& T) { return {{"rows", matrix_json(T.matrix)}}; }

inline AltMap parse_alt_map(const json& j, const std::vector<std::string>& vnames,
                            const std::vector<std::string>& gnames, const std::string& path = "/alt_map")
{
    const int k = integer(member(j, "arity", path), at(path, "arity"));
    if (k < 0)
        fail(at(path, "arity"), "arity must be non-negative");
    AltMap f(k, static_cast<int>(vnames.size()), static_cast<int>(gnames.size()));
    std::set<Tuple> seen;
    if (auto* es = optional_member(j, "entries", path))
        for (std::size_t e = 0; e < array(*es, at(path, "entries")).size(); ++e) {
            const std::string ep = at(at(path, "entries"), e);
            Tuple args = index_list(vnames, member((*es)[e], "args", ep), at(ep, "args"));
            if (static_cast<int>(args.size()) != k)
                fail(at(ep, "args"), "expected " + std::to_string(k) + " arguments");
            Vec v = coeffs(member((*es)[e], "value", ep), gnames, at(ep, "value"));
            int s = sort_alternating(args);
            if (s == 0) {
                if (!is_zero(v))
                    fail(at(ep, "args"), "repeated argument in an alternating map must have value 0");
                continue;
            }
            if (!seen.insert(args).second)
                fail(at(ep, "args"), "duplicate entry for the same argument set");
            f.set(args, Rational(s) * v);
        }
    return f;
}

inline json to_json(const AltMap& f, const std::vector<std::string>& gnames)
{
    json entries = json::array();
    for (const auto& [t, v] : f.values()) {
        json args = json::array();
        for (int i : t)
            args.push_back(i + 1);
        entries.push_back({{"args", args}, {"value", coeffs_json(v, gnames)}});
    }
    return {{"arity", f.arity()}, {"entries", entries}};
}

inline PreLieProduct parse_prelie(const json& j, const std::string& path = "/prelie")
{
    PreLieProduct P(name_list(member(j, "basis", path), at(path, "basis")));
    if (auto* p = optional_member(j, "products", path))
        P.mu = product_table(*p, P.basis, at(path, "products"),
                             [n = P.dim()](int, int, const Vec&) { return zero_vec(n); });
    return P;
}

inline json to_json(const PreLieProduct& P)
{
    json products = json::array();
    for (std::size_t a = 0; a < P.dim(); ++a)
        for (std::size_t b = 0; b < P.dim(); ++b)
            if (!is_zero(P.mu[a][b]))
                products.push_back(
                    {{"left", P.basis[a]}, {"right", P.basis[b]}, {"value", coeffs_json(P.mu[a][b], P.basis)}});
    return {{"basis", P.basis}, {"products", products}};
}

struct NamedHooked {
    std::vector<std::string> basis;
    HookedMap map;
};

inline NamedHooked parse_hooked_map(const json& j, const std::string& path = "/hooked_map")
{
    NamedHooked out{name_list(member(j, "basis", path), at(path, "basis")), {}};
    const int k = integer(member(j, "arity", path), at(path, "arity"));
    if (k < 0)
        fail(at(path, "arity"), "arity must be non-negative");
    out.map = HookedMap(k, static_cast<int>(out.basis.size()));
    std::set<std::pair<Tuple, int>> seen;
    if (auto* es = optional_member(j, "entries", path))
        for (std::size_t e = 0; e < array(*es, at(path, "entries")).size(); ++e) {
            const std::string ep = at(at(path, "entries"), e);
            Tuple args = index_list(out.basis, member((*es)[e], "args", ep), at(ep, "args"));
            if (static_cast<int>(args.size()) != k)
                fail(at(ep, "args"), "expected " + std::to_string(k) + " arguments before the last slot");
            int last = index_of(out.basis, member((*es)[e], "last", ep), at(ep, "last"));
            Vec v = coeffs(member((*es)[e], "value", ep), out.basis, at(ep, "value"));
            int s = sort_alternating(args);
            if (s == 0) {
                if (!is_zero(v))
                    fail(at(ep, "args"), "repeated argument in the antisymmetric block must have value 0");
                continue;
            }
            if (!seen.insert({args, last}).second)
                fail(at(ep, "args"), "duplicate entry for the same arguments");
            out.map.set(args, last, Rational(s) * v);
        }
    return out;
}

inline json to_json(const NamedHooked& h)
{
    json entries = json::array();
    for (const auto& [key, v] : h.map.values()) {
        json args = json::array();
        for (int i : key.first)
            args.push_back(h.basis[i]);
        entries.push_back({{"args", args}, {"last", h.basis[key.second]}, {"value", coeffs_json(v, h.basis)}});
    }
    return {{"basis", h.basis}, {"arity", h.map.arity()}, {"entries", entries}};
}

// ---- graded entities ----

inline GradedVectorSpace parse_graded_basis(const json& j, const std::string& path)
{
    GradedVectorSpace V;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        const std::string ip = at(path, i);
        const json& name = member(j[i], "name", ip);
        if (!name.is_string() || name.get<std::string>().empty())
            fail(at(ip, "name"), "expected a nonempty name");
        if (!seen.insert(name.get<std::string>()).second)
            fail(at(ip, "name"), "duplicate basis name \"" + name.get<std::string>() + "\"");
        V.names.push_back(name.get<std::string>());
        V.degrees.push_back(integer(member(j[i], "degree", ip), at(ip, "degree")));
    }
    return V;
}

inline json graded_basis_json(const GradedVectorSpace& V)
{
    json out = json::array();
    for (std::size_t i = 0; i < V.dim(); ++i)
        out.push_back({{"name", V.names[i]}, {"degree", V.degrees[i]}});
    return out;
}

inline GradedVectorSpace parse_graded_space(const json& j, const std::string& path = "/graded_space")
{
    return parse_graded_basis(member(j, "basis", path), at(path, "basis"));
}

inline json to_json(const GradedVectorSpace& V) { return {{"basis", graded_basis_json(V)}}; }

/// Coefficients that must form a homogeneous element.
inline Vec homogeneous_coeffs(const json& j, const GradedVectorSpace& V, const std::string& path)
{
    Vec v = coeffs(j, V.names, path);
    if (!is_zero(v) && !homogeneous_degree(v, V))
        fail(path, "mixed-degree element (all terms must share one degree)");
    return v;
}

/// Rejects matrices whose nonzero entries do not share a single degree.
inline void require_homogeneous(const Matrix& M, const GradedVectorSpace& V, const std::string& path)
{
    std::optional<int> d;
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (M(r, c) != 0) {
                int e = V.degrees[r] - V.degrees[c];
                if (d && *d != e)
                    fail(path, "mixed-degree matrix (entries of degrees " + std::to_string(*d) + " and " +
                                   std::to_string(e) + ")");
                d = e;
            }
}

inline SGLA parse_sgla(const json& j, const std::string& path = "/sgla")
{
    SGLA g(parse_graded_basis(member(j, "basis", path), at(path, "basis")));
    if (auto* b = optional_member(j, "brackets", path)) {
        const std::string bp = at(path, "brackets");
        for (std::size_t e = 0; e < array(*b, bp).size(); ++e)
            homogeneous_coeffs(member((*b)[e], "value", at(bp, e)), g.space, at(at(bp, e), "value"));
        g.b = product_table(*b, g.space.names, bp, [&](int a, int c, const Vec& v) {
            return Rational(minus_one_pow(g.degree(a) * g.degree(c))) * v;
        });
    }
    return g;
}

inline json to_json(const SGLA& g)
{
    return {{"basis", graded_basis_json(g.space)},
            {"brackets", table_json(g.b, g.space.names, [&](int a, int c, const Vec& v) {
                 return Rational(minus_one_pow(g.degree(a) * g.degree(c))) * v;
             })}};
}

inline GradedRepresentation parse_graded_rep(const json& j, const SGLA& g, const std::string& path = "/graded_rep")
{
    GradedRepresentation R;
    R.module = parse_graded_basis(member(j, "basis", path), at(path, "basis"));
    const std::size_t d = R.dim();
    R.action.assign(g.dim(), Matrix(d, d));
    if (auto* a = optional_member(j, "action", path)) {
        if (!a->is_object())
            fail(at(path, "action"), "expected an object keyed by sgLa basis names");
        for (const auto& [k, m] : a->items()) {
            const std::string mp = at(at(path, "action"), k);
            auto it = std::find(g.space.names.begin(), g.space.names.end(), k);
            if (it == g.space.names.end())
                fail(mp, "unknown sgLa basis element \"" + k + "\"");
            Matrix M = matrix(m, d, d, mp);
            require_homogeneous(M, R.module, mp);
            R.action[it - g.space.names.begin()] = std::move(M);
        }
    }
    return R;
}

inline json to_json(const GradedRepresentation& R, const SGLA& g)
{
    json action = json::object();
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!R.action[i].is_zero())
            action[g.space.names[i]] = matrix_json(R.action[i]);
    return {{"basis", graded_basis_json(R.module)}, {"action", action}};
}

inline Matrix parse_differential(const json& j, const SGLA& g, const std::string& path = "/differential")
{
    return matrix(member(j, "rows", path), g.dim(), g.dim(), at(path, "rows"));
}

inline json differential_json(const Matrix& d) { return {{"rows", matrix_json(d)}}; }

/// Cochains and homotopy operators share one schema:
///   {"degree": m, "truncation": N, "components": [{"weight": 0, "value": {...}},
///    {"weight": i, "entries": [{"args": [...], "value": {...}}]}]}
/// Arguments may come in any order; they are sorted with the Koszul sign.
/// Every value must be homogeneous of degree deg(args) + m.
inline GCochain parse_cochain(const json& j, const SGLA& g, const GradedRepresentation& R, bool homotopy_operator,
                              const std::string& path)
{
    int degree = 0;
    if (auto* d = optional_member(j, "degree", path))
        degree = integer(*d, at(path, "degree"));
    else if (!homotopy_operator)
        fail(path, "missing field \"degree\"");
    if (homotopy_operator && degree != 0)
        fail(at(path, "degree"), "a homotopy operator has degree 0");
    const int N = integer(member(j, "truncation", path), at(path, "truncation"));
    if (N < 0 || N > kWeightCap)
        fail(at(path, "truncation"), "truncation outside 0.." + std::to_string(kWeightCap));
    GCochain f = make_gcochain(degree, N, g, R);
    std::set<std::pair<int, Word>> seen;
    auto store = [&](int weight, Word w, const Vec& v, const std::string& ep) {
        if (static_cast<int>(w.size()) != weight)
            fail(ep, "expected " + std::to_string(weight) + " arguments");
        int s = sort_graded(w, R.module.degrees);
        if (s == 0) {
            if (!is_zero(v))
                fail(ep, "repeated odd-degree argument must have value 0");
            return;
        }
        if (!seen.insert({weight, w}).second)
            fail(ep, "duplicate entry for the same word");
        if (!is_zero(v) && *homogeneous_degree(v, g.space) != word_degree(w, R.module.degrees) + degree)
            fail(ep, "value degree " + std::to_string(*homogeneous_degree(v, g.space)) + " differs from " +
                         std::to_string(word_degree(w, R.module.degrees) + degree));
        f.component(weight).set(w, Rational(s) * v);
    };
    const json& comps = member(j, "components", path);
    for (std::size_t c = 0; c < array(comps, at(path, "components")).size(); ++c) {
        const std::string cp = at(at(path, "components"), c);
        const int weight = integer(member(comps[c], "weight", cp), at(cp, "weight"));
        if (weight < 0)
            fail(at(cp, "weight"), "negative weight");
        if (weight > N)
            fail(at(cp, "weight"), "weight " + std::to_string(weight) + " exceeds the truncation " + std::to_string(N));
        if (auto* v = optional_member(comps[c], "value", cp)) {
            if (weight != 0)
                fail(cp, "\"value\" is only for weight 0; use \"entries\"");
            store(0, {}, homogeneous_coeffs(*v, g.space, at(cp, "value")), at(cp, "value"));
        }
        if (auto* es = optional_member(comps[c], "entries", cp))
            for (std::size_t e = 0; e < array(*es, at(cp, "entries")).size(); ++e) {
                const std::string ep = at(at(cp, "entries"), e);
                Word w = index_list(R.module.names, member((*es)[e], "args", ep), at(ep, "args"));
                store(weight, w, homogeneous_coeffs(member((*es)[e], "value", ep), g.space, at(ep, "value")), ep);
            }
    }
    return f;
}

inline json to_json(const GCochain& f, const SGLA& g, const GradedRepresentation& R)
{
    json comps = json::array();
    for (int i = 0; i <= f.truncation(); ++i) {
        const auto& c = f.component(i);
        if (c.is_zero())
            continue;
        if (i == 0) {
            comps.push_back({{"weight", 0}, {"value", coeffs_json(c.get({}), g.space.names)}});
            continue;
        }
        json entries = json::array();
        for (const auto& [w, v] : c.values()) {
            json args = json::array();
            for (int a : w)
                args.push_back(R.module.names[a]);
            entries.push_back({{"args", args}, {"value", coeffs_json(v, g.space.names)}});
        }
        comps.push_back({{"weight", i}, {"entries", entries}});
    }
    return {{"degree", f.degree()}, {"truncation", f.truncation()}, {"components", comps}};
}

/// {"basis": [...], "operations": [{"arity": k, "entries": [{"args": [k-1 names], "last": name,
/// "value": {...}}]}]}: m_k(args, last) = value.
inline PreLieInfinity parse_prelie_inf(const json& j, const std::string& path = "/prelie_inf")
{
    GradedVectorSpace V = parse_graded_basis(member(j, "basis", path), at(path, "basis"));
    const json& ops = member(j, "operations", path);
    int K = 1;
    for (std::size_t o = 0; o < array(ops, at(path, "operations")).size(); ++o)
        K = std::max(K, integer(member(ops[o], "arity", at(at(path, "operations"), o)),
                                at(at(at(path, "operations"), o), "arity")));
    if (K > kWeightCap + 1)
        fail(at(path, "operations"), "arity above " + std::to_string(kWeightCap + 1));
    PreLieInfinity P{V, make_glcochain(1, K - 1, V)};
    std::set<std::pair<Word, int>> seen;
    for (std::size_t o = 0; o < ops.size(); ++o) {
        const std::string op = at(at(path, "operations"), o);
        const int k = integer(member(ops[o], "arity", op), at(op, "arity"));
        if (k < 1)
            fail(at(op, "arity"), "operations have arity at least 1");
        if (auto* es = optional_member(ops[o], "entries", op))
            for (std::size_t e = 0; e < array(*es, at(op, "entries")).size(); ++e) {
                const std::string ep = at(at(op, "entries"), e);
                Word w = index_list(V.names, member((*es)[e], "args", ep), at(ep, "args"));
                if (static_cast<int>(w.size()) != k - 1)
                    fail(at(ep, "args"), "expected " + std::to_string(k - 1) + " arguments before the last slot");
                int last = index_of(V.names, member((*es)[e], "last", ep), at(ep, "last"));
                Vec v = homogeneous_coeffs(member((*es)[e], "value", ep), V, at(ep, "value"));
                int s = sort_graded(w, V.degrees);
                if (s == 0) {
                    if (!is_zero(v))
                        fail(at(ep, "args"), "repeated odd-degree argument must have value 0");
                    continue;
                }
                if (!seen.insert({w, last}).second)
                    fail(ep, "duplicate entry for the same arguments");
                Matrix M = P.L.component(k - 1).get(w);
                for (std::size_t r = 0; r < V.dim(); ++r)
                    M(r, last) = Rational(s) * v[r];
                P.L.component(k - 1).set(w, M);
            }
    }
    return P;
}

inline json to_json(const PreLieInfinity& P)
{
    json ops = json::array();
    for (int i = 0; i <= P.L.truncation(); ++i) {
        const auto& c = P.L.component(i);
        if (c.is_zero())
            continue;
        json entries = json::array();
        for (const auto& [w, M] : c.values()) {
            json args = json::array();
            for (int a : w)
                args.push_back(P.space.names[a]);
            for (std::size_t z = 0; z < P.space.dim(); ++z) {
                Vec col = M.column(z);
                if (!is_zero(col))
                    entries.push_back({{"args", args}, {"last", P.space.names[z]}, {"value", coeffs_json(col, P.space.names)}});
            }
        }
        ops.push_back({{"arity", i + 1}, {"entries", entries}});
    }
    return {{"basis", graded_basis_json(P.space)}, {"operations", ops}};
}

// ---- reports ----

inline json to_json(const Report& r)
{
    json w = nullptr;
    if (r.witness) {
        json args = json::array();
        for (int a : r.witness->args)
            args.push_back(a + 1);
        json res = json::array();
        for (const auto& x : r.witness->residual)
            res.push_back(to_json(x));
        w = {{"args", args}, {"residual", res}, {"detail", r.witness->detail}};
    }
    return {{"check", r.check}, {"pass", r.pass}, {"order", r.order}, {"witness", w}};
}

inline Report parse_report(const json& j, const std::string& path = "/report")
{
    Report r;
    const json& c = member(j, "check", path);
    const json& p = member(j, "pass", path);
    if (!c.is_string())
        fail(at(path, "check"), "expected a string");
    if (!p.is_boolean())
        fail(at(path, "pass"), "expected a boolean");
    r.check = c.get<std::string>();
    r.pass = p.get<bool>();
    r.order = integer(member(j, "order", path), at(path, "order"));
    const json& w = member(j, "witness", path);
    if (!w.is_null()) {
        const std::string wp = at(path, "witness");
        Witness wt;
        const json& args = member(w, "args", wp);
        for (std::size_t i = 0; i < array(args, at(wp, "args")).size(); ++i)
            wt.args.push_back(integer(args[i], at(at(wp, "args"), i)) - 1);
        const json& res = member(w, "residual", wp);
        for (std::size_t i = 0; i < array(res, at(wp, "residual")).size(); ++i)
            wt.residual.push_back(rational(res[i], at(at(wp, "residual"), i)));
        if (auto* d = optional_member(w, "detail", wp))
            wt.detail = d->is_string() ? d->get<std::string>() : "";
        r.witness = std::move(wt);
    }
    return r;
}

// ---- files and workspaces ----

/// Parses JSON text, reporting syntax errors with 1-based line and column.
inline json parse_text(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (pos == std::string::npos ? what : what.substr(pos)));
    }
}

inline const std::vector<std::string>& kinds()
{
    static const std::vector<std::string> k = {"lie_algebra", "representation", "operator",   "alt_map",
                                               "prelie",      "hooked_map",     "graded_space", "sgla",
                                               "graded_rep",  "differential",   "cochain",    "homotopy_operator",
                                               "prelie_inf",  "report"};
    return k;
}

inline bool is_kind(const std::string& s) { return std::find(kinds().begin(), kinds().end(), s) != kinds().end(); }

class Workspace {
public:
    struct Entity {
        std::string file;
        std::string key;
        std::string kind;
        json body;
        std::string path() const { return file + "#" + key; }
    };

    /// Loads every entity of a file (once).
    void load(const std::string& file)
    {
        if (loaded_.count(file))
            return;
        std::ifstream in(file);
        if (!in)
            throw ParseError(file + ": cannot open file");
        std::stringstream ss;
        ss << in.rdbuf();
        add_text(ss.str(), file);
    }

    void add_text(const std::string& text, const std::string& file)
    {
        json root = parse_text(text, file);
        if (!root.is_object())
            throw ParseError(file + ": top level must be an object of entities");
        for (const auto& [key, value] : root.items()) {
            if (is_kind(key)) {
                entities_.push_back({file, key, key, value});
                continue;
            }
            if (!value.is_object() || value.size() != 1 || !is_kind(value.begin().key()))
                throw ParseError(file + ": /" + key + ": expected a single wrapped entity such as {\"lie_algebra\": {...}}");
            entities_.push_back({file, key, value.begin().key(), value.begin().value()});
        }
        loaded_.insert(file);
    }

    /// Resolves "file#key" or "file" (the unique entity of `kind` in the file).
    const Entity& resolve(const std::string& ref, const std::string& kind)
    {
        auto hash = ref.find('#');
        const std::string file = ref.substr(0, hash);
        const std::string key = hash == std::string::npos ? "" : ref.substr(hash + 1);
        load(file);
        const Entity* found = nullptr;
        int count = 0;
        for (const auto& e : entities_) {
            if (e.file != file)
                continue;
            if (!key.empty()) {
                if (e.key == key) {
                    if (e.kind != kind)
                        throw ParseError(ref + ": entity is a " + e.kind + ", expected a " + kind);
                    return e;
                }
            } else if (e.kind == kind) {
                found = &e;
                ++count;
            }
        }
        if (!key.empty())
            throw ParseError(ref + ": no entity with key \"" + key + "\"");
        if (count == 0)
            throw ParseError(ref + ": no " + kind + " in file");
        if (count > 1)
            throw ParseError(ref + ": " + std::to_string(count) + " entities of kind " + kind +
                             "; select one with #key");
        return *found;
    }

    /// Runs `validate` for an entity once; later calls reuse the cached verdict.
    template <class Validate>
    bool validated(const Entity& e, Validate validate)
    {
        auto it = verdicts_.find(e.path());
        if (it != verdicts_.end())
            return it->second;
        bool ok = validate();
        verdicts_[e.path()] = ok;
        return ok;
    }

    std::size_t validations() const { return verdicts_.size(); }

    const std::vector<Entity>& entities() const { return entities_; }

private:
    std::vector<Entity> entities_;
    std::set<std::string> loaded_;
    std::map<std::string, bool> verdicts_;
};

} // namespace rota::io

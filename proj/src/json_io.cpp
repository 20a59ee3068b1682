#include "galcoh/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <map>

#include "galcoh/error.hpp"

namespace galcoh::json_io {

void bad(const std::string& path, const std::string& msg) { fail(ErrorKind::InvalidInput, path + ": " + msg); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(path + "." + key, "missing");
    return *it;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) bad(path, "expected an integer");
    const auto x = v.get<long long>();
    if (x < INT_MIN || x > INT_MAX) bad(path, "integer out of range");
    return static_cast<int>(x);
}

BigInt as_bigint(const json& v, const std::string& path) {
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        BigInt out;
        if (out.set_str(v.get<std::string>(), 10) != 0) bad(path, "not an integer string");
        return out;
    }
    bad(path, "expected an integer");
}

json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

namespace {

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int element(const json& v, int order, const std::string& path) {
    const int x = as_int(v, path);
    if (x < 0 || x >= order) bad(path, "element index " + std::to_string(x) + " out of range 0.." + std::to_string(order - 1));
    return x;
}

std::vector<int> int_list(const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], idx(path, i)));
    return out;
}

int parse_suffix(const std::string& name, std::size_t from) {
    int n = 0;
    const auto* b = name.data() + from;
    const auto* e = name.data() + name.size();
    auto [p, ec] = std::from_chars(b, e, n);
    if (ec != std::errc() || p != e || n <= 0) fail(ErrorKind::InvalidInput, "unknown builtin group '" + name + "'");
    return n;
}

std::string pair_key(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

// Parses "(s,t)" or "s,t".
std::pair<int, int> parse_pair_key(const std::string& key, const std::string& path) {
    std::string k;
    for (char ch : key)
        if (ch != '(' && ch != ')' && ch != ' ') k.push_back(ch);
    const auto comma = k.find(',');
    if (comma == std::string::npos) bad(path, "key '" + key + "' is not of the form (s,t)");
    int s = 0, t = 0;
    auto r1 = std::from_chars(k.data(), k.data() + comma, s);
    auto r2 = std::from_chars(k.data() + comma + 1, k.data() + k.size(), t);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != k.data() + comma || r2.ptr != k.data() + k.size())
        bad(path, "key '" + key + "' is not of the form (s,t)");
    return {s, t};
}

int parse_key(const std::string& key, int order, const std::string& path) {
    int s = 0;
    auto r = std::from_chars(key.data(), key.data() + key.size(), s);
    if (r.ec != std::errc() || r.ptr != key.data() + key.size()) bad(path, "key '" + key + "' is not an element index");
    if (s < 0 || s >= order) bad(path, "key '" + key + "' out of range");
    return s;
}

// Generic reader for maps keyed by gamma elements or lists in index order.
template <class T, class F>
std::vector<std::optional<T>> keyed(const json& v, int order, const std::string& path, F&& read) {
    std::vector<std::optional<T>> out(order);
    if (v.is_array()) {
        if (static_cast<int>(v.size()) != order) bad(path, "expected " + std::to_string(order) + " entries");
        for (int s = 0; s < order; ++s) out[s] = read(v[s], idx(path, s));
    } else if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            const int s = parse_key(it.key(), order, path);
            out[s] = read(it.value(), path + "." + it.key());
        }
    } else {
        bad(path, "expected an object or an array");
    }
    return out;
}

template <class T, class F>
std::vector<T> keyed_pairs(const json& v, int order, const std::string& path, F&& read) {
    std::vector<std::optional<T>> out(static_cast<std::size_t>(order) * order);
    if (v.is_array()) {
        if (v.size() != out.size()) bad(path, "expected " + std::to_string(out.size()) + " entries");
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = read(v[k], idx(path, k));
    } else if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            const auto [s, t] = parse_pair_key(it.key(), path);
            if (s < 0 || s >= order || t < 0 || t >= order) bad(path, "key '" + it.key() + "' out of range");
            out[static_cast<std::size_t>(s) * order + t] = read(it.value(), path + "." + it.key());
        }
    } else {
        bad(path, "expected an object or an array");
    }
    std::vector<T> values;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!out[k]) bad(path, "missing value at " + pair_key(static_cast<int>(k) / order, static_cast<int>(k) % order));
        values.push_back(std::move(*out[k]));
    }
    return values;
}

}  // namespace

// ---------------------------------------------------------------------------
// groups

FiniteGroup builtin_group(const std::string& name) {
    const auto x = name.find('x');
    if (x != std::string::npos)
        return groups::product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)));
    if (name == "1" || name == "trivial") return FiniteGroup();
    if (name == "Q8") return groups::quaternion();
    if (name == "V4" || name == "K4") return groups::klein_four();
    if (name.rfind("Dic", 0) == 0) return groups::dicyclic(parse_suffix(name, 3));
    if (name.rfind("C", 0) == 0) return groups::cyclic(parse_suffix(name, 1));
    if (name.rfind("D", 0) == 0) return groups::dihedral(parse_suffix(name, 1));
    if (name.rfind("S", 0) == 0) {
        const int n = parse_suffix(name, 1);
        if (n > 5) fail(ErrorKind::InvalidInput, "symmetric groups up to S5 only");
        return groups::symmetric(n);
    }
    if (name.rfind("A", 0) == 0) {
        const int n = parse_suffix(name, 1);
        if (n > 5) fail(ErrorKind::InvalidInput, "alternating groups up to A5 only");
        return groups::alternating(n);
    }
    fail(ErrorKind::InvalidInput, "unknown builtin group '" + name + "'");
}

FiniteGroup parse_group(const json& v, const std::string& path) {
    if (!v.is_object()) bad(path, "expected a group object");
    if (v.contains("builtin")) {
        const json& b = v.at("builtin");
        if (!b.is_string()) bad(path + ".builtin", "expected a string");
        return at_path(path + ".builtin", [&] { return builtin_group(b.get<std::string>()); });
    }
    const json& t = field(v, "table", path);
    const std::string tp = path + ".table";
    if (!t.is_array() || t.empty()) bad(tp, "expected a non-empty array of rows");
    const std::size_t n = t.size();
    std::vector<std::vector<int>> table;
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n) bad(tp, "table is not square (row " + std::to_string(i) + ")");
        std::vector<int> row;
        for (std::size_t j = 0; j < n; ++j) {
            const int x = as_int(t[i][j], tp + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            if (x < 0 || x >= static_cast<int>(n)) bad(tp, "entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            row.push_back(x);
        }
        table.push_back(std::move(row));
    }
    if (v.contains("order") && as_int(v.at("order"), path + ".order") != static_cast<int>(n))
        bad(path + ".order", "order does not match the table");
    return at_path(tp, [&] { return make_group(table); });
}

json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

GammaGroup parse_gamma_group(const json& v, const FiniteGroup& gamma, const std::string& path) {
    const FiniteGroup group = parse_group(v, path);
    if (!v.contains("action")) return GammaGroup::trivial(gamma, group);
    const std::string ap = path + ".action";
    auto given = keyed<std::vector<int>>(v.at("action"), gamma.order(), ap,
                                         [&](const json& x, const std::string& p) { return int_list(x, p); });
    std::vector<std::optional<Automorphism>> phi(gamma.order());
    for (int s = 0; s < gamma.order(); ++s)
        if (given[s]) {
            const std::string sp = ap + "." + std::to_string(s);
            if (static_cast<int>(given[s]->size()) != group.order()) bad(sp, "expected one image per element");
            phi[s] = at_path(sp, [&] { return Automorphism(group, *given[s]); });
        }
    phi[gamma.identity()] = Automorphism::identity(group);
    // close up under products with the listed elements
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < gamma.order(); ++a)
            for (int b = 0; b < gamma.order(); ++b)
                if (phi[a] && given[b] && !phi[gamma.mul(a, b)]) {
                    phi[gamma.mul(a, b)] = phi[a]->after(*phi[b]);
                    grew = true;
                }
    }
    std::vector<Automorphism> action;
    for (int s = 0; s < gamma.order(); ++s) {
        if (!phi[s]) bad(ap, "listed elements do not generate gamma (element " + std::to_string(s) + " undetermined)");
        action.push_back(*phi[s]);
    }
    return at_path(ap, [&] { return GammaGroup(gamma, group, std::move(action)); });
}

json gamma_group_to_json(const GammaGroup& g) {
    json out = group_to_json(g.group());
    json action = json::object();
    for (int s = 0; s < g.gamma().order(); ++s) action[std::to_string(s)] = g.action(s).images();
    out["action"] = action;
    return out;
}

// ---------------------------------------------------------------------------
// modules and cochains

AbelianGammaModule parse_module(const json& v, const FiniteGroup& gamma, const std::string& path) {
    if (!v.is_object()) bad(path, "expected a module object");
    std::vector<BigInt> factors;
    if (v.contains("invariant_factors")) {
        const json& f = v.at("invariant_factors");
        if (!f.is_array()) bad(path + ".invariant_factors", "expected an array");
        for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(as_bigint(f[i], idx(path + ".invariant_factors", i)));
    }
    const int free_rank = v.contains("free_rank") ? as_int(v.at("free_rank"), path + ".free_rank") : 0;
    if (free_rank < 0) bad(path + ".free_rank", "must be nonnegative");
    const std::size_t r = factors.size() + static_cast<std::size_t>(free_rank);
    if (!v.contains("action"))
        return at_path(path, [&] { return AbelianGammaModule::trivial(gamma, factors, free_rank); });
    const std::string ap = path + ".action";
    auto read_matrix = [&](const json& m, const std::string& p) {
        if (!m.is_array() || m.size() != r) bad(p, "expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
        IntMatrix out(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            if (!m[i].is_array() || m[i].size() != r) bad(p, "row " + std::to_string(i) + " has the wrong length");
            for (std::size_t j = 0; j < r; ++j) out(i, j) = as_bigint(m[i][j], idx(idx(p, i), j));
        }
        return out;
    };
    auto given = keyed<IntMatrix>(v.at("action"), gamma.order(), ap, read_matrix);
    std::vector<std::optional<IntMatrix>> mats(gamma.order());
    mats[gamma.identity()] = IntMatrix::identity(r);
    for (int s = 0; s < gamma.order(); ++s)
        if (given[s]) mats[s] = given[s];
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < gamma.order(); ++a)
            for (int b = 0; b < gamma.order(); ++b)
                if (mats[a] && given[b] && !mats[gamma.mul(a, b)]) {
                    mats[gamma.mul(a, b)] = *mats[a] * *given[b];
                    grew = true;
                }
    }
    std::vector<IntMatrix> action;
    for (int s = 0; s < gamma.order(); ++s) {
        if (!mats[s]) bad(ap, "listed elements do not generate gamma");
        action.push_back(*mats[s]);
    }
    return at_path(ap, [&] { return AbelianGammaModule(gamma, factors, free_rank, std::move(action)); });
}

json module_to_json(const AbelianGammaModule& m) {
    json factors = json::array();
    for (const auto& f : m.invariant_factors()) factors.push_back(bigint_to_json(f));
    json action = json::object();
    for (int s = 0; s < m.gamma().order(); ++s) {
        json rows = json::array();
        const IntMatrix& a = m.action(s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(bigint_to_json(a(i, j)));
            rows.push_back(row);
        }
        action[std::to_string(s)] = rows;
    }
    return {{"invariant_factors", factors}, {"free_rank", m.free_rank()}, {"action", action}};
}

Cochain1 parse_cochain1(const json& v, int gamma_order, const FiniteGroup& target, const std::string& path) {
    auto vals = keyed<int>(v, gamma_order, path,
                           [&](const json& x, const std::string& p) { return element(x, target.order(), p); });
    Cochain1 out;
    for (int s = 0; s < gamma_order; ++s) {
        if (!vals[s]) bad(path, "missing value for gamma element " + std::to_string(s));
        out.push_back(*vals[s]);
    }
    return out;
}

json cochain1_to_json(const Cochain1& c) {
    json out = json::object();
    for (std::size_t s = 0; s < c.size(); ++s) out[std::to_string(s)] = c[s];
    return out;
}

namespace {

ModElem read_elem(const json& v, const AbelianGammaModule& m, const std::string& path) {
    if (!v.is_array() || v.size() != m.rank()) bad(path, "expected a vector of length " + std::to_string(m.rank()));
    ModElem out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_bigint(v[i], idx(path, i)));
    return m.reduce(std::move(out));
}

json elem_to_json(const ModElem& x) {
    json out = json::array();
    for (const auto& v : x) out.push_back(bigint_to_json(v));
    return out;
}

}  // namespace

Cochain parse_module_cochain(const json& v, const AbelianGammaModule& m, int degree, const std::string& path) {
    const int n = m.gamma().order();
    auto read = [&](const json& x, const std::string& p) { return read_elem(x, m, p); };
    switch (degree) {
        case 0:
            return {0, {read_elem(v, m, path)}};
        case 1: {
            auto vals = keyed<ModElem>(v, n, path, read);
            Cochain c{1, {}};
            for (int s = 0; s < n; ++s) {
                if (!vals[s]) bad(path, "missing value for gamma element " + std::to_string(s));
                c.values.push_back(std::move(*vals[s]));
            }
            return c;
        }
        case 2:
            return {2, keyed_pairs<ModElem>(v, n, path, read)};
        default:
            bad(path, "cochains of degree 0..2 only");
    }
}

json module_cochain_to_json(const Cochain& c, int gamma_order) {
    if (c.degree == 0) return elem_to_json(c.values.at(0));
    json out = json::object();
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        const std::string key = c.degree == 1 ? std::to_string(k)
                                              : pair_key(static_cast<int>(k) / gamma_order, static_cast<int>(k) % gamma_order);
        out[key] = elem_to_json(c.values[k]);
    }
    return out;
}

std::vector<int> parse_group_cochain2(const json& v, int gamma_order, const FiniteGroup& target,
                                      const std::string& path) {
    return keyed_pairs<int>(v, gamma_order, path,
                            [&](const json& x, const std::string& p) { return element(x, target.order(), p); });
}

json group_cochain2_to_json(const std::vector<int>& values, int gamma_order) {
    json out = json::object();
    for (std::size_t k = 0; k < values.size(); ++k)
        out[pair_key(static_cast<int>(k) / gamma_order, static_cast<int>(k) % gamma_order)] = values[k];
    return out;
}

GroupHom parse_hom(const json& v, const FiniteGroup& source, const FiniteGroup& target, const std::string& path) {
    const json& imgs = v.is_object() ? field(v, "images", path) : v;
    const std::string ip = v.is_object() ? path + ".images" : path;
    const std::vector<int> images = int_list(imgs, ip);
    return at_path(ip, [&] { return make_hom(source, target, images); });
}

// ---------------------------------------------------------------------------
// extensions

CentralExtension parse_extension(const json& obj, const FiniteGroup& gamma, const std::string& path) {
    const GammaGroup g = parse_gamma_group(field(obj, "G", path), gamma, path + ".G");
    std::vector<int> section;
    if (obj.contains("section")) {
        const json& s = obj.at("section");
        section = int_list(s.is_object() ? field(s, "images", path + ".section") : s, path + ".section");
    }
    const bool explicit_ext = obj.contains("Z") || obj.contains("Gbar") || obj.contains("proj");
    if (!explicit_ext) {
        CentralExtension e = at_path(path + ".G", [&] { return center_extension(g); });
        if (section.empty()) return e;
        return at_path(path + ".section", [&] { return e.with_section(section); });
    }
    const json& zj = field(obj, "Z", path);
    const AbelianGammaModule z = parse_module(field(zj, "module", path + ".Z"), gamma, path + ".Z.module");
    const std::vector<int> embedding = int_list(field(zj, "embedding", path + ".Z"), path + ".Z.embedding");
    const GammaGroup gbar = parse_gamma_group(field(obj, "Gbar", path), gamma, path + ".Gbar");
    const GroupHom proj = parse_hom(field(obj, "proj", path), g.group(), gbar.group(), path + ".proj");
    return at_path(path, [&] { return CentralExtension(z, embedding, g, gbar, proj, section); });
}

json extension_to_json(const CentralExtension& e) {
    return {{"G", gamma_group_to_json(e.G())},
            {"Z", {{"module", module_to_json(e.Z())}, {"embedding", e.z_basis()}}},
            {"Gbar", gamma_group_to_json(e.Gbar())},
            {"proj", {{"images", e.proj().images}}},
            {"section", {{"images", e.section()}}}};
}

json invariants_to_json(const AbelianInvariants& inv) {
    json t = json::array();
    for (const auto& x : inv.torsion) t.push_back(bigint_to_json(x));
    return {{"torsion", t}, {"free_rank", inv.free_rank}};
}

json checks_to_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}});
    return out;
}

Cochain1 parse_extension_cocycle(const json& payload, const CentralExtension& e, const std::string& path) {
    const int n = e.G().gamma().order();
    if (payload.contains("cocycle_in_G")) {
        const Cochain1 lift = parse_cochain1(payload.at("cocycle_in_G"), n, e.G().group(), path + ".cocycle_in_G");
        Cochain1 c;
        for (int x : lift) c.push_back(e.proj()(x));
        return c;
    }
    return parse_cochain1(field(payload, "cocycle", path), n, e.Gbar().group(), path + ".cocycle");
}

// ---------------------------------------------------------------------------
// problems

namespace {

FiniteGroup parse_gamma(const json& payload, const std::string& path) {
    return parse_group(field(payload, "gamma", path), path + ".gamma");
}

}  // namespace

ModelExistenceProblem parse_model_problem(const json& payload, const std::string& path) {
    const FiniteGroup gamma = parse_gamma(payload, path);
    ModelExistenceProblem p;
    p.extension = parse_extension(payload, gamma, path);
    p.aut_group = parse_gamma_group(field(payload, "A", path), gamma, path + ".A");
    p.kappa = parse_hom(field(payload, "kappa", path), p.extension.Z().as_group(), p.aut_group.group(), path + ".kappa");
    p.cocycle = parse_extension_cocycle(payload, p.extension, path);
    return p;
}

TitsProblem parse_tits_problem(const json& payload, const std::string& path) {
    const FiniteGroup gamma = parse_gamma(payload, path);
    TitsProblem p;
    p.etilde = parse_extension(payload, gamma, path);
    p.aut_group = parse_gamma_group(field(payload, "A", path), gamma, path + ".A");
    p.kappa_tilde = parse_hom(field(payload, "kappa_tilde", path), p.etilde.Z().as_group(), p.aut_group.group(),
                              path + ".kappa_tilde");
    p.cocycle = parse_extension_cocycle(payload, p.etilde, path);
    if (payload.contains("kernel")) {
        const std::vector<int> kernel = int_list(payload.at("kernel"), path + ".kernel");
        QuotientExtension q = at_path(path + ".kernel", [&] { return quotient_extension(p.etilde, kernel); });
        p.extension = std::move(q.extension);
        p.lambda = std::move(q.lambda);
        if (payload.contains("kappa"))
            p.kappa = parse_hom(payload.at("kappa"), p.extension->Z().as_group(), p.aut_group.group(), path + ".kappa");
    }
    return p;
}

HxhProblem parse_hxh_problem(const json& payload, const std::string& path) {
    const FiniteGroup gamma = parse_gamma(payload, path);
    const json& h = field(payload, "H", path);
    json s1 = h, s2 = h;
    if (payload.contains("sigma1")) s1["action"] = payload.at("sigma1");
    if (payload.contains("sigma2")) s2["action"] = payload.at("sigma2");
    HxhProblem p;
    p.sigma1 = at_path(path + ".sigma1", [&] { return parse_gamma_group(s1, gamma, path + ".H"); });
    p.sigma2 = at_path(path + ".sigma2", [&] { return parse_gamma_group(s2, gamma, path + ".H"); });
    return p;
}

GuProblem parse_gu_problem(const json& payload, const std::string& path) {
    const FiniteGroup gamma = parse_gamma(payload, path);
    GuProblem p;
    p.extension = parse_extension(payload, gamma, path);
    p.cocycle = parse_extension_cocycle(payload, p.extension, path);
    return p;
}

// ---------------------------------------------------------------------------
// certificates

namespace {

json coords_to_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(bigint_to_json(x));
    return out;
}

IntVector coords_from_json(const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected an array");
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_bigint(v[i], idx(path, i)));
    return out;
}

json optional_cochain1(const std::optional<Cochain1>& c) { return c ? cochain1_to_json(*c) : json(nullptr); }

std::optional<Cochain1> optional_cochain1_from(const json& cert, const std::string& key, int n, const FiniteGroup& g,
                                               const std::string& path) {
    if (!cert.contains(key) || cert.at(key).is_null()) return std::nullopt;
    return parse_cochain1(cert.at(key), n, g, path + "." + key);
}

bool answer_of(const json& verdict, const std::string& path) {
    const json& a = field(verdict, "answer", path);
    if (a == "yes") return true;
    if (a == "no") return false;
    bad(path + ".answer", "expected \"yes\" or \"no\"");
}

std::uint64_t as_count(const json& v, const std::string& path) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) bad(path, "expected a count");
    return v.get<std::uint64_t>();
}

}  // namespace

json certificate_to_json(const ModelVerdict& v, int n) {
    json c = {{"lift", cochain1_to_json(v.lift)},
              {"delta", module_cochain_to_json(v.delta, n)},
              {"delta_class", coords_to_json(v.delta_class)},
              {"pushed", group_cochain2_to_json(v.pushed.values, n)},
              {"witness", optional_cochain1(v.witness)},
              {"explored", v.explored},
              {"bound", v.bound}};
    if (!v.yes)
        c["non_neutral_class"] = {{"pushed", group_cochain2_to_json(v.pushed.values, n)},
                                  {"search_space", v.bound},
                                  {"explored", v.explored}};
    return c;
}

json certificate_to_json(const TitsVerdict& v, int n) {
    json c = {{"tits_class",
               {{"delta", module_cochain_to_json(v.tits.delta, n)},
                {"coordinates", coords_to_json(v.tits.coordinates)},
                {"h2", invariants_to_json(v.tits.h2)},
                {"canonical", module_cochain_to_json(v.tits.canonical, n)},
                {"trivial", v.tits.trivial}}},
              {"pushed", group_cochain2_to_json(v.pushed.values, n)},
              {"witness", optional_cochain1(v.witness)},
              {"explored", v.explored},
              {"bound", v.bound},
              {"lambda_checked", v.lambda_checked}};
    if (v.lambda_correction) c["lambda_correction"] = module_cochain_to_json(*v.lambda_correction, n);
    return c;
}

json certificate_to_json(const HxhVerdict& v, int n) {
    json c = {{"inner_form", v.inner_form}};
    if (!v.inner_form) {
        c["failing_gamma"] = v.failing_gamma;
        return c;
    }
    c["w"] = cochain1_to_json(v.w);
    c["cocycle"] = cochain1_to_json(v.cocycle);
    c["delta"] = module_cochain_to_json(v.delta, n);
    c["delta_class"] = coords_to_json(v.delta_class);
    c["lift"] = optional_cochain1(v.lift);
    if (v.reduction_agrees) c["reduction_agrees"] = *v.reduction_agrees;
    return c;
}

json certificate_to_json(const GuVerdict& v, int n) {
    json c = {{"delta", module_cochain_to_json(v.delta, n)},
              {"delta_class", coords_to_json(v.delta_class)},
              {"lift", optional_cochain1(v.lift)},
              {"assumption", kGuAssumption}};
    if (!v.yes) c["nontrivial_class"] = {{"delta", module_cochain_to_json(v.delta, n)}, {"class", coords_to_json(v.delta_class)}};
    return c;
}

ModelVerdict model_verdict_from_json(const json& verdict, const ModelExistenceProblem& p, const std::string& path) {
    const int n = p.extension.G().gamma().order();
    const std::string cp = path + ".certificate";
    const json& cert = field(verdict, "certificate", path);
    ModelVerdict v;
    v.yes = answer_of(verdict, path);
    v.lift = parse_cochain1(field(cert, "lift", cp), n, p.extension.G().group(), cp + ".lift");
    v.delta = parse_module_cochain(field(cert, "delta", cp), p.extension.Z(), 2, cp + ".delta");
    v.delta_class = coords_from_json(field(cert, "delta_class", cp), cp + ".delta_class");
    v.pushed.coefficients = p.aut_group;
    v.pushed.values = parse_group_cochain2(field(cert, "pushed", cp), n, p.aut_group.group(), cp + ".pushed");
    v.witness = optional_cochain1_from(cert, "witness", n, p.aut_group.group(), cp);
    v.explored = as_count(field(cert, "explored", cp), cp + ".explored");
    return v;
}

TitsVerdict tits_verdict_from_json(const json& verdict, const TitsProblem& p, const std::string& path) {
    const int n = p.etilde.G().gamma().order();
    const std::string cp = path + ".certificate";
    const json& cert = field(verdict, "certificate", path);
    TitsVerdict v;
    v.yes = answer_of(verdict, path);
    const json& tc = field(cert, "tits_class", cp);
    v.tits.delta = parse_module_cochain(field(tc, "delta", cp + ".tits_class"), p.etilde.Z(), 2, cp + ".tits_class.delta");
    v.tits.coordinates = coords_from_json(field(tc, "coordinates", cp + ".tits_class"), cp + ".tits_class.coordinates");
    v.pushed.coefficients = p.aut_group;
    v.pushed.values = parse_group_cochain2(field(cert, "pushed", cp), n, p.aut_group.group(), cp + ".pushed");
    v.witness = optional_cochain1_from(cert, "witness", n, p.aut_group.group(), cp);
    v.lambda_checked = cert.value("lambda_checked", false);
    if (v.lambda_checked && p.extension)
        v.lambda_correction =
            parse_module_cochain(field(cert, "lambda_correction", cp), p.extension->Z(), 1, cp + ".lambda_correction");
    return v;
}

HxhVerdict hxh_verdict_from_json(const json& verdict, const HxhProblem& p, const std::string& path) {
    const int n = p.sigma1.gamma().order();
    const std::string cp = path + ".certificate";
    const json& cert = field(verdict, "certificate", path);
    HxhVerdict v;
    v.yes = answer_of(verdict, path);
    v.inner_form = field(cert, "inner_form", cp).get<bool>();
    if (!v.inner_form) {
        v.failing_gamma = as_int(field(cert, "failing_gamma", cp), cp + ".failing_gamma");
        return v;
    }
    const CentralExtension e = center_extension(p.sigma1);
    v.w = parse_cochain1(field(cert, "w", cp), n, p.sigma1.group(), cp + ".w");
    v.cocycle = parse_cochain1(field(cert, "cocycle", cp), n, e.Gbar().group(), cp + ".cocycle");
    v.delta = parse_module_cochain(field(cert, "delta", cp), e.Z(), 2, cp + ".delta");
    v.lift = optional_cochain1_from(cert, "lift", n, p.sigma1.group(), cp);
    if (cert.contains("reduction_agrees")) v.reduction_agrees = cert.at("reduction_agrees").get<bool>();
    return v;
}

GuVerdict gu_verdict_from_json(const json& verdict, const GuProblem& p, const std::string& path) {
    const int n = p.extension.G().gamma().order();
    const std::string cp = path + ".certificate";
    const json& cert = field(verdict, "certificate", path);
    GuVerdict v;
    v.yes = answer_of(verdict, path);
    v.delta = parse_module_cochain(field(cert, "delta", cp), p.extension.Z(), 2, cp + ".delta");
    v.lift = optional_cochain1_from(cert, "lift", n, p.extension.G().group(), cp);
    return v;
}

}  // namespace galcoh::json_io

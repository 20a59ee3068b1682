#pragma once

// JSON encodings of groups, modules, cochains, extensions, problems and
// verdicts. Parse errors are InvalidInput errors whose message starts with
// the JSON path of the offending value, e.g. ".payload.G.table".

#include <json.hpp>

#include <string>

#include "galcoh/deciders.hpp"
#include "galcoh/error.hpp"

namespace galcoh::json_io {

using nlohmann::json;

/// Rethrows library errors raised by `f` with `path` prepended, unless the
/// message already carries a path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (!e.message().empty() && e.message().front() == '.') throw;
        throw Error(e.kind(), path + ": " + e.message());
    }
}

[[noreturn]] void bad(const std::string& path, const std::string& msg);
const json& field(const json& obj, const std::string& key, const std::string& path);
int as_int(const json& v, const std::string& path);
BigInt as_bigint(const json& v, const std::string& path);
json bigint_to_json(const BigInt& v);

/// {"order": n, "table": [[...]]} or {"builtin": "C4" | "D3" | "S3" | "A4" | "Q8" | "Dic3" | "V4" | "C2xC2" ...}
FiniteGroup parse_group(const json& v, const std::string& path);
FiniteGroup builtin_group(const std::string& name);
json group_to_json(const FiniteGroup& g);

/// A group plus "action": {"<gamma element>": [images]}. Elements not listed
/// are generated from the listed ones; no action means trivial.
GammaGroup parse_gamma_group(const json& v, const FiniteGroup& gamma, const std::string& path);
json gamma_group_to_json(const GammaGroup& g);

/// {"invariant_factors": [...], "free_rank": r, "action": {"<gamma element>": [[...]]}}
AbelianGammaModule parse_module(const json& v, const FiniteGroup& gamma, const std::string& path);
json module_to_json(const AbelianGammaModule& m);

/// {"<gamma element>": index} or [index, ...]
Cochain1 parse_cochain1(const json& v, int gamma_order, const FiniteGroup& target, const std::string& path);
json cochain1_to_json(const Cochain1& c);

/// Module cochains: degree 0 as a vector, degree 1 as {"<s>": vector},
/// degree 2 as {"(s,t)": vector}; lists in index order are accepted.
Cochain parse_module_cochain(const json& v, const AbelianGammaModule& m, int degree, const std::string& path);
json module_cochain_to_json(const Cochain& c, int gamma_order);

/// {"(s,t)": index} or a flat list of |Γ|² indices.
std::vector<int> parse_group_cochain2(const json& v, int gamma_order, const FiniteGroup& target,
                                      const std::string& path);
json group_cochain2_to_json(const std::vector<int>& values, int gamma_order);

/// {"images": [...]} or a bare list.
GroupHom parse_hom(const json& v, const FiniteGroup& source, const FiniteGroup& target, const std::string& path);

/// Keys "G", optional "Z" {"module", "embedding"}, "Gbar", "proj", "section".
/// Without Z/Gbar/proj the center extension of G is used.
CentralExtension parse_extension(const json& obj, const FiniteGroup& gamma, const std::string& path);
json extension_to_json(const CentralExtension& e);

json invariants_to_json(const AbelianInvariants& inv);
json checks_to_json(const std::vector<Check>& checks);

/// Reads "cocycle" (indices in Gbar) or "cocycle_in_G" (elements of G, projected).
Cochain1 parse_extension_cocycle(const json& payload, const CentralExtension& e, const std::string& path);

ModelExistenceProblem parse_model_problem(const json& payload, const std::string& path);
TitsProblem parse_tits_problem(const json& payload, const std::string& path);
HxhProblem parse_hxh_problem(const json& payload, const std::string& path);
GuProblem parse_gu_problem(const json& payload, const std::string& path);

json certificate_to_json(const ModelVerdict& v, int gamma_order);
json certificate_to_json(const TitsVerdict& v, int gamma_order);
json certificate_to_json(const HxhVerdict& v, int gamma_order);
json certificate_to_json(const GuVerdict& v, int gamma_order);

ModelVerdict model_verdict_from_json(const json& verdict, const ModelExistenceProblem& p, const std::string& path);
TitsVerdict tits_verdict_from_json(const json& verdict, const TitsProblem& p, const std::string& path);
HxhVerdict hxh_verdict_from_json(const json& verdict, const HxhProblem& p, const std::string& path);
GuVerdict gu_verdict_from_json(const json& verdict, const GuProblem& p, const std::string& path);

}  // namespace galcoh::json_io

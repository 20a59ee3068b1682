#include "galcoh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "galcoh/json_io.hpp"
#include "galcoh/kernels.hpp"
#include "galcoh/matverify.hpp"

namespace galcoh {

namespace {

using json_io::json;

const char* const kQsHypothesis =
    "the quasi-split inner form admits an equivariant model (taken as given, not computed)";

struct Options {
    std::string input;
    std::string output = "-";
    std::string certificate;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    int samples = 100;
    std::string format = "json";
};

struct Outcome {
    json body;  // kind-specific fields: answer/result, certificate
    std::vector<Check> checks;
    std::vector<std::string> builtin_hypotheses;
};

json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) fail(ErrorKind::InvalidInput, path + ": cannot open file");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::InvalidInput, ".: malformed JSON in " + path + " (" + e.what() + ")");
    }
}

json answer(bool yes) { return yes ? "yes" : "no"; }

json gauss_to_json(const GaussMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({{"re", m(i, j).re.get_str()}, {"im", m(i, j).im.get_str()}});
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// subcommands

Outcome run_cohomology(const json& payload, const Options& opt) {
    const std::string path = ".payload";
    const FiniteGroup gamma = json_io::parse_group(json_io::field(payload, "gamma", path), path + ".gamma");
    Outcome o;
    if (payload.contains("A")) {
        // nonabelian H¹ of a Γ-group
        const GammaGroup a = json_io::parse_gamma_group(payload.at("A"), gamma, path + ".A");
        if (payload.contains("degree") && json_io::as_int(payload.at("degree"), path + ".degree") != 1)
            json_io::bad(path + ".degree", "nonabelian coefficients support degree 1 only");
        const auto classes = h1_classes(a, opt.budget);
        json reps = json::array();
        for (const auto& c : classes) reps.push_back(json_io::cochain1_to_json(c));
        o.body["result"] = {{"degree", 1}, {"count", classes.size()}, {"classes", reps}};
        bool cocycles = true, distinct = true;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            cocycles = cocycles && is_cocycle1(a, classes[i]);
            for (std::size_t j = 0; j < i; ++j)
                distinct = distinct && !kernels::serial::find_conjugator(a, classes[j], classes[i]);
        }
        o.checks.push_back({"every representative is a 1-cocycle", cocycles});
        o.checks.push_back({"representatives are pairwise non-cohomologous", distinct});
        return o;
    }
    const AbelianGammaModule m = json_io::parse_module(json_io::field(payload, "module", path), gamma, path + ".module");
    const int degree = json_io::as_int(json_io::field(payload, "degree", path), path + ".degree");
    if (degree < 0 || degree > 2) json_io::bad(path + ".degree", "degree must be 0, 1 or 2");
    const CohomologyGroup h = json_io::at_path(path, [&] { return cohomology(m, degree); });
    const int n = gamma.order();
    json gens = json::array();
    bool gens_ok = true;
    for (const auto& g : h.generators()) {
        gens.push_back(json_io::module_cochain_to_json(g, n));
        gens_ok = gens_ok && is_cocycle(m, g);
    }
    json result = {{"degree", degree}, {"invariants", json_io::invariants_to_json(h.invariants())}, {"generators", gens}};
    o.checks.push_back({"generators are cocycles", gens_ok});
    if (payload.contains("cocycle")) {
        const Cochain z = json_io::parse_module_cochain(payload.at("cocycle"), m, degree, path + ".cocycle");
        if (!is_cocycle(m, z)) fail(ErrorKind::NotACocycle, path + ".cocycle: not a cocycle");
        const IntVector cls = h.class_of(z);
        const Cochain canon = h.canonical(z);
        json coords = json::array();
        for (const auto& x : cls) coords.push_back(json_io::bigint_to_json(x));
        result["class"] = coords;
        result["canonical"] = json_io::module_cochain_to_json(canon, n);
        result["trivial"] = h.is_trivial_class(z);
        o.checks.push_back({"canonical representative lies in the same class", h.class_of(canon) == cls});
        if (degree == 2 && m.is_finite())
            o.checks.push_back({"trivial class iff a 1-cochain bounds it", h.is_trivial_class(z) == is_coboundary2(m, z).has_value()});
    }
    o.body["result"] = result;
    return o;
}

Outcome run_delta(const json& payload) {
    const std::string path = ".payload";
    const FiniteGroup gamma = json_io::parse_group(json_io::field(payload, "gamma", path), path + ".gamma");
    const CentralExtension e = json_io::parse_extension(payload, gamma, path);
    const Cochain1 c = json_io::parse_extension_cocycle(payload, e, path);
    if (!is_cocycle1(e.Gbar(), c)) fail(ErrorKind::NotACocycle, path + ".cocycle: not a 1-cocycle in Gbar");
    const TitsClass t = tits_class(e, c);
    const auto lift = lifts_to_cocycle(e, c);
    const int n = gamma.order();
    json coords = json::array();
    for (const auto& x : t.coordinates) coords.push_back(json_io::bigint_to_json(x));
    Outcome o;
    o.body["result"] = {{"delta", json_io::module_cochain_to_json(t.delta, n)},
                        {"class", coords},
                        {"h2", json_io::invariants_to_json(t.h2)},
                        {"canonical", json_io::module_cochain_to_json(t.canonical, n)},
                        {"trivial", t.trivial},
                        {"lift", lift ? json_io::cochain1_to_json(*lift) : json(nullptr)}};
    o.checks.push_back({"delta is a 2-cocycle", is_cocycle(e.Z(), t.delta)});
    o.checks.push_back({"a lift exists iff delta is a coboundary", lift.has_value() == t.trivial});
    if (lift) {
        bool projects = true;
        for (int s = 0; s < n; ++s) projects = projects && e.proj()((*lift)[s]) == c[s];
        o.checks.push_back({"lift is a 1-cocycle in G", is_cocycle1(e.G(), *lift)});
        o.checks.push_back({"lift projects to the cocycle", projects});
    }
    return o;
}

Outcome run_neutral(const json& payload, const Options& opt, const json* verdict = nullptr) {
    const std::string path = ".payload";
    const FiniteGroup gamma = json_io::parse_group(json_io::field(payload, "gamma", path), path + ".gamma");
    const GammaGroup a = json_io::parse_gamma_group(json_io::field(payload, "A", path), gamma, path + ".A");
    const std::vector<int> z =
        json_io::parse_group_cochain2(json_io::field(payload, "z", path), gamma.order(), a.group(), path + ".z");
    const Twisted2Cocycle w = json_io::at_path(path + ".z", [&] { return make_twisted2(a, z); });
    Outcome o;
    std::optional<Cochain1> witness;
    bool yes = false;
    if (verdict) {
        const json& cert = json_io::field(*verdict, "certificate", "");
        const json& ans = json_io::field(*verdict, "answer", "");
        if (ans != "yes" && ans != "no") json_io::bad(".answer", "expected \"yes\" or \"no\"");
        yes = ans == "yes";
        if (cert.contains("witness") && !cert.at("witness").is_null())
            witness = json_io::parse_cochain1(cert.at("witness"), gamma.order(), a.group(), ".certificate.witness");
    } else {
        const NeutralitySearch r = is_neutral2(w, opt.budget);
        witness = r.witness;
        yes = witness.has_value();
        o.body["answer"] = answer(yes);
        o.body["certificate"] = {{"witness", witness ? json_io::cochain1_to_json(*witness) : json(nullptr)},
                                 {"explored", r.explored},
                                 {"bound", r.bound}};
    }
    o.checks.push_back({"answer matches the presence of a witness", yes == witness.has_value()});
    if (witness) {
        o.checks.push_back({"witness satisfies a_s * s(a_t) * z_st * a_st^-1 = 1", is_neutral_witness(w, *witness)});
    } else {
        const auto r = kernels::serial::find_first({&w.coefficients, w.values}, opt.budget);
        o.checks.push_back({"independent serial search finds no witness", !r.budget_exceeded && !r.solution});
    }
    return o;
}

Outcome run_model(const json& payload, const Options& opt, const json* verdict = nullptr) {
    const auto p = json_io::parse_model_problem(payload, ".payload");
    Outcome o;
    o.builtin_hypotheses.push_back(kQsHypothesis);
    if (verdict) {
        o.checks = verify(p, json_io::model_verdict_from_json(*verdict, p, ""), opt.budget);
        return o;
    }
    const ModelVerdict v = decide_model_existence(p, opt.budget);
    o.body["answer"] = answer(v.yes);
    o.body["certificate"] = json_io::certificate_to_json(v, p.extension.G().gamma().order());
    o.checks = verify(p, v, opt.budget);
    return o;
}

Outcome run_tits(const json& payload, const Options& opt, const json* verdict = nullptr) {
    const auto p = json_io::parse_tits_problem(payload, ".payload");
    Outcome o;
    o.builtin_hypotheses.push_back(kQsHypothesis);
    if (verdict) {
        o.checks = verify(p, json_io::tits_verdict_from_json(*verdict, p, ""), opt.budget);
        return o;
    }
    const TitsVerdict v = decide_tits(p, opt.budget);
    o.body["answer"] = answer(v.yes);
    o.body["certificate"] = json_io::certificate_to_json(v, p.etilde.G().gamma().order());
    o.body["note"] = "a model exists iff the pushed Tits class is neutral; conditional on the assumed hypotheses";
    o.checks = verify(p, v, opt.budget);
    return o;
}

Outcome run_hxh(const json& payload, const Options& opt, const json* verdict = nullptr) {
    const auto p = json_io::parse_hxh_problem(payload, ".payload");
    Outcome o;
    if (verdict) {
        o.checks = verify(p, json_io::hxh_verdict_from_json(*verdict, p, ""));
        return o;
    }
    const HxhVerdict v = decide_hxh(p, opt.budget);
    o.body["answer"] = answer(v.yes);
    o.body["certificate"] = json_io::certificate_to_json(v, p.sigma1.gamma().order());
    o.checks = verify(p, v);
    return o;
}

Outcome run_gu(const json& payload, const json* verdict = nullptr) {
    const auto p = json_io::parse_gu_problem(payload, ".payload");
    Outcome o;
    o.builtin_hypotheses.push_back(kGuAssumption);
    if (verdict) {
        o.checks = verify(p, json_io::gu_verdict_from_json(*verdict, p, ""));
        return o;
    }
    const GuVerdict v = decide_gu(p);
    o.body["answer"] = answer(v.yes);
    o.body["certificate"] = json_io::certificate_to_json(v, p.extension.G().gamma().order());
    o.checks = verify(p, v);
    return o;
}

Outcome run_example(const json* payload, const Options& opt) {
    std::uint64_t seed = opt.seed;
    int samples = opt.samples;
    if (payload) {
        if (payload->contains("seed")) seed = static_cast<std::uint64_t>(json_io::as_int(payload->at("seed"), ".payload.seed"));
        if (payload->contains("samples")) samples = json_io::as_int(payload->at("samples"), ".payload.samples");
    }
    if (samples <= 0) json_io::bad(".payload.samples", "must be positive");
    Outcome o;
    o.checks = run_paper_example(seed, samples);
    o.body["result"] = {{"seed", seed},
                        {"samples", samples},
                        {"model_choice", kModelChoice},
                        {"forms", {{"I4", gauss_to_json(i4())}, {"I22", gauss_to_json(i22())}}},
                        {"cocycle", gauss_to_json(i22())}};
    return o;
}

Outcome dispatch(const std::string& kind, const json* payload, const Options& opt, const json* verdict) {
    if (kind == "verify-example") return run_example(payload, opt);
    if (!payload) fail(ErrorKind::InvalidInput, ".payload: missing");
    if (verdict) {
        if (kind == "neutral") return run_neutral(*payload, opt, verdict);
        if (kind == "decide-model") return run_model(*payload, opt, verdict);
        if (kind == "decide-tits") return run_tits(*payload, opt, verdict);
        if (kind == "decide-hxh") return run_hxh(*payload, opt, verdict);
        if (kind == "decide-gu") return run_gu(*payload, verdict);
        json_io::bad(".kind", "check supports neutral and decide-* problems, not '" + kind + "'");
    }
    if (kind == "cohomology") return run_cohomology(*payload, opt);
    if (kind == "delta") return run_delta(*payload);
    if (kind == "neutral") return run_neutral(*payload, opt);
    if (kind == "decide-model") return run_model(*payload, opt);
    if (kind == "decide-tits") return run_tits(*payload, opt);
    if (kind == "decide-hxh") return run_hxh(*payload, opt);
    if (kind == "decide-gu") return run_gu(*payload);
    json_io::bad(".kind", "unknown kind '" + kind + "'");
}

const std::vector<std::string>& kinds() {
    static const std::vector<std::string> k = {"cohomology",  "delta",      "neutral",   "decide-model",
                                               "decide-tits", "decide-hxh", "decide-gu", "verify-example"};
    return k;
}

std::string render_text(const json& doc, const std::vector<Check>& checks) {
    std::ostringstream s;
    s << "kind: " << doc.at("kind").get<std::string>() << "\n";
    if (doc.contains("answer")) s << "answer: " << doc.at("answer").get<std::string>() << "\n";
    if (doc.contains("result")) {
        const json& r = doc.at("result");
        if (r.contains("seed")) s << "seed: " << r.at("seed") << "\n";
        if (r.contains("model_choice")) s << "model: " << r.at("model_choice").get<std::string>() << "\n";
        if (r.contains("invariants")) s << "invariants: " << r.at("invariants").dump() << "\n";
        if (r.contains("count")) s << "classes: " << r.at("count") << "\n";
        if (r.contains("trivial")) s << "trivial: " << (r.at("trivial").get<bool>() ? "yes" : "no") << "\n";
    }
    for (const auto& h : doc.at("assumed_hypotheses")) s << "assuming: " << h.get<std::string>() << "\n";
    for (const auto& c : checks) s << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    s << (all_pass(checks) ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
    return s.str();
}

int execute(const std::string& command, const Options& opt, std::ostream& out) {
    json problem;
    const json* payload = nullptr;
    std::string kind = command;
    if (!opt.input.empty()) {
        problem = read_json_file(opt.input);
        if (!problem.is_object()) json_io::bad(".", "expected a problem object");
        if (problem.contains("schema_version") && problem.at("schema_version") != 1)
            json_io::bad(".schema_version", "unsupported schema version");
        if (problem.contains("kind")) {
            if (!problem.at("kind").is_string()) json_io::bad(".kind", "expected a string");
            const std::string k = problem.at("kind").get<std::string>();
            if (command != "run" && command != "check" && k != command)
                json_io::bad(".kind", "problem kind '" + k + "' does not match subcommand '" + command + "'");
            kind = k;
        } else if (command == "run" || command == "check") {
            json_io::bad(".kind", "missing");
        }
        if (problem.contains("payload")) payload = &problem.at("payload");
    } else if (command != "verify-example") {
        fail(ErrorKind::InvalidInput, "--input is required for " + command);
    }
    if (std::find(kinds().begin(), kinds().end(), kind) == kinds().end())
        json_io::bad(".kind", "unknown kind '" + kind + "'");

    std::vector<std::string> hypotheses;
    if (problem.contains("assumed_hypotheses")) {
        const json& h = problem.at("assumed_hypotheses");
        if (!h.is_array()) json_io::bad(".assumed_hypotheses", "expected an array of strings");
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (!h[i].is_string()) json_io::bad(".assumed_hypotheses[" + std::to_string(i) + "]", "expected a string");
            hypotheses.push_back(h[i].get<std::string>());
        }
    }

    json verdict;
    if (command == "check") {
        if (opt.certificate.empty()) fail(ErrorKind::InvalidInput, "--certificate is required for check");
        verdict = read_json_file(opt.certificate);
    }
    Outcome o = dispatch(kind, payload, opt, command == "check" ? &verdict : nullptr);
    for (const auto& h : o.builtin_hypotheses)
        if (std::find(hypotheses.begin(), hypotheses.end(), h) == hypotheses.end()) hypotheses.push_back(h);

    json doc = o.body;
    doc["schema_version"] = 1;
    doc["kind"] = command == "check" ? "check" : kind;
    if (command == "check") doc["checked_kind"] = kind;
    doc["assumed_hypotheses"] = hypotheses;
    doc["verification"] = {{"all_pass", all_pass(o.checks)}, {"checks", json_io::checks_to_json(o.checks)}};

    const std::string text = opt.format == "text" ? render_text(doc, o.checks) : doc.dump(2) + "\n";
    if (opt.output == "-") {
        out << text;
    } else {
        std::ofstream f(opt.output);
        if (!f) fail(ErrorKind::InvalidInput, opt.output + ": cannot write output file");
        f << text;
    }
    if (!all_pass(o.checks)) return kExitInternal;
    return kExitOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SearchBudgetExceeded:
            return kExitBudget;
        case ErrorKind::InternalInvariantViolation:
            return kExitInternal;
        default:
            return kExitInput;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-level Galois cohomology and equivariant model deciders"};
    app.require_subcommand(1);
    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "problem JSON file (- for stdin)");
        sub->add_option("--output,-o", opt.output, "output path (- for stdout)");
        sub->add_option("--budget", opt.budget, "maximum number of search assignments");
        sub->add_option("--seed", opt.seed, "random seed for sampled checks");
        sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    for (const auto& k : kinds()) add_common(app.add_subcommand(k, "solve a " + k + " problem"));
    add_common(app.add_subcommand("run", "solve a problem, dispatching on its kind"));
    CLI::App* check = app.add_subcommand("check", "re-verify a verdict against its problem");
    add_common(check);
    check->add_option("--certificate", opt.certificate, "verdict JSON produced earlier")->required();
    app.get_subcommand("verify-example")->add_option("--samples", opt.samples, "random samples per identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, opt, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.message() << "\n";
        return exit_code_for(e.kind());
    } catch (const json::exception& e) {
        err << "error [InvalidInput]: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error [internal]: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace galcoh

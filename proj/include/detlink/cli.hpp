// Command surface: parse ideals and specs, dispatch to the library, emit
// deterministic text or JSON reports with a stable schema:
//   { command, inputs, result, certificates, status, timing_ms }
// Rationals are emitted as exact "p/q" strings, never decimals.
#pragma once

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "detlink/lct.hpp"

namespace detlink::cli {

using ordered_json = nlohmann::ordered_json;

enum class Subcommand { LctDet, LctMonomial, Link, Ord, Gb, Quotient, Verify };

inline const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::LctDet: return "lct-det";
        case Subcommand::LctMonomial: return "lct-monomial";
        case Subcommand::Link: return "link";
        case Subcommand::Ord: return "ord";
        case Subcommand::Gb: return "gb";
        case Subcommand::Quotient: return "quotient";
        case Subcommand::Verify: return "verify";
    }
    return "?";
}

enum class OutputFormat { Text, Json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandRequest {
    Subcommand sub = Subcommand::LctDet;
    OutputFormat format = OutputFormat::Text;

    std::optional<std::array<int, 3>> spec;  // --spec m n r
    std::optional<int> stage;                // --stage i
    LinkMode mode = LinkMode::FullGeneric;   // --mode full|specialized
    std::vector<uint64_t> seeds = {0, 1, 2};  // --seed ...
    long long coeff_bound = 1000;            // --bound B
    int budget_vars = 14;                    // --budget-vars K
    bool override_budget = false;            // --force
    uint64_t max_steps = GbOptions{}.max_steps;  // --max-steps
    int max_m = 12;                          // --max M for sweeps

    std::string ideal_text;                // --ideal "g1, g2"
    std::vector<std::string> vars;         // --vars x1 x2 ...
    std::string ideal_file;                // --ideal-file path
    std::string by_text;                   // quotient --by "h1, h2"
    std::string order_name = "grevlex";    // gb --order
    std::vector<std::string> block;        // ord --block names
    std::optional<long long> codim;        // link --codim
    bool check_double = false;             // link --check-double
    std::string verify_target;             // verify <target>
};

struct RunReport {
    std::string command;
    ordered_json inputs;
    std::string inputs_digest;
    ordered_json result;
    ordered_json certificates;
    std::string status = "ok";  // ok | inconclusive | resource-limit | error
    int64_t timing_ms = 0;
    int exit_code = 0;
    std::string text;  // human rendering of the same numbers
};

// ---------------------------------------------------------------------------
// serialization

inline ordered_json report_to_json(const RunReport& r) {
    ordered_json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["inputs"]["digest"] = r.inputs_digest;
    j["result"] = r.result;
    j["certificates"] = r.certificates;
    j["status"] = r.status;
    j["timing_ms"] = r.timing_ms;
    return j;
}

inline RunReport report_from_json(const ordered_json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.inputs_digest = r.inputs.at("digest").get<std::string>();
    r.inputs.erase("digest");
    r.result = j.at("result");
    r.certificates = j.at("certificates");
    r.status = j.at("status").get<std::string>();
    r.timing_ms = j.at("timing_ms").get<int64_t>();
    return r;
}

namespace detail {

inline std::string fnv1a_digest(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline ordered_json rational_json(const Rational& q) { return q.to_fraction_string(); }

inline ordered_json rational_vec_json(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

inline ordered_json lp_certificate_json(const LpCertificate& c) {
    ordered_json j;
    switch (c.status) {
        case LpStatus::Optimal: j["status"] = "optimal"; break;
        case LpStatus::Infeasible: j["status"] = "infeasible"; break;
        case LpStatus::Unbounded: j["status"] = "unbounded"; break;
    }
    j["primal"] = c.primal ? rational_vec_json(*c.primal) : ordered_json(nullptr);
    j["dual"] = c.dual ? rational_vec_json(*c.dual) : ordered_json(nullptr);
    j["objective"] = c.objective_value ? rational_json(*c.objective_value) : ordered_json(nullptr);
    j["pivots"] = c.pivots;
    return j;
}

inline ordered_json stage_json(const StageData& d, ordered_json predicted, ordered_json computed) {
    ordered_json j;
    j["i"] = d.i;
    j["m_i"] = d.m_i;
    j["n_i"] = d.n_i;
    j["r_i"] = d.r_i;
    j["a_i"] = d.a_i;
    j["k_i"] = d.k_i;
    j["q_i"] = d.q_i;
    j["predicted"] = std::move(predicted);
    j["computed"] = std::move(computed);
    return j;
}

inline ordered_json verifier_json(const VerifierReport& rep) {
    ordered_json j;
    j["scope"] = rep.scope;
    j["total"] = rep.cases.size();
    size_t passed = 0;
    for (const auto& c : rep.cases) passed += c.pass ? 1 : 0;
    j["passed"] = passed;
    j["all_pass"] = rep.all_pass;
    ordered_json cases = ordered_json::array();
    for (const auto& c : rep.cases) {
        ordered_json cj;
        cj["params"] = c.params;
        cj["expected"] = c.expected;
        cj["observed"] = c.observed;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    return j;
}

inline std::string verifier_text(const std::string& name, const VerifierReport& rep) {
    std::ostringstream out;
    size_t passed = 0;
    for (const auto& c : rep.cases) passed += c.pass ? 1 : 0;
    out << name << ": " << (rep.all_pass ? "PASS" : "FAIL") << " (" << passed << "/"
        << rep.cases.size() << " cases, " << rep.scope << ")\n";
    for (const auto& c : rep.cases) {
        if (!c.pass)
            out << "  FAIL " << c.params << ": expected " << c.expected << ", observed "
                << c.observed << "\n";
        if (!c.note.empty()) out << "  note " << c.params << ": " << c.note << "\n";
    }
    return out.str();
}

inline std::vector<std::string> basis_strings(const std::vector<Polynomial>& polys,
                                              const MonomialOrder& ord) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.to_string(ord));
    return out;
}

struct ParsedInput {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::string canonical;  // for the digest
};

inline ParsedInput load_ideal(const CommandRequest& req) {
    ParsedInput in;
    if (!req.ideal_file.empty()) {
        std::ifstream f(req.ideal_file);
        if (!f) throw UsageError("cannot open ideal file \"" + req.ideal_file + "\"");
        std::stringstream buf;
        buf << f.rdbuf();
        ParsedIdealFile parsed = parse_ideal_text(buf.str());
        in.ring = parsed.ring;
        in.gens = std::move(parsed.generators);
    } else if (!req.ideal_text.empty()) {
        if (req.vars.empty()) throw UsageError("--ideal requires --vars");
        in.ring = RingDescriptor::make(req.vars, block_tag::xblock);
        in.gens = parse_generators(req.ideal_text, in.ring);
    } else {
        throw UsageError("expected --ideal with --vars, or --ideal-file");
    }
    std::ostringstream canon;
    canon << "vars:";
    for (const auto& v : in.ring->names()) canon << " " << v;
    canon << ";gens:";
    for (const auto& g : in.gens) canon << " " << g.to_string() << ";";
    in.canonical = canon.str();
    return in;
}

inline GbOptions gb_options(const CommandRequest& req) {
    GbOptions o;
    o.max_steps = req.max_steps;
    return o;
}

inline MatrixSpec spec_of(const CommandRequest& req) {
    if (!req.spec) throw UsageError("expected --spec m n r");
    return MatrixSpec::make((*req.spec)[0], (*req.spec)[1], (*req.spec)[2]);
}

inline LinkComputeOptions link_compute_options(const CommandRequest& req) {
    LinkComputeOptions o;
    o.mode = req.mode;
    o.seeds = req.seeds;
    o.coeff_bound = req.coeff_bound;
    o.budget_vars = req.budget_vars;
    o.override_budget = req.override_budget;
    o.gb = gb_options(req);
    return o;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// subcommand handlers

namespace detail {

inline void run_lct_det(const CommandRequest& req, RunReport& rep) {
    MatrixSpec spec = spec_of(req);
    rep.inputs["spec"] = {spec.m, spec.n, spec.r};
    LctResult res = lct_determinantal(spec);
    rep.result["value"] = rational_json(res.value);
    rep.result["method"] = lct_method_name(res.method);
    rep.result["minimizing_t"] = *res.minimizing_index;
    rep.result["codim"] = spec.codim();
    ordered_json stages = ordered_json::array();
    for (const auto& d : resolution_data(spec))
        stages.push_back(stage_json(d, std::min<long long>(d.r_i, d.q_i), nullptr));
    rep.result["stages"] = std::move(stages);
    std::ostringstream out;
    out << "lct" << spec.to_string() << " = " << res.value.to_string() << " (minimizing t = "
        << *res.minimizing_index << ", method " << lct_method_name(res.method) << ", codim "
        << spec.codim() << ")\n";
    rep.text = out.str();
}

inline void run_lct_monomial(const CommandRequest& req, RunReport& rep) {
    ParsedInput in = load_ideal(req);
    rep.inputs["ideal"] = in.canonical;
    Ideal I(in.ring, in.gens);
    LctResult res = howald_lct(I);
    rep.result["value"] = rational_json(res.value);
    rep.result["method"] = lct_method_name(res.method);
    std::vector<std::string> gens;
    for (const auto& m : minimal_monomial_generators(I))
        gens.push_back(Polynomial::term(in.ring, m, Rational(1)).to_string());
    rep.result["minimal_generators"] = gens;
    std::ostringstream out;
    out << "lct(" << req.ideal_text << (req.ideal_file.empty() ? "" : req.ideal_file) << ") = "
        << res.value.to_string() << " by the Newton-polyhedron linear program\n";
    if (auto match = match_reference_case(I)) {
        if (match->quoted && *match->quoted != match->lp_value) {
            std::string note = "documented discrepancy: the certified optimum " +
                               match->lp_value.to_string() + " differs from the published value " +
                               match->quoted->to_string() + " quoted for this ideal";
            rep.result["note"] = note;
            out << "note: " << note << "\n";
        }
    }
    rep.certificates["lp"] = lp_certificate_json(*res.lp);
    out << "optimal weight vector (dual): ";
    for (const auto& w : *res.lp->dual) out << w.to_string() << " ";
    out << "\n";
    rep.text = out.str();
}

inline void run_gb(const CommandRequest& req, RunReport& rep) {
    ParsedInput in = load_ideal(req);
    rep.inputs["ideal"] = in.canonical;
    rep.inputs["order"] = req.order_name;
    MonomialOrder ord;
    if (req.order_name == "grevlex")
        ord = MonomialOrder::grevlex();
    else if (req.order_name == "lex")
        ord = MonomialOrder::lex();
    else
        throw UsageError("unknown order \"" + req.order_name + "\" (grevlex or lex)");
    auto basis = compute_reduced_gb(in.ring, in.gens, ord, gb_options(req));
    rep.result["basis"] = basis_strings(basis->elements, ord);
    rep.certificates["gb_stats"] = {{"reduction_steps", basis->stats.reduction_steps},
                                    {"pairs_considered", basis->stats.pairs_considered},
                                    {"basis_size", basis->elements.size()}};
    std::ostringstream out;
    out << "reduced basis (" << req.order_name << "), " << basis->elements.size()
        << " elements:\n";
    for (const auto& g : basis->elements) out << "  " << g.to_string(ord) << "\n";
    rep.text = out.str();
}

inline void run_quotient(const CommandRequest& req, RunReport& rep) {
    ParsedInput in = load_ideal(req);
    if (req.by_text.empty()) throw UsageError("quotient requires --by");
    rep.inputs["ideal"] = in.canonical;
    rep.inputs["by"] = req.by_text;
    Ideal I(in.ring, in.gens);
    Ideal J(in.ring, parse_generators(req.by_text, in.ring));
    Ideal Q = ideal_quotient(I, J, gb_options(req));
    auto basis = Q.reduced_gb(MonomialOrder::grevlex(), gb_options(req));
    rep.result["basis"] = basis_strings(basis->elements, MonomialOrder::grevlex());
    std::ostringstream out;
    out << "quotient reduced basis, " << basis->elements.size() << " elements:\n";
    for (const auto& g : basis->elements) out << "  " << g.to_string() << "\n";
    rep.text = out.str();
}

inline void run_link(const CommandRequest& req, RunReport& rep) {
    LinkOptions lo;
    lo.mode = req.mode;
    lo.seed = req.seeds.empty() ? 0 : req.seeds[0];
    lo.coeff_bound = req.coeff_bound;
    lo.codim = req.codim;
    lo.gb = gb_options(req);
    Ideal base;
    if (req.spec) {
        MatrixSpec spec = spec_of(req);
        rep.inputs["spec"] = {spec.m, spec.n, spec.r};
        base = determinantal_ideal(spec);
        lo.codim = spec.codim();
    } else {
        ParsedInput in = load_ideal(req);
        rep.inputs["ideal"] = in.canonical;
        base = Ideal(in.ring, in.gens);
    }
    rep.inputs["mode"] = req.mode == LinkMode::FullGeneric ? "full" : "specialized";
    if (req.mode == LinkMode::FullGeneric) {
        long long vc = static_cast<long long>(base.ring()->nvars()) +
                       (lo.codim ? *lo.codim
                                 : static_cast<long long>(base.ring()->nvars()) -
                                       ideal_dimension(base, lo.gb)) *
                           static_cast<long long>(base.generators().size());
        if (vc > req.budget_vars && !req.override_budget)
            throw UsageError("full-generic link needs " + std::to_string(vc) +
                             " variables, over the budget of " + std::to_string(req.budget_vars) +
                             " (raise --budget-vars or pass --force)");
    }
    LinkSetup link = generic_link(base, lo);
    rep.result["mu"] = link.mu;
    rep.result["c"] = link.c;
    rep.result["ambient_vars"] = link.ambient->names();
    rep.result["f"] = basis_strings(link.fs, MonomialOrder::grevlex());
    auto basis = link.iy.reduced_gb(MonomialOrder::grevlex(), lo.gb);
    rep.result["link_basis"] = basis_strings(basis->elements, MonomialOrder::grevlex());
    uint32_t ordx = ord_variable_block(base, block_tag::xblock);
    uint32_t ordy = ord_variable_block(link.iy, link.ambient->block_indices(block_tag::xblock));
    rep.result["ord_x_base"] = ordx;
    rep.result["ord_x_link"] = ordy;
    VerifierReport eq1 = eq1_sanity(base, link);
    rep.result["eq1_pass"] = eq1.all_pass;
    if (req.check_double) rep.result["double_link"] = double_link_check(base, link, lo.gb);
    std::ostringstream out;
    out << "generic link: mu = " << link.mu << ", c = " << link.c << ", "
        << basis->elements.size() << " basis elements\n";
    for (const auto& g : basis->elements) out << "  " << g.to_string() << "\n";
    out << "ord over xblock: base " << ordx << ", link " << ordy << "\n";
    if (req.check_double)
        out << "double link check: " << (rep.result["double_link"].get<bool>() ? "pass" : "fail")
            << "\n";
    if (!eq1.all_pass) out << "eq1 bound check FAILED\n";
    rep.text = out.str();
    if (!eq1.all_pass || (req.check_double && !rep.result["double_link"].get<bool>()))
        rep.exit_code = 1;
}

inline void run_ord(const CommandRequest& req, RunReport& rep) {
    if (req.spec) {
        MatrixSpec spec = spec_of(req);
        if (!req.stage) throw UsageError("ord --spec requires --stage");
        rep.inputs["spec"] = {spec.m, spec.n, spec.r};
        rep.inputs["stage"] = *req.stage;
        rep.inputs["mode"] = req.mode == LinkMode::FullGeneric ? "full" : "specialized";
        if (req.mode == LinkMode::Specialized) {
            ordered_json seeds = ordered_json::array();
            for (uint64_t s : req.seeds) seeds.push_back(s);
            rep.inputs["seeds"] = std::move(seeds);
        }
        OrderReport ord = computed_link_order(spec, *req.stage, link_compute_options(req));
        StageData d = resolution_data(spec)[static_cast<size_t>(*req.stage - 1)];
        rep.result["stage"] = stage_json(d, ord.predicted,
                                         ord.computed ? ordered_json(*ord.computed)
                                                      : ordered_json(nullptr));
        rep.result["agree"] = ord.agree;
        if (!ord.per_seed.empty()) {
            ordered_json per = ordered_json::array();
            for (auto [s, v] : ord.per_seed) per.push_back({{"seed", s}, {"ord", v}});
            rep.result["per_seed"] = std::move(per);
        }
        rep.status = ord.status;
        std::ostringstream out;
        out << "spec " << spec.to_string() << " stage " << *req.stage << ": predicted "
            << ord.predicted << ", computed "
            << (ord.computed ? std::to_string(*ord.computed) : std::string("inconclusive"))
            << ", " << (ord.agree ? "agree" : "disagree") << "\n";
        rep.text = out.str();
        if (!ord.agree) rep.exit_code = 1;
    } else {
        ParsedInput in = load_ideal(req);
        if (req.block.empty()) throw UsageError("ord --ideal requires --block");
        rep.inputs["ideal"] = in.canonical;
        rep.inputs["block"] = req.block;
        Ideal J(in.ring, in.gens);
        std::vector<size_t> idx;
        for (const auto& name : req.block) {
            size_t i = in.ring->index_of(name);
            if (i == RingDescriptor::npos) throw UsageError("unknown block variable \"" + name + "\"");
            idx.push_back(i);
        }
        uint32_t v = ord_variable_block(J, idx);
        rep.result["ord"] = v == ORD_INFINITY ? ordered_json("infinity") : ordered_json(v);
        std::ostringstream out;
        out << "ord along the block ideal = "
            << (v == ORD_INFINITY ? std::string("infinity") : std::to_string(v)) << "\n";
        rep.text = out.str();
    }
}

// criterion-style regression of the worked 3x2 example: the link built from
// the signed delete-row minor sequence equals the stacked-matrix minors
inline VerifierReport verify_worked_example(const GbOptions& gb) {
    VerifierReport rep;
    rep.scope = "worked 3x2 example";
    GenericMatrix M = make_generic_matrix(3, 2);
    auto minors = matrix_minors(M.entries, 2);
    std::vector<Polynomial> signed_seq = {minors[2], -minors[1], minors[0]};
    LinkOptions lo;
    lo.codim = 2;
    lo.gb = gb;
    LinkSetup link = generic_link_sequence(M.ring, signed_seq, lo);
    RingPtr amb = link.ambient;
    auto v = [&](const std::string& n) { return Polynomial::variable(amb, n); };
    std::vector<std::vector<Polynomial>> stacked = {{v("x11"), v("x21"), v("x31")},
                                                    {v("x12"), v("x22"), v("x32")},
                                                    {v("t11"), v("t12"), v("t13")},
                                                    {v("t21"), v("t22"), v("t23")}};
    Ideal stacked_ideal(amb, matrix_minors(stacked, 3));
    VerifierCase c1;
    c1.params = "link ideal";
    c1.expected = "3x3 minors of the stacked 4x3 matrix";
    bool eq = ideal_equal(link.iy, stacked_ideal, gb);
    c1.observed = eq ? "equal reduced bases" : "different reduced bases";
    c1.pass = eq;
    rep.add(std::move(c1));
    uint32_t ordx = ord_variable_block(link.base, block_tag::xblock);
    uint32_t ordy = ord_variable_block(link.iy, amb->block_indices(block_tag::xblock));
    rep.add({"ord of the base along the entry divisor", "2", std::to_string(ordx), ordx == 2, ""});
    rep.add({"ord of the link along the entry divisor", "1", std::to_string(ordy), ordy == 1, ""});
    long long pred = predicted_link_order(MatrixSpec::make(3, 2, 2), 1);
    rep.add({"predicted stage-1 order", "1", std::to_string(pred), pred == 1, ""});
    return rep;
}

inline void run_verify(const CommandRequest& req, RunReport& rep) {
    rep.inputs["target"] = req.verify_target;
    VerifierReport vr;
    if (req.verify_target == "qibound") {
        rep.inputs["max"] = req.max_m;
        vr = verify_qibound(req.max_m);
    } else if (req.verify_target == "theorem1") {
        rep.inputs["max"] = req.max_m;
        vr = verify_theorem1(req.max_m);
    } else if (req.verify_target == "gendegree") {
        rep.inputs["max"] = req.max_m;
        vr = verify_gendegree_identity(req.max_m);
        if (req.spec) {
            MatrixSpec spec = spec_of(req);
            rep.inputs["spec"] = {spec.m, spec.n, spec.r};
            MinDegreeReport md = link_min_degree_check(spec, link_compute_options(req));
            VerifierCase c;
            c.params = "link generating degree " + spec.to_string();
            c.expected = std::to_string(md.expected);
            c.observed = md.observed ? std::to_string(*md.observed) : "-";
            c.pass = md.pass;
            vr.add(std::move(c));
        }
    } else if (req.verify_target == "corollary") {
        MatrixSpec spec = spec_of(req);
        rep.inputs["spec"] = {spec.m, spec.n, spec.r};
        vr = verify_corollary_vanishing(spec, link_compute_options(req));
    } else if (req.verify_target == "monomial-examples") {
        vr = verify_monomial_examples();
    } else if (req.verify_target == "worked-example") {
        vr = verify_worked_example(gb_options(req));
    } else {
        throw UsageError("unknown verify target \"" + req.verify_target +
                         "\" (qibound, theorem1, gendegree, corollary, monomial-examples, worked-example)");
    }
    rep.result = verifier_json(vr);
    rep.text = verifier_text("verify " + req.verify_target, vr);
    if (!vr.all_pass) rep.exit_code = 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline RunReport run(const CommandRequest& req) {
    RunReport rep;
    rep.command = subcommand_name(req.sub);
    rep.inputs = ordered_json::object();
    rep.result = ordered_json::object();
    rep.certificates = ordered_json::object();
    auto start = std::chrono::steady_clock::now();
    try {
        switch (req.sub) {
            case Subcommand::LctDet: detail::run_lct_det(req, rep); break;
            case Subcommand::LctMonomial: detail::run_lct_monomial(req, rep); break;
            case Subcommand::Link: detail::run_link(req, rep); break;
            case Subcommand::Ord: detail::run_ord(req, rep); break;
            case Subcommand::Gb: detail::run_gb(req, rep); break;
            case Subcommand::Quotient: detail::run_quotient(req, rep); break;
            case Subcommand::Verify: detail::run_verify(req, rep); break;
        }
        if (rep.status == "inconclusive") rep.exit_code = 1;
    } catch (const ResourceLimitError& e) {
        rep.status = "resource-limit";
        rep.result["error"] = e.what();
        rep.text = std::string("resource limit: ") + e.what() + "\n";
        rep.exit_code = 3;
    }
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::string canon = rep.command + "|" + rep.inputs.dump();
    rep.inputs_digest = detail::fnv1a_digest(canon);
    return rep;
}

}  // namespace detlink::cli

#include "commands.hpp"

#include "ramsey/cnf.hpp"
#include "ramsey/coloring_json.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/search.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ramsey::cli {

namespace {

struct Options {
    std::map<std::string, std::optional<long long>> ints;
    std::optional<std::string> m_list;
    std::optional<std::string> k_list;
    std::string h;
    std::string targets;
    std::string output;
    std::string inner;
    std::string range;
    std::string host;
    std::string cnf;
    std::string model;
    std::string id;
    std::string file;
    int jobs = 1;
    int max_complete = SearchBudget{}.max_complete;
    int max_bipartite = SearchBudget{}.max_bipartite_a;
    bool canonical = false;
    bool json = false;
    bool solve = false;
};

const char* const int_params[] = {"n", "n0", "n1", "n2", "s", "m", "t", "k", "r", "b"};

std::vector<long long> parse_int_list(const std::string& text, const std::string& flag)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ParseError("--" + flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

FormulaParams make_params(const Options& o)
{
    FormulaParams p;
    for (const auto& [name, v] : o.ints) {
        if (v) {
            p.set(name, *v);
        }
    }
    if (o.m_list) {
        p.m_list = parse_int_list(*o.m_list, "m-list");
    }
    if (o.k_list) {
        p.k_list = parse_int_list(*o.k_list, "k-list");
    }
    if (!o.h.empty()) {
        p.h = parse_target(o.h);
    }
    if (!o.targets.empty()) {
        p.targets = parse_target_list(o.targets);
    }
    return p;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw InvalidInput("cannot write '" + path + "'");
    }
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("--range: expected lo:hi, got '" + text + "'");
    }
    auto lo = parse_int_list(text.substr(0, colon), "range");
    auto hi = parse_int_list(text.substr(colon + 1), "range");
    if (lo.size() != 1 || hi.size() != 1) {
        throw ParseError("--range: expected lo:hi, got '" + text + "'");
    }
    return {static_cast<int>(lo[0]), static_cast<int>(hi[0])};
}

const char* kind_name(ResultKind k)
{
    switch (k) {
    case ResultKind::Exact:
        return "exact";
    case ResultKind::Upper:
        return "upper";
    case ResultKind::Bracket:
        return "bracket";
    default:
        return "pair";
    }
}

ordered_json formula_json(const FormulaResult& r)
{
    ordered_json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["kind"] = kind_name(r.kind);
    if (r.value) {
        j["value"] = *r.value;
    }
    if (r.lower) {
        j["lower"] = *r.lower;
        j["upper"] = *r.upper;
    }
    if (r.pair) {
        j["pair"] = {r.pair->first, r.pair->second};
    }
    j["large_n_caveat"] = r.large_n_caveat;
    ordered_json pre = ordered_json::array();
    for (const auto& p : r.preconditions) {
        pre.push_back({{"text", p.text}, {"passed", p.passed}});
    }
    j["preconditions"] = std::move(pre);
    ordered_json derived = ordered_json::object();
    for (const auto& [k, v] : r.derived) {
        derived[k] = v;
    }
    j["derived"] = std::move(derived);
    return j;
}

ordered_json violation_json(const Violation& v)
{
    return {{"color", v.color}, {"target", v.target.to_string()}, {"vertices", v.vertices}};
}

ordered_json targets_json(const std::vector<TargetGraph>& targets)
{
    ordered_json out = ordered_json::array();
    for (const auto& t : targets) {
        out.push_back(t.to_string());
    }
    return out;
}

ordered_json outcome_json(const SearchOutcome& s)
{
    ordered_json j;
    j["exact"] = s.exact;
    if (s.value) {
        j["value"] = *s.value;
    }
    j["lower"] = s.lower ? ordered_json(*s.lower) : ordered_json(nullptr);
    j["upper"] = s.upper ? ordered_json(*s.upper) : ordered_json(nullptr);
    ordered_json trace = ordered_json::array();
    for (const auto& [n, a] : s.trace) {
        trace.push_back({{"size", n}, {"arrows", a}});
    }
    j["trace"] = std::move(trace);
    j["monotone_checked"] = s.monotone_checked;
    if (s.certificate) {
        j["certificate"] = coloring_to_json(*s.certificate);
    }
    return j;
}

SearchOptions search_options(const Options& o)
{
    SearchOptions opt;
    opt.jobs = std::max(1, o.jobs);
    opt.budget.max_complete = o.max_complete;
    opt.budget.max_bipartite_a = o.max_bipartite;
    opt.budget.max_bipartite_b = o.max_bipartite;
    return opt;
}

struct Outcome {
    ordered_json inputs = ordered_json::object();
    ordered_json result = ordered_json::object();
    std::string status = "ok";
    int code = ok;
    std::vector<std::string> text;
};

Outcome cmd_eval(const Options& o)
{
    Outcome out;
    FormulaParams p = make_params(o);
    out.inputs["id"] = o.id;
    out.inputs["params"] = params_to_json(p);
    FormulaResult r = eval_formula(o.id, p);
    out.result = formula_json(r);
    if (!r.ok()) {
        throw PreconditionFailed(o.id + ": precondition failed: " + r.failure());
    }
    return out;
}

Outcome cmd_witness(const Options& o)
{
    Outcome out;
    FormulaParams p = make_params(o);
    out.inputs["id"] = o.id;
    out.inputs["params"] = params_to_json(p);
    std::optional<EdgeColoring> inner;
    if (!o.inner.empty()) {
        out.inputs["inner"] = o.inner;
        inner = coloring_from_text(read_file(o.inner));
    }
    Witness w = witness(o.id, p, inner);
    const ordered_json doc = witness_to_json(w);
    out.result["theorem"] = w.spec.theorem;
    out.result["targets"] = targets_json(w.spec.targets);
    out.result["claimed_value"] = w.spec.claimed_value;
    out.result["order"] = w.spec.order;
    out.result["colors"] = w.coloring.colors();
    out.result["verification"] = "passed";
    if (!o.output.empty()) {
        write_file(o.output, doc.dump() + "\n");
        out.result["file"] = o.output;
    } else {
        out.result["witness"] = doc;
    }
    return out;
}

Outcome cmd_verify(const Options& o)
{
    Outcome out;
    out.inputs["file"] = o.file;
    const ordered_json doc = parse_json_text(read_file(o.file));
    EdgeColoring coloring = coloring_from_json(doc);
    std::vector<TargetGraph> targets;
    if (!o.targets.empty()) {
        targets = parse_target_list(o.targets);
    } else if (doc.contains("targets") && doc.at("targets").is_array()) {
        for (const auto& t : doc.at("targets")) {
            if (!t.is_string()) {
                throw ParseError("field 'targets': expected target tokens");
            }
            targets.push_back(parse_target(t.get<std::string>()));
        }
    } else {
        throw InvalidInput("no --targets given and the file has no targets header");
    }
    out.inputs["targets"] = targets_json(targets);
    out.result["host"] = coloring.host().name();
    out.result["colors"] = coloring.colors();
    if (auto v = violates(coloring, targets)) {
        out.result["verification"] = "failed";
        out.result["violation"] = violation_json(*v);
        out.result["violation_checked"] = violation_is_genuine(coloring, *v);
        out.status = "failed";
        out.code = verification_failed;
    } else {
        out.result["verification"] = "passed";
    }
    return out;
}

Outcome cmd_search(const Options& o, bool bipartite)
{
    Outcome out;
    const auto targets = parse_target_list(o.targets);
    const auto [lo, hi] = parse_range(o.range);
    out.inputs["targets"] = targets_json(targets);
    out.inputs["range"] = {lo, hi};
    const SearchOptions opt = search_options(o);
    const SearchOutcome s =
        bipartite ? bipartite_search(targets, lo, hi, opt) : ramsey_search(targets, lo, hi, opt);
    out.result = outcome_json(s);
    if (s.certificate) {
        if (violates(*s.certificate, targets)) {
            throw VerificationFailed("search certificate does not avoid the targets");
        }
        out.result["certificate_verification"] = "passed";
    }
    return out;
}

Outcome cmd_export_cnf(const Options& o)
{
    Outcome out;
    const Host host = parse_host(o.host);
    const auto targets = parse_target_list(o.targets);
    out.inputs["host"] = host.name();
    out.inputs["targets"] = targets_json(targets);
    const ArrowQuery q{host, targets};
    check_query(q, search_options(o).budget);
    const CnfInstance inst = to_cnf(q);
    const std::string text = to_dimacs(inst);
    out.result["variables"] = inst.variables;
    out.result["clauses"] = inst.clauses.size();
    if (!o.output.empty()) {
        write_file(o.output, text);
        out.result["file"] = o.output;
    }
    if (o.solve || inst.variables <= 24) {
        auto model = solve_small(inst);
        out.result["satisfiable"] = model.has_value();
        if (model) {
            ordered_json lits = ordered_json::array();
            for (int v = 1; v <= inst.variables; ++v) {
                lits.push_back((*model)[v] ? v : -v);
            }
            out.result["model"] = std::move(lits);
            EdgeColoring c = decode_model(inst, *model);
            out.result["model_coloring"] = coloring_to_json(c);
            out.result["model_verification"] = violates(c, targets) ? "failed" : "passed";
        }
    }
    if (o.output.empty()) {
        out.result["dimacs"] = text;
    }
    return out;
}

Outcome cmd_decode_model(const Options& o)
{
    Outcome out;
    out.inputs["cnf"] = o.cnf;
    out.inputs["model"] = o.model;
    const CnfInstance inst = parse_dimacs(read_file(o.cnf));
    const auto lits = parse_model(read_file(o.model));
    const auto assignment = model_assignment(inst, lits);
    EdgeColoring c = decode_model(inst, assignment);
    out.result["satisfies_instance"] = satisfies(inst, assignment);
    out.result["coloring"] = coloring_to_json(c);
    if (!inst.targets.empty()) {
        if (auto v = violates(c, inst.targets)) {
            out.result["verification"] = "failed";
            out.result["violation"] = violation_json(*v);
            out.status = "failed";
            out.code = verification_failed;
        } else {
            out.result["verification"] = "passed";
        }
    }
    if (!o.output.empty()) {
        write_file(o.output, coloring_to_text(c) + "\n");
        out.result["file"] = o.output;
    }
    return out;
}

std::string params_text(const FormulaParams& p)
{
    std::string s;
    const ordered_json j = params_to_json(p);
    for (const auto& [k, v] : j.items()) {
        s += (s.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return s;
}

std::string value_text(const FormulaResult& r)
{
    if (!r.ok()) {
        return "precondition failed";
    }
    if (r.value) {
        return (r.kind == ResultKind::Upper ? "<= " : "") + std::to_string(*r.value);
    }
    if (r.lower) {
        return "[" + std::to_string(*r.lower) + "," + std::to_string(*r.upper) + "]";
    }
    return "(" + std::to_string(r.pair->first) + "," + std::to_string(r.pair->second) + ")";
}

Outcome cmd_table()
{
    Outcome out;
    ordered_json rows = ordered_json::array();
    std::vector<std::array<std::string, 4>> cells{{"id", "params", "result", "caveat"}};
    for (const auto& [id, p] : default_grid()) {
        FormulaResult r = eval_formula(id, p);
        ordered_json row = formula_json(r);
        row["params"] = params_to_json(p);
        rows.push_back(std::move(row));
        cells.push_back({id, params_text(p), value_text(r), r.large_n_caveat ? "large n" : ""});
    }
    out.result["rows"] = std::move(rows);
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < 4; ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    for (const auto& row : cells) {
        std::ostringstream line;
        for (std::size_t i = 0; i < 4; ++i) {
            line << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        }
        std::string s = line.str();
        s.erase(s.find_last_not_of(' ') + 1);
        out.text.push_back(s);
    }
    return out;
}

const char* error_type(const Error& e)
{
    if (dynamic_cast<const PreconditionFailed*>(&e)) {
        return "precondition_failed";
    }
    if (dynamic_cast<const ParseError*>(&e)) {
        return "parse_error";
    }
    if (dynamic_cast<const BudgetExceeded*>(&e)) {
        return "budget_exceeded";
    }
    if (dynamic_cast<const VerificationFailed*>(&e)) {
        return "verification_failed";
    }
    return "invalid_input";
}

int error_code(const Error& e)
{
    if (dynamic_cast<const BudgetExceeded*>(&e)) {
        return budget_exceeded;
    }
    if (dynamic_cast<const VerificationFailed*>(&e)) {
        return verification_failed;
    }
    return input_error;
}

void add_param_flags(CLI::App* sub, Options& o)
{
    for (const char* name : int_params) {
        sub->add_option(std::string("--") + name, o.ints[name], std::string("parameter ") + name);
    }
    sub->add_option("--m-list", o.m_list, "matching sizes m_1,..,m_s (empty for none)");
    sub->add_option("--k-list", o.k_list, "star sizes k_1,..,k_t (empty for none)");
    sub->add_option("-H,--hgraph", o.h, "first graph H of the combining bound (target token)");
    sub->add_option("--targets", o.targets, "comma-separated targets: P<n>, C<n>, <t>K2, S<k>, B<a>x<b>, M<p>x<r>");
}

void add_budget_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--jobs", o.jobs, "worker threads (output does not depend on it)");
    sub->add_option("--max-complete", o.max_complete, "largest complete host searched");
    sub->add_option("--max-bipartite", o.max_bipartite, "largest bipartite side searched");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Ramsey and bipartite Ramsey numbers: formulas, lower-bound witnesses and exhaustive search"};
    app.require_subcommand(1);
    app.add_flag("--canonical", o.canonical, "omit the timing field from the report");

    auto* eval = app.add_subcommand("eval", "evaluate a catalog formula");
    eval->add_option("id", o.id, "formula id")->required();
    add_param_flags(eval, o);

    auto* wit = app.add_subcommand("witness", "build and verify a lower-bound coloring");
    wit->add_option("id", o.id, "theorem id")->required();
    add_param_flags(wit, o);
    wit->add_option("--inner", o.inner, "inner coloring JSON (cor_AA)");
    wit->add_option("-o,--output", o.output, "write the witness JSON here");

    auto* ver = app.add_subcommand("verify", "check a coloring file against targets");
    ver->add_option("file", o.file, "coloring JSON")->required();
    ver->add_option("--targets", o.targets, "targets, one per color (default: the file's header)");

    auto* search = app.add_subcommand("search", "smallest n with K_n arrowing the targets");
    search->add_option("--targets", o.targets, "targets, one per color")->required();
    search->add_option("--range", o.range, "lo:hi")->required();
    add_budget_flags(search, o);

    auto* bsearch = app.add_subcommand("bsearch", "smallest b with K_{b,b} arrowing the targets");
    bsearch->add_option("--targets", o.targets, "targets, one per color")->required();
    bsearch->add_option("--range", o.range, "lo:hi")->required();
    add_budget_flags(bsearch, o);

    auto* cnf = app.add_subcommand("export-cnf", "DIMACS encoding of 'host does not arrow targets'");
    cnf->add_option("--host", o.host, "K<n> or K<a>,<b>")->required();
    cnf->add_option("--targets", o.targets, "targets, one per color")->required();
    cnf->add_option("-o,--output", o.output, "write DIMACS here");
    cnf->add_flag("--solve", o.solve, "decide satisfiability by enumeration (<= 24 variables)");
    add_budget_flags(cnf, o);

    auto* dec = app.add_subcommand("decode-model", "turn a solver model into a coloring");
    dec->add_option("--cnf", o.cnf, "DIMACS file from export-cnf")->required();
    dec->add_option("--model", o.model, "solver model (signed literals)")->required();
    dec->add_option("-o,--output", o.output, "write the coloring JSON here");

    auto* table = app.add_subcommand("table", "formula catalog over its default grid");
    table->add_flag("--json", o.json, "print the JSON report instead of the text table");
    table->add_option("-o,--output", o.output, "also write the JSON report here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out;
        const int rc = app.exit(e, cli_out, err);
        out << cli_out.str();
        return rc == 0 ? ok : input_error;
    }

    std::string name = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    ordered_json report;
    report["command"] = name;
    report["argv"] = args;
    int code = ok;
    Outcome result;
    try {
        if (name == "eval") {
            result = cmd_eval(o);
        } else if (name == "witness") {
            result = cmd_witness(o);
        } else if (name == "verify") {
            result = cmd_verify(o);
        } else if (name == "search") {
            result = cmd_search(o, false);
        } else if (name == "bsearch") {
            result = cmd_search(o, true);
        } else if (name == "export-cnf") {
            result = cmd_export_cnf(o);
        } else if (name == "decode-model") {
            result = cmd_decode_model(o);
        } else {
            result = cmd_table();
        }
        report["inputs"] = result.inputs;
        report["result"] = result.result;
        report["status"] = result.status;
        code = result.code;
    } catch (const Error& e) {
        // Partial inputs/results (e.g. failed preconditions) stay in the report.
        report["inputs"] = result.inputs;
        if (name == "eval") {
            try {
                FormulaParams p = make_params(o);
                report["inputs"] = {{"id", o.id}, {"params", params_to_json(p)}};
                FormulaResult r = eval_formula(o.id, p);
                report["result"] = formula_json(r);
            } catch (const Error&) {
            }
        }
        report["status"] = "error";
        report["error"] = {{"type", error_type(e)}, {"message", e.what()}};
        err << "error: " << e.what() << "\n";
        code = error_code(e);
    }
    if (!o.canonical) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timing"] = {{"wall_ms", ms}};
    }
    if (name == "table" && code == ok) {
        if (!o.output.empty()) {
            write_file(o.output, report.dump(2) + "\n");
        }
        if (!o.json) {
            for (const auto& line : result.text) {
                out << line << "\n";
            }
            return code;
        }
    }
    out << report.dump(2) << "\n";
    return code;
}

} // namespace ramsey::cli

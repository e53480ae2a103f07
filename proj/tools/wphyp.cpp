// wphyp: classify weighted hypersurface families, enumerate them, run the
// census and the verification suites.

#include <CLI11.hpp>
#include <unistd.h>

#include <iostream>
#include <sstream>

#include <wphyp/suites.hpp>

namespace {

using namespace wphyp;

enum class Format { Json, Csv, Markdown };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format pick_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "markdown" || s == "md") return Format::Markdown;
    if (s.empty()) return isatty(STDOUT_FILENO) ? Format::Markdown : Format::Json;
    throw UsageError("unknown format: " + s);
}

std::vector<Int> parse_weights(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw UsageError("weights must be comma separated integers: " + s);
        }
        if (pos != tok.size() || v < 1)
            throw UsageError("weights must be positive integers: " + s);
        out.push_back(v);
    }
    if (out.size() < 2)
        throw UsageError("need at least two weights");
    return out;
}

std::pair<int, int> parse_range(const std::string& s) {
    try {
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
            int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad dimension range (expected N or LO..HI): " + s);
    }
}

std::string csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// classify

void print_verdict(const Verdict& v, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << to_json(v).dump(2) << "\n";
        return;
    }
    const std::string primary = v.primary_rule ? to_string(*v.primary_rule) : "";
    if (fmt == Format::Csv) {
        std::cout << "family,outcome,primary_rule,rule,provenance,rule_holds,label,lhs,rel,rhs,holds\n";
        if (v.rules.empty())
            std::cout << csv(v.family.str()) << "," << to_string(v.outcome) << ",,,,,,,,,\n";
        for (const auto& rr : v.rules)
            for (const auto& c : rr.checks)
                std::cout << csv(v.family.str()) << "," << to_string(v.outcome) << "," << primary << ","
                          << to_string(rr.rule) << "," << to_string(rr.provenance) << "," << rr.holds << ","
                          << csv(c.label) << "," << c.lhs << "," << csv(c.rel) << "," << c.rhs << "," << c.holds
                          << "\n";
        return;
    }
    const auto& f = v.family;
    std::cout << "## " << f.str() << "\n\n";
    std::cout << "weights (canonical order): (" << join(f.weights.vec()) << "), degree " << f.degree << "\n\n";
    std::cout << "outcome: **" << to_string(v.outcome) << "**";
    if (v.primary_rule)
        std::cout << " (primary rule " << primary << ")";
    std::cout << "\n\n";
    const auto val = validate(f);
    if (val.smooth_general_member) {
        const auto inv = invariants(f);
        std::cout << "| n | a_sigma | a_pi | a_max | I_X | e | r |\n|---|---|---|---|---|---|---|\n";
        std::cout << "| " << inv.n << " | " << inv.a_sigma << " | " << inv.a_pi << " | " << inv.a_max << " | "
                  << inv.index << " | " << (inv.e ? std::to_string(*inv.e) : "-") << " | " << inv.r << " |\n\n";
    }
    for (const auto& note : v.notes)
        std::cout << "- " << note << "\n";
    if (!v.notes.empty())
        std::cout << "\n";
    if (!v.rules.empty()) {
        std::cout << "| rule | provenance | holds | check | lhs | rel | rhs | ok |\n";
        std::cout << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& rr : v.rules)
            for (std::size_t i = 0; i < rr.checks.size(); ++i) {
                const auto& c = rr.checks[i];
                std::cout << "| " << (i ? "" : to_string(rr.rule)) << " | " << (i ? "" : to_string(rr.provenance))
                          << " | " << (i ? "" : yes(rr.holds)) << " | " << c.label << " | " << c.lhs << " | "
                          << c.rel << " | " << c.rhs << " | " << yes(c.holds) << " |\n";
            }
        std::cout << "\n";
        for (const auto& rr : v.rules)
            if (rr.certificate)
                std::cout << "certificate " << to_string(rr.rule) << ": `" << to_json(*rr.certificate).dump() << "`\n";
    }
    std::cout << "\n_" << verdict_scope << "_\n";
}

// enumerate / census

struct QueryArgs {
    std::string n_range = "3";
    std::optional<Int> index;
    std::optional<Int> max_degree;
    std::optional<Int> max_weight;
};

std::vector<EnumerationQuery> queries(const QueryArgs& a) {
    auto [lo, hi] = parse_range(a.n_range);
    if (lo < 3 || hi < lo)
        throw UsageError("dimension range must satisfy 3 <= LO <= HI");
    std::vector<EnumerationQuery> out;
    for (int n = lo; n <= hi; ++n)
        out.push_back({n, a.index, a.max_degree, a.max_weight});
    return out;
}

std::vector<EnumeratedFamily> run_enumeration(const std::vector<EnumerationQuery>& qs) {
    std::vector<EnumeratedFamily> out;
    for (const auto& q : qs) {
        try {
            auto part = enumerate_families(q);
            out.insert(out.end(), part.begin(), part.end());
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }
    return out;
}

json metadata(const QueryArgs& a, const std::vector<EnumerationQuery>& qs) {
    json q{{"n", a.n_range}};
    q["index"] = a.index ? json(*a.index) : json(nullptr);
    q["max_degree"] = a.max_degree ? json(*a.max_degree) : json(nullptr);
    q["max_weight"] = a.max_weight ? json(*a.max_weight) : json(nullptr);
    return {{"query", q}, {"bounds", search_bounds(qs.front())}, {"engine_version", engine_version}};
}

void print_enumeration(const QueryArgs& a, Format fmt) {
    const auto qs = queries(a);
    const auto fams = run_enumeration(qs);
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& f : fams)
            rows.push_back(to_json(f));
        std::cout << json{{"schema_version", schema_version}, {"metadata", metadata(a, qs)}, {"count", fams.size()},
                          {"families", rows}}
                         .dump(2)
                  << "\n";
        return;
    }
    if (fmt == Format::Csv) {
        std::cout << "n,degree,weights,tuple,s,e,index\n";
        for (const auto& f : fams)
            std::cout << f.descriptor.n() << "," << f.descriptor.degree << "," << csv(join(f.descriptor.weights.vec()))
                      << "," << csv(join(f.tuple)) << "," << f.s << "," << f.e << ","
                      << invariants(f.descriptor).index << "\n";
        return;
    }
    std::cout << "| n | family | tuple | s | e | I_X |\n|---|---|---|---|---|---|\n";
    for (const auto& f : fams)
        std::cout << "| " << f.descriptor.n() << " | " << f.descriptor.str() << " | (" << join(f.tuple) << ") | " << f.s
                  << " | " << f.e << " | " << invariants(f.descriptor).index << " |\n";
    std::cout << "\n" << fams.size() << " families\n";
}

std::string fired_rules(const Verdict& v) {
    std::string out;
    for (const auto& rr : v.rules)
        if (rr.holds)
            out += (out.empty() ? "" : " ") + std::string(to_string(rr.rule));
    return out;
}

void print_census(const QueryArgs& a, const ClassifyOptions& opts, Format fmt) {
    const auto qs = queries(a);
    const auto c = census(run_enumeration(qs), opts);
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& r : c.rows) {
            json row = to_json(r.family);
            row["outcome"] = to_string(r.verdict.outcome);
            row["primary_rule"] = r.verdict.primary_rule ? json(to_string(*r.verdict.primary_rule)) : json(nullptr);
            row["fired"] = fired_rules(r.verdict);
            rows.push_back(row);
        }
        std::cout << json{{"schema_version", schema_version},
                          {"metadata", metadata(a, qs)},
                          {"literature", opts.literature},
                          {"summary", {{"rows", c.rows.size()}, {"by_outcome", c.by_outcome}, {"by_primary_rule", c.by_primary_rule}}},
                          {"rows", rows},
                          {"scope", verdict_scope}}
                         .dump(2)
                  << "\n";
        return;
    }
    if (fmt == Format::Csv) {
        std::cout << "n,degree,weights,index,outcome,primary_rule,fired\n";
        for (const auto& r : c.rows) {
            const auto& f = r.family.descriptor;
            std::cout << f.n() << "," << f.degree << "," << csv(join(f.weights.vec())) << ","
                      << invariants(f).index << "," << to_string(r.verdict.outcome) << ","
                      << (r.verdict.primary_rule ? to_string(*r.verdict.primary_rule) : "") << ","
                      << fired_rules(r.verdict) << "\n";
        }
        return;
    }
    std::cout << "| n | family | I_X | outcome | primary | fired |\n|---|---|---|---|---|---|\n";
    for (const auto& r : c.rows) {
        const auto& f = r.family.descriptor;
        std::cout << "| " << f.n() << " | " << f.str() << " | " << invariants(f).index << " | "
                  << to_string(r.verdict.outcome) << " | "
                  << (r.verdict.primary_rule ? to_string(*r.verdict.primary_rule) : "-") << " | "
                  << fired_rules(r.verdict) << " |\n";
    }
    std::cout << "\n" << c.rows.size() << " families;";
    for (const auto& [k, v] : c.by_outcome)
        std::cout << " " << k << "=" << v;
    std::cout << "\nprimary rules:";
    for (const auto& [k, v] : c.by_primary_rule)
        std::cout << " " << k << "=" << v;
    std::cout << "\n\n_" << verdict_scope << "_\n";
}

int print_suite(const suites::SuiteReport& r, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << suites::to_json(r).dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "suite,passed,cases,failures\n" << r.name << "," << r.passed << "," << r.cases << "," << r.failures
                  << "\n";
    } else {
        std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << " cases, "
                  << r.failures << " failures)\n\n```json\n"
                  << r.details.dump(2) << "\n```\n";
    }
    return r.passed ? 0 : 1;
}

void print_bound(const DimensionBound& b, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << to_json(b).dump(2) << "\n";
        return;
    }
    const std::string eff = b.effective ? std::to_string(*b.effective) : "";
    if (fmt == Format::Csv) {
        std::cout << "index,effective_bound,explicit_bound,n_prime,window\n"
                  << b.index << "," << eff << "," << b.explicit_bound << "," << b.n_prime << "," << b.window << "\n";
        return;
    }
    std::cout << "I = " << b.index << "\n\n";
    std::cout << "- effective bound (no exception on [n0, n0+" << b.window << "]): "
              << (eff.empty() ? "not found below the explicit bound" : eff) << "\n";
    std::cout << "- explicit bound max{3I-2, 4I-2, 3I+3(I-1)!-2, N'_I}: " << b.explicit_bound << "\n";
    std::cout << "- N'_I: " << b.n_prime << "\n";
    std::cout << "- dimensions with a family that is not proved non-stably-rational: ";
    for (std::size_t i = 0; i < b.exceptional_dimensions.size(); ++i)
        std::cout << (i ? ", " : "") << b.exceptional_dimensions[i];
    std::cout << (b.exceptional_dimensions.empty() ? "none\n" : "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable rationality classifier for weighted hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file mirroring the flags");
    app.config_formatter(std::make_shared<CLI::ConfigINI>());

    std::string format;
    bool no_literature = false;
    std::uint64_t seed = 0;
    int trials = 10;
    app.add_option("--format", format, "json | csv | markdown (default: markdown on a terminal, json otherwise)");
    app.add_flag("--no-literature", no_literature, "skip rules quoted from the cited literature");
    app.add_option("--seed", seed, "seed for sampled points");
    app.add_option("--trials", trials, "trials per chart for the jet suites")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "classify one family X_d in P(weights)");
    std::string weights;
    Int degree = 0;
    classify_cmd->add_option("--weights", weights, "comma separated weights, any order")->required();
    classify_cmd->add_option("--degree", degree, "degree d")->required();

    QueryArgs qa;
    auto add_query = [&](CLI::App* cmd) {
        cmd->add_option("--n", qa.n_range, "dimension N or range LO..HI");
        cmd->add_option("--index", qa.index, "Fano index I_X");
        cmd->add_option("--max-degree", qa.max_degree, "degree bound");
        cmd->add_option("--max-weight", qa.max_weight, "weight bound");
    };
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list all valid families for a query");
    add_query(enumerate_cmd);
    auto* census_cmd = app.add_subcommand("census", "classify every family of a query");
    add_query(census_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites::suite_names()));

    auto* bound_cmd = app.add_subcommand("bound", "dimension bound N_I beyond which every family is settled");
    Int bound_index = 0;
    bound_cmd->add_option("--index", bound_index, "Fano index I >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = pick_format(format);
        ClassifyOptions opts;
        opts.literature = !no_literature;
        if (*classify_cmd) {
            if (degree < 1)
                throw UsageError("degree must be a positive integer");
            print_verdict(classify(FamilyDescriptor(WeightTuple(parse_weights(weights)), degree), opts), fmt);
            return 0;
        }
        if (*enumerate_cmd) {
            print_enumeration(qa, fmt);
            return 0;
        }
        if (*census_cmd) {
            print_census(qa, opts, fmt);
            return 0;
        }
        if (*verify_cmd)
            return print_suite(suites::run(suite, trials, seed), fmt);
        if (*bound_cmd) {
            if (bound_index < 1)
                throw UsageError("bound needs --index >= 1");
            print_bound(n_bound(bound_index, opts), fmt);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

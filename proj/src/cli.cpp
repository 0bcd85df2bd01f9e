#include "superaff/cli.hpp"

#include "superaff/admissible.hpp"
#include "superaff/classify.hpp"
#include "superaff/errors.hpp"
#include "superaff/weyl.hpp"
#include "superaff/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <future>
#include <regex>
#include <sstream>

namespace superaff::cli {

using json = nlohmann::ordered_json;

namespace {

json jr(const Rational& q)
{
    return to_string(q);
}

json jv(const std::vector<Rational>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(jr(x));
    return a;
}

json jv(const Vector& v)
{
    return jv(v.data());
}

json jweight(const CanonicalWeight& w)
{
    return {{"level", jr(w.level)}, {"pairings", jv(w.pairings)}};
}

json jweights(const std::vector<CanonicalWeight>& ws)
{
    json a = json::array();
    for (const auto& w : ws) a.push_back(jweight(w));
    return a;
}

std::string kind_name(LevelKind k)
{
    return k == LevelKind::Principal ? "principal" : "subprincipal";
}

const char* grammar_text =
    "expected one of: sl(n|m) (n > m > 0), sl(n), osp(1|2n), osp(2|2n), osp(2m+1|2n), osp(2m|2n), "
    "F(4), G(3), sp(4), g2";

std::string normalize(const std::string& s)
{
    std::string out;
    for (unsigned char c : s)
        if (!std::isspace(c)) out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

// Column layout for the table format.
std::string pad(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string table_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths)
{
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += "  ";
        line += i + 1 == cells.size() ? cells[i] : pad(cells[i], widths[i]);
    }
    return line + "\n";
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::string out = table_row(header, w);
    for (const auto& r : rows) out += table_row(r, w);
    return out;
}

std::vector<std::string> node_header(std::size_t rank)
{
    std::vector<std::string> h;
    for (std::size_t i = 1; i <= rank; ++i) h.push_back("a" + std::to_string(i));
    return h;
}

std::string join(const std::vector<Rational>& xs)
{
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
    return s + ")";
}

struct Cell {
    std::string algebra;
    std::vector<Report> reports;
    json skipped = json::array();
    std::string error;
};

json report_json(const Report& r)
{
    return {{"algebra", r.family.name()},
            {"u", r.u},
            {"level", jr(r.level)},
            {"verdict", to_string(r.verdict)},
            {"found", jweights(r.found)},
            {"expected", jweights(r.expected)},
            {"unexpected", jweights(r.unexpected)},
            {"missing", jweights(r.missing)},
            {"candidate_stats",
             {{"candidates", r.candidates}, {"survivors", r.survivors}, {"duplicates", r.duplicates}}}};
}

std::vector<int> u_values(const CommandSpec& spec)
{
    if (spec.u) return {*spec.u};
    if (spec.u_range) {
        std::vector<int> us;
        for (int u = spec.u_range->first; u <= spec.u_range->second; ++u) us.push_back(u);
        return us;
    }
    throw UsageError("verify needs --u or --u-range");
}

Cell verify_cell(const std::string& algebra, const std::vector<int>& us, bool strict_u, const ClassifyOptions& opts)
{
    Cell c;
    c.algebra = algebra;
    RootSystem rs = build_root_system(parse_algebra(algebra));
    WeylGroup w = generate_weyl(rs);
    for (int u : us) {
        if (opts.level_check == LevelCheck::Enforce) {
            if (auto why = principal_level_violation(rs, u)) {
                if (strict_u)
                    throw RejectedLevelError(rs.spec.name() + ", u = " + std::to_string(u) + ": " + *why);
                c.skipped.push_back({{"u", u}, {"reason", *why}});
                continue;
            }
        }
        c.reports.push_back(verify(rs, w, u, opts));
    }
    return c;
}

json levels_payload(const RootSystem& rs, int u_max, std::string& table)
{
    json levels = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& l : boundary_levels(rs, u_max)) {
        levels.push_back({{"u", l.u}, {"level", jr(l.level)}, {"kind", kind_name(l.kind)}});
        rows.push_back({std::to_string(l.u), to_string(l.level), kind_name(l.kind)});
    }
    table = rs.spec.name() + "  h∨ = " + to_string(rs.h_dual) + "  r∨ = " + std::to_string(rs.lacety) + "\n" +
            render_table({"u", "level", "kind"}, rows);
    return {{"algebra", rs.spec.name()},
            {"h_dual", jr(rs.h_dual)},
            {"lacety", rs.lacety},
            {"u_max", u_max},
            {"levels", levels}};
}

json roots_payload(const RootSystem& rs, std::string& table)
{
    json gram = json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(jr(rs.gram(i, j)));
        gram.push_back(row);
    }
    json parity = json::array();
    for (auto p : rs.parity) parity.push_back(p == Parity::Even ? "even" : "odd");
    json even_simple = json::array();
    for (const auto& g : rs.even_simple) even_simple.push_back(jv(rs.pi_coords(g)));
    json derived = json::object();
    for (const auto& [name, v] : rs.derived) derived[name] = jv(rs.pi_coords(v));

    std::ostringstream t;
    t << rs.spec.name() << "\n";
    t << "h∨ = " << to_string(rs.h_dual) << ", r∨ = " << rs.lacety << ", roots " << rs.even_roots.size() << " even / "
      << rs.odd_roots.size() << " odd\n";
    t << "marks " << "(";
    for (std::size_t i = 0; i < rs.marks.size(); ++i) t << (i ? ", " : "") << rs.marks[i];
    t << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::vector<std::string> r{"a" + std::to_string(i + 1), rs.parity[i] == Parity::Even ? "even" : "odd"};
        for (std::size_t j = 0; j < rs.rank(); ++j) r.push_back(to_string(rs.gram(i, j)));
        r.push_back(to_string(rs.inner(rs.rho, rs.simple_roots[i])));
        rows.push_back(r);
    }
    std::vector<std::string> header{"node", "parity"};
    for (const auto& h : node_header(rs.rank())) header.push_back(h);
    header.push_back("(rho,a)");
    t << render_table(header, rows);
    table = t.str();

    return {{"algebra", rs.spec.name()},
            {"rank", rs.rank()},
            {"signature", jv(rs.basis_signature)},
            {"parity", parity},
            {"gram", gram},
            {"theta", jv(rs.theta)},
            {"marks", rs.marks},
            {"rho", jv(rs.rho)},
            {"rho_pairings", jv(rs.pairings(rs.rho))},
            {"h_dual", jr(rs.h_dual)},
            {"lacety", rs.lacety},
            {"root_counts", {{"even", rs.even_roots.size()}, {"odd", rs.odd_roots.size()}}},
            {"even_simple_pi_coords", even_simple},
            {"derived_pi_coords", derived}};
}

json weyl_payload(const RootSystem& rs, std::string& table)
{
    WeylGroup w = generate_weyl(rs);
    EvenFactors f = even_factors(rs);
    const std::size_t o1 = generate_subgroup(rs, f.first).order();
    const std::size_t o2 = generate_subgroup(rs, f.second).order();
    json gens = json::array();
    for (const auto& g : w.generators) gens.push_back(jv(rs.pi_coords(g)));
    table = rs.spec.name() + "  |W| = " + std::to_string(w.order()) + " = " + std::to_string(o1) + " x " +
            std::to_string(o2) + "\n";
    for (const auto& g : w.generators) table += "  r" + join(rs.pi_coords(g)) + "\n";
    return {{"algebra", rs.spec.name()},
            {"order", w.order()},
            {"factor_orders", {o1, o2}},
            {"generators_pi_coords", gens}};
}

json classify_payload(const RootSystem& rs, int u, const ClassifyOptions& opts, std::string& table)
{
    Classification c = classify_detailed(rs, u, opts);
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : c.weights) {
        std::vector<std::string> r{to_string(w.level)};
        for (const auto& p : w.pairings) r.push_back(to_string(p));
        rows.push_back(r);
    }
    std::vector<std::string> header{"level"};
    for (const auto& h : node_header(rs.rank())) header.push_back(h);
    table = rs.spec.name() + "  u = " + std::to_string(u) + "  " + std::to_string(c.weights.size()) + " weight(s), " +
            std::to_string(c.candidates) + " candidates\n" + render_table(header, rows);
    return {{"algebra", rs.spec.name()},
            {"u", u},
            {"level", jr(principal_level(rs, u))},
            {"level_check", opts.level_check == LevelCheck::Enforce ? "enforced" : "skipped"},
            {"weights", jweights(c.weights)},
            {"candidate_stats",
             {{"candidates", c.candidates}, {"survivors", c.survivors}, {"duplicates", c.duplicates}}}};
}

json witness_payload(const RootSystem& rs, bool& all_ok, std::string& table)
{
    WeylGroup w = generate_weyl(rs);
    WitnessSolver solver(rs);
    json results = json::array();
    std::size_t ok = 0, failed = 0;
    for (std::size_t i = 0; i < w.order(); ++i) {
        const WeylElement& y = w.elements[i];
        if (!solver.in_domain(y)) continue;
        json entry = {{"y", y.word}};
        try {
            WitnessResult r = solver.find(y);
            entry["alpha_pi_coords"] = jv(rs.pi_coords(r.alpha));
            entry["bound"] = jr(r.bound);
            entry["threshold"] = jr(r.threshold);
            entry["strict"] = r.strict;
            entry["branch"] = r.branch;
            entry["verified"] = true;
            ++ok;
        } catch (const InternalError& e) {
            entry["verified"] = false;
            entry["error"] = e.what();
            ++failed;
        }
        results.push_back(entry);
    }
    json doc = {{"algebra", rs.spec.name()},
                {"plan", solver.plan().description},
                {"checked", ok + failed},
                {"verified", ok},
                {"failed", failed},
                {"witnesses", results}};
    table = rs.spec.name() + "  " + solver.plan().description + "\n  " + std::to_string(ok) + " of " +
            std::to_string(ok + failed) + " witnesses verified\n";

    if (rs.spec.family == Family::OspB || rs.spec.family == Family::OspD) {
        LongRootSolver lr(rs);
        std::size_t lr_ok = 0, lr_failed = 0, stabilizer = 0;
        for (const auto& y : lr.first_factor().elements) {
            if (lr.stabilizer().contains(y)) {
                try {
                    lr.find(y);
                    ++lr_failed;  // a stabilizer element must not have a witness
                } catch (const PreconditionError&) {
                    ++stabilizer;
                }
                continue;
            }
            try {
                lr.find(y);
                ++lr_ok;
            } catch (const std::exception&) {
                ++lr_failed;
            }
        }
        doc["long_root"] = {{"verified", lr_ok}, {"failed", lr_failed}, {"stabilizer_rejected", stabilizer}};
        if (rs.spec.family == Family::OspB && rs.spec.m > rs.spec.n)
            doc["long_root"]["odd_rho_parity"] = long_roots_have_odd_rho(rs);
        failed += lr_failed;
        table += "  long roots: " + std::to_string(lr_ok) + " verified, " + std::to_string(stabilizer) +
                 " stabilizer elements rejected, " + std::to_string(lr_failed) + " failed\n";
    }
    all_ok = failed == 0;
    return doc;
}

json error_doc(const std::string& kind, const std::string& message)
{
    return {{"schema_version", schema_version}, {"error", {{"kind", kind}, {"message", message}}}};
}

std::string subcommand_name(Subcommand s)
{
    switch (s) {
    case Subcommand::Levels: return "levels";
    case Subcommand::Roots: return "roots";
    case Subcommand::Weyl: return "weyl";
    case Subcommand::Classify: return "classify";
    case Subcommand::Verify: return "verify";
    case Subcommand::Witness: return "witness";
    }
    return "?";
}

}  // namespace

const std::vector<std::string>& desk_roster()
{
    static const std::vector<std::string> roster = {
        "sl(2|1)", "sl(3|1)", "sl(3|2)", "osp(2|2)", "osp(2|4)", "osp(1|2)", "osp(1|4)", "osp(3|2)", "osp(5|2)",
        "osp(6|2)", "osp(4|4)", "F(4)", "G(3)", "sl(2)", "sl(3)", "sp(4)", "g2"};
    return roster;
}

FamilySpec parse_algebra(const std::string& name)
{
    const std::string s = normalize(name);
    std::smatch m;
    static const std::regex super_re(R"(^(sl|osp)\((\d+)\|(\d+)\)$)");
    static const std::regex sl_re(R"(^sl\((\d+)\)$)");
    FamilySpec spec;
    if (std::regex_match(s, m, super_re)) {
        const int a = std::stoi(m[2]);
        const int b = std::stoi(m[3]);
        if (m[1] == "sl") {
            spec = FamilySpec::sl_super(a, b);
        } else {
            if (b < 2 || b % 2 != 0) throw UsageError("osp(M|N) needs N even and positive: '" + name + "'");
            const int n = b / 2;
            if (a == 0) throw UsageError("osp(0|2n) is not supported: '" + name + "'");
            if (a == 2)
                spec = FamilySpec::osp_c(n);
            else if (a % 2 == 1)
                spec = FamilySpec::osp_b((a - 1) / 2, n);
            else
                spec = FamilySpec::osp_d(a / 2, n);
        }
    } else if (std::regex_match(s, m, sl_re)) {
        const int k = std::stoi(m[1]);
        if (k < 2) throw UsageError("sl(n) needs n >= 2: '" + name + "'");
        spec = FamilySpec::simple_a(k - 1);
    } else if (s == "f(4)" || s == "f4") {
        spec = FamilySpec::f4();
    } else if (s == "g(3)" || s == "g3") {
        spec = FamilySpec::g3();
    } else if (s == "sp(4)" || s == "sp4") {
        spec = FamilySpec::simple_b2();
    } else if (s == "g2" || s == "g(2)") {
        spec = FamilySpec::simple_g2();
    } else {
        throw UsageError("cannot parse algebra '" + name + "'; " + grammar_text);
    }
    validate_family_spec(spec);
    return spec;
}

std::pair<int, int> parse_u_range(const std::string& text)
{
    static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("--u-range expects a..b, got '" + text + "'");
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a < 1 || b < a) throw UsageError("--u-range needs 1 <= a <= b, got '" + text + "'");
    return {a, b};
}

RunResult run(const CommandSpec& spec)
{
    RunResult res;
    json payload;
    std::string table;
    ClassifyOptions opts;
    opts.level_check = spec.unchecked_level ? LevelCheck::Skip : LevelCheck::Enforce;
    auto finish = [&](const json& doc) {
        res.output = spec.format == Format::Json ? doc.dump(2) + "\n" : table;
        return res;
    };
    auto fail = [&](int code, const std::string& kind, const std::string& message) {
        res.exit_code = code;
        table = "error: " + message + "\n";
        return finish(error_doc(kind, message));
    };

    try {
        if (spec.algebra.empty()) throw UsageError("--algebra is required");
        const bool roster = normalize(spec.algebra) == "all-desk";
        if (roster && spec.subcommand != Subcommand::Verify)
            throw UsageError("the all-desk alias is only accepted by verify");

        if (spec.subcommand == Subcommand::Verify) {
            std::vector<std::string> algebras = roster ? desk_roster() : std::vector<std::string>{spec.algebra};
            if (!roster) parse_algebra(spec.algebra);
            const std::vector<int> us = u_values(spec);
            const bool strict_u = !roster && spec.u.has_value();
            if (algebras.size() > 1) opts.threads = 1;  // parallelism moves to the cell level
            std::vector<std::future<Cell>> jobs;
            for (const auto& a : algebras)
                jobs.push_back(std::async(std::launch::async, verify_cell, a, us, strict_u, opts));
            std::vector<Cell> cells;
            for (auto& j : jobs) cells.push_back(j.get());

            json reports = json::array();
            json skipped = json::array();
            bool all_pass = true;
            std::vector<std::vector<std::string>> rows;
            for (const auto& c : cells) {
                for (const auto& r : c.reports) {
                    reports.push_back(report_json(r));
                    all_pass = all_pass && r.verdict == Verdict::Pass;
                    rows.push_back({r.family.name(), std::to_string(r.u), to_string(r.level),
                                    std::to_string(r.found.size()), std::to_string(r.expected.size()),
                                    std::to_string(r.candidates), to_string(r.verdict)});
                }
                for (const auto& s : c.skipped) skipped.push_back({{"algebra", c.algebra}, {"u", s["u"]}, {"reason", s["reason"]}});
            }
            table = render_table({"algebra", "u", "level", "found", "expected", "candidates", "verdict"}, rows);
            if (!skipped.empty())
                table += std::to_string(skipped.size()) + " (algebra, u) cell(s) skipped: not a principal boundary level\n";
            table += all_pass ? "all PASS\n" : "FAILED\n";
            res.exit_code = all_pass ? exit_ok : exit_verification_failed;
            payload = {{"reports", reports},
                       {"skipped", skipped},
                       {"note", "u values failing the coprimality conditions are skipped"},
                       {"all_pass", all_pass}};
        } else {
            RootSystem rs = build_root_system(parse_algebra(spec.algebra));
            switch (spec.subcommand) {
            case Subcommand::Levels:
                payload = levels_payload(rs, spec.u_max.value_or(spec.u.value_or(10)), table);
                break;
            case Subcommand::Roots: payload = roots_payload(rs, table); break;
            case Subcommand::Weyl: payload = weyl_payload(rs, table); break;
            case Subcommand::Classify:
                if (!spec.u) throw UsageError("classify needs --u");
                payload = classify_payload(rs, *spec.u, opts, table);
                break;
            case Subcommand::Witness: {
                bool ok = true;
                payload = witness_payload(rs, ok, table);
                res.exit_code = ok ? exit_ok : exit_verification_failed;
                break;
            }
            case Subcommand::Verify: break;
            }
        }
    } catch (const UsageError& e) {
        return fail(exit_usage, "usage", e.what());
    } catch (const ConstructionError& e) {
        return fail(exit_usage, "construction", e.what());
    } catch (const PreconditionError& e) {
        return fail(exit_usage, "precondition", e.what());
    } catch (const RejectedLevelError& e) {
        return fail(exit_rejected_level, "rejected_level", e.what());
    } catch (const std::exception& e) {
        return fail(exit_verification_failed, "internal", e.what());
    }

    return finish({{"schema_version", schema_version}, {"command", subcommand_name(spec.subcommand)}, {"payload", payload}});
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Boundary admissible level classifier for affine Lie superalgebras"};
    app.require_subcommand(1);

    CommandSpec spec;
    std::string format = "json";
    std::string u_range;
    struct Sub {
        Subcommand kind;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {Subcommand::Levels, "levels", "List boundary admissible levels up to --u-max"},
        {Subcommand::Roots, "roots", "Summarize the root system"},
        {Subcommand::Weyl, "weyl", "Order and generators of the even Weyl group"},
        {Subcommand::Classify, "classify", "Classify admissible weights surviving the finite-dimensionality filter"},
        {Subcommand::Verify, "verify", "Compare classification against the closed forms"},
        {Subcommand::Witness, "witness", "Construct and verify witnesses for every relevant y"},
    };
    std::vector<CLI::App*> apps;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--algebra,-a", spec.algebra, "Algebra name, e.g. \"sl(2|1)\", \"osp(5|2)\", \"F(4)\"")
            ->required();
        sub->add_option("--format,-f", format, "Output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        if (s.kind == Subcommand::Levels) sub->add_option("--u-max", spec.u_max, "Largest u to test (default 10)");
        if (s.kind == Subcommand::Classify || s.kind == Subcommand::Verify)
            sub->add_option("--u", spec.u, "Denominator u of the level h∨/u - h∨");
        if (s.kind == Subcommand::Verify) {
            sub->add_option("--u-range", u_range, "Range a..b of u values; invalid u are skipped");
            sub->get_option("--u")->excludes(sub->get_option("--u-range"));
        }
        if (s.kind == Subcommand::Classify || s.kind == Subcommand::Verify)
            sub->add_flag("--unchecked-level", spec.unchecked_level,
                          "Skip the coprimality test on u and enumerate at h∨/u - h∨ anyway");
        apps.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    for (std::size_t i = 0; i < apps.size(); ++i)
        if (apps[i]->parsed()) spec.subcommand = subs[i].kind;
    spec.format = format == "table" ? Format::Table : Format::Json;
    if (!u_range.empty()) {
        try {
            spec.u_range = parse_u_range(u_range);
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
    }

    RunResult r = run(spec);
    out << r.output;
    if (r.exit_code == exit_usage || r.exit_code == exit_rejected_level)
        if (spec.format == Format::Json) {
            auto doc = json::parse(r.output, nullptr, false);
            if (!doc.is_discarded() && doc.contains("error")) err << "error: " << doc["error"]["message"].get<std::string>() << "\n";
        }
    return r.exit_code;
}

}  // namespace superaff::cli

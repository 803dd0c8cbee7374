#include "signedpat/cli.hpp"

#include "signedpat/pattern_io.hpp"
#include "signedpat/wilf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <limits>

namespace signedpat::cli {

namespace {

using nlohmann::json;

json to_json(std::span<const BigInt> counts)
{
    json arr = json::array();
    for (const auto& c : counts)
        arr.push_back(c.str());
    return arr;
}

SearchLimits limits_from(const RunConfig& config)
{
    SearchLimits limits;
    limits.workers = config.workers;
    if (config.max_nodes) {
        limits.max_nodes = *config.max_nodes;
    } else if (const char* env = std::getenv(kCapacityEnv); env != nullptr && *env != '\0') {
        try {
            limits.max_nodes = std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError(std::string(kCapacityEnv) + " is not a number: " + env);
        }
    }
    return limits;
}

int cmd_count(const RunConfig& config, std::ostream& out)
{
    if (config.n.has_value() == config.nmax.has_value())
        throw ValidationError("count needs exactly one of --n or --nmax");
    const PatternSet patterns = parse_pattern_set(config.patterns, config.r);
    const SearchLimits limits = limits_from(config);
    const int first = config.n.value_or(0);
    const int last = config.n.value_or(config.nmax.value_or(0));
    auto counts = count_sequence(last, config.r, patterns, config.method, limits);
    counts.erase(counts.begin(), counts.begin() + first);
    const FamilyMatch family = identify_family(patterns, config.r);

    switch (config.format) {
    case Format::Json: {
        json doc{{"r", config.r},
                 {"patterns", patterns.to_string()},
                 {"method", std::string(to_string(config.method))},
                 {"family", std::string(to_string(family.family))},
                 {"n_first", first},
                 {"counts", to_json(counts)}};
        out << doc.dump() << '\n';
        break;
    }
    case Format::Csv:
        out << "n,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << first + static_cast<int>(i) << ',' << counts[i] << '\n';
        break;
    case Format::Text:
        out << join_counts(counts) << '\n';
        break;
    }
    return kOk;
}

int cmd_orbit(const RunConfig& config, std::ostream& out)
{
    const PatternSet patterns = parse_pattern_set(config.patterns, config.r);
    const auto orbit = symmetry_orbit(patterns);
    const PatternSet canon = *orbit.begin();
    const FamilyMatch family = identify_family(patterns, config.r);
    if (config.format == Format::Json) {
        json members = json::array();
        for (const auto& t : orbit)
            members.push_back(t.to_string());
        json methods = json::array();
        for (Method m : family.methods)
            methods.push_back(std::string(to_string(m)));
        out << json{{"r", config.r},
                    {"patterns", patterns.to_string()},
                    {"canonical", canon.to_string()},
                    {"orbit", members},
                    {"family", std::string(to_string(family.family))},
                    {"methods", methods}}
                   .dump()
            << '\n';
        return kOk;
    }
    if (config.format == Format::Csv) {
        out << "member\n";
        for (const auto& t : orbit)
            out << '"' << t.to_string() << "\"\n";
        return kOk;
    }
    out << "canonical: {" << canon.to_string() << "}\n";
    out << "family: " << to_string(family.family) << '\n';
    out << "orbit size: " << orbit.size() << '\n';
    for (const auto& t : orbit)
        out << "  {" << t.to_string() << "}\n";
    return kOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out)
{
    const int nmax = config.nmax.value_or(kTableDepth);
    const auto classes = classify_pairs(config.r, nmax, limits_from(config));
    switch (config.format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& cls : classes) {
            json members = json::array();
            for (const auto& m : cls.members)
                members.push_back(m.to_string());
            arr.push_back({{"representative", cls.representative.to_string()},
                           {"fingerprint", to_json(cls.fingerprint.counts)},
                           {"members", members}});
        }
        out << json{{"r", config.r}, {"nmax", nmax}, {"class_count", classes.size()}, {"classes", arr}}.dump()
            << '\n';
        break;
    }
    case Format::Csv:
        out << "class,fingerprint,member\n";
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (const auto& m : classes[i].members)
                out << i + 1 << ",\"" << join_counts(classes[i].fingerprint.counts) << "\",\"" << m.to_string()
                    << "\"\n";
        break;
    case Format::Text:
        out << classes.size() << " classes at r=" << config.r << " (fingerprints to n=" << nmax
            << "; sets sharing a fingerprint are not separated at this depth, not proven equivalent)\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& cls = classes[i];
            out << "class " << i + 1 << ": " << join_counts(cls.fingerprint.counts) << "  ("
                << cls.members.size() << " orbits)\n";
            for (const auto& m : cls.members)
                out << "  {" << m.to_string() << "}\n";
        }
        break;
    }
    return kOk;
}

int cmd_verify_table1(const RunConfig& config, std::ostream& out)
{
    const int nmax = config.nmax.value_or(kTableDepth);
    const auto rows = table1(nmax, limits_from(config));
    const bool all = std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.match; });
    if (config.format == Format::Json) {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"row", row.row},
                           {"pair", row.pair.to_string()},
                           {"expected", to_json(row.expected)},
                           {"computed", to_json(row.computed)},
                           {"match", row.match}});
        out << json{{"r", kTableSignBound}, {"nmax", nmax}, {"all_match", all}, {"rows", arr}}.dump() << '\n';
    } else if (config.format == Format::Csv) {
        out << "row,pair,expected,computed,match\n";
        for (const auto& row : rows)
            out << row.row << ",\"" << row.pair.to_string() << "\",\"" << join_counts(row.expected) << "\",\""
                << join_counts(row.computed) << "\"," << (row.match ? "PASS" : "FAIL") << '\n';
    } else {
        for (const auto& row : rows) {
            out << "row " << row.row << (row.row < 10 ? "  " : " ") << (row.match ? "PASS" : "FAIL") << "  {"
                << row.pair.to_string() << "}  computed " << join_counts(row.computed);
            if (!row.match)
                out << "  expected " << join_counts(row.expected);
            out << '\n';
        }
        out << (all ? "all rows match\n" : "MISMATCH\n");
    }
    return all ? kOk : kMismatch;
}

PowerSeries named_series(const RunConfig& config)
{
    const std::string& name = config.series_name;
    if (name == "d")
        return egf_d(config.r, config.order);
    if (name == "chain")
        return egf_chain(config.r, config.l, config.order);
    if (name == "case3")
        return egf_case3(config.r, config.order);
    if (name == "case4")
        return egf_case4(config.r, config.order);
    throw ValidationError("unknown series '" + name + "' (expected d|chain|case3|case4)");
}

int cmd_series(const RunConfig& config, std::ostream& out)
{
    const PowerSeries f = named_series(config);
    const auto counts = egf_to_counts(f, f.order());
    switch (config.format) {
    case Format::Json: {
        json coeffs = json::array();
        for (const auto& c : f.coeffs())
            coeffs.push_back(json::array({numerator(c).str(), denominator(c).str()}));
        out << json{{"name", config.series_name},
                    {"r", config.r},
                    {"order", f.order()},
                    {"coefficients", coeffs},
                    {"counts", to_json(counts)}}
                   .dump()
            << '\n';
        break;
    }
    case Format::Csv:
        out << "n,numerator,denominator,count\n";
        for (int i = 0; i <= f.order(); ++i)
            out << i << ',' << numerator(f[i]) << ',' << denominator(f[i]) << ',' << counts[i] << '\n';
        break;
    case Format::Text:
        out << f.to_string() << '\n';
        out << "counts: " << join_counts(counts) << '\n';
        break;
    }
    return kOk;
}

int cmd_identity(const RunConfig& config, std::ostream& out)
{
    const int nmax = config.nmax.value_or(10);
    bool all = true;
    json arr = json::array();
    if (config.format == Format::Csv)
        out << "n,lhs,rhs,equal\n";
    for (int n = 0; n <= nmax; ++n) {
        const auto result = identity_check(n, config.r, config.l);
        all = all && result.equal;
        if (config.format == Format::Json)
            arr.push_back({{"n", n}, {"lhs", result.lhs.str()}, {"rhs", result.rhs.str()}, {"equal", result.equal}});
        else if (config.format == Format::Csv)
            out << n << ',' << result.lhs << ',' << result.rhs << ',' << (result.equal ? "true" : "false") << '\n';
        else
            out << "n=" << n << "  " << (result.equal ? "equal" : "NOT equal") << "  " << result.lhs
                << (result.equal ? " = " : " != ") << result.rhs << '\n';
    }
    if (config.format == Format::Json)
        out << json{{"l", config.l}, {"r", config.r}, {"all_equal", all}, {"rows", arr}}.dump() << '\n';
    return all ? kOk : kMismatch;
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "text")
        return Format::Text;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected text|json|csv)");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.r < 1)
            throw ValidationError("--r must be positive");
        if (config.subcommand == "count")
            return cmd_count(config, out);
        if (config.subcommand == "orbit")
            return cmd_orbit(config, out);
        if (config.subcommand == "classify")
            return cmd_classify(config, out);
        if (config.subcommand == "verify-table1")
            return cmd_verify_table1(config, out);
        if (config.subcommand == "series")
            return cmd_series(config, out);
        if (config.subcommand == "identity")
            return cmd_identity(config, out);
        err << "unknown subcommand '" << config.subcommand << "'\n";
        return kUsage;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const IntegralityError& e) {
        err << "integrality: " << e.what() << '\n';
        return kMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int main(int argc, char** argv)
{
    CLI::App app{"Count and classify signed permutations avoiding signed patterns"};
    app.require_subcommand(1);

    RunConfig config;
    std::string method = "brute";
    std::string format = "text";
    constexpr int kUnset = std::numeric_limits<int>::min();
    int n = kUnset;
    int nmax = kUnset;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--r", config.r, "number of signs")->required();
        sub->add_option("--format", format, "text | json | csv");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", config.max_nodes,
                        std::string("search node budget (default 1e8, env ") + kCapacityEnv + ")");
        sub->add_option("--jobs", config.workers, "worker threads for brute force (0 = all cores)");
    };

    auto* count = app.add_subcommand("count", "count avoiders of a pattern set");
    add_common(count);
    add_search(count);
    count->add_option("--n", n, "single length");
    count->add_option("--nmax", nmax, "count every length 0..nmax");
    count->add_option("--patterns", config.patterns, "pattern set, e.g. \"1^1 2^1; 2^1 1^1\"")->required();
    count->add_option("--method", method, "brute | formula | recurrence | series");

    auto* orbit = app.add_subcommand("orbit", "symmetry orbit and canonical form of a pattern set");
    add_common(orbit);
    orbit->add_option("--patterns", config.patterns, "pattern set")->required();

    auto* classify = app.add_subcommand("classify", "Wilf classes of pairs of 2-letter signed patterns");
    add_common(classify);
    add_search(classify);
    classify->add_option("--nmax", nmax, "fingerprint depth (default 5)");

    auto* verify = app.add_subcommand("verify-table1", "brute-force check of the 17 reference pairs at r=5");
    verify->add_option("--format", format, "text | json | csv");
    verify->add_option("--nmax", nmax, "depth, at most 5");
    add_search(verify);
    config.r = kTableSignBound;

    auto* series = app.add_subcommand("series", "coefficients of a generating function");
    add_common(series);
    series->add_option("--name", config.series_name, "d | chain | case3 | case4");
    series->add_option("--l", config.l, "chain length for --name chain");
    series->add_option("--order", config.order, "truncation order");

    auto* identity = app.add_subcommand("identity", "check the two-way counting identity for n = 0..nmax");
    add_common(identity);
    identity->add_option("--l", config.l, "number of pattern pairs")->required();
    identity->add_option("--nmax", nmax, "largest n (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        config.method = parse_method(method);
        config.format = parse_format(format);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    if (n != kUnset)
        config.n = n;
    if (nmax != kUnset)
        config.nmax = nmax;
    return run(config, std::cout, std::cerr);
}

} // namespace signedpat::cli

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsf/connectivity.hpp"
#include "dsf/degseq.hpp"
#include "dsf/enumeration.hpp"
#include "dsf/errors.hpp"
#include "dsf/oracle.hpp"
#include "dsf/random_gen.hpp"
#include "dsf/version.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitInvariant = 4;

// Long enumerations are opt-in; these are the parameters reproducible at
// desk scale.
constexpr long long kMaxSequenceLength = 12;
constexpr long long kMaxPartitionTotal = 60;

ordered_json witness_json(const dsf::CutWitness& w) {
    ordered_json j;
    j["cut_degree"] = w.cut_degree;
    j["d_low"] = w.d_low;
    j["d_high"] = w.d_high;
    j["s"] = w.s;
    j["s_low"] = w.s_low;
    j["seq_low"] = w.seq_low.terms();
    j["seq_high"] = w.seq_high.terms();
    return j;
}

ordered_json witness_json(const dsf::SplitWitness& w) {
    ordered_json j;
    j["side_a"] = w.side_a.terms();
    j["side_b"] = w.side_b.terms();
    return j;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

struct TestArgs {
    std::string sequence;
    bool witness = false;
    bool basic = false;
    bool oracle = false;
    int oracle_bound = dsf::kDefaultOracleBound;
};

int run_test(const TestArgs& args) {
    const std::vector<int> raw = dsf::parse_terms(args.sequence);
    for (int t : raw)
        if (t < 0)
            throw std::invalid_argument("negative degree: " + std::to_string(t));

    const bool has_zero = std::find(raw.begin(), raw.end(), 0) != raw.end();
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::cout << "sequence: " << dsf::to_text(sorted) << '\n';
    std::cout << "graphical: " << bool_text(dsf::is_graphical(sorted)) << '\n';

    if (has_zero) {
        // A zero term forces an isolated vertex in every realization; for
        // n >= 2 nothing connectivity-related can hold.
        const bool single = raw.size() == 1;
        std::cout << "potentially_connected: " << bool_text(single) << '\n';
        std::cout << "potentially_biconnected: false\n";
        std::cout << "forcibly_connected: "
                  << bool_text(single && dsf::is_graphical(sorted)) << '\n';
        std::cout << "forcibly_biconnected: false\n";
        return kExitOk;
    }

    const auto d = dsf::DegreeSequence::normalized(raw);
    const bool graphical = dsf::is_graphical(d);
    std::cout << "potentially_connected: " << bool_text(dsf::potentially_connected(d)) << '\n';
    std::cout << "potentially_biconnected: " << bool_text(dsf::potentially_biconnected(d))
              << '\n';

    std::optional<dsf::ConnectivityResult> fc;
    if (graphical)
        fc = dsf::forcibly_connected(d);
    std::cout << "forcibly_connected: " << bool_text(fc && fc->forcibly) << '\n';

    bool fb = false;
    std::optional<dsf::CutWitness> cut;
    if (args.basic) {
        fb = dsf::forcibly_biconnected_basic(d);
    } else {
        auto result = dsf::forcibly_biconnected(d);
        fb = result.forcibly;
        cut = std::move(result.witness);
    }
    std::cout << "forcibly_biconnected: " << bool_text(fb) << '\n';

    if (args.witness) {
        if (cut)
            std::cout << "cut_witness: " << witness_json(*cut).dump() << '\n';
        if (fc && fc->witness)
            std::cout << "split_witness: " << witness_json(*fc->witness).dump() << '\n';
    }

    if (args.oracle) {
        if (!graphical) {
            std::cout << "oracle: sequence not graphical, nothing to enumerate\n";
            return kExitOk;
        }
        using dsf::GraphProperty;
        using dsf::QuantifierMode;
        const bool opc = dsf::oracle_verdict(d, GraphProperty::connected,
                                             QuantifierMode::potentially, args.oracle_bound);
        const bool ofc = dsf::oracle_verdict(d, GraphProperty::connected,
                                             QuantifierMode::forcibly, args.oracle_bound);
        const bool opb = dsf::oracle_verdict(d, GraphProperty::biconnected,
                                             QuantifierMode::potentially, args.oracle_bound);
        const bool ofb = dsf::oracle_verdict(d, GraphProperty::biconnected,
                                             QuantifierMode::forcibly, args.oracle_bound);
        std::cout << "oracle_potentially_connected: " << bool_text(opc) << '\n';
        std::cout << "oracle_forcibly_connected: " << bool_text(ofc) << '\n';
        std::cout << "oracle_potentially_biconnected: " << bool_text(opb) << '\n';
        std::cout << "oracle_forcibly_biconnected: " << bool_text(ofb) << '\n';
        const bool agrees = opc == dsf::potentially_connected(d) &&
                            opb == dsf::potentially_biconnected(d) &&
                            ofc == (fc && fc->forcibly) && ofb == fb;
        std::cout << "oracle_agrees: " << bool_text(agrees) << '\n';
        if (!agrees)
            return kExitInvariant;
    }
    return kExitOk;
}

struct EnumerateArgs {
    std::string mode;
    long long parameter = 0;
    std::string filter = "forcibly_biconnected";
    std::string itemize = "totals";
    std::string format = "csv";
    int parallel = 1;
    std::string cache_dir;
    bool allow_long = false;
};

void render_count_table(const dsf::CountTable& table, const std::string& format) {
    if (format == "csv") {
        std::cout << "key,count\n";
        for (const auto& [key, count] : table.counts) {
            if (table.kind == dsf::TableKind::totals)
                std::cout << "total," << count << '\n';
            else
                std::cout << key << ',' << count << '\n';
        }
        return;
    }
    ordered_json j;
    j["mode"] = dsf::to_string(table.mode);
    j["filter"] = dsf::to_string(table.filter);
    j["parameter"] = table.fixed_parameter;
    ordered_json counts = ordered_json::object();
    for (const auto& [key, count] : table.counts) {
        if (table.kind == dsf::TableKind::totals)
            counts["total"] = count;
        else
            counts[std::to_string(key)] = count;
    }
    j["counts"] = counts;
    std::cout << j.dump(2) << '\n';
}

int run_enumerate(const EnumerateArgs& args) {
    const auto mode = dsf::parse_enum_mode(args.mode);
    const auto filter = dsf::parse_filter(args.filter);
    const auto kind = dsf::parse_table_kind(args.itemize);
    if (!mode || !filter || !kind)
        throw std::invalid_argument("bad mode/filter/itemize value");
    if (args.format != "csv" && args.format != "json")
        throw std::invalid_argument("format must be csv or json");

    const long long limit =
        *mode == dsf::EnumMode::sequences ? kMaxSequenceLength : kMaxPartitionTotal;
    if (args.parameter > limit && !args.allow_long)
        throw std::invalid_argument(
            "parameter " + std::to_string(args.parameter) + " exceeds the desk-scale limit " +
            std::to_string(limit) + "; pass --allow-long to run anyway");

    std::optional<dsf::CountTable> table;
    if (!args.cache_dir.empty())
        table = dsf::load_count_table(args.cache_dir, args.parameter, *mode, *filter, *kind);
    if (!table) {
        dsf::CountOptions opts;
        opts.threads = args.parallel;
        table = dsf::count_filtered(args.parameter, *mode, *filter, *kind, opts);
        if (!args.cache_dir.empty())
            dsf::save_count_table(*table, args.cache_dir);
    }
    render_count_table(*table, args.format);
    return kExitOk;
}

struct RandomArgs {
    int n = 0;
    double pl = 0.0;
    double ph = 0.0;
    int count = 100;
    std::uint64_t seed = 0;
    double budget_seconds = 60.0;
    bool no_times = false;
};

int run_random(const RandomArgs& args) {
    dsf::RandomSpec spec{args.n, args.pl, args.ph, args.count, args.seed};
    const auto sequences = dsf::generate_random_sequences(spec);

    char header[160];
    std::snprintf(header, sizeof(header), "# n=%d pl=%g ph=%g count=%d seed=%llu budget=%g",
                  args.n, args.pl, args.ph, args.count,
                  static_cast<unsigned long long>(args.seed), args.budget_seconds);
    std::cout << header << '\n';
    std::cout << (args.no_times ? "index,sequence,forcibly_biconnected"
                                : "index,sequence,forcibly_biconnected,time_ms")
              << '\n';

    int decided = 0;
    int positive = 0;
    int timeouts = 0;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        dsf::SearchOptions opts;
        if (args.budget_seconds > 0)
            opts.deadline = dsf::Deadline::after(std::chrono::duration_cast<
                std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(args.budget_seconds)));
        const auto start = std::chrono::steady_clock::now();
        std::string verdict;
        try {
            const auto result = dsf::forcibly_biconnected(sequences[i], opts);
            verdict = bool_text(result.forcibly);
            ++decided;
            if (result.forcibly)
                ++positive;
        } catch (const dsf::TimedOut&) {
            verdict = "timeout";
            ++timeouts;
        }
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        std::cout << i << ',' << dsf::to_text(sequences[i]) << ',' << verdict;
        if (!args.no_times) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", elapsed.count());
            std::cout << ',' << buf;
        }
        std::cout << '\n';
    }
    char summary[200];
    std::snprintf(summary, sizeof(summary),
                  "# decided %d/%d (%s), forcibly biconnected %d/%d (%s), timeouts %d",
                  decided, args.count, dsf::format_ratio(decided, args.count).c_str(),
                  positive, decided, dsf::format_ratio(positive, decided).c_str(), timeouts);
    std::cout << summary << '\n';
    return timeouts > 0 ? kExitTimeout : kExitOk;
}

struct RangeSpec {
    long long first = 0;
    long long last = 0;
    long long step = 1;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec range;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        range.first = range.last = std::stoll(text);
        return range;
    }
    range.first = std::stoll(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
        range.step = std::stoll(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    range.last = std::stoll(rest);
    if (range.step < 1 || range.last < range.first)
        throw std::invalid_argument("bad range: " + text);
    return range;
}

int run_extremal(const std::string& mode_text, const std::string& range_text) {
    const auto mode = dsf::parse_enum_mode(mode_text);
    if (!mode)
        throw std::invalid_argument("mode must be sequences or partitions");
    const RangeSpec range = parse_range(range_text);
    std::cout << "parameter,min_largest_forcibly_connected,min_largest_forcibly_biconnected\n";
    for (long long p = range.first; p <= range.last; p += range.step) {
        try {
            const auto report = dsf::extremal_largest_term(p, *mode);
            std::cout << p << ',' << report.value_forcibly_connected << ',';
            if (report.value_forcibly_biconnected)
                std::cout << *report.value_forcibly_biconnected;
            else
                std::cout << '-';
            std::cout << '\n';
        } catch (const dsf::NoMember&) {
            std::cout << p << ",-,-\n";
        }
    }
    return kExitOk;
}

struct OracleArgs {
    std::string sequence;
    std::string property;
    std::string mode;
    int bound = dsf::kDefaultOracleBound;
    bool count = false;
    bool edges = false;
    std::uint64_t limit = 0;
};

int run_oracle(const OracleArgs& args) {
    const auto d = dsf::DegreeSequence::normalized(dsf::parse_terms(args.sequence));
    dsf::GraphProperty property;
    if (args.property == "connected")
        property = dsf::GraphProperty::connected;
    else if (args.property == "biconnected")
        property = dsf::GraphProperty::biconnected;
    else
        throw std::invalid_argument("property must be connected or biconnected");
    dsf::QuantifierMode mode;
    if (args.mode == "forcibly")
        mode = dsf::QuantifierMode::forcibly;
    else if (args.mode == "potentially")
        mode = dsf::QuantifierMode::potentially;
    else
        throw std::invalid_argument("mode must be forcibly or potentially");

    const bool verdict = dsf::oracle_verdict(d, property, mode, args.bound);
    std::cout << args.mode << ' ' << args.property << ": " << bool_text(verdict) << '\n';
    if (args.count)
        std::cout << "realizations: " << dsf::count_realizations(d, args.bound) << '\n';
    if (args.edges) {
        std::uint64_t emitted = 0;
        dsf::for_each_realization(
            d,
            [&](const dsf::Realization& g) {
                if (emitted)
                    std::cout << '\n';
                std::cout << dsf::to_edge_list(g);
                ++emitted;
                return args.limit == 0 || emitted < args.limit;
            },
            args.bound);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forcibly-biconnected degree sequence toolkit"};
    app.set_version_flag("--version", dsf::kVersion);
    app.require_subcommand(1);

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "Decide the five verdicts for one sequence");
    test->add_option("sequence", test_args.sequence, "degree sequence, e.g. \"3 3 2 2\"")
        ->required();
    test->add_flag("--witness", test_args.witness, "print the cut/split witness when found");
    test->add_flag("--basic", test_args.basic, "use the generalized Havel-Hakimi sweep");
    test->add_flag("--oracle", test_args.oracle, "cross-check against the brute-force oracle");
    test->add_option("--bound", test_args.oracle_bound, "oracle vertex bound");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "Count filtered sequences or partitions");
    enumerate->add_option("mode", enum_args.mode, "sequences | partitions")->required();
    enumerate->add_option("parameter", enum_args.parameter, "length n or even sum N")
        ->required();
    enumerate->add_option("--filter", enum_args.filter,
                          "all_zero_free | potentially_biconnected | forcibly_connected | "
                          "forcibly_biconnected");
    enumerate->add_option("--itemize", enum_args.itemize,
                          "totals | by_degree_sum | by_num_parts | by_largest_part");
    enumerate->add_option("--format", enum_args.format, "csv | json");
    enumerate->add_option("--parallel", enum_args.parallel, "shard across k threads");
    enumerate->add_option("--cache", enum_args.cache_dir, "results cache directory");
    enumerate->add_flag("--allow-long", enum_args.allow_long,
                        "permit parameters beyond the desk-scale limits");

    RandomArgs random_args;
    auto* random = app.add_subcommand("random", "Generate and test random instances");
    random->add_option("-n", random_args.n, "sequence length")->required();
    random->add_option("--pl", random_args.pl, "smallest-term fraction")->required();
    random->add_option("--ph", random_args.ph, "largest-term fraction")->required();
    random->add_option("--count", random_args.count, "number of instances");
    random->add_option("--seed", random_args.seed, "RNG seed");
    random->add_option("--budget", random_args.budget_seconds,
                       "per-instance time budget in seconds (0 = unlimited)");
    random->add_flag("--no-times", random_args.no_times,
                     "omit wall times for bit-identical reports");

    std::string extremal_mode, extremal_range;
    auto* extremal = app.add_subcommand("extremal", "Minimum largest terms M2/M or m2/m");
    extremal->add_option("mode", extremal_mode, "sequences | partitions")->required();
    extremal->add_option("range", extremal_range, "parameter range, e.g. 4..14 or 10..60:10")
        ->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force verdict over all realizations");
    oracle->add_option("sequence", oracle_args.sequence, "degree sequence")->required();
    oracle->add_option("--property", oracle_args.property, "connected | biconnected")
        ->required();
    oracle->add_option("--mode", oracle_args.mode, "forcibly | potentially")->required();
    oracle->add_option("--bound", oracle_args.bound, "vertex bound (default 10)");
    oracle->add_flag("--count", oracle_args.count, "also print the realization count");
    oracle->add_flag("--edges", oracle_args.edges, "dump realizations as edge lists");
    oracle->add_option("--limit", oracle_args.limit, "cap the number of dumped realizations");

    try {
        app.parse(argc, argv);
        if (*test)
            return run_test(test_args);
        if (*enumerate)
            return run_enumerate(enum_args);
        if (*random)
            return run_random(random_args);
        if (*extremal)
            return run_extremal(extremal_mode, extremal_range);
        if (*oracle)
            return run_oracle(oracle_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const dsf::TimedOut&) {
        std::cerr << "error: search timed out\n";
        return kExitTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

// Command-line surface: compute orbit dimensions, reproduce the built-in
// F4/G2 tables, run verification sweeps, and scan for non-admissible
// configurations. Exit codes: 0 ok, 1 verification failure, 2 parse error,
// 3 precondition violation, 4 field too small.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitkit/orbitkit.hpp"
#include "orbitkit/report_io.hpp"

namespace {

using namespace orbitkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitField = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ORBITKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            if (i > start) out.push_back(static_cast<std::uint32_t>(
                               std::stoul(csv.substr(start, i - start))));
            start = i + 1;
        }
    }
    return out;
}

struct DimArgs {
    std::string type;
    std::string roots;
    std::string xi;
    std::uint32_t prime = 0;  // 0: auto
    bool json = false;
};

int run_dim(const DimArgs& args) {
    const RootSystem rs = RootSystem::build(args.type);
    const ChevalleyTable tbl(rs);
    const std::vector<Root> roots = parse_root_list(rs, args.roots);
    const PrimeField field(args.prime ? args.prime : default_prime_for(rs).p());
    require_coxeter_bound(rs, field);

    std::vector<PrimeField::Element> xi(roots.size(), field.one());
    if (!args.xi.empty()) {
        std::vector<std::uint32_t> raw = parse_primes(args.xi);
        if (raw.size() != roots.size())
            throw DomainError("xi count (" + std::to_string(raw.size()) +
                              ") does not match root count (" + std::to_string(roots.size()) + ")");
        for (std::size_t i = 0; i < raw.size(); ++i) xi[i] = field.from_int(raw[i]);
    }
    const OrthoSubset d(rs, roots, xi, field);

    DimResult res;
    res.system = rs.id();
    for (const Root& r : roots) res.d_indices.push_back(r.index);
    res.prime = field.p();
    res.seed = default_seed();
    res.dim = orbit_dimension(d, tbl, &res.reduced_applied);
    const Skeleton reduced = reduce_skeleton(rs, roots);
    const InvolutionStats st = involution_stats(rs, reduced);
    res.l = st.l;
    res.s = st.s;
    res.bound = st.bound;
    res.bound_ok = res.dim <= res.bound;
    res.even_ok = res.dim % 2 == 0;

    if (args.json) {
        std::cout << dim_result_to_json(res).dump() << "\n";
    } else {
        std::cout << "system: " << res.system.name() << "\n"
                  << "D:      " << format_root_list(rs, roots) << "\n"
                  << "dim:    " << res.dim << "\n"
                  << "bound:  " << res.bound << " (l = " << res.l << ", s = " << res.s << ")\n"
                  << "prime:  " << res.prime << "\n";
        if (res.reduced_applied)
            std::cout << "note:   subset was not reduced; dimension computed after reduction to "
                      << format_root_list(rs, reduced) << "\n";
    }
    return kExitOk;
}

struct TableArgs {
    std::string which;
    std::string format = "text";
};

int run_table(const TableArgs& args) {
    const bool f4 = args.which == "f4";
    if (!f4 && args.which != "g2") throw ParseError("table expects 'f4' or 'g2'");
    const RootSystem rs = RootSystem::build(f4 ? "F4" : "G2");
    const ChevalleyTable tbl(rs);
    const auto rows =
        evaluate_catalog(rs, tbl, f4 ? f4_catalog() : g2_catalog(), default_prime_for(rs));

    if (args.format == "csv") {
        std::cout << table_to_csv(rs, rows);
    } else if (args.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const TableRowResult& r : rows) arr.push_back(table_row_to_json(rs, r));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << table_to_text(rs, rows);
    }
    int mismatches = 0;
    for (const TableRowResult& r : rows) mismatches += r.mismatch() ? 1 : 0;
    if (mismatches) {
        std::cerr << mismatches << " row(s) disagree with the rank engine\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string type;
    int max_size = 0;
    std::string primes;
    int xi_samples = 5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int sample_budget = 0;
    bool ext2 = false;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    const RootSystem rs = RootSystem::build(args.type);
    const ChevalleyTable tbl(rs);
    SweepOptions opts;
    opts.max_size = args.max_size;
    if (!args.primes.empty()) opts.primes = parse_primes(args.primes);
    opts.xi_samples = args.xi_samples;
    opts.seed = args.seed_set ? args.seed : default_seed();
    opts.sample_budget = args.sample_budget;
    opts.quad_ext = args.ext2;

    const auto reports = verify_sweep(rs, tbl, opts);
    int failures = 0;
    for (const VerifyReport& rep : reports) {
        if (!rep.pass()) ++failures;
        if (args.json) {
            std::cout << verify_report_to_json(rep).dump() << "\n";
        } else {
            std::vector<Root> roots;
            for (int idx : rep.d_indices) roots.push_back(rs.positive(idx));
            std::cout << "D={" << format_root_list(rs, roots) << "} dim=" << rep.dim
                      << " bound=" << rep.bound << (rep.pass() ? " ok" : " FAIL")
                      << (rep.reduced_applied ? " (reduced)" : "") << "\n";
        }
    }
    if (args.json) {
        ordered_json summary;
        summary["reports"] = reports.size();
        summary["failures"] = failures;
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << reports.size() << " report(s), " << failures << " failure(s)\n";
    }
    return failures ? kExitVerifyFailure : kExitOk;
}

struct ScanArgs {
    std::string type;
    bool expect_none = false;
};

int run_scan(const ScanArgs& args) {
    const RootSystem rs = RootSystem::build(args.type);
    const auto hits = scan_non_admissible(rs);
    std::cout << "hits: " << hits.size() << "\n";
    for (const NonAdmissibleHit& h : hits) {
        std::cout << "type " << h.pattern_type << ":";
        for (const auto& [name, root] : h.assignment)
            std::cout << " " << name << "=" << format_root(rs, root);
        std::cout << "\n";
    }
    if (args.expect_none && !hits.empty()) return kExitVerifyFailure;
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"coadjoint-orbit dimensions for orthogonal subsets of root systems"};
    app.require_subcommand(0, 1);

    std::string dump_constants_type;
    app.add_option("--dump-constants", dump_constants_type,
                   "print the structure-constant table of a system as CSV and exit");

    DimArgs dim_args;
    CLI::App* dim = app.add_subcommand("dim", "orbit dimension of one orthogonal subset");
    dim->add_option("--type", dim_args.type, "root system, e.g. B3")->required();
    dim->add_option("--roots", dim_args.roots, "comma-separated root expressions")->required();
    dim->add_option("--xi", dim_args.xi, "comma-separated nonzero scalars (default: all ones)");
    dim->add_option("--prime", dim_args.prime, "field characteristic (default: auto)");
    dim->add_flag("--json", dim_args.json, "machine-readable output");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "reproduce the built-in F4/G2 tables");
    table->add_option("which", table_args.which, "f4 or g2")->required();
    table->add_option("--format", table_args.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "dimension-bound sweep over orthogonal subsets");
    verify->add_option("--type", verify_args.type, "root system")->required();
    verify->add_option("--max-size", verify_args.max_size, "largest subset size (default: rank)");
    verify->add_option("--primes", verify_args.primes, "comma-separated primes (default: auto)");
    verify->add_option("--xi-samples", verify_args.xi_samples, "scalar samples per prime (>=1)");
    auto* seed_opt = verify->add_option("--seed", verify_args.seed, "sweep seed (default: ORBITKIT_SEED or 0)");
    verify->add_option("--sample-budget", verify_args.sample_budget,
                       "sample this many random subsets instead of enumerating");
    verify->add_flag("--ext2", verify_args.ext2, "also sample scalars from the quadratic extension");
    verify->add_flag("--json", verify_args.json, "one JSON object per report");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "exhaustive non-admissible pattern scan");
    scan->add_option("--type", scan_args.type, "root system (guarded size)")->required();
    scan->add_flag("--expect-none", scan_args.expect_none, "fail if any hit is found");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }
    verify_args.seed_set = seed_opt->count() > 0;

    if (!dump_constants_type.empty()) {
        const RootSystem rs = RootSystem::build(dump_constants_type);
        const ChevalleyTable tbl(rs);
        std::cout << constants_to_csv(rs, tbl);
        return kExitOk;
    }
    if (dim->parsed()) return run_dim(dim_args);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (scan->parsed()) return run_scan(scan_args);
    std::cout << app.help();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const orbitkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const orbitkit::FieldTooSmall& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return kExitField;
    } catch (const orbitkit::UnsupportedRank& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const orbitkit::NotOrthogonal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const orbitkit::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const orbitkit::WrongSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const orbitkit::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

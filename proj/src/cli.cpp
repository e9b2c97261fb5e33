// SPDX-License-Identifier: Apache-2.0
#include "dsort/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "dsort/baselines.hpp"
#include "dsort/bench.hpp"
#include "dsort/core_sort.hpp"
#include "dsort/cost_model.hpp"
#include "dsort/error.hpp"
#include "dsort/parallel.hpp"
#include "dsort/report.hpp"
#include "dsort/streaming.hpp"

namespace dsort::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Key parse_key(std::string_view text, std::size_t line_no) {
    Key value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && text.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw InputError("line " + std::to_string(line_no) + ": not a signed 64-bit integer: '" +
                         std::string(text) + "'");
    }
    return value;
}

std::vector<Key> read_keys(std::istream& is) {
    std::vector<Key> keys;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (!t.empty()) keys.push_back(parse_key(t, line_no));
    }
    return keys;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::KeyOutOfRange: return KeyOutOfRange;
    case ErrorKind::DuplicateKey: return DuplicateKey;
    case ErrorKind::RangeTooLarge: return RangeTooLarge;
    case ErrorKind::UndefinedExponent:
    case ErrorKind::InvalidRatio: return UndefinedExponent;
    case ErrorKind::NonPowerOfTwoWorkers: return NonPowerOfTwoWorkers;
    case ErrorKind::InfeasibleGeneration: return InfeasibleGeneration;
    default: return ParseError;
    }
}

struct Options {
    std::string input;
    std::string output;
    std::optional<Key> lower;
    std::optional<Key> upper;
    bool multiset = false;
    std::string workers;
    bool stats = false;
    Format format = Format::Text;
    double swap_weight = 3.0;
    std::uint64_t max_domain_bits = kDefaultMaxDomainBits;

    double n = 0;
    double k = 0;
    std::uint64_t p = 0;
    std::optional<double> tradeoff_exponent;
    std::string rows_path;
    RegimeConfig regime;

    std::vector<std::uint64_t> sizes{1000, 10000, 100000, 1000000};
    double range_factor = 4.0;
    std::uint64_t seed = kDefaultBenchSeed;
};

class Io {
public:
    Io(const Options& opt, std::istream& in, std::ostream& out) : in_(&in), out_(&out) {
        if (!opt.input.empty()) {
            file_in_.open(opt.input);
            if (!file_in_) throw InputError("cannot open input file '" + opt.input + "'");
            in_ = &file_in_;
        }
        output_path_ = opt.output;
    }

    std::istream& in() { return *in_; }

    // Output files are opened lazily so a failed run leaves no file behind.
    std::ostream& out() {
        if (!output_path_.empty() && !file_out_.is_open()) {
            file_out_.open(output_path_);
            if (!file_out_) throw InputError("cannot open output file '" + output_path_ + "'");
            out_ = &file_out_;
        }
        return *out_;
    }

private:
    std::istream* in_;
    std::ostream* out_;
    std::ifstream file_in_;
    std::ofstream file_out_;
    std::string output_path_;
};

KeyDomain domain_for(const Options& opt, std::span<const Key> keys) {
    if (opt.lower) return domain_from_bounds(*opt.lower, *opt.upper, opt.max_domain_bits);
    return infer_domain(keys, opt.max_domain_bits);
}

void write_keys(std::ostream& os, std::span<const Key> keys) {
    std::string buf;
    buf.reserve(keys.size() * 8);
    char num[24];
    for (Key key : keys) {
        const auto res = std::to_chars(num, num + sizeof num, key);
        buf.append(num, res.ptr);
        buf.push_back('\n');
    }
    os << buf;
}

std::size_t worker_count(const std::string& text) {
    if (text == "auto") return default_worker_count();
    std::size_t p = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size() || p == 0) {
        throw InputError("--workers needs a positive integer or 'auto', got '" + text + "'");
    }
    return p;
}

int cmd_sort(const Options& opt, Io& io, std::ostream& err) {
    if (opt.multiset && !opt.workers.empty()) {
        throw InputError("--workers sorts unique keys only; it cannot be combined with --multiset");
    }
    const std::vector<Key> keys = read_keys(io.in());
    SortResult sorted;
    if (keys.empty() && !opt.lower) {
        // Nothing to infer a domain from, and nothing to sort.
    } else {
        const KeyDomain domain = domain_for(opt, keys);
        if (opt.multiset) {
            sorted = decision_sort_multiset(keys, domain);
        } else if (!opt.workers.empty()) {
            ParallelSortResult par =
                parallel_decision_sort_detailed(keys, domain, worker_count(opt.workers));
            sorted.keys = std::move(par.keys);
            sorted.counters = par.counters;
        } else {
            sorted = decision_sort_unique(keys, domain);
        }
    }
    write_keys(io.out(), sorted.keys);
    io.out().flush();
    if (opt.stats) err << counters_json(sorted.counters) << '\n';
    return Ok;
}

int cmd_stream(const Options& opt, Io& io) {
    IncrementalSorter sorter = sorter_new(*opt.lower, *opt.upper, opt.max_domain_bits);
    std::vector<Key> batch;
    std::size_t snapshots = 0;
    auto flush_batch = [&] {
        sorter.ingest(batch);
        batch.clear();
        std::ostream& os = io.out();
        os << "# snapshot " << ++snapshots << '\n';
        write_keys(os, sorter.snapshot());
        os.flush();
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(io.in(), line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t == "---") {
            flush_batch();
        } else if (!t.empty()) {
            batch.push_back(parse_key(t, line_no));
        }
    }
    // A trailing segment is a batch only if it holds keys.
    if (!batch.empty()) flush_batch();
    return Ok;
}

int cmd_analyze(const Options& opt, Io& io) {
    AnalysisReport report;
    report.regime = classify_regime(opt.n, opt.k, opt.regime);
    // Counts beyond 2^63 are still analysable, just not countable.
    if (2 * opt.n + opt.k < 9.2e18) {
        report.cost = sequential_cost(static_cast<std::uint64_t>(opt.n),
                                      static_cast<std::uint64_t>(opt.k));
    }
    if (opt.tradeoff_exponent) {
        report.tradeoff_exponent = opt.tradeoff_exponent;
        report.tradeoff_constant = tradeoff_constant(opt.n, opt.k, *opt.tradeoff_exponent);
    }
    io.out() << render(report, opt.format);
    return Ok;
}

std::vector<ModelRow> read_model_rows(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open rows file '" + path + "'");
    std::vector<ModelRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream fields{std::string(t)};
        ModelRow row;
        std::string extra;
        if (!(fields >> row.n >> row.k >> row.p) || (fields >> extra)) {
            throw InputError("line " + std::to_string(line_no) + " of rows file: expected 'n k p'");
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_model(const Options& opt, Io& io) {
    if (!opt.rows_path.empty()) {
        const std::vector<ModelRow> rows = read_model_rows(opt.rows_path);
        const std::vector<SpeedupEntry> table = speedup_table(rows);
        io.out() << render(table, opt.format);
        for (const SpeedupEntry& entry : table) {
            if (!entry.ok()) return exit_code_for(std::get<RowError>(entry.outcome).kind);
        }
        return Ok;
    }
    const ParallelEstimate estimate = parallel_estimate(opt.n, opt.k, opt.p);
    const ParallelizableCheck check = parallelizable_check(opt.n, opt.k, opt.p);
    io.out() << render(estimate, check, opt.format);
    return Ok;
}

int cmd_compare(const Options& opt, Io& io) {
    const std::vector<Key> keys = read_keys(io.in());
    const KeyDomain domain = domain_for(opt, keys);
    CostWeights weights;
    weights.swap_weight = opt.swap_weight;
    const ComparisonReport report = comparison_report(keys, domain, weights);
    io.out() << render(report, opt.format);
    return Ok;
}

int cmd_bench(const Options& opt, Io& io) {
    const std::vector<BenchRow> rows =
        run_bench(opt.sizes, opt.range_factor, opt.seed, kBubbleSizeLimit, opt.max_domain_bits);
    write_bench_csv(io.out(), rows);
    return Ok;
}

void add_io(CLI::App* cmd, Options& opt) {
    cmd->add_option("-i,--input", opt.input, "Input file (default: standard input)");
    cmd->add_option("-o,--output", opt.output, "Output file (default: standard output)");
}

void add_bounds(CLI::App* cmd, Options& opt, bool required) {
    auto* lo = cmd->add_option("--lower", opt.lower, "Lowest key of the domain");
    auto* hi = cmd->add_option("--upper", opt.upper, "Highest key of the domain");
    if (required) {
        lo->required();
        hi->required();
    } else {
        lo->needs(hi);
        hi->needs(lo);
    }
}

void add_max_bits(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-domain-bits", opt.max_domain_bits, "Largest domain size allowed")
        ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Report format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
            CLI::ignore_case));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Domain-bounded decision sort and cost model", "dsort"};
    app.require_subcommand(1);
    Options opt;

    auto* sort = app.add_subcommand("sort", "Sort newline-delimited integers");
    add_io(sort, opt);
    add_bounds(sort, opt, false);
    add_max_bits(sort, opt);
    sort->add_flag("--multiset", opt.multiset, "Allow repeated keys");
    sort->add_option("--workers", opt.workers, "Parallel sort with this many workers, or 'auto'");
    sort->add_flag("--stats", opt.stats, "Operation counters as JSON on standard error");

    auto* stream = app.add_subcommand("stream", "Sort batches separated by '---' lines");
    add_io(stream, opt);
    add_bounds(stream, opt, true);
    add_max_bits(stream, opt);

    auto* analyze = app.add_subcommand("analyze", "Exponent, hit probability and regime for n, k");
    analyze->add_option("n", opt.n, "Number of keys")->required();
    analyze->add_option("k", opt.k, "Domain size")->required();
    analyze->add_option("--exponent", opt.tradeoff_exponent, "Also report P * n^(a-1) at this a");
    analyze->add_option("--linear-factor", opt.regime.linear_factor, "k <= factor * n is linear");
    analyze->add_option("--max-exponent", opt.regime.max_exponent, "Largest acceptable exponent");
    add_format(analyze, opt);
    analyze->add_option("-o,--output", opt.output, "Output file (default: standard output)");

    auto* model = app.add_subcommand("model", "Parallel speedup and efficiency estimate");
    auto* model_n = model->add_option("n", opt.n, "Number of keys");
    auto* model_k = model->add_option("k", opt.k, "Domain size");
    auto* model_p = model->add_option("p", opt.p, "Workers (power of two)");
    auto* rows = model->add_option("--rows", opt.rows_path, "File of 'n k p' lines");
    rows->excludes(model_n)->excludes(model_k)->excludes(model_p);
    add_format(model, opt);
    model->add_option("-o,--output", opt.output, "Output file (default: standard output)");

    auto* compare = app.add_subcommand("compare", "Weighted-cost comparison with bubble and quick sort");
    add_io(compare, opt);
    add_bounds(compare, opt, false);
    add_max_bits(compare, opt);
    add_format(compare, opt);
    compare->add_option("--swap-weight", opt.swap_weight, "Cost of one swap relative to a read/write");

    auto* bench = app.add_subcommand("bench", "Time the sorts on random distinct keys (CSV)");
    bench->add_option("--sizes", opt.sizes, "Comma-separated key counts")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--range-factor", opt.range_factor, "Domain size as a multiple of n");
    bench->add_option("--seed", opt.seed, "Generator seed");
    add_max_bits(bench, opt);
    bench->add_option("-o,--output", opt.output, "Output file (default: standard output)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "dsort: " << e.what() << '\n';
        return ParseError;
    }

    try {
        Io io(opt, in, out);
        if (sort->parsed()) return cmd_sort(opt, io, err);
        if (stream->parsed()) return cmd_stream(opt, io);
        if (analyze->parsed()) return cmd_analyze(opt, io);
        if (model->parsed()) {
            if (opt.rows_path.empty() && (model_n->count() == 0 || model_k->count() == 0 ||
                                          model_p->count() == 0)) {
                throw InputError("model needs n k p or --rows FILE");
            }
            return cmd_model(opt, io);
        }
        if (compare->parsed()) return cmd_compare(opt, io);
        if (bench->parsed()) return cmd_bench(opt, io);
    } catch (const Error& e) {
        err << "dsort: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const InputError& e) {
        err << "dsort: " << e.what() << '\n';
        return ParseError;
    }
    return ParseError;
}

} // namespace dsort::cli

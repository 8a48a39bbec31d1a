// sus: build, query, inspect and verify shortest-unique-substring indexes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <sus/sus.hpp>

namespace {

enum Exit : int {
    kOk = 0,
    kIoError = 1,
    kBadInput = 2,
    kMissingSection = 3,
    kCorrupt = 4,
    kMismatch = 5,
};

struct CliError {
    int code;
    std::string message;
};

sus::Text load_text(const std::string& path) {
    std::vector<std::uint8_t> bytes;
    try {
        bytes = sus::read_file(path);
    } catch (const std::ios_base::failure& e) {
        throw CliError{kIoError, e.what()};
    }
    if (bytes.empty()) throw CliError{kBadInput, "empty text"};
    return sus::Text::from_bytes(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

sus::IndexContainer load_index(const std::string& path) {
    std::vector<std::uint8_t> bytes;
    try {
        bytes = sus::read_file(path);
    } catch (const std::ios_base::failure& e) {
        throw CliError{kIoError, e.what()};
    }
    try {
        return sus::IndexContainer::decode(bytes);
    } catch (const std::exception& e) {
        throw CliError{kCorrupt, std::string("corrupt index: ") + e.what()};
    }
}

std::string bits_per_char(std::uint64_t bits, sus::pos_t n) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << static_cast<double>(bits) / static_cast<double>(n);
    return os.str();
}

void print_build_log(const sus::BuildLog& log, sus::pos_t n, std::ostream& os) {
    os << "stage\tworking_bits\tbits_per_char\n";
    for (const auto& s : log.stages()) os << s.name << '\t' << s.working_bits << '\t' << bits_per_char(s.working_bits, n) << '\n';
    os << "peak\t" << log.peak_bits() << '\t' << bits_per_char(log.peak_bits(), n) << '\n';
}

int cmd_build(const std::string& text_path, const std::string& out_path, const std::string& which, bool quiet) {
    const auto text = load_text(text_path);
    sus::BuildOptions opts;
    opts.interval = which != "point";
    opts.point = which != "interval";
    const auto built = sus::build_indexes(text, opts);
    const auto bytes = sus::IndexContainer::from(built).encode();
    try {
        sus::write_file(out_path, bytes);
    } catch (const std::ios_base::failure& e) {
        throw CliError{kIoError, e.what()};
    }
    if (!quiet) {
        std::cout << "n=" << text.size() << " m=" << built.mus().count() << " bytes=" << bytes.size() << '\n';
        print_build_log(built.log, text.size(), std::cout);
    }
    return kOk;
}

int cmd_query(const std::string& index_path, const std::string& kind, const std::vector<long long>& args,
              const std::string& format) {
    const auto c = load_index(index_path);
    for (auto a : args) {
        if (a < 1 || static_cast<sus::pos_t>(a) > c.text_length) {
            throw CliError{kBadInput, "query position " + std::to_string(a) + " outside [1, " +
                                          std::to_string(c.text_length) + "]"};
        }
    }
    sus::QueryResult result;
    if (kind == "point") {
        if (!c.has_point()) throw CliError{kMissingSection, "index has no PTSUS section"};
        result = c.point->query(static_cast<sus::pos_t>(args[0]));
    } else {
        if (args[0] > args[1]) throw CliError{kBadInput, "invalid query interval"};
        if (!c.has_interval()) throw CliError{kMissingSection, "index has no IVSUS section"};
        result = c.interval_index().query(static_cast<sus::pos_t>(args[0]), static_cast<sus::pos_t>(args[1]));
    }
    if (format == "json") {
        nlohmann::json results = nlohmann::json::array();
        for (const auto& iv : result.intervals) results.push_back({iv.start, iv.end});
        nlohmann::json out = {{"queries", {{{"type", kind}, {"args", args}, {"results", results}}}}};
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& iv : result.intervals) std::cout << iv.start << '\t' << iv.end << '\t' << iv.length() << '\n';
    }
    return kOk;
}

int cmd_stats(const std::string& path, bool build_only) {
    if (build_only) {
        const auto text = load_text(path);
        const auto built = sus::build_indexes(text);
        std::cout << "n: " << text.size() << "\nm: " << built.mus().count() << '\n';
        print_build_log(built.log, text.size(), std::cout);
        return kOk;
    }
    const auto c = load_index(path);
    const sus::pos_t n = c.text_length;
    std::cout << "n: " << n << '\n';
    if (c.mus) std::cout << "m: " << c.mus->count() << '\n';
    std::cout << "section\tpayload_bits\taux_bits\ttotal_bits\tbits_per_char\n";
    auto row = [&](const char* name, std::uint64_t payload, std::uint64_t aux) {
        std::cout << name << '\t' << payload << '\t' << aux << '\t' << payload + aux << '\t'
                  << bits_per_char(payload + aux, n) << '\n';
    };
    std::uint64_t interval_total = 0;
    if (c.mus) {
        row("MUSIX", c.mus->payload_bits(), c.mus->aux_bits());
        interval_total += c.mus->total_bits();
    }
    if (c.rmq) {
        row("IVSUS", c.rmq->payload_bits(), c.rmq->aux_bits());
        interval_total += c.rmq->total_bits();
    }
    if (c.point) row("PTSUS", c.point->payload_bits(), c.point->aux_bits());
    if (c.has_interval()) {
        std::cout << "interval_index_total_bits: " << interval_total << " (" << bits_per_char(interval_total, n)
                  << " bits/char)\n";
    }
    if (c.has_point()) {
        std::cout << "point_index_total_bits: " << c.point->total_bits() << " ("
                  << bits_per_char(c.point->total_bits(), n) << " bits/char)\n";
    }
    return kOk;
}

// Drops characters one at a time while the mismatch persists.
sus::Text shrink_counterexample(sus::Text text, const sus::VerifyOptions& opts) {
    auto symbols = std::vector<sus::Text::symbol_type>(text.symbols().begin(), text.symbols().end());
    bool changed = true;
    while (changed && symbols.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < symbols.size() && symbols.size() > 1; ++i) {
            auto candidate = symbols;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
            if (!sus::verify_against_oracle(sus::Text(candidate), opts).ok()) {
                symbols = std::move(candidate);
                changed = true;
            }
        }
    }
    return sus::Text(std::move(symbols));
}

int cmd_verify(const std::string& text_path, std::optional<sus::pos_t> cap, sus::pos_t intervals) {
    const auto text = load_text(text_path);
    sus::VerifyOptions opts;
    opts.size_cap = cap.value_or(sus::oracle::size_cap_from_env());
    opts.sampled_intervals = intervals;
    if (text.size() > opts.size_cap) {
        throw CliError{kBadInput, "text length " + std::to_string(text.size()) + " exceeds oracle cap " +
                                      std::to_string(opts.size_cap) + " (raise with --cap or SUS_ORACLE_CAP)"};
    }
    const auto rep = sus::verify_against_oracle(text, opts);
    if (rep.ok()) {
        std::cout << "PASS n=" << text.size() << " checks=" << rep.checks << '\n';
        return kOk;
    }
    std::cout << "FAIL n=" << text.size() << " checks=" << rep.checks << " failures=" << rep.failures << '\n';
    for (const auto& m : rep.mismatches) std::cout << "  " << m << '\n';
    const auto small = shrink_counterexample(text, opts);
    std::cout << "minimal counterexample (symbols):";
    for (auto s : small.symbols()) std::cout << ' ' << s;
    std::cout << '\n';
    for (const auto& m : sus::verify_against_oracle(small, opts).mismatches) std::cout << "  " << m << '\n';
    return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest unique substring indexes"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Build an index file from a text file (bytes are the alphabet)");
    std::string build_text, build_out, which = "both";
    bool quiet = false;
    build->add_option("text", build_text, "Input text file")->required();
    build->add_option("-o,--output", build_out, "Output index file")->required();
    auto* f_point = build->add_flag_callback("--point", [&] { which = "point"; }, "Point index only");
    auto* f_interval = build->add_flag_callback("--interval", [&] { which = "interval"; }, "Interval index only");
    auto* f_both = build->add_flag_callback("--both", [&] { which = "both"; }, "Both indexes (default)");
    f_point->excludes(f_interval)->excludes(f_both);
    f_interval->excludes(f_both);
    build->add_flag("-q,--quiet", quiet, "Do not print the build log");

    auto* query = app.add_subcommand("query", "Answer a SUS query from an index file");
    std::string query_index, format = "tsv";
    query->add_option("index", query_index, "Index file")->required();
    query->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    query->require_subcommand(1);
    long long p = 0, s = 0, t = 0;
    auto* q_point = query->add_subcommand("point", "All SUSs containing position p");
    q_point->add_option("p", p)->required();
    auto* q_interval = query->add_subcommand("interval", "All SUSs containing [s, t]");
    q_point->fallthrough();
    q_interval->fallthrough();
    q_interval->add_option("s", s)->required();
    q_interval->add_option("t", t)->required();

    auto* stats = app.add_subcommand("stats", "Report index space usage");
    std::string stats_path;
    bool stats_build = false;
    stats->add_option("path", stats_path, "Index file (or text file with --build)")->required();
    stats->add_flag("--build", stats_build, "Build from a text file in memory and report per-stage working space");

    auto* verify = app.add_subcommand("verify", "Compare every index answer against the brute-force oracle");
    std::string verify_text;
    std::optional<sus::pos_t> cap;
    sus::pos_t intervals = 0;
    verify->add_option("text", verify_text, "Input text file")->required();
    verify->add_option("--cap", cap, "Oracle size cap (default SUS_ORACLE_CAP or 512)");
    verify->add_option("--intervals", intervals, "Check this many random intervals instead of all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build->parsed()) return cmd_build(build_text, build_out, which, quiet);
        if (query->parsed()) {
            if (q_point->parsed()) return cmd_query(query_index, "point", {p}, format);
            return cmd_query(query_index, "interval", {s, t}, format);
        }
        if (stats->parsed()) return cmd_stats(stats_path, stats_build);
        if (verify->parsed()) return cmd_verify(verify_text, cap, intervals);
    } catch (const CliError& e) {
        std::cerr << "sus: " << e.message << '\n';
        return e.code;
    } catch (const std::out_of_range& e) {
        std::cerr << "sus: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "sus: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}

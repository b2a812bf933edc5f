// Command-line surface for the inset counting library: evaluate single
// values, print Pascal-like tables, export named sequences, count
// configurations, run the identity suites, and cross-check formulas against
// brute-force enumeration.
//
// Exit codes: 0 success / all suites pass, 1 usage or domain error,
// 2 verification failure or oracle mismatch, 3 enumeration budget exceeded.

#include <CLI11.hpp>

#include <inset/inset.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitBudget = 3;

std::vector<long long> parse_block_list(const std::string& text) {
    std::vector<long long> sizes;
    if (text.empty()) return sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::domain_error("bad block size '" + item + "' in -Q list");
        }
        if (used != item.size()) {
            throw std::domain_error("bad block size '" + item + "' in -Q list");
        }
        sizes.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return sizes;
}

struct EvalArgs {
    long long m = 0;
    long long k = 0;
    std::string blocks;
    bool explain = false;
};

int run_eval(const EvalArgs& args) {
    inset::InsetProblem p(args.m, inset::BlockProfile(parse_block_list(args.blocks)),
                          args.k);
    if (args.explain) {
        std::cout << "Q={" << p.profile.to_string() << "} m=" << p.m << " k=" << p.k
                  << " route=" << inset::to_string(inset::eval_route(p)) << '\n';
    }
    std::cout << inset::inset_count(p) << '\n';
    return kExitOk;
}

struct TableArgs {
    std::string blocks;
    long long m_max = 0;
    long long k_max = 0;
    std::string format = "aligned";
    bool header = false;
};

int run_table(const TableArgs& args) {
    inset::BlockProfile profile(parse_block_list(args.blocks));
    const auto array = inset::recurrence::build_pascal_array(profile, args.m_max, args.k_max);

    if (args.format == "csv") {
        if (args.header) {
            for (long long k = 0; k <= args.k_max; ++k) {
                if (k) std::cout << ',';
                std::cout << "k=" << k;
            }
            std::cout << '\n';
        }
        for (long long m = 0; m <= args.m_max; ++m) {
            for (long long k = 0; k <= args.k_max; ++k) {
                if (k) std::cout << ',';
                std::cout << array.at(m, k);
            }
            std::cout << '\n';
        }
        return kExitOk;
    }

    // Aligned: header row of k indices, one labeled row per m, columns padded
    // to their widest entry.
    std::vector<std::string> row_labels;
    for (long long m = 0; m <= args.m_max; ++m) row_labels.push_back(std::to_string(m));
    std::size_t label_width = 3;  // "m\k"
    for (const auto& label : row_labels) label_width = std::max(label_width, label.size());

    std::vector<std::size_t> widths(static_cast<std::size_t>(args.k_max) + 1);
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(args.m_max) + 1);
    for (long long k = 0; k <= args.k_max; ++k) {
        widths[static_cast<std::size_t>(k)] = std::to_string(k).size();
    }
    for (long long m = 0; m <= args.m_max; ++m) {
        for (long long k = 0; k <= args.k_max; ++k) {
            std::string text = array.at(m, k).str();
            widths[static_cast<std::size_t>(k)] =
                std::max(widths[static_cast<std::size_t>(k)], text.size());
            cells[static_cast<std::size_t>(m)].push_back(std::move(text));
        }
    }
    auto pad = [](const std::string& text, std::size_t width) {
        return std::string(width - text.size(), ' ') + text;
    };
    std::cout << pad("m\\k", label_width);
    for (long long k = 0; k <= args.k_max; ++k) {
        std::cout << "  " << pad(std::to_string(k), widths[static_cast<std::size_t>(k)]);
    }
    std::cout << '\n';
    for (long long m = 0; m <= args.m_max; ++m) {
        std::cout << pad(row_labels[static_cast<std::size_t>(m)], label_width);
        for (long long k = 0; k <= args.k_max; ++k) {
            std::cout << "  "
                      << pad(cells[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)],
                             widths[static_cast<std::size_t>(k)]);
        }
        std::cout << '\n';
    }
    return kExitOk;
}

struct SeqArgs {
    std::string family;
    std::optional<long long> from;
    std::optional<long long> to;
    std::optional<long long> n;
    std::optional<long long> k;
    std::optional<long long> m;
    std::optional<long long> q;
    bool diag = false;
    std::string format = "bfile";
};

void print_term(const SeqArgs& args, long long index, const inset::Integer& value) {
    if (args.format == "csv") {
        std::cout << index << ',' << value << '\n';
    } else {
        std::cout << index << ' ' << value << '\n';
    }
}

int run_seq(const SeqArgs& args) {
    using inset::sequences::SequenceFamily;
    const auto family = inset::sequences::parse_sequence_family(args.family);
    if (!family) {
        throw std::domain_error("unknown sequence family '" + args.family + "'");
    }

    auto need_range = [&]() -> std::pair<long long, long long> {
        if (!args.from || !args.to) {
            throw std::domain_error("seq " + args.family + ": --from and --to are required");
        }
        if (*args.from > *args.to) {
            throw std::domain_error("seq " + args.family + ": need --from <= --to");
        }
        return {*args.from, *args.to};
    };
    auto forbid = [&](bool bad, const char* what) {
        if (bad) {
            throw std::domain_error("seq " + args.family + ": " + what);
        }
    };
    auto emit = [&](long long index, const std::vector<long long>& params) {
        try {
            print_term(args, index, inset::sequences::sequence_term(*family, params).value());
        } catch (const std::domain_error& e) {
            throw std::domain_error("seq " + args.family + " at index " +
                                    std::to_string(index) + ": " + e.what());
        }
    };

    switch (*family) {
        case SequenceFamily::triangular:
        case SequenceFamily::matchstick:
        case SequenceFamily::pentagonal:
        case SequenceFamily::hexagonal_prism:
        case SequenceFamily::pyramid_surface:
        case SequenceFamily::magic_constant:
        case SequenceFamily::catalan:
        case SequenceFamily::fibonomial_3: {
            forbid(args.n || args.k || args.m || args.q || args.diag,
                   "takes no fixed parameters");
            auto [from, to] = need_range();
            for (long long i = from; i <= to; ++i) emit(i, {i});
            return kExitOk;
        }
        case SequenceFamily::square_pyramidal:
        case SequenceFamily::centered_triangular:
        case SequenceFamily::centered_tetrahedral: {
            forbid(!args.k, "requires --k (varies m)");
            forbid(args.n || args.m || args.q || args.diag, "takes only --k");
            auto [from, to] = need_range();
            for (long long i = from; i <= to; ++i) emit(i, {i, *args.k});
            return kExitOk;
        }
        case SequenceFamily::truncated_square_pyramidal: {
            forbid(!args.q, "requires --q (varies m)");
            forbid(args.n || args.m || args.k || args.diag, "takes only --q");
            auto [from, to] = need_range();
            for (long long i = from; i <= to; ++i) emit(i, {i, *args.q});
            return kExitOk;
        }
        case SequenceFamily::chebyshev_coefficient: {
            forbid(!args.n, "requires --n (varies k over matching parity)");
            forbid(args.k || args.m || args.q || args.diag, "takes only --n");
            long long from = args.from.value_or(*args.n % 2);
            long long to = args.to.value_or(*args.n);
            for (long long i = from; i <= to; ++i) {
                if ((i - *args.n) % 2 != 0) continue;  // mixed parity: coefficient absent
                if (i < 0) continue;
                emit(i, {*args.n, i});
            }
            return kExitOk;
        }
        case SequenceFamily::delannoy:
        case SequenceFamily::crystal_ball: {
            forbid(args.k || args.q, "takes --diag or one of --m/--n");
            auto [from, to] = need_range();
            if (args.diag) {
                forbid(args.m.has_value() || args.n.has_value(),
                       "--diag excludes --m/--n");
                for (long long i = from; i <= to; ++i) emit(i, {i, i});
                return kExitOk;
            }
            forbid(args.m.has_value() == args.n.has_value(),
                   "requires exactly one of --m/--n (or --diag)");
            for (long long i = from; i <= to; ++i) {
                emit(i, args.n ? std::vector<long long>{i, *args.n}
                               : std::vector<long long>{*args.m, i});
            }
            return kExitOk;
        }
        case SequenceFamily::sulanke: {
            forbid(args.m || args.q || args.diag, "takes one of --n/--k");
            forbid(args.n.has_value() == args.k.has_value(),
                   "requires exactly one of --n/--k");
            auto [from, to] = need_range();
            for (long long i = from; i <= to; ++i) {
                emit(i, args.n ? std::vector<long long>{*args.n, i}
                               : std::vector<long long>{i, *args.k});
            }
            return kExitOk;
        }
        case SequenceFamily::coordination: {
            forbid(!args.n, "requires --n (varies m)");
            forbid(args.k || args.m || args.q || args.diag, "takes only --n");
            auto [from, to] = need_range();
            for (long long i = from; i <= to; ++i) emit(i, {i, *args.n});
            return kExitOk;
        }
    }
    throw std::domain_error("unknown sequence family");
}

struct ConfigArgs {
    std::string family;
    std::optional<long long> n;
    std::optional<long long> m;
    std::optional<long long> q;
    std::optional<long long> r;
    std::optional<long long> s;
    std::optional<long long> i;
};

int run_config(const ConfigArgs& args) {
    using inset::configs::ConfigFamily;
    const auto family = inset::configs::parse_config_family(args.family);
    if (!family) {
        throw std::domain_error("unknown configuration family '" + args.family + "'");
    }
    auto need = [&](const std::optional<long long>& opt, const char* flag) {
        if (!opt) {
            throw std::domain_error("config " + args.family + ": missing " + flag);
        }
        return *opt;
    };
    std::vector<long long> params;
    switch (*family) {
        case ConfigFamily::square_submatrices:
        case ConfigFamily::divisor_count:
        case ConfigFamily::composition_parts:
        case ConfigFamily::colorings_3:
        case ConfigFamily::chain_sum:
        case ConfigFamily::rook_moves:
        case ConfigFamily::bishop_moves:
        case ConfigFamily::queen_moves:
            params = {need(args.n, "-n")};
            break;
        case ConfigFamily::paths_touching:
            params = {need(args.n, "-n"), need(args.i, "-i")};
            break;
        case ConfigFamily::squares_in_square:
            params = {need(args.m, "-m"), need(args.q, "-q")};
            break;
        case ConfigFamily::weak_compositions:
            params = {need(args.r, "-r"), need(args.s, "-s")};
            break;
    }
    std::cout << inset::configs::config_count(*family, params) << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    std::string scale = "default";
};

int run_verify(const VerifyArgs& args) {
    const auto scale = inset::verify::parse_scale(args.scale);
    if (!scale) {
        throw std::domain_error("unknown scale '" + args.scale + "' (small|default)");
    }
    std::vector<inset::verify::VerificationReport> reports;
    if (args.suite == "all") {
        reports = inset::verify::run_all(*scale);
    } else {
        const auto id = inset::verify::parse_suite_id(args.suite);
        if (!id) {
            throw std::domain_error("unknown suite '" + args.suite + "'");
        }
        reports.push_back(inset::verify::run_suite(*id, *scale));
    }
    bool all_passed = true;
    for (const auto& report : reports) {
        std::cout << inset::verify::to_text(report);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

struct OracleCheckArgs {
    long long m = 0;
    long long k = 0;
    std::string blocks;
};

int run_oracle_check(const OracleCheckArgs& args) {
    inset::InsetProblem p(args.m, inset::BlockProfile(parse_block_list(args.blocks)),
                          args.k);
    const inset::Count formula = inset::inset_count(p);
    const inset::Count enumerated = inset::oracle::enumerate_insets(p);
    const bool match = formula == enumerated;
    std::cout << "formula=" << formula << " oracle=" << enumerated << ' '
              << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of block-intersecting subsets, with sequence export "
                 "and identity verification"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one count {m,n | k,Q}");
    eval->add_option("-m", eval_args.m, "Additional-block size (>= 0)")->required();
    eval->add_option("-k", eval_args.k, "Inset excess")->required();
    eval->add_option("-Q", eval_args.blocks, "Comma list of main-block sizes");
    eval->add_flag("--explain", eval_args.explain,
                   "Also print the canonical profile and chosen formula route");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print the Pascal-like array for Q");
    table->add_option("-Q", table_args.blocks, "Comma list of main-block sizes");
    table->add_option("--m-max", table_args.m_max, "Last row index")->required();
    table->add_option("--k-max", table_args.k_max, "Last column index")->required();
    table->add_option("--format", table_args.format, "csv|aligned")
        ->check(CLI::IsMember({"csv", "aligned"}));
    table->add_flag("--header", table_args.header, "Emit a column-header line (csv)");

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "Export a named sequence family");
    seq->add_option("family", seq_args.family, "Sequence family id")->required();
    seq->add_option("--from", seq_args.from, "First index");
    seq->add_option("--to", seq_args.to, "Last index");
    seq->add_option("--n", seq_args.n, "Fixed n");
    seq->add_option("--k", seq_args.k, "Fixed k");
    seq->add_option("--m", seq_args.m, "Fixed m");
    seq->add_option("--q", seq_args.q, "Fixed q");
    seq->add_flag("--diag", seq_args.diag, "Central diagonal (delannoy, crystal-ball)");
    seq->add_option("--format", seq_args.format, "bfile|csv")
        ->check(CLI::IsMember({"bfile", "csv"}));

    ConfigArgs config_args;
    auto* config = app.add_subcommand("config", "Count one named configuration");
    config->add_option("family", config_args.family, "Configuration family id")->required();
    config->add_option("-n", config_args.n, "n parameter");
    config->add_option("-m", config_args.m, "m parameter");
    config->add_option("-q", config_args.q, "q parameter");
    config->add_option("-r", config_args.r, "r parameter (weak-compositions)");
    config->add_option("-s", config_args.s, "s parameter (weak-compositions)");
    config->add_option("-i", config_args.i, "i parameter (paths-touching)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run identity suites");
    verify->add_option("suite", verify_args.suite, "Suite id or 'all'")->required();
    verify->add_option("--scale", verify_args.scale, "small|default");

    OracleCheckArgs oracle_args;
    auto* oracle_check =
        app.add_subcommand("oracle-check", "Compare the formula against enumeration");
    oracle_check->add_option("-m", oracle_args.m, "Additional-block size")->required();
    oracle_check->add_option("-k", oracle_args.k, "Inset excess")->required();
    oracle_check->add_option("-Q", oracle_args.blocks, "Comma list of main-block sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(eval_args);
        if (table->parsed()) return run_table(table_args);
        if (seq->parsed()) return run_seq(seq_args);
        if (config->parsed()) return run_config(config_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (oracle_check->parsed()) return run_oracle_check(oracle_args);
    } catch (const inset::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

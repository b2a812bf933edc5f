// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact equality throughout) and prints one PASS/FAIL line per criterion.
// Exits nonzero if any criterion fails.

#include "../support/cli_runner.hpp"

#include <inset/inset.hpp>

#include <cctype>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace inset;

namespace {

class Checker {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }

    template <typename L, typename R>
    void equal(const L& lhs, const R& rhs, const std::string& what) {
        ++checks_;
        if (!(lhs == rhs)) {
            std::ostringstream msg;
            msg << what << ": " << lhs << " != " << rhs;
            failures_.push_back(msg.str());
        }
    }

    long long checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    long long checks_ = 0;
    std::vector<std::string> failures_;
};

std::vector<BlockProfile> profiles_up_to(long long n_max, long long size_max) {
    std::vector<BlockProfile> out;
    std::vector<long long> sizes;
    auto rec = [&](auto&& self, long long remaining, long long min_size) -> void {
        out.push_back(BlockProfile(sizes));
        if (remaining == 0) return;
        for (long long q = min_size; q <= size_max; ++q) {
            sizes.push_back(q);
            self(self, remaining - 1, q);
            sizes.pop_back();
        }
    };
    rec(rec, n_max, 1);
    return out;
}

// Criterion 1: pie_count = inset_count = enumerate_insets on the full small
// grid (n <= 4 blocks, sizes <= 3, m <= 4, 0 <= k <= 5).
void criterion_oracle_equivalence(Checker& check) {
    for (const auto& profile : profiles_up_to(4, 3)) {
        for (long long m = 0; m <= 4; ++m) {
            for (long long k = 0; k <= 5; ++k) {
                InsetProblem p(m, profile, k);
                const Count expected = oracle::enumerate_insets(p);
                const std::string cell =
                    "Q={" + profile.to_string() + "} m=" + std::to_string(m) +
                    " k=" + std::to_string(k);
                check.equal(pie_count(p), expected, cell + " pie");
                check.equal(inset_count(p), expected, cell + " dispatch");
            }
        }
    }
}

// Criterion 2: the published value slices.
void criterion_known_values(Checker& check) {
    const std::vector<Count> magic = {15, 34, 65, 111};
    for (long long m = 3; m <= 6; ++m) {
        check.equal(inset_count(m, BlockProfile{3}, 3), magic[static_cast<std::size_t>(m - 3)],
                    "magic constant m=" + std::to_string(m));
    }
    const std::vector<Count> centered = {1, 4, 10, 19, 31};
    for (long long m = 0; m <= 4; ++m) {
        check.equal(inset_count(m, BlockProfile{3}, 2), centered[static_cast<std::size_t>(m)],
                    "centered triangular m=" + std::to_string(m));
    }
    check.equal(inset_count(0, BlockProfile{2}, 0), Count(2), "reverse Lucas row 0 col 0");
    check.equal(inset_count(0, BlockProfile{2}, 1), Count(1), "reverse Lucas row 0 col 1");
}

// Criterion 3: chess closed forms vs square-by-square enumeration, and the
// bishop delta.
void criterion_chess(Checker& check) {
    using configs::ConfigFamily;
    for (long long n = 2; n <= 8; ++n) {
        const Count rook = configs::config_count(ConfigFamily::rook_moves, {n});
        const Count bishop = configs::config_count(ConfigFamily::bishop_moves, {n});
        const Count queen = configs::config_count(ConfigFamily::queen_moves, {n});
        check.equal(rook, oracle::enumerate_chess_moves(oracle::ChessPiece::rook, n),
                    "rook vs enumeration n=" + std::to_string(n));
        check.equal(bishop, oracle::enumerate_chess_moves(oracle::ChessPiece::bishop, n),
                    "bishop vs enumeration n=" + std::to_string(n));
        check.equal(queen, oracle::enumerate_chess_moves(oracle::ChessPiece::queen, n),
                    "queen vs enumeration n=" + std::to_string(n));
        check.equal(rook, Count(2) * (n - 1) * n * n, "rook closed form n=" + std::to_string(n));
        check.equal(bishop, Count(2) * n * (2 * n - 1) * (n - 1) / 3,
                    "bishop closed form n=" + std::to_string(n));
        check.equal(queen, Count(2) * n * (5 * n - 1) * (n - 1) / 3,
                    "queen closed form n=" + std::to_string(n));
    }
    for (long long n = 2; n <= 10; ++n) {
        check.equal(configs::config_count(configs::ConfigFamily::bishop_moves, {n + 1}) -
                        configs::config_count(configs::ConfigFamily::bishop_moves, {n}),
                    Count(4) * n * n, "bishop delta n=" + std::to_string(n));
    }
}

// Criterion 4: all eleven identity suites at default bounds.
void criterion_identity_suites(Checker& check) {
    const auto reports = verify::run_all(verify::Scale::standard);
    check.equal(static_cast<long long>(reports.size()), 11ll, "suite count");
    for (const auto& report : reports) {
        check.require(report.passed(),
                      "suite " + report.suite + " failed:\n" + verify::to_text(report));
    }
}

// Criterion 5: every configuration family equals its dedicated oracle on the
// stated grids.
void criterion_config_cross_checks(Checker& check) {
    using configs::ConfigFamily;
    using oracle::OracleFamily;
    for (long long n = 2; n <= 6; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        check.equal(configs::config_count(ConfigFamily::square_submatrices, {n}),
                    oracle::enumerate_config({OracleFamily::square_submatrices, {n}}),
                    "square-submatrices" + tag);
        check.equal(configs::config_count(ConfigFamily::chain_sum, {n}),
                    oracle::enumerate_config({OracleFamily::subset_chain_sum, {n}}),
                    "chain-sum" + tag);
        check.equal(configs::config_count(ConfigFamily::colorings_3, {n}),
                    oracle::enumerate_config({OracleFamily::colorings_3, {n}}),
                    "colorings-3" + tag);
        check.equal(configs::config_count(ConfigFamily::composition_parts, {n}),
                    oracle::enumerate_config({OracleFamily::composition_parts, {n}}),
                    "composition-parts" + tag);
        check.equal(configs::config_count(ConfigFamily::divisor_count, {n}),
                    oracle::enumerate_config({OracleFamily::divisor_count, {n}}),
                    "divisor-count" + tag);
    }
    for (long long n = 1; n <= 8; ++n) {
        for (long long i = 1; i <= n; ++i) {
            check.equal(configs::config_count(ConfigFamily::paths_touching, {n, i}),
                        oracle::enumerate_lattice_paths(n, i),
                        "paths-touching n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    for (long long m = 0; m <= 5; ++m) {
        for (long long q = 1; q <= 4; ++q) {
            check.equal(
                configs::config_count(ConfigFamily::squares_in_square, {m, q}),
                oracle::enumerate_config({OracleFamily::squares_in_square, {m, q}}),
                "squares-in-square m=" + std::to_string(m) + " q=" + std::to_string(q));
        }
    }
    for (long long r = 1; r <= 8; ++r) {
        for (long long s = 0; s <= 5; ++s) {
            const std::string tag = " r=" + std::to_string(r) + " s=" + std::to_string(s);
            const Count enumerated = oracle::enumerate_weak_compositions(r, s);
            check.equal(configs::config_count(ConfigFamily::weak_compositions, {r, s}),
                        enumerated, "weak-compositions" + tag);
            if (s >= 1) {
                check.equal(configs::weak_composition_convolution(r, s), enumerated,
                            "weak-composition convolution" + tag);
            }
        }
    }
    for (long long n = 2; n <= 8; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        check.equal(configs::config_count(ConfigFamily::rook_moves, {n}),
                    oracle::enumerate_chess_moves(oracle::ChessPiece::rook, n),
                    "rook-moves" + tag);
        check.equal(configs::config_count(ConfigFamily::bishop_moves, {n}),
                    oracle::enumerate_chess_moves(oracle::ChessPiece::bishop, n),
                    "bishop-moves" + tag);
        check.equal(configs::config_count(ConfigFamily::queen_moves, {n}),
                    oracle::enumerate_chess_moves(oracle::ChessPiece::queen, n),
                    "queen-moves" + tag);
    }
}

// Criterion 6: the sequence bridges against their independent routes.
void criterion_sequence_bridges(Checker& check) {
    using sequences::SequenceFamily;
    auto magnitude = [](SequenceFamily f, std::vector<long long> params) {
        return sequences::sequence_term(f, params).magnitude;
    };
    for (long long m = 0; m <= 6; ++m) {
        for (long long n = 0; n <= 6; ++n) {
            const std::string tag = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const Count d = magnitude(SequenceFamily::delannoy, {m, n});
            check.equal(d, oracle::delannoy_paths(m, n), "delannoy vs paths" + tag);
            if (m >= 1 && n >= 1) {
                check.equal(d,
                            magnitude(SequenceFamily::delannoy, {m - 1, n}) +
                                magnitude(SequenceFamily::delannoy, {m - 1, n - 1}) +
                                magnitude(SequenceFamily::delannoy, {m, n - 1}),
                            "delannoy recurrence" + tag);
            }
        }
    }
    for (long long n = 0; n <= 12; ++n) {
        for (long long k = 0; n + k <= 12; ++k) {
            const std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            const Count bridge = magnitude(SequenceFamily::sulanke, {n, k});
            check.equal(bridge, oracle::sulanke_by_recurrence(n, k),
                        "sulanke vs recurrence" + tag);
            check.equal(bridge, sequences::sulanke_explicit(n, k),
                        "sulanke vs explicit sums" + tag);
        }
    }
    for (long long n = 0; n <= 8; ++n) {
        // the quotient itself throws if 3n+2 does not divide exactly
        check.equal(magnitude(SequenceFamily::catalan, {n}), oracle::catalan_ballot(n),
                    "catalan vs ballot n=" + std::to_string(n));
    }
    for (long long n = 0; n <= 10; ++n) {
        const auto expected = oracle::chebyshev_u_coefficients(n);
        for (long long k = 0; k <= n; ++k) {
            check.equal(
                sequences::sequence_term(SequenceFamily::chebyshev_coefficient, {n, k})
                    .value(),
                expected[static_cast<std::size_t>(k)],
                "chebyshev n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    for (long long n = 1; n <= 5; ++n) {
        for (long long m = 0; m <= 6; ++m) {
            const std::string tag = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            check.equal(magnitude(SequenceFamily::crystal_ball, {m, n}),
                        oracle::enumerate_diophantine(m, n, oracle::DiophantineMode::ball),
                        "crystal-ball vs enumeration" + tag);
            if (m >= 1) {
                check.equal(
                    magnitude(SequenceFamily::coordination, {m, n}),
                    oracle::enumerate_diophantine(m, n, oracle::DiophantineMode::sphere),
                    "coordination vs enumeration" + tag);
            }
        }
    }
}

// Criterion 7: matrix counting against exhaustive enumeration, the transpose
// symmetry, the zero-row inversion, and the K(2,2) spanning-subgraph value.
void criterion_matrices(Checker& check) {
    for (long long n = 1; n <= 3; ++n) {
        for (long long q = 1; q <= 3; ++q) {
            for (long long k = -2; k <= q * n - n + 2; ++k) {
                const std::string tag = " n=" + std::to_string(n) +
                                        " q=" + std::to_string(q) +
                                        " k=" + std::to_string(k);
                check.equal(matrices::matrix_count(n, k, q),
                            oracle::enumerate_matrices(n, k, q, true),
                            "matrix count vs enumeration" + tag);
                check.equal(matrices::matrix_count(n, k, q),
                            matrices::matrix_count(q, n + k - q, n), "transpose symmetry" + tag);
                Count inversion = 0;
                for (long long i = 0; i <= q; ++i) {
                    inversion += binomial_ext(q, i) * matrices::matrix_count(n, k, q - i);
                }
                check.equal(inversion, equal_blocks_count(0, n, k, q),
                            "zero-row inversion" + tag);
            }
        }
    }
    check.equal(matrices::spanning_subgraph_count(2, 2), Count(4), "K(2,2) spanning subgraphs");
}

// Criterion 8: byte-identical CLI runs and the b-file line grammar.
void criterion_cli_determinism(Checker& check) {
    const std::vector<std::string> commands = {
        "eval -m 3 -k 2 -Q 2,3",
        "table -Q 2 --m-max 4 --k-max 3 --format csv",
        "seq magic-constant --from 3 --to 10 --format bfile",
        "seq chebyshev-coefficient --n 5 --format bfile",
        "verify all --scale small",
    };
    for (const auto& command : commands) {
        const auto first = testsupport::run_cli(command);
        const auto second = testsupport::run_cli(command);
        check.require(first.exit_code == 0, "exit 0 for: " + command);
        check.require(first.output == second.output && first.exit_code == second.exit_code,
                      "byte-identical reruns of: " + command);
    }

    const auto bfile = testsupport::run_cli("seq magic-constant --from 3 --to 10 --format bfile");
    check.require(!bfile.output.empty() && bfile.output.back() == '\n',
                  "b-file is newline-terminated");
    long long previous_index = 0;
    bool first_line = true;
    std::istringstream lines(bfile.output);
    std::string line;
    while (std::getline(lines, line)) {
        const std::size_t space = line.find(' ');
        bool line_ok = space != std::string::npos &&
                       line.find(' ', space + 1) == std::string::npos && space > 0 &&
                       space + 1 < line.size();
        if (line_ok) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i == space) continue;
                const char ch = line[i];
                const bool sign_ok = ch == '-' && (i == 0 || i == space + 1);
                if (!std::isdigit(static_cast<unsigned char>(ch)) && !sign_ok) {
                    line_ok = false;
                    break;
                }
            }
        }
        check.require(line_ok, "b-file line grammar: '" + line + "'");
        if (line_ok) {
            const long long index = std::stoll(line.substr(0, space));
            check.require(first_line || index > previous_index,
                          "b-file indices ascend at '" + line + "'");
            previous_index = index;
            first_line = false;
        }
    }

    check.require(testsupport::run_cli("eval -m 2 -k 1 -Q bad").exit_code == 1,
                  "usage error exits 1");
    check.require(testsupport::run_cli("oracle-check -m 20 -k 3 -Q 9,9").exit_code == 3,
                  "budget overrun exits 3");
}

struct Criterion {
    int number;
    std::string name;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence on the small-parameter grid", criterion_oracle_equivalence},
        {2, "known value slices", criterion_known_values},
        {3, "chess move formulas vs enumeration", criterion_chess},
        {4, "identity suites at default bounds", criterion_identity_suites},
        {5, "configuration cross-checks", criterion_config_cross_checks},
        {6, "sequence bridges", criterion_sequence_bridges},
        {7, "matrix counting", criterion_matrices},
        {8, "CLI determinism and b-file grammar", criterion_cli_determinism},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker check;
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("unexpected exception: ") + e.what());
        }
        const bool ok = check.failures().empty();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
                  << criterion.name << " (" << check.checks() << " checks";
        if (!ok) {
            std::cout << ", " << check.failures().size() << " failures";
        }
        std::cout << ")\n";
        if (!ok) {
            ++failed;
            std::size_t shown = 0;
            for (const auto& failure : check.failures()) {
                if (++shown > 5) {
                    std::cout << "       ...\n";
                    break;
                }
                std::cout << "       " << failure << '\n';
            }
        }
    }
    if (failed == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << failed << " criteria failed\n";
    return 1;
}

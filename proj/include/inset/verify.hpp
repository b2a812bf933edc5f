#pragma once

#include <inset/configs.hpp>
#include <inset/core.hpp>
#include <inset/matrices.hpp>
#include <inset/oracle.hpp>
#include <inset/recurrence.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace inset::verify {

// Identity suites: each one re-derives a proved equality over a finite
// parameter grid with exact arithmetic and records every mismatch. A suite
// never short-circuits; a failing report names each counterexample cell.

enum class SuiteId {
    pascal_law,         // {m+1,n|k+1,Q} = {m,n|k+1,Q} + {m,n|k,Q}
    m_reduction,        // {m,n|k,Q} = sum C(m,i) {0,n|k-i,Q}
    block_recurrences,  // both block expansions, every block index j
    vandermonde,        // C(q+m,k+1) = sum C(m,i) C(q,k+1-i)
    power_family,       // q^n = sum (-1)^i C(n,i) C(qn+m-qi,n), any m
    chebyshev_binomial, // 2^(n-k) C(n,k) = sum (-1)^(n+i) C(n,i) {0,2|n+k-2,i}
    conway_sloane,      // the two lattice-point binomial identities
    m_symmetry,         // M(n,k,q) = M(q,n+k-q,n) and the zero-row inversion
    delannoy_symmetry,  // D(m,n) = D(n,m) and the three-term recurrence
    bishop_delta,       // bishop(n+1) - bishop(n) = 4n^2
    oracle_agreement,   // pie = dispatch = subset enumeration
};

inline const char* to_string(SuiteId id) {
    switch (id) {
        case SuiteId::pascal_law: return "pascal-law";
        case SuiteId::m_reduction: return "m-reduction";
        case SuiteId::block_recurrences: return "block-recurrences";
        case SuiteId::vandermonde: return "vandermonde";
        case SuiteId::power_family: return "power-family";
        case SuiteId::chebyshev_binomial: return "chebyshev-binomial";
        case SuiteId::conway_sloane: return "conway-sloane";
        case SuiteId::m_symmetry: return "m-symmetry";
        case SuiteId::delannoy_symmetry: return "delannoy-symmetry";
        case SuiteId::bishop_delta: return "bishop-delta";
        case SuiteId::oracle_agreement: return "oracle-agreement";
    }
    return "?";
}

inline const std::vector<SuiteId>& all_suites() {
    static const std::vector<SuiteId> ids = {
        SuiteId::pascal_law,        SuiteId::m_reduction,
        SuiteId::block_recurrences, SuiteId::vandermonde,
        SuiteId::power_family,      SuiteId::chebyshev_binomial,
        SuiteId::conway_sloane,     SuiteId::m_symmetry,
        SuiteId::delannoy_symmetry, SuiteId::bishop_delta,
        SuiteId::oracle_agreement,
    };
    return ids;
}

inline std::optional<SuiteId> parse_suite_id(std::string_view name) {
    for (SuiteId id : all_suites()) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

enum class Scale { small, standard };

inline const char* to_string(Scale s) {
    return s == Scale::small ? "small" : "default";
}

inline std::optional<Scale> parse_scale(std::string_view name) {
    if (name == "small") return Scale::small;
    if (name == "default") return Scale::standard;
    return std::nullopt;
}

// A suite id plus its explicit, finite grid bounds. at_scale() fills the
// documented defaults; callers may shrink bounds, and run_suite rejects
// bounds beyond each suite's hard budget cap.
struct IdentitySuite {
    SuiteId id;
    std::map<std::string, long long> bounds;

    static IdentitySuite at_scale(SuiteId id, Scale scale);
};

struct VerificationReport {
    std::string suite;
    std::string grid;  // the exact bounds the run used
    long long cells = 0;

    struct Failure {
        std::string params;
        Integer lhs;
        Integer rhs;
    };
    std::vector<Failure> failures;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

// Serialized text form: one header line per suite, then one line per
// counterexample. Timing is deliberately not serialized so identical runs
// print identical bytes.
inline std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite=" << report.suite << " cells=" << report.cells
        << " failures=" << report.failures.size() << '\n';
    for (const auto& f : report.failures) {
        out << "  counterexample: " << f.params << " lhs=" << f.lhs << " rhs=" << f.rhs
            << '\n';
    }
    return out.str();
}

namespace detail {

// Shared cell-checking engine. Suites funnel every comparison through
// check(), so failure recording behaves identically everywhere (the tests
// also drive it directly with a deliberately broken identity).
class SuiteRun {
public:
    SuiteRun(std::string suite, std::string grid)
        : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
        report_.grid = std::move(grid);
    }

    void check(std::string params, const Integer& lhs, const Integer& rhs) {
        ++report_.cells;
        if (lhs != rhs) {
            report_.failures.push_back({std::move(params), lhs, rhs});
        }
    }

    VerificationReport finish() {
        report_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string grid_string(const std::map<std::string, long long>& bounds) {
    std::string s;
    for (const auto& [key, value] : bounds) {
        if (!s.empty()) s += ' ';
        s += key + "=" + std::to_string(value);
    }
    return s;
}

inline long long bound(const std::map<std::string, long long>& bounds,
                       const std::string& key) {
    auto it = bounds.find(key);
    if (it == bounds.end()) {
        throw std::domain_error("run_suite: missing bound '" + key + "'");
    }
    return it->second;
}

inline void cap(const std::map<std::string, long long>& bounds, const std::string& key,
                long long maximum) {
    if (bound(bounds, key) > maximum) {
        throw budget_error("run_suite: bound '" + key + "' exceeds budget " +
                           std::to_string(maximum));
    }
}

// All canonical profiles with up to n_max blocks of size 1..size_max, in
// lexicographic order (so reports are reproducible).
inline std::vector<BlockProfile> profiles_up_to(long long n_max, long long size_max,
                                                long long n_min = 0) {
    std::vector<BlockProfile> out;
    std::vector<long long> sizes;
    auto rec = [&](auto&& self, long long remaining, long long min_size) -> void {
        if (static_cast<long long>(sizes.size()) >= n_min) {
            out.push_back(BlockProfile(sizes));
        }
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

inline std::string cell_name(const BlockProfile& profile, long long m, long long k) {
    return "Q={" + profile.to_string() + "} m=" + std::to_string(m) +
           " k=" + std::to_string(k);
}

}  // namespace detail

inline IdentitySuite IdentitySuite::at_scale(SuiteId id, Scale scale) {
    const bool small = scale == Scale::small;
    IdentitySuite suite{id, {}};
    auto& b = suite.bounds;
    switch (id) {
        case SuiteId::pascal_law:
        case SuiteId::m_reduction:
            b["n_max"] = small ? 2 : 3;
            b["size_max"] = small ? 2 : 3;
            b["m_max"] = small ? 3 : 4;
            b["k_max"] = small ? 4 : 5;
            break;
        case SuiteId::block_recurrences:
            b["n_max"] = small ? 2 : 3;
            b["size_max"] = small ? 2 : 3;
            b["m_max"] = small ? 3 : 4;
            b["k_max"] = small ? 4 : 5;
            break;
        case SuiteId::vandermonde:
            b["m_max"] = small ? 5 : 8;
            b["q_max"] = small ? 5 : 8;
            break;
        case SuiteId::power_family:
            b["n_max"] = small ? 3 : 5;
            b["q_max"] = small ? 3 : 4;
            b["m_max"] = small ? 4 : 6;
            break;
        case SuiteId::chebyshev_binomial:
            b["n_max"] = small ? 5 : 8;
            break;
        case SuiteId::conway_sloane:
            b["m_max"] = small ? 5 : 8;
            b["n_max"] = small ? 5 : 8;
            break;
        case SuiteId::m_symmetry:
            b["n_max"] = small ? 3 : 4;
            b["q_max"] = small ? 3 : 4;
            break;
        case SuiteId::delannoy_symmetry:
            b["max"] = small ? 4 : 6;
            break;
        case SuiteId::bishop_delta:
            b["n_max"] = small ? 6 : 10;
            break;
        case SuiteId::oracle_agreement:
            b["n_max"] = small ? 3 : 4;
            b["size_max"] = small ? 2 : 3;
            b["m_max"] = small ? 3 : 4;
            b["k_max"] = small ? 4 : 5;
            break;
    }
    return suite;
}

namespace detail {

inline VerificationReport run_pascal_law(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 6);
    cap(s.bounds, "size_max", 6);
    cap(s.bounds, "m_max", 12);
    cap(s.bounds, "k_max", 16);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (const auto& profile :
         profiles_up_to(bound(s.bounds, "n_max"), bound(s.bounds, "size_max"))) {
        for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
            for (long long k = 0; k <= bound(s.bounds, "k_max"); ++k) {
                Integer lhs = inset_count(m + 1, profile, k + 1);
                Integer rhs =
                    inset_count(m, profile, k + 1) + inset_count(m, profile, k);
                run.check(cell_name(profile, m, k), lhs, rhs);
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_m_reduction(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 6);
    cap(s.bounds, "size_max", 6);
    cap(s.bounds, "m_max", 12);
    cap(s.bounds, "k_max", 16);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (const auto& profile :
         profiles_up_to(bound(s.bounds, "n_max"), bound(s.bounds, "size_max"))) {
        for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
            for (long long k = 0; k <= bound(s.bounds, "k_max"); ++k) {
                InsetProblem p(m, profile, k);
                run.check(cell_name(profile, m, k), recurrence::reduce_to_m0(p),
                          pie_count(p));
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_block_recurrences(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 6);
    cap(s.bounds, "size_max", 6);
    cap(s.bounds, "m_max", 12);
    cap(s.bounds, "k_max", 16);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (const auto& profile : profiles_up_to(bound(s.bounds, "n_max"),
                                              bound(s.bounds, "size_max"),
                                              /*n_min=*/1)) {
        for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
            for (long long k = 0; k <= bound(s.bounds, "k_max"); ++k) {
                InsetProblem p(m, profile, k);
                Integer reference = pie_count(p);
                for (std::size_t j = 0; j < profile.size(); ++j) {
                    run.check(cell_name(profile, m, k) + " j=" + std::to_string(j) +
                                  " additional",
                              recurrence::block_expand_additional(p, j), reference);
                    run.check(cell_name(profile, m, k) + " j=" + std::to_string(j) +
                                  " subsets",
                              recurrence::block_expand_subsets(p, j), reference);
                }
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_vandermonde(const IdentitySuite& s) {
    cap(s.bounds, "m_max", 30);
    cap(s.bounds, "q_max", 30);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
        for (long long q = 1; q <= bound(s.bounds, "q_max"); ++q) {
            for (long long k = 0; k <= m + q; ++k) {
                Integer lhs = binomial_ext(q + m, k + 1);
                Integer rhs = 0;
                for (long long i = 0; i <= m; ++i) {
                    rhs += binomial_ext(m, i) * binomial_ext(q, k + 1 - i);
                }
                run.check("m=" + std::to_string(m) + " q=" + std::to_string(q) +
                              " k=" + std::to_string(k),
                          lhs, rhs);
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_power_family(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 10);
    cap(s.bounds, "q_max", 10);
    cap(s.bounds, "m_max", 20);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    // m varies too: the left side must not depend on it.
    for (long long n = 1; n <= bound(s.bounds, "n_max"); ++n) {
        for (long long q = 1; q <= bound(s.bounds, "q_max"); ++q) {
            for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
                Integer rhs = 0;
                for (long long i = 0; i <= n; ++i) {
                    Integer term = binomial_ext(n, i) * binomial_ext(q * n + m - i * q, n);
                    rhs += (i & 1) ? -term : term;
                }
                run.check("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                              " m=" + std::to_string(m),
                          ipow(q, n), rhs);
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_chebyshev_binomial(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 16);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (long long n = 1; n <= bound(s.bounds, "n_max"); ++n) {
        for (long long k = 1; k <= n; ++k) {
            Integer lhs = pow2(n - k) * binomial_ext(n, k);
            Integer rhs = 0;
            for (long long i = 0; i <= n; ++i) {
                Integer term = binomial_ext(n, i) * equal_blocks_count(0, 2, n + k - 2, i);
                rhs += ((n + i) & 1) ? -term : term;
            }
            run.check("n=" + std::to_string(n) + " k=" + std::to_string(k), lhs, rhs);
        }
    }
    return run.finish();
}

inline VerificationReport run_conway_sloane(const IdentitySuite& s) {
    cap(s.bounds, "m_max", 20);
    cap(s.bounds, "n_max", 20);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
        for (long long n = 0; n <= bound(s.bounds, "n_max"); ++n) {
            Integer lhs = 0, rhs = 0;
            for (long long i = 0; i <= m; ++i) {
                lhs += pow2(i) * binomial_ext(m, i) * binomial_ext(n, i);
            }
            for (long long i = 0; i <= n; ++i) {
                rhs += binomial_ext(n, i) * binomial_ext(m - i + n, n);
            }
            run.check("first m=" + std::to_string(m) + " n=" + std::to_string(n), lhs,
                      rhs);
            if (m >= 1) {
                Integer lhs2 = 0, rhs2 = 0;
                for (long long i = 0; i <= m - 1; ++i) {
                    lhs2 += pow2(i + 1) * binomial_ext(m - 1, i) * binomial_ext(n, i + 1);
                }
                for (long long i = 0; i <= n; ++i) {
                    rhs2 += binomial_ext(n, i) * binomial_ext(m - i + n - 1, n - 1);
                }
                run.check("second m=" + std::to_string(m) + " n=" + std::to_string(n),
                          lhs2, rhs2);
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_m_symmetry(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 6);
    cap(s.bounds, "q_max", 6);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (long long n = 1; n <= bound(s.bounds, "n_max"); ++n) {
        for (long long q = 1; q <= bound(s.bounds, "q_max"); ++q) {
            for (long long k = -2; k <= q * n - n + 2; ++k) {
                const std::string cell = "n=" + std::to_string(n) +
                                         " q=" + std::to_string(q) +
                                         " k=" + std::to_string(k);
                run.check(cell + " symmetry", matrices::matrix_count(n, k, q),
                          matrices::matrix_count(q, n + k - q, n));
                // Zero-row inversion: sum_i C(q,i) M(n,k,q-i) = {0,n | k,q}.
                Integer lhs = 0;
                for (long long i = 0; i <= q; ++i) {
                    lhs += binomial_ext(q, i) * matrices::matrix_count(n, k, q - i);
                }
                run.check(cell + " inversion", lhs, equal_blocks_count(0, n, k, q));
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_delannoy_symmetry(const IdentitySuite& s) {
    cap(s.bounds, "max", 12);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    const long long mx = bound(s.bounds, "max");
    auto delannoy = [](long long m, long long n) {
        return inset_count(m, BlockProfile::uniform(n, 2), n);
    };
    for (long long m = 0; m <= mx; ++m) {
        for (long long n = 0; n <= mx; ++n) {
            const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            run.check(cell + " symmetry", delannoy(m, n), delannoy(n, m));
            if (m == 0 || n == 0) {
                run.check(cell + " boundary", delannoy(m, n), 1);
            } else {
                run.check(cell + " recurrence", delannoy(m, n),
                          delannoy(m - 1, n) + delannoy(m - 1, n - 1) +
                              delannoy(m, n - 1));
            }
        }
    }
    return run.finish();
}

inline VerificationReport run_bishop_delta(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 30);
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (long long n = 2; n <= bound(s.bounds, "n_max"); ++n) {
        Integer lhs = configs::config_count(configs::ConfigFamily::bishop_moves, {n + 1}) -
                      configs::config_count(configs::ConfigFamily::bishop_moves, {n});
        run.check("n=" + std::to_string(n), lhs, Integer(4) * n * n);
    }
    return run.finish();
}

inline VerificationReport run_oracle_agreement(const IdentitySuite& s) {
    cap(s.bounds, "n_max", 6);
    cap(s.bounds, "size_max", 6);
    cap(s.bounds, "k_max", 12);
    const long long worst_universe =
        bound(s.bounds, "m_max") + bound(s.bounds, "n_max") * bound(s.bounds, "size_max");
    if (worst_universe > oracle::kInsetUniverseBudget) {
        throw budget_error("run_suite: oracle-agreement grid exceeds the enumeration "
                           "budget of " +
                           std::to_string(oracle::kInsetUniverseBudget) + " elements");
    }
    SuiteRun run(to_string(s.id), grid_string(s.bounds));
    for (const auto& profile :
         profiles_up_to(bound(s.bounds, "n_max"), bound(s.bounds, "size_max"))) {
        for (long long m = 0; m <= bound(s.bounds, "m_max"); ++m) {
            for (long long k = 0; k <= bound(s.bounds, "k_max"); ++k) {
                InsetProblem p(m, profile, k);
                Integer enumerated = oracle::enumerate_insets(p);
                run.check(cell_name(profile, m, k) + " pie", pie_count(p), enumerated);
                run.check(cell_name(profile, m, k) + " dispatch", inset_count(p),
                          enumerated);
            }
        }
    }
    return run.finish();
}

}  // namespace detail

inline VerificationReport run_suite(const IdentitySuite& suite) {
    switch (suite.id) {
        case SuiteId::pascal_law: return detail::run_pascal_law(suite);
        case SuiteId::m_reduction: return detail::run_m_reduction(suite);
        case SuiteId::block_recurrences: return detail::run_block_recurrences(suite);
        case SuiteId::vandermonde: return detail::run_vandermonde(suite);
        case SuiteId::power_family: return detail::run_power_family(suite);
        case SuiteId::chebyshev_binomial: return detail::run_chebyshev_binomial(suite);
        case SuiteId::conway_sloane: return detail::run_conway_sloane(suite);
        case SuiteId::m_symmetry: return detail::run_m_symmetry(suite);
        case SuiteId::delannoy_symmetry: return detail::run_delannoy_symmetry(suite);
        case SuiteId::bishop_delta: return detail::run_bishop_delta(suite);
        case SuiteId::oracle_agreement: return detail::run_oracle_agreement(suite);
    }
    throw std::domain_error("run_suite: unknown suite id");
}

inline VerificationReport run_suite(SuiteId id, Scale scale = Scale::standard) {
    return run_suite(IdentitySuite::at_scale(id, scale));
}

inline std::vector<VerificationReport> run_all(Scale scale) {
    std::vector<VerificationReport> reports;
    reports.reserve(all_suites().size());
    for (SuiteId id : all_suites()) {
        reports.push_back(run_suite(id, scale));
    }
    return reports;
}

}  // namespace inset::verify

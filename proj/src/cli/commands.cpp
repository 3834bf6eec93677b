#include "qcount/cli.hpp"

#include <charconv>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "qcount/class_count.hpp"
#include "qcount/gamma_graph.hpp"
#include "qcount/oracle.hpp"
#include "qcount/permutation.hpp"

namespace qcount::cli {

namespace {

ExitStatus usage_error(std::ostream& err, const std::string& message) {
    err << "qcount: " << message << '\n';
    return ExitStatus::usage;
}

// Runs `body`, mapping domain errors to exit 2 and internal failures to exit 1.
template <class Body>
ExitStatus guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    } catch (const std::out_of_range& e) {
        return usage_error(err, e.what());
    } catch (const std::exception& e) {
        err << "qcount: internal error: " << e.what() << '\n';
        return ExitStatus::mismatch;
    }
}

template <class T>
std::optional<T> parse_integer(std::string_view text) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

}  // namespace

ExitStatus cmd_count(Int n, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (n < 1) return usage_error(err, "count: n must be >= 1");
        out << to_decimal(count_classes(n)) << '\n';
        return ExitStatus::success;
    });
}

ExitStatus cmd_table(Int n_max, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (n_max < 2) return usage_error(err, "table: n_max must be >= 2");
        out << "n,Q_n\n";
        for (Int n = 2; n <= n_max; ++n) out << n << ',' << to_decimal(count_classes(n)) << '\n';
        return ExitStatus::success;
    });
}

ExitStatus cmd_matrix(Int n, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (n < 1) return usage_error(err, "matrix: n must be >= 1");
        const CountMatrix m = count_matrix(n);
        out << 'k';
        for (const auto& c : m.columns) out << '\t' << c.divisor;
        out << "\nphi";
        for (const auto& c : m.columns) out << '\t' << c.phi;
        out << "\nh";
        for (const auto& c : m.columns) out << '\t' << to_decimal(c.h);
        out << "\nproduct";
        for (const auto& c : m.columns) out << '\t' << to_decimal(c.product);
        out << '\n';
        return ExitStatus::success;
    });
}

ExitStatus cmd_graph(Int n, GraphFormat format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (n < 1) return usage_error(err, "graph: n must be >= 1");
        const GammaGraph g = build_gamma(n);
        if (format == GraphFormat::dot) {
            out << to_dot(g);
            return ExitStatus::success;
        }
        for (Int k : divisors(n)) out << k << ": " << g.level_size(k) << '\n';
        out << "vertices: " << g.vertices().size() << '\n';
        out << "arcs: " << g.arcs().size() << '\n';
        return ExitStatus::success;
    });
}

ExitStatus report_verification(const BigCount& closed_form,
                               std::span<const OracleObservation> observations,
                               std::ostream& out, std::ostream& err) {
    bool agree = true;
    for (const auto& obs : observations) {
        out << "closed-form: " << to_decimal(closed_form) << " / " << obs.label << ": "
            << to_decimal(obs.value) << '\n';
        if (obs.value != closed_form) {
            err << "qcount: mismatch: closed-form " << to_decimal(closed_form) << " vs "
                << obs.label << ' ' << to_decimal(obs.value) << '\n';
            agree = false;
        }
    }
    return agree ? ExitStatus::success : ExitStatus::mismatch;
}

ExitStatus cmd_verify(Int n, std::optional<std::uint64_t> seed, int max_n, std::ostream& out,
                      std::ostream& err) {
    return guarded(err, [&] {
        if (max_n < 2 || max_n > kOracleHardLimit) {
            return usage_error(err, "verify: --max-n must be in 2.." +
                                        std::to_string(kOracleHardLimit));
        }
        if (n < 2 || n > max_n) {
            return usage_error(err, "verify: n must be in 2.." + std::to_string(max_n) +
                                        " (oracle enumerates all n! permutations)");
        }
        OracleOptions options;
        options.max_n = max_n;

        const BigCount closed_form = count_classes(n);
        std::vector<OracleObservation> observations;
        observations.push_back({"oracle", brute_force_count(n, sigma_cycle(n), options).class_count});
        if (seed) {
            const Permutation cycle = random_n_cycle(static_cast<int>(n), *seed);
            observations.push_back({"oracle[seed=" + std::to_string(*seed) + "]",
                                    brute_force_count(n, cycle, options).class_count});
        }
        return report_verification(closed_form, observations, out, err);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact class counts of S_n under two-sided multiplication by an n-cycle",
                 "qcount"};
    app.require_subcommand(1);

    std::string n_text;
    std::string seed_text;
    int max_n = 9;
    bool as_dot = false;
    bool as_summary = false;

    auto* count = app.add_subcommand("count", "Print the number of classes for S_n");
    count->add_option("n", n_text, "Order n >= 1")->required();

    auto* table = app.add_subcommand("table", "CSV table n,Q_n for n = 2..n_max");
    table->add_option("n_max", n_text, "Largest n (>= 2)")->required();

    auto* matrix = app.add_subcommand("matrix", "TSV rows k, phi, h, product over divisors of n");
    matrix->add_option("n", n_text, "Order n >= 1")->required();

    auto* graph = app.add_subcommand("graph", "Divisor digraph of order n");
    graph->add_option("n", n_text, "Order n >= 1")->required();
    auto* dot_flag = graph->add_flag("--dot", as_dot, "Graphviz DOT output");
    auto* summary_flag = graph->add_flag("--summary", as_summary, "Vertex count per level");
    dot_flag->excludes(summary_flag);

    auto* verify = app.add_subcommand("verify", "Compare the closed form with brute-force orbits");
    verify->add_option("n", n_text, "Order n, 2 <= n <= --max-n")->required();
    verify->add_option("--seed", seed_text, "Also check a random n-cycle drawn from this seed");
    verify->add_option("--max-n", max_n, "Oracle size limit")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitStatus::usage);
    }

    const auto n = parse_integer<Int>(n_text);
    if (!n) return static_cast<int>(usage_error(err, "not an integer: '" + n_text + "'"));

    ExitStatus status = ExitStatus::usage;
    if (count->parsed()) {
        status = cmd_count(*n, out, err);
    } else if (table->parsed()) {
        status = cmd_table(*n, out, err);
    } else if (matrix->parsed()) {
        status = cmd_matrix(*n, out, err);
    } else if (graph->parsed()) {
        if (!as_dot && !as_summary) {
            status = usage_error(err, "graph: one of --dot or --summary is required");
        } else {
            status = cmd_graph(*n, as_dot ? GraphFormat::dot : GraphFormat::summary, out, err);
        }
    } else if (verify->parsed()) {
        std::optional<std::uint64_t> seed;
        if (!seed_text.empty()) {
            seed = parse_integer<std::uint64_t>(seed_text);
            if (!seed) {
                return static_cast<int>(
                    usage_error(err, "--seed: not a nonnegative integer: '" + seed_text + "'"));
            }
        }
        status = cmd_verify(*n, seed, max_n, out, err);
    }
    return static_cast<int>(status);
}

}  // namespace qcount::cli

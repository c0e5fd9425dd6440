#include <charconv>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ramify/degree.hpp"
#include "ramify/report.hpp"
#include "ramify/schubert.hpp"
#include "ramify/scroll.hpp"
#include "ramify/selftest.hpp"
#include "ramify/variation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoConsensus = 2;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 64;

ramify::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("partition parts must be integers, got '" + tok + "'");
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ramify::Partition(parts);
}

int degree_exit(const ramify::DegreeReport& rep) {
    if (rep.degree.has_value()) return kExitOk;
    return rep.any_budget_hit() ? kExitBudget : kExitNoConsensus;
}

void add_run_flags(CLI::App* cmd, ramify::RunConfig& cfg, std::string& format) {
    cmd->add_option("--primes", cfg.primes, "trial primes, comma separated")->delimiter(',');
    cmd->add_option("--trials", cfg.trials_per_prime, "randomized trials per prime");
    cmd->add_option("--seed", cfg.seed, "base seed; reports embed per-trial seeds for replay");
    cmd->add_option("--budget-steps", cfg.budget.max_steps, "basis computation step budget")
        ->envname("RAMIFY_BUDGET_STEPS");
    cmd->add_option("--budget-secs", cfg.budget.max_secs, "basis computation time budget, seconds")
        ->envname("RAMIFY_BUDGET_SECS");
    cmd->add_option("--jobs", cfg.parallelism, "parallel trial workers");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag_callback(
        "--no-timing", [&cfg] { cfg.record_timing = false; },
        "report wall times as 0 so replays are byte-identical");
}

int cmd_phi(const std::string& partition_text, const ramify::RunConfig& cfg,
            ramify::ReportFormat format) {
    const ramify::Partition p = parse_partition(partition_text);
    ramify::validate_config(cfg);
    const ramify::DegreeReport rep = ramify::phi(p, cfg);
    std::cout << ramify::render_degree_report(rep, format);
    return degree_exit(rep);
}

int cmd_rank(const std::string& partition_text, const ramify::RunConfig& cfg,
             ramify::ReportFormat format) {
    const ramify::Partition p = parse_partition(partition_text);
    ramify::validate_config(cfg);
    const ramify::RankReport rep = ramify::is_maximal_variation(p, cfg);
    std::cout << ramify::render_rank_report(rep, format);
    return kExitOk;
}

int cmd_veronese(const ramify::RunConfig& cfg, ramify::ReportFormat format) {
    ramify::validate_config(cfg);
    const ramify::DegreeReport rep = ramify::veronese_degree(cfg);
    std::cout << ramify::render_degree_report(rep, format);
    return degree_exit(rep);
}

int cmd_catalan(int n, ramify::ReportFormat format) {
    if (n < 2) throw std::invalid_argument("catalan wants n >= 2");
    const ramify::BigInt closed = ramify::catalan_closed(n);
    const ramify::BigInt pieri = ramify::plucker_degree(2, n + 1);
    if (closed != pieri) {
        std::cerr << "closed form and Pieri route disagree at n = " << n << ": " << closed
                  << " vs " << pieri << "\n";
        return kExitNoConsensus;
    }
    switch (format) {
    case ramify::ReportFormat::json:
        std::cout << "{\"n\":" << n << ",\"degree\":" << closed << "}\n";
        break;
    case ramify::ReportFormat::csv:
        std::cout << "n,degree\n" << n << "," << closed << "\n";
        break;
    case ramify::ReportFormat::text:
        std::cout << closed << "\n";
        break;
    }
    return kExitOk;
}

// Lower-triangular layout: rows a1, columns a2, cell (a1, a2) filled for
// a1 <= a2 with a1 + a2 <= max_d. Cells without consensus read "skipped".
int cmd_table(int max_d, const ramify::RunConfig& cfg) {
    if (max_d < 2) throw std::invalid_argument("table wants --max-d >= 2");
    ramify::validate_config(cfg);
    std::ostringstream out;
    out << "a1\\a2";
    for (int a2 = 1; a2 < max_d; ++a2) out << "," << a2;
    out << "\n";
    bool partial = false;
    for (int a1 = 1; 2 * a1 <= max_d; ++a1) {
        out << a1;
        for (int a2 = 1; a2 < max_d; ++a2) {
            out << ",";
            if (a2 < a1 || a1 + a2 > max_d) continue;
            const ramify::DegreeReport rep = ramify::phi(ramify::Partition({a1, a2}), cfg);
            if (rep.degree.has_value()) {
                out << *rep.degree;
            } else {
                out << "skipped";
                partial = true;
            }
        }
        out << "\n";
    }
    std::cout << out.str();
    return partial ? kExitBudget : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramification degrees of projections of minimal degree varieties"};
    app.require_subcommand(1);

    ramify::RunConfig cfg;
    std::string format_name = "json";
    std::string partition_text;
    int catalan_n = 2;
    int max_d = 4;

    CLI::App* phi_cmd = app.add_subcommand(
        "phi", "degree of the projection-ramification map of a scroll");
    phi_cmd->add_option("partition", partition_text, "splitting type a1,a2,... (ascending)")
        ->required();
    add_run_flags(phi_cmd, cfg, format_name);

    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "differential rank and maximal-variation verdict for a scroll");
    rank_cmd->add_option("partition", partition_text, "splitting type a1,a2,... (ascending)")
        ->required();
    add_run_flags(rank_cmd, cfg, format_name);

    CLI::App* catalan_cmd = app.add_subcommand(
        "catalan", "rank-1 degree by Schubert calculus, cross-checked against the closed form");
    catalan_cmd->add_option("n", catalan_n, "curve degree, n >= 2")->required();
    catalan_cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* veronese_cmd =
        app.add_subcommand("veronese", "degree of the net-of-conics ramification map");
    add_run_flags(veronese_cmd, cfg, format_name);

    CLI::App* table_cmd = app.add_subcommand(
        "table", "CSV of phi over rank-2 splitting types with a1 + a2 <= max-d");
    table_cmd->add_option("--max-d", max_d, "largest scroll degree to tabulate")->required();
    add_run_flags(table_cmd, cfg, format_name);

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the built-in invariant suites");
    (void)selftest_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ramify::ReportFormat format = ramify::parse_format(format_name);
        if (app.got_subcommand(phi_cmd)) return cmd_phi(partition_text, cfg, format);
        if (app.got_subcommand(rank_cmd)) return cmd_rank(partition_text, cfg, format);
        if (app.got_subcommand(catalan_cmd)) return cmd_catalan(catalan_n, format);
        if (app.got_subcommand(veronese_cmd)) return cmd_veronese(cfg, format);
        if (app.got_subcommand(table_cmd)) return cmd_table(max_d, cfg);
        const ramify::SelftestResult res = ramify::run_selftest(std::cout);
        return res.failed == 0 ? kExitOk : kExitNoConsensus;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConsensus;
    }
}

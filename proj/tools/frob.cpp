// frob: query tool for coin-problem quantities. Subcommands wrap the library
// one-to-one; --format picks text (default), json, or csv (table only).
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/denumerant.hpp"
#include "frob/errors.hpp"
#include "frob/frobenius.hpp"
#include "frob/limits.hpp"
#include "frob/numth.hpp"
#include "frob/oracle.hpp"
#include "frob/residues.hpp"

using json = nlohmann::ordered_json;

namespace {

std::vector<std::int64_t> parse_denoms(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string piece = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || end != piece.data() + piece.size())
            throw frob::InvalidInputError("cannot parse denomination '" + piece + "'");
        out.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// One emitted record; result filled per subcommand before printing.
void emit(const std::string& format, const json& query, const json& result,
          const std::string& backend, double elapsed_ms, const std::string& text) {
    if (format == "json") {
        json record;
        record["query"] = query;
        record["result"] = result;
        record["backend"] = backend;
        record["elapsed_ms"] = elapsed_ms;
        std::printf("%s\n", record.dump().c_str());
    } else {
        std::fputs(text.c_str(), stdout);
    }
}

std::string method_name(frob::Method m) {
    switch (m) {
    case frob::Method::Popoviciu: return "popoviciu";
    case frob::Method::Dp: return "dp";
    case frob::Method::Oracle: return "oracle";
    case frob::Method::Auto: break;
    }
    return "auto";
}

struct SuiteResult {
    std::string name;
    std::int64_t pass = 0;
    std::int64_t fail = 0;
};

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = a + 1; b <= bound; ++b)
            if (std::gcd(a, b) == 1)
                pairs.emplace_back(a, b);
    return pairs;
}

SuiteResult run_popoviciu_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    SuiteResult r{"popoviciu", 0, 0};
    for (auto [a, b] : pairs) {
        frob::DenominationSet denoms({a, b});
        frob::DenumerantTable table(denoms, 3 * a * b);
        for (std::int64_t n = 0; n <= 3 * a * b; ++n)
            (frob::popoviciu_count(a, b, n) == table.at(n) ? r.pass : r.fail)++;
    }
    return r;
}

SuiteResult run_periodicity_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    SuiteResult r{"periodicity", 0, 0};
    for (auto [a, b] : pairs)
        for (std::int64_t n = 0; n <= 2 * a * b; ++n)
            (frob::popoviciu_count(a, b, n + a * b) == frob::popoviciu_count(a, b, n) + 1
                 ? r.pass
                 : r.fail)++;
    return r;
}

SuiteResult run_reflection_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    SuiteResult r{"reflection", 0, 0};
    for (auto [a, b] : pairs)
        for (std::int64_t n = 1; n < a * b; ++n) {
            if (n % a == 0 || n % b == 0)
                continue;
            (frob::popoviciu_count(a, b, n) + frob::popoviciu_count(a, b, a * b - n) == 1
                 ? r.pass
                 : r.fail)++;
        }
    return r;
}

SuiteResult run_residues_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    SuiteResult r{"residues", 0, 0};
    std::mt19937_64 rng(20260821);
    for (auto [a, b] : pairs) {
        if (a < 2)
            continue;
        std::uniform_int_distribution<std::int64_t> pick_n(0, 4 * a * b);
        for (int trial = 0; trial < 4; ++trial) {
            std::int64_t n = pick_n(rng);
            (frob::check_unity_closed_form(a, n, 1e-9).ok ? r.pass : r.fail)++;
            (frob::check_unity_reindex(a, b, n, 1e-9).ok ? r.pass : r.fail)++;
        }
        for (int trial = 0; trial < 2; ++trial) {
            std::int64_t n = pick_n(rng);
            double route = frob::residue_route_count(a, b, n);
            double exact = static_cast<double>(frob::popoviciu_count(a, b, n));
            (std::abs(route - exact) <= 1e-6 ? r.pass : r.fail)++;
        }
    }
    return r;
}

SuiteResult run_gk_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                         std::int64_t kmax, const frob::Limits& limits) {
    SuiteResult r{"gk", 0, 0};
    for (auto [a, b] : pairs) {
        frob::DenominationSet denoms({a, b});
        for (std::int64_t k = 0; k <= kmax; ++k) {
            bool ok = frob::g_k_search(denoms, k, limits) == frob::g_k_closed(a, b, k);
            if (ok && k >= 1) {
                auto list = frob::list_k_rep(denoms, k, limits);
                ok = static_cast<std::int64_t>(list.size()) == frob::count_k_rep(a, b, k) &&
                     !list.empty() && list.front() == frob::smallest_k_rep(denoms, k, limits);
                if (ok && k >= 2)
                    ok = std::pair{list.front(), list.back()} == frob::k_rep_interval(a, b, k);
            }
            (ok ? r.pass : r.fail)++;
        }
    }
    return r;
}

int run_verify(const std::string& format, const std::string& suite,
               const std::optional<std::string>& denoms_csv, std::int64_t grid, std::int64_t kmax,
               const frob::Limits& limits) {
    Timer timer;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    if (denoms_csv) {
        auto values = parse_denoms(*denoms_csv);
        frob::DenominationSet denoms(values);
        if (!denoms.is_pair())
            throw frob::InvalidInputError("verify runs on coprime pairs, got " +
                                          std::to_string(denoms.size()) + " denominations");
        pairs.emplace_back(denoms.values()[0], denoms.values()[1]);
    } else {
        pairs = coprime_pairs(grid);
    }

    std::vector<SuiteResult> results;
    bool all = suite == "all";
    if (all || suite == "popoviciu")
        results.push_back(run_popoviciu_suite(pairs));
    if (all || suite == "periodicity")
        results.push_back(run_periodicity_suite(pairs));
    if (all || suite == "reflection")
        results.push_back(run_reflection_suite(pairs));
    if (all || suite == "residues")
        results.push_back(run_residues_suite(pairs));
    if (all || suite == "gk")
        results.push_back(run_gk_suite(pairs, kmax, limits));

    std::int64_t failures = 0;
    std::string text;
    json result = json::object();
    for (const auto& s : results) {
        failures += s.fail;
        text += s.name + " pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) +
                "\n";
        result[s.name] = json{{"pass", s.pass}, {"fail", s.fail}};
    }
    json query{{"suite", suite}, {"grid", grid}, {"kmax", kmax}};
    if (denoms_csv)
        query["denoms"] = *denoms_csv;
    emit(format, query, result, "verify", timer.elapsed_ms(), text);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius coin-problem calculator: representation counts, k-Frobenius "
                 "numbers, and the structure of k-representable integers"};
    app.require_subcommand(1);

    std::string denoms_csv, format = "text", method_str = "auto";
    std::int64_t k = 0, n = 0, max_n = 0;
    frob::Limits limits;

    auto add_common = [&](CLI::App* cmd, bool with_denoms = true) {
        if (with_denoms)
            cmd->add_option("--denoms", denoms_csv, "comma-separated denominations, e.g. 3,5")
                ->required();
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--max-table-cells", limits.max_table_cells, "DP table size ceiling")
            ->envname("FROB_MAX_TABLE_CELLS");
        cmd->add_option("--max-reps-out", limits.max_reps_out, "enumeration output ceiling")
            ->envname("FROB_MAX_REPS_OUT");
        cmd->add_option("--horizon", limits.horizon_start, "starting search horizon")
            ->envname("FROB_HORIZON");
    };

    CLI::App* cmd_gk = app.add_subcommand("gk", "k-Frobenius number g_k");
    add_common(cmd_gk);
    cmd_gk->add_option("--k", k, "representation threshold")->required();
    cmd_gk->add_option("--method", method_str, "closed, search, or auto")
        ->check(CLI::IsMember({"closed", "search", "auto"}))
        ->capture_default_str();

    CLI::App* cmd_count = app.add_subcommand("count", "representation count of one integer");
    add_common(cmd_count);
    cmd_count->add_option("--n", n, "target integer")->required();
    cmd_count->add_option("--method", method_str, "popoviciu, dp, oracle, or auto")
        ->check(CLI::IsMember({"popoviciu", "dp", "oracle", "auto"}))
        ->capture_default_str();

    CLI::App* cmd_list = app.add_subcommand("list", "all integers with exactly k representations");
    add_common(cmd_list);
    cmd_list->add_option("--k", k, "representation count")->required();

    CLI::App* cmd_reps = app.add_subcommand("reps", "every representation of one integer");
    add_common(cmd_reps);
    cmd_reps->add_option("--n", n, "target integer")->required();

    CLI::App* cmd_table = app.add_subcommand("table", "representation counts for 0..N");
    add_common(cmd_table);
    cmd_table->add_option("--max", max_n, "last integer in the table")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the self-check suites");
    std::string suite = "all";
    std::int64_t grid = 20, kmax = 8;
    std::optional<std::string> verify_denoms;
    cmd_verify->add_option("--denoms", verify_denoms, "restrict to one coprime pair");
    cmd_verify->add_option("--suite", suite, "popoviciu, periodicity, reflection, residues, gk, or all")
        ->check(CLI::IsMember({"popoviciu", "periodicity", "reflection", "residues", "gk", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--grid", grid, "pair bound for the default grid")
        ->capture_default_str();
    cmd_verify->add_option("--kmax", kmax, "largest k in the gk suite")->capture_default_str();
    add_common(cmd_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format == "csv" && !cmd_table->parsed())
            throw frob::InvalidInputError("csv format only applies to the table subcommand");

        if (cmd_verify->parsed())
            return run_verify(format, suite, verify_denoms, grid, kmax, limits);

        frob::DenominationSet denoms(parse_denoms(denoms_csv));
        json query{{"denoms", denoms.values()}};
        Timer timer;

        if (cmd_gk->parsed()) {
            std::string mode = method_str == "auto" ? (denoms.is_pair() ? "closed" : "search")
                                                    : method_str;
            if (mode == "closed" && !denoms.is_pair())
                throw frob::InvalidInputError("the closed form needs exactly 2 denominations, got " +
                                              std::to_string(denoms.size()));
            std::int64_t g = mode == "closed"
                                 ? frob::g_k_closed(denoms.values()[0], denoms.values()[1], k)
                                 : frob::g_k_search(denoms, k, limits);
            query["k"] = k;
            query["method"] = method_str;
            emit(format, query, g, mode, timer.elapsed_ms(), std::to_string(g) + "\n");
        } else if (cmd_count->parsed()) {
            frob::Method method = frob::Method::Auto;
            if (method_str == "popoviciu")
                method = frob::Method::Popoviciu;
            else if (method_str == "dp")
                method = frob::Method::Dp;
            else if (method_str == "oracle")
                method = frob::Method::Oracle;
            if (method == frob::Method::Auto)
                method = denoms.is_pair() ? frob::Method::Popoviciu : frob::Method::Dp;
            std::int64_t c = frob::count(denoms, n, method, limits);
            query["n"] = n;
            query["method"] = method_str;
            emit(format, query, c, method_name(method), timer.elapsed_ms(),
                 std::to_string(c) + "\n");
        } else if (cmd_list->parsed()) {
            std::vector<std::int64_t> values = frob::list_k_rep(denoms, k, limits);
            query["k"] = k;
            std::string text;
            for (std::int64_t v : values)
                text += std::to_string(v) + "\n";
            emit(format, query, values, "dp", timer.elapsed_ms(), text);
        } else if (cmd_reps->parsed()) {
            auto reps = frob::enumerate_reps(denoms, n, limits.max_reps_out);
            query["n"] = n;
            std::string text;
            json result = json::array();
            for (const auto& r : reps) {
                std::string line = "(";
                for (std::size_t i = 0; i < r.size(); ++i)
                    line += (i ? "," : "") + std::to_string(r[i]);
                line += ")";
                text += line + "\n";
                result.push_back(r);
            }
            emit(format, query, result, "oracle", timer.elapsed_ms(), text);
        } else if (cmd_table->parsed()) {
            frob::DenumerantTable table(denoms, max_n, std::nullopt, limits.max_table_cells);
            query["max"] = max_n;
            std::string text = format == "csv" ? "n,count\n" : "";
            json result = json::array();
            for (std::int64_t i = 0; i <= max_n; ++i) {
                text += std::to_string(i) + "," + std::to_string(table.at(i)) + "\n";
                result.push_back(json::array({i, table.at(i)}));
            }
            emit(format, query, result, "dp", timer.elapsed_ms(), text);
        }
        return 0;
    } catch (const frob::InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const frob::OverflowError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const frob::ResourceLimitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

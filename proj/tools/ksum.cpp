// ksum: evaluate positive series sums to a requested accuracy.
//
// Subcommands: sum, test, search, bounds, reproduce. Exit codes: 0 ok/accepted,
// 1 test rejected, 2 usage or parse errors, 3 domain errors (non-positive term,
// missing closed forms, overflow). All computation goes through the C API in
// kummersum.h; this binary only parses flags and formats tables.

#include <cctype>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kummersum.h"

namespace {

enum class Format { Csv, Markdown, Plain };

struct SeriesHandle {
    ks_series* ptr = nullptr;
    ~SeriesHandle() { ks_series_close(ptr); }
};
struct StateHandle {
    ks_sum_state* ptr = nullptr;
    ~StateHandle() { ks_sum_state_close(ptr); }
};
struct OutcomeHandle {
    ks_test_outcome* ptr = nullptr;
    ~OutcomeHandle() { ks_test_outcome_close(ptr); }
};
struct ReportHandle {
    ks_search_report* ptr = nullptr;
    ~ReportHandle() { ks_search_report_close(ptr); }
};

int exit_code_for(ks_status status) {
    switch (status) {
        case KS_OK: return 0;
        case KS_ERR_UNKNOWN_SERIES:
        case KS_ERR_PARSE:
        case KS_ERR_INVALID_ARGUMENT: return 2;
        default: return 3;
    }
}

int fail(ks_status status) {
    std::fprintf(stderr, "error: %s: %s\n", ks_status_name(status), ks_last_error());
    return exit_code_for(status);
}

bool bare_identifier(const std::string& text) {
    if (text.empty() || !(std::isalpha((unsigned char)text[0]) || text[0] == '_')) return false;
    for (char c : text)
        if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
    return true;
}

// Catalog names win; anything else is parsed as a term expression with start
// index `from` (catalog entries carry their own start).
ks_status open_series(const std::string& spec, std::int64_t from, ks_series** out) {
    ks_status rc = ks_series_open_catalog(spec.c_str(), out);
    if (rc == KS_OK) return KS_OK;
    if (bare_identifier(spec) || spec.rfind("geom(", 0) == 0) return rc;
    return ks_series_open_expression(spec.c_str(), from, out);
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_table(Format fmt, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    if (fmt == Format::Markdown) {
        std::string line = "|";
        for (const auto& h : header) line += " " + h + " |";
        std::puts(line.c_str());
        line = "|";
        for (std::size_t i = 0; i < header.size(); ++i) line += " --- |";
        std::puts(line.c_str());
        for (const auto& row : rows) {
            line = "|";
            for (const auto& cell : row) line += " " + cell + " |";
            std::puts(line.c_str());
        }
        return;
    }
    const char* sep = fmt == Format::Csv ? "," : ", ";
    if (fmt == Format::Csv) {
        std::string line;
        for (std::size_t i = 0; i < header.size(); ++i)
            line += (i ? "," : "") + header[i];
        std::puts(line.c_str());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i)
            line += (i ? sep : "") + row[i];
        std::puts(line.c_str());
    }
}

Format parse_format(const std::string& name) {
    if (name == "markdown") return Format::Markdown;
    if (name == "plain") return Format::Plain;
    return Format::Csv;
}

/* ---- sum ---- */

int cmd_sum(const std::string& spec, std::int64_t from, std::int64_t upto, int precision,
            Format fmt) {
    SeriesHandle series;
    ks_status rc = open_series(spec, from, &series.ptr);
    if (rc != KS_OK) return fail(rc);
    StateHandle state;
    rc = ks_partial_sum(series.ptr, upto, 0, &state.ptr);
    if (rc != KS_OK) return fail(rc);
    double s = ks_sum_state_value(state.ptr);
    print_table(fmt, {"n", "S", "S_full"},
                {{std::to_string(upto), fixed(s, precision), full(s)}});
    return 0;
}

/* ---- test ---- */

int cmd_test(const std::string& spec, std::int64_t from, std::int64_t at, double epsilon,
             std::int64_t horizon, const std::string& trace, int precision, Format fmt) {
    SeriesHandle series;
    ks_status rc = open_series(spec, from, &series.ptr);
    if (rc != KS_OK) return fail(rc);

    ks_test_config cfg;
    ks_test_config_init(&cfg);
    cfg.epsilon = epsilon;
    cfg.horizon = horizon;
    cfg.trace = trace == "none" ? 0 : trace == "full" ? 2 : 1;

    OutcomeHandle outcome;
    rc = ks_run_test(series.ptr, at, &cfg, &outcome.ptr);
    if (rc != KS_OK) return fail(rc);

    std::int64_t iters = ks_test_outcome_iterations(outcome.ptr);
    if (ks_test_outcome_accepted(outcome.ptr)) {
        double zeta_last = ks_test_outcome_seed_zeta(outcome.ptr);
        int count = ks_test_outcome_boundary_count(outcome.ptr);
        if (count > 0) {
            std::int64_t idx;
            ks_test_outcome_boundary(outcome.ptr, count - 1, &idx, &zeta_last);
        }
        std::printf("ACCEPTED@HORIZON iters=%" PRId64 " zeta_last=%s\n", iters,
                    fixed(zeta_last, precision).c_str());
    } else {
        std::int64_t peak = ks_test_outcome_break_index(outcome.ptr);
        double zeta_peak = 0.0;
        bool have_peak_value = false;
        int count = ks_test_outcome_boundary_count(outcome.ptr);
        for (int i = 0; i < count; ++i) {
            std::int64_t idx;
            double z;
            ks_test_outcome_boundary(outcome.ptr, i, &idx, &z);
            if (idx == peak) { zeta_peak = z; have_peak_value = true; }
        }
        std::printf("REJECTED peak=%" PRId64 " iters=%" PRId64 "%s%s negative_hit=%d\n", peak,
                    iters, have_peak_value ? " zeta_peak=" : "",
                    have_peak_value ? fixed(zeta_peak, precision).c_str() : "",
                    ks_test_outcome_negative_hit(outcome.ptr));
    }

    if (cfg.trace != 0) {
        std::vector<std::vector<std::string>> rows;
        int count = ks_test_outcome_boundary_count(outcome.ptr);
        for (int i = 0; i < count; ++i) {
            std::int64_t idx;
            double z;
            ks_test_outcome_boundary(outcome.ptr, i, &idx, &z);
            rows.push_back({std::to_string(idx), fixed(z, precision), full(z)});
        }
        print_table(fmt, {"n", "zeta", "zeta_full"}, rows);
    }
    return ks_test_outcome_accepted(outcome.ptr) ? 0 : 1;
}

/* ---- search ---- */

struct StreamContext {
    Format fmt;
    int precision;
};

void stream_row(void* user, std::int64_t step, std::int64_t iterations, std::int64_t n,
                double s, double epsilon) {
    auto* ctx = static_cast<StreamContext*>(user);
    if (ctx->fmt == Format::Markdown)
        std::printf("| %" PRId64 " | %" PRId64 " | %" PRId64 " | %s | %s |\n", step, iterations,
                    n, fixed(s, ctx->precision).c_str(), full(epsilon).c_str());
    else if (ctx->fmt == Format::Plain)
        std::printf("step %" PRId64 ": iterations=%" PRId64 " n=%" PRId64 " S=%s eps=%s\n",
                    step, iterations, n, fixed(s, ctx->precision).c_str(),
                    full(epsilon).c_str());
    else
        std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%s,%s,%s\n", step, iterations, n,
                    fixed(s, ctx->precision).c_str(), full(epsilon).c_str(), full(s).c_str());
    std::fflush(stdout);
}

const char* termination_name(int t) {
    return t == 0 ? "ACCEPTED" : t == 1 ? "CAP" : "BUDGET";
}

int cmd_search(const std::string& spec, std::int64_t from, std::int64_t start, double epsilon,
               const std::string& mode, std::int64_t m, double k, std::int64_t depth,
               std::int64_t horizon, std::int64_t cap, int precision, Format fmt) {
    SeriesHandle series;
    ks_status rc = open_series(spec, from, &series.ptr);
    if (rc != KS_OK) return fail(rc);

    ks_search_config cfg;
    ks_search_config_init(&cfg);
    cfg.epsilon = epsilon;
    cfg.modified = mode == "modified" ? 1 : 0;
    cfg.m = m;
    cfg.k = k;
    cfg.refine_depth = depth;
    cfg.horizon = horizon;
    cfg.total_budget = cap;

    if (fmt == Format::Csv) {
        std::puts("step,iterations,n,S,epsilon,S_full");
        std::fflush(stdout);
    } else if (fmt == Format::Markdown) {
        std::puts("| step | iterations | n | S | epsilon |");
        std::puts("| --- | --- | --- | --- | --- |");
        std::fflush(stdout);
    }

    StreamContext ctx{fmt, precision};
    ReportHandle report;
    rc = ks_search_run(series.ptr, start, &cfg, stream_row, &ctx, &report.ptr);
    if (rc != KS_OK) return fail(rc);

    int term = ks_search_report_termination(report.ptr);
    if (term == 0) {
        double lo, hi;
        ks_search_report_interval(report.ptr, &lo, &hi);
        std::printf("%s interval=[%s,%s]\n", termination_name(term),
                    fixed(lo, precision).c_str(), fixed(hi, precision).c_str());
    } else {
        std::printf("%s S=%s n=%" PRId64 "\n", termination_name(term),
                    fixed(ks_search_report_final_sum(report.ptr), precision).c_str(),
                    ks_search_report_final_index(report.ptr));
    }
    return 0;
}

/* ---- bounds ---- */

int cmd_bounds(const std::string& spec, std::int64_t from, std::int64_t at,
               const std::string& method, bool sum_target, int precision, Format fmt) {
    SeriesHandle series;
    ks_status rc = open_series(spec, from, &series.ptr);
    if (rc != KS_OK) return fail(rc);

    const char* names[4] = {"integral", "morley", "nelsen", "boas"};
    std::vector<int> methods;
    if (method == "all") {
        methods = {0, 1, 2, 3};
    } else {
        for (int i = 0; i < 4; ++i)
            if (method == names[i]) methods.push_back(i);
        if (methods.empty()) {
            std::fprintf(stderr, "error: unknown bracket method \"%s\"\n", method.c_str());
            return 2;
        }
    }

    std::vector<std::vector<std::string>> rows;
    int successes = 0;
    ks_status last_rc = KS_OK;
    for (int mth : methods) {
        ks_bracket b;
        rc = sum_target ? ks_estimate_sum(series.ptr, at, mth, &b)
                        : ks_remainder_bracket(series.ptr, at, mth, &b);
        if (rc != KS_OK) {
            last_rc = rc;
            if (method == "all") {
                rows.push_back({names[mth], std::string("unavailable: ") + ks_last_error()});
                continue;
            }
            return fail(rc);
        }
        ++successes;
        rows.push_back({names[mth], fixed(b.lower, precision), fixed(b.upper, precision),
                        full(b.lower), full(b.upper)});
    }
    print_table(fmt, {"method", "lower", "upper", "lower_full", "upper_full"}, rows);
    if (successes == 0) return fail(last_rc);
    return 0;
}

/* ---- reproduce ---- */

struct TableRun {
    std::vector<std::vector<std::string>> rows;
    int termination = -1;
    std::int64_t final_index = 0;
    double final_sum = 0.0;
};

int reproduce_partial_sums(int precision, Format fmt) {
    SeriesHandle series;
    ks_status rc = ks_series_open_catalog("logA", &series.ptr);
    if (rc != KS_OK) return fail(rc);
    const std::int64_t marks[5] = {5000, 10000, 20000, 50000, 100000};
    StateHandle state;
    rc = ks_partial_sum(series.ptr, marks[0], 0, &state.ptr);
    if (rc != KS_OK) return fail(rc);
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 5; ++i) {
        if (i > 0) {
            rc = ks_extend_to_index(state.ptr, marks[i], 0x7fffffffffffLL);
            if (rc != KS_OK) return fail(rc);
        }
        double s = ks_sum_state_value(state.ptr);
        rows.push_back({std::to_string(marks[i]), fixed(s, precision), full(s)});
    }
    std::puts("# partial-sums: S_n of logA");
    print_table(fmt, {"n", "S", "S_full"}, rows);
    return 0;
}

int reproduce_zeta(bool accept, int precision, Format fmt) {
    SeriesHandle series;
    ks_status rc = ks_series_open_catalog("logA", &series.ptr);
    if (rc != KS_OK) return fail(rc);
    ks_test_config cfg;
    ks_test_config_init(&cfg);
    cfg.epsilon = accept ? 0.15 : 0.1;
    cfg.horizon = 50000;
    cfg.trace = 1;
    OutcomeHandle outcome;
    rc = ks_run_test(series.ptr, 10000, &cfg, &outcome.ptr);
    if (rc != KS_OK) return fail(rc);
    std::printf("# %s: zeta values around the scan end (seed zeta_10000=%s, eps=%g)\n",
                accept ? "zeta-accept" : "zeta-reject",
                fixed(ks_test_outcome_seed_zeta(outcome.ptr), precision).c_str(), cfg.epsilon);
    std::vector<std::vector<std::string>> rows;
    int count = ks_test_outcome_boundary_count(outcome.ptr);
    for (int i = 0; i < count; ++i) {
        std::int64_t idx;
        double z;
        ks_test_outcome_boundary(outcome.ptr, i, &idx, &z);
        rows.push_back({std::to_string(idx), fixed(z, precision), full(z)});
    }
    print_table(fmt, {"n", "zeta", "zeta_full"}, rows);
    return 0;
}

int reproduce_search(const char* name, bool modified, bool fast, int precision, Format fmt) {
    const bool is_logB = std::strcmp(name, "logB") == 0;
    SeriesHandle series;
    ks_status rc = ks_series_open_catalog(name, &series.ptr);
    if (rc != KS_OK) return fail(rc);

    ks_search_config cfg;
    ks_search_config_init(&cfg);
    cfg.epsilon = is_logB ? 0.0001 : 0.01;
    cfg.modified = modified ? 1 : 0;
    const std::int64_t fast_cap = 100'000'000LL;
    cfg.total_budget = fast ? fast_cap : 1'000'000'000LL;
    std::int64_t start = is_logB ? 1'000'000 : 100'000;

    std::printf("# %s-%s: %s search, eps=%g%s\n", modified ? "msf" : "sf", name,
                modified ? "modified step-forward" : "step-forward", cfg.epsilon,
                fast ? " (fast: term budget 1e8)" : "");

    ReportHandle report;
    rc = ks_search_run(series.ptr, start, &cfg, nullptr, nullptr, &report.ptr);
    if (rc != KS_OK) return fail(rc);

    std::vector<std::vector<std::string>> rows;
    std::int64_t count = ks_search_report_step_count(report.ptr);
    int term = ks_search_report_termination(report.ptr);
    std::int64_t last_step = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t step, iters, n;
        double s, eps;
        ks_search_report_step(report.ptr, i, &step, &iters, &n, &s, &eps);
        // Under --fast the cap row is an artifact of the reduced budget.
        if (fast && term == 1 && i == count - 1 && n == fast_cap) break;
        rows.push_back({std::to_string(step), std::to_string(iters), std::to_string(n),
                        fixed(s, precision), full(eps), full(s)});
        last_step = step;
    }
    print_table(fmt, {"step", "iterations", "n", "S", "epsilon", "S_full"}, rows);
    if (fast && term == 1) {
        // Full plain runs end at step 9 (logA) / step 7 (logB) with the 1e9 cap.
        std::int64_t full_steps = modified ? -1 : (is_logB ? 7 : 9);
        if (full_steps > 0)
            for (std::int64_t k = last_step + 1; k <= full_steps; ++k)
                std::printf("%" PRId64 ", skipped (budget)\n", k);
        else
            std::printf("(further steps skipped: term budget %" PRId64 " reached)\n", fast_cap);
    } else {
        if (term == 0) {
            double lo, hi;
            ks_search_report_interval(report.ptr, &lo, &hi);
            std::printf("%s interval=[%s,%s]\n", termination_name(term),
                        fixed(lo, precision).c_str(), fixed(hi, precision).c_str());
        } else {
            std::printf("%s S=%s n=%" PRId64 "\n", termination_name(term),
                        fixed(ks_search_report_final_sum(report.ptr), precision).c_str(),
                        ks_search_report_final_index(report.ptr));
        }
    }
    return 0;
}

int cmd_reproduce(const std::string& table, bool fast, int precision, Format fmt) {
    struct Entry {
        const char* id;
        int kind;  // 0 sums, 1 reject, 2 accept, 3 sf-logA, 4 sf-logB, 5 msf-logA, 6 msf-logB
    };
    const Entry entries[] = {{"partial-sums", 0}, {"zeta-reject", 1}, {"zeta-accept", 2},
                             {"sf-logA", 3},      {"sf-logB", 4},     {"msf-logA", 5},
                             {"msf-logB", 6}};
    std::vector<int> kinds;
    for (const auto& e : entries)
        if (table == "all" || table == e.id) kinds.push_back(e.kind);
    if (kinds.empty()) {
        std::fprintf(stderr, "error: unknown table \"%s\"\n", table.c_str());
        return 2;
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i) std::puts("");
        int rc = 0;
        switch (kinds[i]) {
            case 0: rc = reproduce_partial_sums(precision, fmt); break;
            case 1: rc = reproduce_zeta(false, precision, fmt); break;
            case 2: rc = reproduce_zeta(true, precision, fmt); break;
            case 3: rc = reproduce_search("logA", false, fast, precision, fmt); break;
            case 4: rc = reproduce_search("logB", false, fast, precision, fmt); break;
            case 5: rc = reproduce_search("logA", true, fast, precision, fmt); break;
            case 6: rc = reproduce_search("logB", true, fast, precision, fmt); break;
        }
        if (rc != 0) return rc;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ksum: sum convergent positive series to a requested accuracy"};
    app.require_subcommand(1);

    std::string spec, mode = "plain", trace = "boundary", method = "all", table, format = "csv";
    std::int64_t from = 1, upto = 0, at = 0, start = 0, horizon = 1'000'000'000LL;
    std::int64_t m = 2, depth = 1, cap = 1'000'000'000LL;
    double epsilon = 0.0, kdiv = 10.0;
    int precision = 6;
    bool sum_target = false, fast = false;

    app.add_option("--precision", precision, "decimal digits in fixed-point output")
        ->capture_default_str();
    app.add_option("--format", format, "output format: csv, markdown, plain")
        ->capture_default_str();

    auto add_series = [&](CLI::App* cmd) {
        cmd->add_option("--series", spec, "catalog name or term expression in n")->required();
        cmd->add_option("--from", from, "start index n0 for expression series (default 1)");
    };

    CLI::App* c_sum = app.add_subcommand("sum", "partial sum S_N");
    add_series(c_sum);
    c_sum->add_option("--upto", upto, "last index N")->required();

    CLI::App* c_test = app.add_subcommand("test", "test the hypothesis R_N < epsilon");
    add_series(c_test);
    c_test->add_option("--at", at, "index N of the hypothesis")->required();
    c_test->add_option("--epsilon", epsilon, "hypothesis bound")->required();
    c_test->add_option("--horizon", horizon, "zeta values inspected, seed included")
        ->capture_default_str();
    c_test->add_option("--trace", trace, "none, boundary, or full")->capture_default_str();

    CLI::App* c_search = app.add_subcommand("search", "step-forward search");
    add_series(c_search);
    c_search->add_option("--start", start, "initial partial-sum index")->required();
    c_search->add_option("--epsilon", epsilon, "step size / target accuracy")->required();
    c_search->add_option("--mode", mode, "plain or modified")->capture_default_str();
    c_search->add_option("--m", m, "interrupt window M (modified)")->capture_default_str();
    c_search->add_option("--k", kdiv, "refinement divisor K (modified)")->capture_default_str();
    c_search->add_option("--depth", depth, "refinements allowed (modified)")
        ->capture_default_str();
    c_search->add_option("--horizon", horizon, "per-test inspection cap")->capture_default_str();
    c_search->add_option("--cap", cap, "highest series index the run may touch")
        ->capture_default_str();

    CLI::App* c_bounds = app.add_subcommand("bounds", "integral-test remainder brackets");
    add_series(c_bounds);
    c_bounds->add_option("--at", at, "bracket the remainder after this index")->required();
    c_bounds->add_option("--method", method, "integral, morley, nelsen, boas, or all")
        ->capture_default_str();
    c_bounds->add_flag("--sum", sum_target, "bracket the full sum instead of the remainder");

    CLI::App* c_repro = app.add_subcommand("reproduce", "rerun the built-in study tables");
    c_repro->add_option("--table", table,
                        "partial-sums, zeta-reject, zeta-accept, sf-logA, sf-logB, "
                        "msf-logA, msf-logB, or all")
        ->required();
    c_repro->add_flag("--fast", fast, "truncate runs whose term budget exceeds 1e8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    Format fmt = parse_format(format);
    if (c_sum->parsed()) return cmd_sum(spec, from, upto, precision, fmt);
    if (c_test->parsed()) return cmd_test(spec, from, at, epsilon, horizon, trace, precision, fmt);
    if (c_search->parsed())
        return cmd_search(spec, from, start, epsilon, mode, m, kdiv, depth, horizon, cap,
                          precision, fmt);
    if (c_bounds->parsed()) return cmd_bounds(spec, from, at, method, sum_target, precision, fmt);
    if (c_repro->parsed()) return cmd_reproduce(table, fast, precision, fmt);
    return 2;
}

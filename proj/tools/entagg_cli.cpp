// Command-line front-end: every operator behind reproducible subcommands with
// JSON/CSV/text reports. Exit codes: 0 ok, 1 validation, 2 size/scope guard,
// 3 I/O failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entagg/entagg.hpp"
#include "entagg/io.hpp"
#include "entagg/selftest.hpp"

namespace {

using namespace entagg;

constexpr int kJsonDigits = 17;
constexpr int kTextDigits = 6;

std::string txt(double x) { return fmt_double(x, kTextDigits); }
std::string csv(double x) { return fmt_double(x, kJsonDigits); }

void write_aggregation(JsonWriter& w, const Aggregation& agg) {
    w.begin_object();
    w.key("blocks").begin_array();
    for (const auto& blk : agg.blocks) w.number_array(blk);
    w.end_array();
    w.key("dist").number_array(agg.dist.probs());
    w.kv("entropy", entropy(agg.dist));
    w.end_object();
}

struct CommonOpts {
    std::string format;  // empty = subcommand default
    bool normalize = false;
    std::size_t limit_n = 12;
};

std::string pick_format(const CommonOpts& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

int run_aggregate(const std::string& file, std::size_t m, const CommonOpts& opts) {
    const ProbDist p = load_dist_file(file, opts.normalize);
    const ProbDist r = r_operator(p, m);
    const Aggregation q_min = q_operator(p, m);
    const auto [huff, trace] = huffman_aggregate(p, m);
    const double h_p = entropy(p);
    const double h_r = entropy(r);
    const double h_q = entropy(q_min.dist);
    const double h_huff = entropy(huff.dist);
    const double additive_gap = h_r - h_huff;

    if (pick_format(opts, "json") == "text") {
        std::cout << "n=" << p.size() << " m=" << m << "\n"
                  << "H(p)        = " << txt(h_p) << "\n"
                  << "H(R_m)      = " << txt(h_r) << " (upper bound on max)\n"
                  << "H(huffman)  = " << txt(h_huff) << "\n"
                  << "H(Q_m)      = " << txt(h_q) << " (exact min)\n"
                  << "additive gap = " << txt(additive_gap)
                  << " (alpha = " << txt(alpha_constant()) << ")\n";
        return 0;
    }
    JsonWriter w(kJsonDigits);
    w.begin_object();
    w.kv("n", p.size());
    w.kv("m", static_cast<std::int64_t>(m));
    w.key("input").number_array(p.probs());
    w.kv("h_input", h_p);
    w.key("r_dist").number_array(r.probs());
    w.kv("h_r", h_r);
    w.kv("i_star", istar(p, m));
    w.key("q_dist").number_array(q_min.dist.probs());
    w.kv("h_q", h_q);
    w.key("huffman_dist").number_array(huff.dist.probs());
    w.kv("h_huffman", h_huff);
    w.key("huffman_aggregation");
    write_aggregation(w, huff);
    w.kv("additive_gap", additive_gap);
    w.kv("alpha", alpha_constant());
    w.kv("additive_ok", additive_gap <= alpha_constant() + 1e-9);
    w.kv("multiplicative_ratio", h_r > 0.0 ? h_huff / h_r : 1.0);
    w.kv("untouched_prefix", trace.untouched_prefix_len);
    w.kv("tail_mass", trace.tail_mass);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_bounds(std::size_t n, double rho, const CommonOpts& opts) {
    const BoundReport rep = bound_report(n, rho);
    if (pick_format(opts, "json") == "text") {
        std::cout << "n=" << n << " rho=" << txt(rho) << "\n"
                  << "theorem2 bound = " << txt(rep.theorem2_bound)
                  << " (gap " << txt(rep.gap_theorem2) << " bits)\n"
                  << "prior bound    = " << txt(rep.prior_bound)
                  << " (gap " << txt(rep.gap_prior) << " nats as published)\n";
        return 0;
    }
    JsonWriter w(kJsonDigits);
    w.begin_object();
    w.kv("n", rep.n);
    w.kv("rho", rep.rho);
    w.kv("theorem2_bound", rep.theorem2_bound);
    w.kv("prior_bound", rep.prior_bound);
    w.kv("gap_theorem2_bits", rep.gap_theorem2);
    w.kv("gap_prior_nats", rep.gap_prior);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_zrho(const std::string& file, double rho, const CommonOpts& opts) {
    const ProbDist p = load_dist_file(file, opts.normalize);
    const ZRhoDist z = build_z_rho(p, rho);
    const MajorizationVerdict verdict = majorizes(p, z.dist);
    const double lb = theorem2_lower_bound(p.size(), rho);
    if (pick_format(opts, "json") == "text") {
        std::cout << "n=" << p.size() << " rho=" << txt(rho) << " i=" << z.i << "\n"
                  << "H(p)      = " << txt(entropy(p)) << "\n"
                  << "H(z_rho)  = " << txt(entropy(z.dist)) << "\n"
                  << "bound     = " << txt(lb) << "\n"
                  << "p majorized by z: " << (verdict.holds ? "yes" : "no") << "\n";
        return 0;
    }
    JsonWriter w(kJsonDigits);
    w.begin_object();
    w.kv("n", p.size());
    w.kv("rho", rho);
    w.kv("i", z.i);
    w.kv("middle", z.middle);
    w.key("z_dist").number_array(z.dist.probs());
    w.kv("h_p", entropy(p));
    w.kv("h_z", entropy(z.dist));
    w.kv("lower_bound", lb);
    w.kv("majorization_holds", verdict.holds);
    w.key("prefix_gaps").number_array(verdict.prefix_gaps);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_oracle(const std::string& file, std::size_t m, const CommonOpts& opts) {
    const ProbDist p = load_dist_file(file, opts.normalize);
    if (p.size() > 12 && opts.limit_n > 12) {
        std::cerr << "warning: enumerating " << p.size()
                  << " atoms; partition counts grow like Bell numbers\n";
    }
    const Aggregation best = exact_max_aggregation(p, m, opts.limit_n);
    if (pick_format(opts, "json") == "text") {
        std::cout << "max entropy = " << txt(entropy(best.dist)) << "\nblocks:";
        for (const auto& blk : best.blocks) {
            std::cout << " {";
            for (std::size_t i = 0; i < blk.size(); ++i)
                std::cout << (i ? "," : "") << blk[i];
            std::cout << "}";
        }
        std::cout << "\n";
        return 0;
    }
    JsonWriter w(kJsonDigits);
    write_aggregation(w, best);
    std::cout << w.str() << "\n";
    return 0;
}

int run_distance(const std::string& file, std::size_t m, const CommonOpts& opts) {
    const ProbDist p = load_dist_file(file, opts.normalize);
    const ClosestDistResult res = approximate_closest_dist(p, m);
    const Coupling coupling = build_mq_coupling(p, res.aggregation);
    if (pick_format(opts, "json") == "text") {
        std::cout << "D(p, q_huffman) = " << txt(res.d_value) << "\n"
                  << "certificate      = " << txt(res.certificate)
                  << " (<= alpha = " << txt(alpha_constant()) << ")\n"
                  << "H(coupling)      = " << txt(coupling.joint_entropy()) << "\n";
        return 0;
    }
    JsonWriter w(kJsonDigits);
    w.begin_object();
    w.key("aggregation");
    write_aggregation(w, res.aggregation);
    w.kv("d_value", res.d_value);
    w.kv("certificate", res.certificate);
    w.kv("alpha", alpha_constant());
    w.key("coupling").begin_object();
    w.key("matrix").begin_array();
    for (const auto& row : coupling.matrix) w.number_array(row);
    w.end_array();
    w.key("row_marginal").number_array(coupling.row_marginal.probs());
    w.key("col_marginal").number_array(coupling.col_marginal.probs());
    w.end_object();
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

void write_rate_report_json(JsonWriter& w, const SourceModel& src, const RateReport& rep) {
    w.begin_object();
    w.kv("n_leaves", rep.n_leaves);
    w.kv("rho", src.rho);
    w.kv("h_source", rep.h_source);
    w.kv("h_leaves", rep.h_leaves);
    w.kv("expected_length", rep.expected_len);
    w.kv("rate", rep.rate);
    w.key("new_bound");
    rep.new_bound ? w.value(*rep.new_bound) : w.null();
    w.key("js_bound");
    rep.js_bound ? w.value(*rep.js_bound) : w.null();
    w.end_object();
}

const char* kRateCsvHeader =
    "n_leaves,rho,h_source_bits,h_leaves_bits,expected_len_symbols,"
    "rate_bits_per_symbol,new_bound,js_bound";

std::string rate_report_csv_row(const SourceModel& src, const RateReport& rep) {
    std::string row = std::to_string(rep.n_leaves);
    row += "," + csv(src.rho) + "," + csv(rep.h_source) + "," + csv(rep.h_leaves);
    row += "," + csv(rep.expected_len) + "," + csv(rep.rate);
    row += ",";
    if (rep.new_bound) row += csv(*rep.new_bound);
    row += ",";
    if (rep.js_bound) row += csv(*rep.js_bound);
    return row;
}

int run_tunstall(const std::vector<double>& probs, std::size_t n_leaves,
                 std::size_t sweep_max, const CommonOpts& opts) {
    const SourceModel src = SourceModel::make(probs);
    const std::string format = pick_format(opts, sweep_max > 0 ? "csv" : "json");
    if (sweep_max > 0) {
        const std::size_t k = src.alphabet_size();
        std::vector<RateReport> reports;
        for (std::size_t n = 1 + (k - 1); n <= sweep_max; n += k - 1) {
            if (n < 2) continue;
            reports.push_back(rate_report(src, n));
        }
        if (format == "json") {
            JsonWriter w(kJsonDigits);
            w.begin_array();
            for (const auto& rep : reports) write_rate_report_json(w, src, rep);
            w.end_array();
            std::cout << w.str() << "\n";
        } else {
            std::cout << kRateCsvHeader << "\n";
            for (const auto& rep : reports)
                std::cout << rate_report_csv_row(src, rep) << "\n";
        }
        return 0;
    }
    const RateReport rep = rate_report(src, n_leaves);
    if (format == "text") {
        std::cout << "n=" << rep.n_leaves << " rho=" << txt(src.rho) << "\n"
                  << "H(P) = " << txt(rep.h_source) << " bits/symbol\n"
                  << "H(W) = " << txt(rep.h_leaves) << " bits\n"
                  << "E[L] = " << txt(rep.expected_len) << " symbols\n"
                  << "rate = " << txt(rep.rate) << " bits/symbol\n"
                  << "new bound = " << (rep.new_bound ? txt(*rep.new_bound) : "absent") << "\n"
                  << "JS bound  = " << (rep.js_bound ? txt(*rep.js_bound) : "absent") << "\n";
    } else if (format == "csv") {
        std::cout << kRateCsvHeader << "\n" << rate_report_csv_row(src, rep) << "\n";
    } else {
        JsonWriter w(kJsonDigits);
        write_rate_report_json(w, src, rep);
        std::cout << w.str() << "\n";
    }
    return 0;
}

int run_compare_bounds(double rho_min, double rho_max, std::size_t steps,
                       const CommonOpts& opts) {
    if (steps < 1) throw ParamError("steps must be >= 1");
    std::vector<double> grid;
    grid.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        grid.push_back(steps == 1 ? rho_min
                                  : rho_min + (rho_max - rho_min) *
                                        static_cast<double>(s) /
                                        static_cast<double>(steps - 1));
    }
    const std::vector<BoundRow> rows = bound_comparison_table(grid);
    if (pick_format(opts, "csv") == "json") {
        JsonWriter w(kJsonDigits);
        w.begin_array();
        for (const auto& r : rows) {
            w.begin_object();
            w.kv("rho", r.rho);
            w.kv("gap_thm2_bits", r.gap_theorem2);
            w.kv("gap_prior_nats_as_written", r.gap_prior);
            w.kv("log2_rho", r.log2_rho);
            w.kv("gap_prior_bits", r.gap_prior / std::numbers::ln2);
            w.end_object();
        }
        w.end_array();
        std::cout << w.str() << "\n";
        return 0;
    }
    std::cout << "rho,gap_thm2_bits,gap_prior_nats_as_written,log2_rho,gap_prior_bits\n";
    for (const auto& r : rows) {
        std::cout << csv(r.rho) << "," << csv(r.gap_theorem2) << "," << csv(r.gap_prior)
                  << "," << csv(r.log2_rho) << "," << csv(r.gap_prior / std::numbers::ln2)
                  << "\n";
    }
    return 0;
}

int run_gen3p(const std::string& file, const CommonOpts& opts) {
    const std::vector<std::uint64_t> a = read_integers_file(file);
    const ThreePartitionInstance inst = gen_3partition_instance(a);
    std::optional<Aggregation> oracle;
    if (inst.dist.size() <= opts.limit_n) {
        oracle = exact_max_aggregation(inst.dist, inst.m, opts.limit_n);
    }
    const bool have_verdict = oracle.has_value();
    const double max_h = have_verdict ? entropy(oracle->dist) : 0.0;
    const bool is_yes = have_verdict && inst.target_entropy - max_h <= 1e-9;
    if (pick_format(opts, "json") == "text") {
        std::cout << "n=" << inst.dist.size() << " m=" << inst.m
                  << " target entropy=" << txt(inst.target_entropy) << "\n";
        if (have_verdict) {
            std::cout << "oracle max entropy = " << txt(max_h) << " -> "
                      << (is_yes ? "YES" : "NO") << " instance\n";
        } else {
            std::cout << "oracle skipped (n exceeds limit)\n";
        }
        return 0;
    }
    JsonWriter w(kJsonDigits);
    w.begin_object();
    w.kv("n", inst.dist.size());
    w.kv("m", static_cast<std::int64_t>(inst.m));
    w.kv("target_entropy", inst.target_entropy);
    w.key("dist").number_array(inst.dist.probs());
    if (have_verdict) {
        w.key("oracle").begin_object();
        w.kv("max_entropy", max_h);
        w.kv("achieves_target", is_yes);
        w.key("aggregation");
        write_aggregation(w, *oracle);
        w.end_object();
    } else {
        w.key("oracle").null();
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_selftest_cmd(std::size_t cases, std::uint64_t seed) {
    SelftestOptions opt;
    opt.cases = cases;
    opt.seed = seed;
    const std::vector<SuiteResult> results = run_selftest(opt);
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const auto& r : results) {
        std::cout << "suite " << r.name << ": " << r.passed << "/" << (r.passed + r.failed)
                  << " passed\n";
        passed += r.passed;
        total += r.passed + r.failed;
    }
    std::cout << "selftest: " << passed << "/" << total << " checks passed\n";
    return passed == total ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-extremal aggregation of finite probability distributions"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--format", opts.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--normalize", opts.normalize,
                 "rescale file input to total mass 1 instead of rejecting");
    app.add_option("--limit-n", opts.limit_n,
                   "exhaustive-enumeration size guard (default 12)");

    std::string file;
    std::size_t m = 2;
    double rho = 2.0;
    std::size_t n_atoms = 2;
    std::vector<double> probs;
    std::size_t n_leaves = 0;
    std::size_t sweep_max = 0;
    double rho_min = 1.0, rho_max = 100.0;
    std::size_t steps = 100;
    std::size_t cases = 300;
    std::uint64_t seed = 20240901;

    auto* agg = app.add_subcommand("aggregate", "R_m, Q_m and the Huffman aggregation");
    agg->fallthrough();
    agg->add_option("-m", m, "target alphabet size")->required();
    agg->add_option("file", file, "distribution file")->required();

    auto* bnd = app.add_subcommand("bounds", "ratio-constrained entropy lower bounds");
    bnd->fallthrough();
    bnd->add_option("-n", n_atoms, "number of atoms")->required();
    bnd->add_option("--rho", rho, "max/min probability ratio")->required();

    auto* zr = app.add_subcommand("zrho", "extremal distribution z_rho(p)");
    zr->fallthrough();
    zr->add_option("--rho", rho, "max/min probability ratio")->required();
    zr->add_option("file", file, "distribution file")->required();

    auto* orc = app.add_subcommand("oracle", "exhaustive maximum-entropy aggregation");
    orc->fallthrough();
    orc->add_option("-m", m, "target alphabet size")->required();
    orc->add_option("file", file, "distribution file")->required();

    auto* dst = app.add_subcommand("distance", "approximate D-closest m-atom distribution");
    dst->fallthrough();
    dst->add_option("-m", m, "target alphabet size")->required();
    dst->add_option("file", file, "distribution file")->required();

    auto* tun = app.add_subcommand("tunstall", "Tunstall parse tree rate report");
    tun->fallthrough();
    tun->add_option("--probs", probs, "source symbol probabilities")->required()->expected(-2);
    auto* tun_n = tun->add_option("-n", n_leaves, "number of leaves (1 + t(K-1))");
    tun->add_option("--sweep", sweep_max, "emit one row per reachable n up to this limit")
        ->excludes(tun_n);

    auto* cmp = app.add_subcommand("compare-bounds", "bound-comparison table (figure data)");
    cmp->fallthrough();
    cmp->add_option("--rho-min", rho_min, "grid start (>= 1)");
    cmp->add_option("--rho-max", rho_max, "grid end");
    cmp->add_option("--steps", steps, "grid size");

    auto* g3p = app.add_subcommand("gen3p", "3-partition reduction instance");
    g3p->fallthrough();
    g3p->add_option("file", file, "file of 3m positive integers")->required();

    auto* st = app.add_subcommand("selftest", "randomized property suites");
    st->fallthrough();
    st->add_option("--cases", cases, "iterations per suite");
    st->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the parse diagnostic
        return 1;     // any bad invocation is a validation error
    }

    try {
        if (agg->parsed()) return run_aggregate(file, m, opts);
        if (bnd->parsed()) return run_bounds(n_atoms, rho, opts);
        if (zr->parsed()) return run_zrho(file, rho, opts);
        if (orc->parsed()) return run_oracle(file, m, opts);
        if (dst->parsed()) return run_distance(file, m, opts);
        if (tun->parsed()) {
            if (sweep_max == 0 && n_leaves == 0) {
                throw ParamError("tunstall needs -n or --sweep");
            }
            return run_tunstall(probs, n_leaves, sweep_max, opts);
        }
        if (cmp->parsed()) return run_compare_bounds(rho_min, rho_max, steps, opts);
        if (g3p->parsed()) return run_gen3p(file, opts);
        if (st->parsed()) return run_selftest_cmd(cases, seed);
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

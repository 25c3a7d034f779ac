// fuss-spectra: exact moment tables, regular-path enumeration, seeded
// random-matrix simulation, and limit-law numerics behind one reproducible
// command-line front end. Every run writes CSV/SVG artifacts plus a plain
// key=value manifest enumerating each check with its tolerance; the exit
// code is 0 iff every enabled check passes.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuss/config.hpp"
#include "fuss/csv.hpp"
#include "fuss/delta.hpp"
#include "fuss/enumerate.hpp"
#include "fuss/esd.hpp"
#include "fuss/fuss_catalan.hpp"
#include "fuss/limit_law.hpp"
#include "fuss/manifest.hpp"
#include "fuss/monte_carlo.hpp"
#include "fuss/parallel.hpp"
#include "fuss/path_graph.hpp"
#include "fuss/s_transform.hpp"
#include "fuss/svg.hpp"
#include "fuss/truncation.hpp"

namespace fs = std::filesystem;

namespace {

struct Context {
    fs::path out;
    fuss::RunManifest manifest;

    explicit Context(const std::string& out_dir) : out(out_dir) {
        fs::create_directories(out);
    }

    void check(const std::string& name, bool passed, double tolerance, double observed,
               const std::string& note = "") {
        manifest.record({name, passed, tolerance, observed, note});
        std::cout << "check " << name << " observed=" << fuss::format_double(observed)
                  << " tolerance=" << fuss::format_double(tolerance)
                  << (passed ? " PASS" : " FAIL") << '\n';
    }

    std::ofstream artifact(const std::string& name) {
        manifest.add_artifact(name);
        std::ofstream f(out / name);
        if (!f) throw std::runtime_error("cannot open output file: " + (out / name).string());
        return f;
    }

    int finish() {
        std::ofstream f(out / "manifest.txt");
        manifest.write(f);
        const bool ok = manifest.all_passed();
        std::cout << "RESULT " << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? 0 : 1;
    }
};

// ---- config-file merge: flags explicitly given on the command line win ----

unsigned merged_u(const CLI::App* sub, const fuss::ConfigMap& cfg, const char* flag,
                  const char* key, unsigned current) {
    const auto* opt = sub->get_option_no_throw(flag);
    if (opt && opt->count() > 0) return current;
    return static_cast<unsigned>(cfg.get_int(key, current));
}

std::string merged_s(const CLI::App* sub, const fuss::ConfigMap& cfg, const char* flag,
                     const char* key, std::string current) {
    const auto* opt = sub->get_option_no_throw(flag);
    if (opt && opt->count() > 0) return current;
    return cfg.get_or(key, current);
}

fuss::ConfigMap load_config(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    return fuss::ConfigMap::parse(in);
}

std::vector<unsigned> parse_n_key(const std::string& text) {
    std::vector<unsigned> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

// ---- shared check bodies ----

void moments_checks(Context& ctx, unsigned m, unsigned p_max, bool write_table) {
    const auto table = fuss::FussCatalanTable::build(m, p_max);
    if (write_table) {
        auto f = ctx.artifact("fuss_catalan_m" + std::to_string(m) + ".csv");
        table.write_csv(f);
    }

    unsigned mismatches = 0;
    for (unsigned p = 0; p <= p_max; ++p)
        if (fuss::fc_recurrence(m, p, table) != table.at(p)) ++mismatches;
    ctx.check("recurrence_match_m" + std::to_string(m), mismatches == 0, 0.0, mismatches);

    // series route ends in (1+z)^{-m}: compare coefficientwise against the
    // binomial expansion, in exact rationals
    const unsigned order = std::max(2u, std::min(p_max, 9u));
    const auto s = fuss::s_transform_series(m, order);
    unsigned series_bad = 0;
    for (unsigned k = 0; k <= s.order(); ++k) {
        fuss::BigRat want(fuss::binomial_exact(m + k - 1, k));
        if (k % 2 == 1) want = -want;
        if (s.coeff(k) != want) ++series_bad;
    }
    ctx.check("s_transform_binomial_m" + std::to_string(m), series_bad == 0, 0.0, series_bad);
}

struct DensityOutput {
    double normalization_gap = 0.0;
    double closed_form_gap = -1.0;  // m = 1 only
};

DensityOutput density_run(Context& ctx, const fuss::LimitLaw& law, unsigned grid,
                          bool write_files) {
    const unsigned m = law.order();
    const double edge = law.edge();
    std::vector<double> xs(grid), cdf(grid);
    for (unsigned i = 0; i < grid; ++i) xs[i] = edge * (i + 0.5) / grid;
    const auto rho = fuss::limit_density_batch(m, xs);
    for (unsigned i = 0; i < grid; ++i) cdf[i] = law.cdf(xs[i]);

    if (write_files) {
        auto csv = ctx.artifact("density_m" + std::to_string(m) + ".csv");
        fuss::write_density_csv(csv, m, xs, rho, cdf);
        auto svg = ctx.artifact("density_m" + std::to_string(m) + ".svg");
        fuss::write_density_svg(svg, xs, rho, edge, "limit density m=" + std::to_string(m));
        ctx.manifest.set("support_edge_m" + std::to_string(m), edge);
    }

    DensityOutput out;
    out.normalization_gap = std::abs(law.normalization() - 1.0);
    if (m == 1) {
        for (unsigned i = 0; i < grid; ++i)
            out.closed_form_gap =
                std::max(out.closed_form_gap, std::abs(rho[i] - fuss::mp_density(xs[i])));
    }
    return out;
}

struct SimulateOutcome {
    std::vector<double> ks_by_n;
};

SimulateOutcome simulate_run(Context& ctx, fuss::Family family, unsigned m,
                             const std::vector<unsigned>& n_list, unsigned trials,
                             std::uint64_t seed, unsigned p_max, double gamma,
                             const fuss::LimitLaw& law) {
    SimulateOutcome outcome;
    std::vector<fuss::MomentReport> all_reports;
    auto limit_cdf = [&law](double x) { return law.cdf(x); };
    std::vector<double> probes(161);
    for (std::size_t i = 0; i < probes.size(); ++i)
        probes[i] = -0.25 + (law.edge() + 0.75) * static_cast<double>(i) / (probes.size() - 1.0);

    for (unsigned n : n_list) {
        const fuss::EnsembleSpec spec{family, n, m, seed};
        const std::string tag = "_n" + std::to_string(n);

        const auto reports = fuss::monte_carlo_moments(spec, trials, p_max);
        all_reports.insert(all_reports.end(), reports.begin(), reports.end());
        // roundoff floor: families with entrywise |x| = 1 hit the exact
        // trace and a zero standard error
        const auto& p1 = reports.front();
        const double p1_tol = 3.0 * p1.std_error + 1e-12;
        ctx.check("p1_mean" + tag, std::abs(p1.mean - 1.0) <= p1_tol, p1_tol,
                  std::abs(p1.mean - 1.0));

        const auto spectra = fuss::simulate_spectra(spec, trials);
        {
            auto f = ctx.artifact("spectrum" + tag + ".csv");
            fuss::write_spectrum_csv(f, spectra);
        }
        const auto pooled = fuss::EmpiricalCdf::pooled(spectra);
        const double ks = fuss::kolmogorov_distance(pooled, limit_cdf, probes);
        ctx.manifest.set("ks" + tag, ks);
        std::cout << "ks n=" << n << " distance=" << fuss::format_double(ks) << '\n';
        outcome.ks_by_n.push_back(ks);

        // rank-bound sub-report: zero the heavy entries of each factor and
        // compare the shifted spectrum against the interlacing bound
        const double cutoff = fuss::alpha_threshold(n, gamma) * std::sqrt(n);
        auto sub = ctx.artifact("truncation" + tag + ".csv");
        sub << "trial,entries_cut,rank_footprint,bound,ks\n";
        double worst_excess = -1.0;
        for (unsigned t = 0; t < trials; ++t) {
            const auto tp = fuss::truncated_product_matrix(spec, t, cutoff);
            const auto trunc_spec = fuss::hermitian_eigenvalues(tp.matrix).eigenvalues;
            const double bound = fuss::esd_rank_bound(m, tp.max_rank_footprint, n);
            const double dist = fuss::kolmogorov_distance(fuss::EmpiricalCdf(trunc_spec),
                                                          fuss::EmpiricalCdf(spectra[t]));
            worst_excess = std::max(worst_excess, dist - bound);
            sub << t << ',' << tp.entries_cut << ',' << tp.max_rank_footprint << ','
                << fuss::format_double(bound) << ',' << fuss::format_double(dist) << '\n';
        }
        ctx.check("truncation_rank_bound" + tag, worst_excess <= 1e-12, 1e-12, worst_excess);
    }

    {
        auto f = ctx.artifact("moment_report.csv");
        fuss::write_moment_report_csv(f, all_reports);
    }
    if (n_list.size() >= 2) {
        const double first = outcome.ks_by_n.front(), last = outcome.ks_by_n.back();
        ctx.check("ks_trend", last < first, 0.0, last - first,
                  "distance to the limit law must shrink with n");
    }
    return outcome;
}

// ---- subcommands ----

int cmd_moments(const std::string& cfg_path, const CLI::App* sub, unsigned m, unsigned p_max,
                std::string out_dir) {
    const auto cfg = load_config(cfg_path);
    m = merged_u(sub, cfg, "--m", "m", m);
    p_max = merged_u(sub, cfg, "--p-max", "p_max", p_max);
    out_dir = merged_s(sub, cfg, "--out", "out", out_dir);

    Context ctx(out_dir);
    ctx.manifest.set("command", "moments");
    ctx.manifest.set("m", static_cast<long long>(m));
    ctx.manifest.set("p_max", static_cast<long long>(p_max));
    moments_checks(ctx, m, p_max, true);
    return ctx.finish();
}

int cmd_enumerate(const std::string& cfg_path, const CLI::App* sub, unsigned m, unsigned p,
                  unsigned budget, std::string out_dir) {
    const auto cfg = load_config(cfg_path);
    m = merged_u(sub, cfg, "--m", "m", m);
    p = merged_u(sub, cfg, "--p", "p", p);
    budget = merged_u(sub, cfg, "--budget", "budget", budget);
    out_dir = merged_s(sub, cfg, "--out", "out", out_dir);

    Context ctx(out_dir);
    ctx.manifest.set("command", "enumerate");
    ctx.manifest.set("m", static_cast<long long>(m));
    ctx.manifest.set("p", static_cast<long long>(p));
    ctx.manifest.set("budget", static_cast<long long>(budget));

    const auto paths = fuss::enumerate_regular_paths(m, p, budget);
    const fuss::BigInt expected = fuss::fuss_catalan(m, p);

    {
        auto f = ctx.artifact("paths.txt");
        for (const auto& path : paths) f << fuss::format_path_line(path) << '\n';
    }
    std::vector<fuss::CertificateRow> rows;
    unsigned irregular = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto cert = fuss::certify(fuss::build_path_graph(paths[i]));
        if (!cert.regular()) ++irregular;
        rows.push_back({m, p, static_cast<unsigned long>(i), cert.vertex_count,
                        cert.edge_count, cert.regular()});
    }
    {
        auto f = ctx.artifact("certificates.csv");
        fuss::write_certificates_csv(f, rows);
    }

    const bool count_ok = expected == fuss::BigInt(paths.size());
    std::cout << "count=" << paths.size() << " expected=" << expected
              << (count_ok ? " PASS" : " FAIL") << '\n';
    ctx.check("enumeration_count", count_ok, 0.0,
              static_cast<double>(paths.size()));
    ctx.check("certificates_regular", irregular == 0, 0.0, irregular);
    return ctx.finish();
}

int cmd_density(const std::string& cfg_path, const CLI::App* sub, unsigned m, unsigned grid,
                std::string out_dir) {
    const auto cfg = load_config(cfg_path);
    m = merged_u(sub, cfg, "--m", "m", m);
    grid = merged_u(sub, cfg, "--grid", "grid", grid);
    out_dir = merged_s(sub, cfg, "--out", "out", out_dir);
    if (grid < 2) throw std::runtime_error("density: --grid must be at least 2");

    Context ctx(out_dir);
    ctx.manifest.set("command", "density");
    ctx.manifest.set("m", static_cast<long long>(m));
    ctx.manifest.set("grid", static_cast<long long>(grid));

    const fuss::LimitLaw law(m);
    const auto result = density_run(ctx, law, grid, true);
    ctx.check("normalization", result.normalization_gap <= 1e-6, 1e-6,
              result.normalization_gap);
    if (m == 1)
        ctx.check("closed_form_max_error", result.closed_form_gap <= 1e-6, 1e-6,
                  result.closed_form_gap);
    return ctx.finish();
}

int cmd_simulate(const std::string& cfg_path, const CLI::App* sub, unsigned m,
                 std::vector<unsigned> n_list, unsigned trials, std::string family,
                 std::uint64_t seed, unsigned p_max, std::string out_dir) {
    const auto cfg = load_config(cfg_path);
    m = merged_u(sub, cfg, "--m", "m", m);
    trials = merged_u(sub, cfg, "--trials", "trials", trials);
    p_max = merged_u(sub, cfg, "--p-max", "p_max", p_max);
    family = merged_s(sub, cfg, "--family", "family", family);
    out_dir = merged_s(sub, cfg, "--out", "out", out_dir);
    seed = merged_u(sub, cfg, "--seed", "seed", static_cast<unsigned>(seed));
    if (const auto* opt = sub->get_option_no_throw("--n"); (!opt || opt->count() == 0))
        if (cfg.has("n")) n_list = parse_n_key(cfg.get_or("n", ""));
    if (n_list.empty()) n_list = {128, 512};
    const double gamma = fuss::parse_alpha_schedule(cfg.get_or("schedule", "n18"));

    Context ctx(out_dir);
    ctx.manifest.set("command", "simulate");
    ctx.manifest.set("m", static_cast<long long>(m));
    ctx.manifest.set("family", family);
    ctx.manifest.set("trials", static_cast<long long>(trials));
    ctx.manifest.set("seed", static_cast<long long>(seed));
    ctx.manifest.set("p_max", static_cast<long long>(p_max));
    ctx.manifest.set("schedule_gamma", gamma);
    ctx.manifest.set("threads", static_cast<long long>(fuss::thread_count()));
    for (std::size_t i = 0; i < n_list.size(); ++i)
        ctx.manifest.set("n." + std::to_string(i), static_cast<long long>(n_list[i]));

    const fuss::LimitLaw law(m);
    simulate_run(ctx, fuss::parse_family(family), m, n_list, trials, seed, p_max, gamma, law);
    return ctx.finish();
}

int cmd_validate(const std::string& cfg_path, const CLI::App* sub, std::uint64_t seed,
                 bool inject_failure, std::string out_dir) {
    const auto cfg = load_config(cfg_path);
    out_dir = merged_s(sub, cfg, "--out", "out", out_dir);
    seed = merged_u(sub, cfg, "--seed", "seed", static_cast<unsigned>(seed));
    const double gamma = fuss::parse_alpha_schedule(cfg.get_or("schedule", "n18"));

    Context ctx(out_dir);
    ctx.manifest.set("command", "validate");
    ctx.manifest.set("seed", static_cast<long long>(seed));
    ctx.manifest.set("inject_failure", static_cast<long long>(inject_failure ? 1 : 0));

    // exact identities
    for (unsigned m = 1; m <= 3; ++m) moments_checks(ctx, m, 8, m == 1);

    // enumeration counts against the closed form
    for (auto [m, p] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {1, 3},
                        {2, 1}, {2, 2}, {3, 1}}) {
        const auto paths = fuss::enumerate_regular_paths(m, p);
        const bool ok = fuss::fuss_catalan(m, p) == fuss::BigInt(paths.size());
        ctx.check("enum_m" + std::to_string(m) + "_p" + std::to_string(p), ok, 0.0,
                  static_cast<double>(paths.size()));
    }

    // composition/inversion round trip over a full census
    {
        unsigned failures = 0;
        for (const auto& path : fuss::enumerate_regular_paths(2, 2)) {
            const auto inv = fuss::delta_invert(path);
            if (!(fuss::delta_compose(2, inv.parts) == path)) ++failures;
        }
        ctx.check("delta_roundtrip_m2_p2", failures == 0, 0.0, failures);
    }

    // limit-law numerics at order one
    const fuss::LimitLaw law1(1);
    const auto density = density_run(ctx, law1, 128, true);
    const double norm_tol = inject_failure ? 1e-18 : 1e-6;
    ctx.check("normalization", density.normalization_gap <= norm_tol, norm_tol,
              density.normalization_gap,
              inject_failure ? "tolerance corrupted by --inject-failure" : "");
    ctx.check("closed_form_max_error", density.closed_form_gap <= 1e-6, 1e-6,
              density.closed_form_gap);

    // seeded simulation: mean check, distance trend, rank bound
    simulate_run(ctx, fuss::Family::complex_gaussian, 1, {48, 96}, 4, seed, 3, gamma, law1);

    // identical inputs must reproduce identical bytes
    {
        std::ostringstream a, b;
        fuss::FussCatalanTable::build(2, 8).write_csv(a);
        fuss::FussCatalanTable::build(2, 8).write_csv(b);
        std::ostringstream da, db;
        const std::vector<double> xs{0.5, 1.0, 2.0, 3.5};
        fuss::write_density_csv(da, 1, xs, fuss::limit_density_batch(1, xs),
                                {law1.cdf(0.5), law1.cdf(1.0), law1.cdf(2.0), law1.cdf(3.5)});
        fuss::write_density_csv(db, 1, xs, fuss::limit_density_batch(1, xs),
                                {law1.cdf(0.5), law1.cdf(1.0), law1.cdf(2.0), law1.cdf(3.5)});
        const bool same = a.str() == b.str() && da.str() == db.str();
        ctx.check("deterministic_rerun", same, 0.0, same ? 0.0 : 1.0);
    }

    return ctx.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuss-Catalan spectra toolkit: exact moments, path enumeration, "
                 "seeded simulation, limit-law numerics"};
    app.require_subcommand(1);

    unsigned m = 1, p = 1, p_max = 8, budget = 16, grid = 512, trials = 8, sim_p_max = 4;
    std::uint64_t seed = 1;
    std::vector<unsigned> n_list;
    std::string family = "complex-gaussian", out_dir = ".", cfg_path;
    bool inject_failure = false;

    auto* mo = app.add_subcommand("moments", "exact moment table and series identities");
    mo->add_option("--m", m, "number of factors");
    mo->add_option("--p-max", p_max, "largest moment order");
    mo->add_option("--out", out_dir, "output directory");
    mo->add_option("--config", cfg_path, "key=value config file");

    auto* en = app.add_subcommand("enumerate", "regular paths and certificates");
    en->add_option("--m", m, "number of factors");
    en->add_option("--p", p, "moment order to enumerate");
    en->add_option("--budget", budget, "largest admissible path length");
    en->add_option("--out", out_dir, "output directory");
    en->add_option("--config", cfg_path, "key=value config file");

    auto* de = app.add_subcommand("density", "limit density, distribution, and plot");
    de->add_option("--m", m, "number of factors");
    de->add_option("--grid", grid, "output grid points");
    de->add_option("--out", out_dir, "output directory");
    de->add_option("--config", cfg_path, "key=value config file");

    auto* si = app.add_subcommand("simulate", "seeded spectra and moment reports");
    si->add_option("--m", m, "number of factors");
    si->add_option("--n", n_list, "matrix dimensions (repeatable)");
    si->add_option("--trials", trials, "trials per dimension");
    si->add_option("--family", family, "entry family");
    si->add_option("--seed", seed, "base seed");
    si->add_option("--p-max", sim_p_max, "largest moment order in the report");
    si->add_option("--out", out_dir, "output directory");
    si->add_option("--config", cfg_path, "key=value config file");

    auto* va = app.add_subcommand("validate", "full suite aggregation");
    va->add_option("--seed", seed, "base seed");
    va->add_flag("--inject-failure", inject_failure, "corrupt one tolerance to force FAIL");
    va->add_option("--out", out_dir, "output directory");
    va->add_option("--config", cfg_path, "key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mo->parsed()) return cmd_moments(cfg_path, mo, m, p_max, out_dir);
        if (en->parsed()) return cmd_enumerate(cfg_path, en, m, p, budget, out_dir);
        if (de->parsed()) return cmd_density(cfg_path, de, m, grid, out_dir);
        if (si->parsed())
            return cmd_simulate(cfg_path, si, m, n_list, trials, family, seed, sim_p_max,
                                out_dir);
        if (va->parsed()) return cmd_validate(cfg_path, va, seed, inject_failure, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

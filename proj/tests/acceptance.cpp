// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "hurstlab/cli/app.hpp"
#include "hurstlab/core.hpp"
#include "hurstlab/ghe.hpp"
#include "hurstlab/rolling.hpp"
#include "hurstlab/synth.hpp"
#include "hurstlab/tails.hpp"
#include "oracles.hpp"

using namespace hurstlab;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // <= 0: no limit
    std::function<Verdict()> check;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

GeneratorSpec spec_of(GeneratorKind kind, std::size_t n, std::uint64_t seed, double hurst = 0.5,
                      double alpha = 2.0) {
    GeneratorSpec s;
    s.kind = kind;
    s.length = n;
    s.seed = seed;
    s.hurst = hurst;
    s.alpha = alpha;
    return s;
}

double ensemble_h(GeneratorSpec spec, std::uint64_t stream, int members) {
    std::vector<double> h;
    for (int m = 0; m < members; ++m) {
        spec.seed = derive_seed(stream, m);
        h.push_back(estimate_ghe(generate(spec).values(), 1.0).h);
    }
    return oracle::mean(h);
}

std::vector<double> pareto(std::size_t n, double alpha, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = std::pow(1.0 - u(gen), -1.0 / (alpha - 1.0));
    return x;
}

Verdict weight_normalization() {
    std::mt19937_64 gen(1);
    std::uniform_int_distribution<std::size_t> window(1, 3000);
    std::uniform_real_distribution<double> log_theta(std::log(0.1), std::log(1e4));
    double worst_sum = 0.0, worst_point = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t dt = i == 0 ? 750 : window(gen);
        const double theta = i == 0 ? 250.0 : std::exp(log_theta(gen));
        const auto w = exp_weights(dt, theta);
        const auto ref = oracle::closed_form_weights(dt, theta);
        double sum = 0.0;
        for (std::size_t s = 0; s < dt; ++s) {
            sum += w[s];
            worst_point = std::max(worst_point, std::fabs(w[s] - ref[s]));
        }
        worst_sum = std::max(worst_sum, std::fabs(sum - 1.0));
    }
    return {worst_sum <= 1e-12 && worst_point <= 1e-12,
            fmt("max |sum-1| = %.2e, max pointwise deviation = %.2e (tol 1e-12)", worst_sum, worst_point)};
}

Verdict hurst_recovery() {
    const double targets[] = {0.3, 0.5, 0.7};
    double means[3];
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 3; ++k) {
        means[k] = ensemble_h(spec_of(GeneratorKind::fbm, 4096, 0, targets[k]), 200 + k, 100);
        ok = ok && std::fabs(means[k] - targets[k]) <= 0.03;
        detail += fmt("H=%.1f -> %.4f; ", targets[k], means[k]);
    }
    const bool ordered = means[0] < means[1] && means[1] < means[2];
    return {ok && ordered, detail + (ordered ? "strictly ordered" : "NOT ordered")};
}

Verdict levy_scaling() {
    const double levy = ensemble_h(spec_of(GeneratorKind::levy_walk, 8192, 0, 0.5, 1.5), 300, 100);
    const double gauss = ensemble_h(spec_of(GeneratorKind::gaussian_walk, 8192, 0), 301, 100);
    const double target = theoretical_hurst(1.5);
    return {std::fabs(levy - target) <= 0.05 && std::fabs(gauss - 0.5) <= 0.03,
            fmt("levy(1.5) mean H(1) = %.4f (target %.4f +-0.05); gaussian = %.4f (0.5 +-0.03)", levy, target,
                gauss)};
}

Verdict tail_mle() {
    const double v[] = {1.0, 2.0, 4.0, 8.0};
    const double fixture = fit_tail(v, FixedXmin{1.0}).alpha;
    const double exact = 1.0 + 4.0 / (6.0 * std::log(2.0));
    std::mt19937_64 gen(4);
    const double mc = fit_tail(pareto(100000, 2.5, gen), FixedXmin{1.0}).alpha;
    return {std::fabs(fixture - exact) <= 1e-12 && std::fabs(mc - 2.5) <= 0.02,
            fmt("fixture %.15f vs %.15f; Pareto(2.5) n=1e5 -> %.4f", fixture, exact, mc)};
}

Verdict pvalue_calibration() {
    std::mt19937_64 gen(5);
    int rejected = 0;
    for (int d = 0; d < 200; ++d) {
        const auto x = pareto(500, 2.5, gen);
        const double p = fit_tail_with_pvalue(x, FixedXmin{1.0}, 1000, derive_seed(500, d)).p_value.value();
        if (p < 0.1) ++rejected;
    }
    const double frac = rejected / 200.0;
    return {frac >= 0.06 && frac <= 0.14, fmt("fraction p<0.1 = %.3f (%d/200, band [0.06, 0.14])", frac, rejected)};
}

Verdict regime_change() {
    int hits = 0;
    double smallest = 1.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto first = spec_of(GeneratorKind::fbm, 3000, derive_seed(600 + seed, 0), 0.5);
        const auto second = spec_of(GeneratorKind::fbm, 3000, derive_seed(600 + seed, 1), 0.8);
        const auto h = rolling_ghe(generate(make_splice(first, second, seed))).h_values(0);
        double early = 0.0, late = 0.0;
        for (int k = 0; k < 5; ++k) {
            early += h[k] / 5.0;
            late += h[h.size() - 1 - k] / 5.0;
        }
        smallest = std::min(smallest, late - early);
        if (late - early >= 0.15) ++hits;
    }
    return {hits >= 95, fmt("detected in %d/100 seeds (smallest difference %.3f)", hits, smallest)};
}

Verdict multifractal_width() {
    bool ok = true;
    std::string detail;
    for (double h : {0.3, 0.5, 0.7}) {
        std::vector<double> w;
        for (int m = 0; m < 100; ++m) {
            const auto x = generate(spec_of(GeneratorKind::fbm, 4096, derive_seed(700, m), h)).values();
            w.push_back(std::fabs(multifractality_width(x, 1.0, 1.5)));
        }
        const double mean = oracle::mean(w);
        ok = ok && mean < 0.03;
        detail += fmt("fbm(%.1f) mean |H(1)-H(1.5)| = %.4f; ", h, mean);
    }
    std::vector<double> w;
    for (int m = 0; m < 100; ++m) {
        const auto x = generate(spec_of(GeneratorKind::levy_walk, 8192, derive_seed(701, m), 0.5, 1.5)).values();
        w.push_back(multifractality_width(x, 1.0, 3.0));
    }
    const double levy = oracle::mean(w);
    return {ok && levy > 0.1, detail + fmt("levy(1.5) mean H(1)-H(3) = %.4f", levy)};
}

Verdict exclusion_effect() {
    using namespace std::chrono;
    const DateRange block{year{2002} / January / 1, year{2002} / July / 19};
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 gen(800 + seed);
        auto body = pareto(2000, 3.0, gen);
        const auto heavy = pareto(200, 1.5, gen);
        std::vector<Date> dates;
        std::size_t j = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            dates.emplace_back(sys_days{year{2000} / January / 1} + days{static_cast<int>(i)});
            if (block.contains(dates.back())) body[i] = heavy[j++];
            if (i % 2) body[i] = -body[i];
        }
        const auto fit = split_period_fit(ReturnSeries(dates, body), block, FixedXmin{1.0});
        if (fit.excluded.alpha > fit.full.alpha) ++hits;
    }
    return {hits >= 95, fmt("alpha rises after exclusion in %d/100 seeds", hits)};
}

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hurstlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in;
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

Verdict cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / ("hurstlab_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    const std::vector<std::vector<std::string>> pipelines{
        {"generate", "--kind", "gaussian", "--n", "3000", "--seed", "1"},
        {"generate", "--kind", "fbm", "--hurst", "0.7", "--n", "3000", "--seed", "2"},
        {"generate", "--kind", "levy", "--alpha", "1.5", "--n", "3000", "--seed", "3"},
        {"generate", "--kind", "splice", "--n", "3000", "--seed", "4", "--format", "json"},
        {"returns", "@levy"},
        {"ghe", "@fbm", "--q", "1", "2", "3"},
        {"ghe", "@fbm", "--window", "750", "--unweighted"},
        {"rolling", "@fbm", "--svg"},
        {"rolling", "@levy", "--q", "1", "2", "--unweighted", "--anchor", "start", "--format", "json"},
        {"multifractal", "@levy", "--q", "1", "3", "--svg"},
        {"tails", "@levy", "--pvalue-replicates", "200", "--seed", "9", "--svg"},
        {"tails", "@levy", "--xmin", "0.02", "--tail-side", "upper", "--pvalue-replicates", "100", "--seed", "9",
         "--exclude-from", "2001-01-01", "--exclude-to", "2001-12-31"},
        {"compare-ha", "@levy", "--svg"},
    };
    std::size_t files = 0, mismatches = 0, failures = 0;
    for (int rep = 0; rep < 2; ++rep) {
        const fs::path run_dir = dir / std::to_string(rep);
        fs::create_directories(run_dir);
        for (std::size_t p = 0; p < pipelines.size(); ++p) {
            std::vector<std::string> args;
            for (const auto& a : pipelines[p]) {
                if (a.starts_with('@')) {
                    args.push_back((run_dir / ("out" + std::to_string(a == "@fbm" ? 1 : 2))).string());
                } else {
                    args.push_back(a);
                }
            }
            const std::string stem = (run_dir / ("out" + std::to_string(p))).string();
            args.insert(args.end(), {"-o", stem});
            if (pipelines[p][0] != "generate" && pipelines[p][0] != "returns") {
                args.insert(args.end(), {"--plot", stem + "_plot"});
            }
            if (run_cli(args) != 0) ++failures;
        }
    }
    for (const auto& entry : fs::directory_iterator(dir / "0")) {
        ++files;
        const fs::path twin = dir / "1" / entry.path().filename();
        if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) ++mismatches;
    }
    fs::remove_all(dir);
    return {failures == 0 && mismatches == 0 && files > pipelines.size(),
            fmt("%zu pipelines x 2 runs, %zu files compared, %zu differ, %zu runs failed", pipelines.size(), files,
                mismatches, failures)};
}

Verdict theory_relation() {
    const bool exact = theoretical_hurst(0.5) == 2.0 && theoretical_hurst(1.7) == 1.0 / 1.7 &&
                       theoretical_hurst(2.0) == 0.5 && theoretical_hurst(3.0) == 0.5;
    const double anchor = theoretical_hurst(1.7);
    return {exact && std::fabs(anchor - 0.588) < 5e-4,
            fmt("H(0.5)=%.4f H(1.7)=%.4f H(2)=%.4f H(3)=%.4f", theoretical_hurst(0.5), anchor,
                theoretical_hurst(2.0), theoretical_hurst(3.0))};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "weight normalization", 1.0, weight_normalization},
        {2, "Hurst recovery on fBm", 120.0, hurst_recovery},
        {3, "Levy scaling consistency", 120.0, levy_scaling},
        {4, "tail MLE", 10.0, tail_mle},
        {5, "p-value calibration", 600.0, pvalue_calibration},
        {6, "regime-change trajectory", 300.0, regime_change},
        {7, "multifractality width", 180.0, multifractal_width},
        {8, "exclusion effect", 60.0, exclusion_effect},
        {9, "end-to-end CLI determinism", 0.0, cli_determinism},
        {10, "theoretical Hurst relation", 0.0, theory_relation},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
        const bool pass = v.pass && in_time;
        if (!pass) ++failed;
        std::string limit = c.time_limit_s > 0.0 ? fmt(" < %.0f s", c.time_limit_s) : std::string();
        std::printf("[%s] criterion %2d: %s | %s | %.2f s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    v.detail.c_str(), secs, limit.c_str(), in_time ? "" : " (time limit exceeded)");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

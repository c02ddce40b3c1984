#include "hurstlab/cli/app.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurstlab/cli/csv_io.hpp"
#include "hurstlab/cli/svg.hpp"
#include "hurstlab/cli/table.hpp"
#include "hurstlab/core.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/ghe.hpp"
#include "hurstlab/random.hpp"
#include "hurstlab/rolling.hpp"
#include "hurstlab/synth.hpp"
#include "hurstlab/tails.hpp"

namespace hurstlab::cli {

namespace {

struct Io {
    std::string input = "-";
    std::string output = "-";
    std::string format = "csv";
    std::string plot;
    bool svg = false;
};

struct ScalingOptions {
    std::vector<double> q;
    std::size_t tau_lo = 5;
    std::size_t tau_hi = 19;
    bool weighted = true;
    double theta = 250.0;
    std::size_t window = 750;
    std::size_t shift = 50;
    std::string anchor = "end";
    bool raw_price = false;
};

struct TailOptions {
    double x_min = 0.0;
    bool scan = true;
    std::size_t min_tail = 50;
    std::size_t replicates = 1000;
    std::string side = "abs";
    std::string exclude_from;
    std::string exclude_to;
};

struct GenerateOptions {
    std::string kind = "fbm";
    std::size_t n = 4096;
    double hurst = 0.5;
    double alpha = 1.5;
    std::string fbm_method = "davies-harte";
    std::size_t splice_at = 0;
    std::string first_kind = "fbm";
    std::string second_kind = "fbm";
    double hurst2 = 0.8;
    double alpha2 = 1.5;
    double scale = 0.01;
    double base_price = 100.0;
    std::string start_date = "2000-01-03";
};

Format parse_format(const std::string& f) { return f == "json" ? Format::json : Format::csv; }

PriceSeries load_prices(const Io& io, std::istream& in) {
    if (io.input == "-") return read_price_csv(in);
    return ingest_csv(io.input);
}

void emit(const Io& io, std::ostream& out, const std::string& text) {
    if (io.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(io.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::invalid_input, "cannot write " + io.output);
    file << text;
}

std::string table_text(const Table& table, const Io& io) {
    std::ostringstream s;
    write_table(s, table, parse_format(io.format));
    return s.str();
}

void emit_svg(const Io& io, const std::vector<PlotCurve>& curves, const PlotAxes& axes) {
    if (io.plot.empty() || !io.svg) return;
    std::ofstream file(io.plot + ".svg", std::ios::binary);
    if (!file) throw Error(ErrorKind::invalid_input, "cannot write " + io.plot + ".svg");
    file << render_svg(curves, axes);
}

std::string q_tag(double q) {
    std::string s = format_number(q);
    for (char& c : s) {
        if (c == '.') c = 'p';
    }
    return s;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HURSTLAB_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || *end != '\0' || env[0] == '-') {
            throw Error(ErrorKind::parse_error, std::string("HURSTLAB_SEED is not an unsigned integer: ") + env);
        }
        return v;
    }
    return 0;
}

Date require_date(const std::string& text, const char* flag) {
    const auto d = parse_date(text);
    if (!d) throw Error(ErrorKind::parse_error, std::string(flag) + " expects YYYY-MM-DD, got '" + text + "'");
    return *d;
}

LogPriceSeries analysed_series(const PriceSeries& prices, bool raw) {
    return raw ? raw_prices(prices) : log_prices(prices);
}

RollingConfig rolling_config(const ScalingOptions& o) {
    RollingConfig c;
    c.window = o.window;
    c.shift = o.shift;
    c.theta = o.theta;
    c.weighted = o.weighted;
    c.q_list = o.q;
    c.tau_max_range = {o.tau_lo, o.tau_hi};
    c.anchor = o.anchor == "start" ? Anchor::start : Anchor::end;
    return c;
}

TailSide tail_side(const std::string& s) {
    if (s == "upper") return TailSide::upper;
    if (s == "lower") return TailSide::lower;
    return TailSide::absolute;
}

XminStrategy tail_strategy(const TailOptions& o) {
    if (!o.scan) return FixedXmin{o.x_min, o.min_tail};
    return KsScan{o.min_tail};
}

Cell end_date_cell(const WindowResult& w) {
    if (w.end_date) return format_date(*w.end_date);
    return static_cast<std::int64_t>(w.end_index);
}

std::string end_date_text(const WindowResult& w) {
    return w.end_date ? format_date(*w.end_date) : std::to_string(w.end_index);
}

// ---------------------------------------------------------------------------

void cmd_returns(const Io& io, std::istream& in, std::ostream& out) {
    const auto prices = load_prices(io, in);
    const auto r = log_returns(prices);
    Table t{{"date", "log_return"}, {}};
    for (std::size_t i = 0; i < r.size(); ++i) t.add_row({format_date(r.timestamps()[i]), r.values()[i]});
    emit(io, out, table_text(t, io));
    if (!io.plot.empty()) {
        std::vector<std::string> x;
        for (const auto& d : r.timestamps()) x.push_back(format_date(d));
        write_plot_data(io.plot + "_returns.dat", "date", "log_return", x, r.values());
        std::vector<double> idx(r.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i + 1);
        emit_svg(io, {{"log-return", idx, r.values(), false}}, {"Daily log-returns", "trading day", "r", false, false});
    }
}

void cmd_ghe(const Io& io, const ScalingOptions& o, bool window_given, std::istream& in, std::ostream& out) {
    const auto prices = load_prices(io, in);
    const auto series = analysed_series(prices, o.raw_price);
    std::size_t length = series.size();
    if (window_given) {
        if (o.window > series.size()) {
            throw Error(ErrorKind::insufficient_data, "series shorter than --window");
        }
        length = o.window;
    }
    const auto window = series.window(series.size() - length, length);
    std::optional<WeightVector> weights;
    if (o.weighted) weights = exp_weights(length, o.theta);
    const WeightVector* wp = weights ? &*weights : nullptr;
    const TauMaxRange range{o.tau_lo, o.tau_hi};

    Table t{{"q", "h", "sigma", "tau_max_lo", "tau_max_hi", "n_points"}, {}};
    std::vector<PlotCurve> curves;
    for (double q : o.q) {
        const auto est = estimate_ghe(window, q, range, wp);
        t.add_row({q, est.h, est.sigma, static_cast<std::int64_t>(o.tau_lo), static_cast<std::int64_t>(o.tau_hi),
                   static_cast<std::int64_t>(length)});
        if (!io.plot.empty()) {
            const auto sf = structure_function(window, q, o.tau_hi, wp);
            std::vector<std::string> x;
            std::vector<double> xs;
            for (auto lag : sf.lags) {
                x.push_back(std::to_string(lag));
                xs.push_back(static_cast<double>(lag));
            }
            write_plot_data(io.plot + "_structure_q" + q_tag(q) + ".dat", "tau", "K_q", x, sf.values);
            curves.push_back({"q=" + format_number(q), xs, sf.values, false});
        }
    }
    emit(io, out, table_text(t, io));
    emit_svg(io, curves, {"Structure functions", "tau", "K_q(tau)", true, true});
}

void cmd_rolling(const Io& io, const ScalingOptions& o, std::istream& in, std::ostream& out) {
    const auto prices = load_prices(io, in);
    const auto traj = rolling_ghe(analysed_series(prices, o.raw_price), rolling_config(o));

    Table t{{"window_end_date", "q", "h", "sigma"}, {}};
    for (const auto& w : traj.windows) {
        for (std::size_t k = 0; k < traj.q_list.size(); ++k) {
            const auto& e = w.estimates[k];
            t.add_row({end_date_cell(w), traj.q_list[k], e ? Cell{e->h} : Cell{}, e ? Cell{e->sigma} : Cell{}});
        }
    }
    emit(io, out, table_text(t, io));

    if (io.plot.empty()) return;
    std::vector<PlotCurve> curves;
    for (std::size_t k = 0; k < traj.q_list.size(); ++k) {
        std::vector<std::string> x;
        std::vector<double> xs, h, lo, hi;
        for (const auto& w : traj.windows) {
            if (!w.estimates[k]) continue;
            x.push_back(end_date_text(w));
            xs.push_back(static_cast<double>(w.end_index));
            h.push_back(w.estimates[k]->h);
            lo.push_back(w.estimates[k]->h - w.estimates[k]->sigma);
            hi.push_back(w.estimates[k]->h + w.estimates[k]->sigma);
        }
        const std::string tag = "_q" + q_tag(traj.q_list[k]);
        write_plot_data(io.plot + tag + ".dat", "window_end_date", "h", x, h);
        write_plot_data(io.plot + tag + "_lower.dat", "window_end_date", "h_minus_sigma", x, lo);
        write_plot_data(io.plot + tag + "_upper.dat", "window_end_date", "h_plus_sigma", x, hi);
        const std::string label = "H(" + format_number(traj.q_list[k]) + ")";
        curves.push_back({label, xs, h, false});
        curves.push_back({label + " - sigma", xs, lo, false});
        curves.push_back({label + " + sigma", xs, hi, false});
    }
    emit_svg(io, curves, {"Rolling generalized Hurst exponent", "window end index", "H", false, false});
}

void cmd_multifractal(const Io& io, const ScalingOptions& o, std::istream& in, std::ostream& out) {
    if (o.q.size() != 2) throw Error(ErrorKind::invalid_parameter, "multifractal needs exactly two --q values");
    const auto prices = load_prices(io, in);
    const auto traj = rolling_ghe(analysed_series(prices, o.raw_price), rolling_config(o));

    Table t{{"window_end_date", "q1", "q2", "width"}, {}};
    std::vector<std::string> x;
    std::vector<double> xs, widths;
    for (const auto& w : traj.windows) {
        const auto& width = w.widths[0];
        t.add_row({end_date_cell(w), o.q[0], o.q[1], width ? Cell{*width} : Cell{}});
        if (width) {
            x.push_back(end_date_text(w));
            xs.push_back(static_cast<double>(w.end_index));
            widths.push_back(*width);
        }
    }
    emit(io, out, table_text(t, io));
    if (!io.plot.empty()) {
        write_plot_data(io.plot + "_width.dat", "window_end_date", "width", x, widths);
        emit_svg(io, {{"H(" + format_number(o.q[0]) + ") - H(" + format_number(o.q[1]) + ")", xs, widths, false}},
                 {"Multifractality width", "window end index", "width", false, false});
    }
}

void add_ccdf_curves(const std::string& name, std::span<const double> values, const TailFit& fit,
                     const Io& io, std::vector<PlotCurve>& curves) {
    const auto c = ccdf(values);
    std::vector<std::string> x;
    for (double v : c.sorted_values) x.push_back(format_number(v));
    write_plot_data(io.plot + "_" + name + "_ccdf.dat", "value", "exceedance", x, c.exceedance_probs);

    const double frac = static_cast<double>(fit.n_tail) / static_cast<double>(values.size());
    std::vector<std::string> fx;
    std::vector<double> fxs, fy;
    for (double v : c.sorted_values) {
        if (v < fit.x_min) continue;
        fx.push_back(format_number(v));
        fxs.push_back(v);
        fy.push_back(frac * std::pow(v / fit.x_min, -fit.tail_index()));
    }
    write_plot_data(io.plot + "_" + name + "_fit.dat", "value", "exceedance", fx, fy);
    curves.push_back({name + " ccdf", c.sorted_values, c.exceedance_probs, true});
    curves.push_back({name + " fit", fxs, fy, false});
}

void cmd_tails(const Io& io, const TailOptions& o, std::uint64_t seed, std::istream& in, std::ostream& out) {
    const auto prices = load_prices(io, in);
    const auto returns = log_returns(prices);
    const auto side = tail_side(o.side);
    const auto strategy = tail_strategy(o);

    Table t{{"alpha", "x_min", "n_tail", "ks", "p_value", "tail_index", "excess_kurtosis", "n_returns", "period"}, {}};
    auto add = [&](const TailFit& fit, std::span<const double> signed_returns, const char* period) {
        t.add_row({fit.alpha, fit.x_min, static_cast<std::int64_t>(fit.n_tail), fit.ks_statistic,
                   fit.p_value ? Cell{*fit.p_value} : Cell{}, fit.tail_index(), excess_kurtosis(signed_returns),
                   static_cast<std::int64_t>(signed_returns.size()), std::string(period)});
    };
    auto with_pvalue = [&](TailFit fit, std::span<const double> sample) {
        if (o.replicates > 0) {
            fit.p_value = tail_pvalue(sample, fit, o.replicates, seed);
            fit.boot_replicates = o.replicates;
        }
        return fit;
    };

    std::vector<PlotCurve> curves;
    const auto full_sample = tail_sample(returns.values(), side);
    const bool has_from = !o.exclude_from.empty();
    if (has_from != !o.exclude_to.empty()) {
        throw Error(ErrorKind::invalid_parameter, "--exclude-from and --exclude-to must be given together");
    }
    if (!has_from) {
        const auto fit = with_pvalue(fit_tail(full_sample, strategy), full_sample);
        add(fit, returns.values(), "full");
        if (!io.plot.empty()) add_ccdf_curves("full", full_sample, fit, io, curves);
    } else {
        const DateRange range{require_date(o.exclude_from, "--exclude-from"), require_date(o.exclude_to, "--exclude-to")};
        const auto split = split_period_fit(returns, range, strategy, side);
        const auto kept_sample = tail_sample(split.kept_returns, side);
        const auto full = with_pvalue(split.full, full_sample);
        const auto excluded = with_pvalue(split.excluded, kept_sample);
        add(full, returns.values(), "full");
        add(excluded, split.kept_returns, "excluded");
        if (!io.plot.empty()) {
            add_ccdf_curves("full", full_sample, full, io, curves);
            add_ccdf_curves("excluded", kept_sample, excluded, io, curves);
        }
    }
    emit(io, out, table_text(t, io));
    emit_svg(io, curves, {"Complementary cumulative distribution", "|r|", "P(X >= x)", true, true});
}

void cmd_compare(const Io& io, const ScalingOptions& so, const TailOptions& to, std::istream& in,
                 std::ostream& out) {
    const auto prices = load_prices(io, in);
    auto cfg = rolling_config(so);
    cfg.q_list = {1.0};
    const auto traj = rolling_ghe(analysed_series(prices, so.raw_price), cfg);
    const auto returns = log_returns(prices);
    const auto side = tail_side(to.side);
    const auto strategy = tail_strategy(to);

    Table t{{"window_end_date", "h_q1", "sigma", "alpha", "tail_index", "h_theory"}, {}};
    std::vector<double> sx, sy;
    for (const auto& w : traj.windows) {
        // Returns between consecutive prices of the window.
        const std::span<const double> r(returns.values().data() + w.start, cfg.window - 1);
        std::optional<TailFit> fit;
        try {
            fit = fit_tail(tail_sample(r, side), strategy);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::degenerate_tail && e.kind() != ErrorKind::insufficient_data) throw;
        }
        const auto& est = w.estimates[0];
        t.add_row({end_date_cell(w), est ? Cell{est->h} : Cell{}, est ? Cell{est->sigma} : Cell{},
                   fit ? Cell{fit->alpha} : Cell{}, fit ? Cell{fit->tail_index()} : Cell{},
                   fit ? Cell{theoretical_hurst(fit->tail_index())} : Cell{}});
        if (est && fit) {
            sx.push_back(fit->tail_index());
            sy.push_back(est->h);
        }
    }
    emit(io, out, table_text(t, io));

    if (io.plot.empty()) return;
    std::vector<std::string> x;
    for (double v : sx) x.push_back(format_number(v));
    write_plot_data(io.plot + "_h_vs_alpha.dat", "tail_index", "h_q1", x, sy);
    std::vector<double> tx, ty;
    for (int i = 0; i <= 60; ++i) {
        const double a = 1.0 + 3.0 * i / 60.0;
        tx.push_back(a);
        ty.push_back(theoretical_hurst(a));
    }
    std::vector<std::string> txs;
    for (double v : tx) txs.push_back(format_number(v));
    write_plot_data(io.plot + "_theory.dat", "tail_index", "h_theory", txs, ty);
    emit_svg(io, {{"windows", sx, sy, true}, {"random-walk relation", tx, ty, false}},
             {"H(1) against tail exponent", "tail exponent of the complementary distribution", "H(1)", false, false});
}

GeneratorKind generator_kind(const std::string& s) {
    if (s == "gaussian") return GeneratorKind::gaussian_walk;
    if (s == "fbm") return GeneratorKind::fbm;
    if (s == "levy") return GeneratorKind::levy_walk;
    return GeneratorKind::regime_splice;
}

void cmd_generate(const Io& io, const GenerateOptions& o, std::uint64_t seed, std::ostream& out) {
    const auto method = o.fbm_method == "hosking" ? FbmMethod::hosking : FbmMethod::davies_harte;
    GeneratorSpec spec;
    if (o.kind == "splice") {
        const std::size_t at = o.splice_at == 0 ? o.n / 2 : o.splice_at;
        if (at >= o.n) throw Error(ErrorKind::invalid_parameter, "--splice-at must be below --n");
        GeneratorSpec first{generator_kind(o.first_kind), at, o.hurst, o.alpha, method, 0, {}, derive_seed(seed, 0)};
        GeneratorSpec second{generator_kind(o.second_kind), o.n - at, o.hurst2, o.alpha2, method, 0, {},
                             derive_seed(seed, 1)};
        spec = make_splice(std::move(first), std::move(second), seed);
    } else {
        spec = GeneratorSpec{generator_kind(o.kind), o.n, o.hurst, o.alpha, method, 0, {}, seed};
    }
    if (!(o.scale > 0.0) || !(o.base_price > 0.0)) {
        throw Error(ErrorKind::invalid_parameter, "--scale and --base-price must be positive");
    }
    const auto series = generate(spec);
    const Date start = require_date(o.start_date, "--start-date");

    std::vector<Date> dates(series.size());
    std::vector<double> closes(series.size());
    const std::chrono::sys_days day0{start};
    for (std::size_t i = 0; i < series.size(); ++i) {
        dates[i] = Date{day0 + std::chrono::days{static_cast<long>(i)}};
        closes[i] = o.base_price * std::exp(o.scale * series.values()[i]);
        if (!std::isfinite(closes[i]) || closes[i] <= 0.0) {
            throw Error(ErrorKind::numeric_failure,
                        "price at index " + std::to_string(i) + " leaves double range; lower --scale");
        }
    }
    const PriceSeries prices(std::move(dates), std::move(closes));

    std::ostringstream s;
    if (parse_format(io.format) == Format::csv) {
        write_price_csv(s, prices);
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < prices.size(); ++i) {
            arr.push_back({{"date", format_date(prices.timestamps()[i])}, {"close", prices.prices()[i]}});
        }
        s << arr.dump(2) << '\n';
    }
    emit(io, out, s.str());
}

void error_record(std::ostream& err, std::string_view kind, int code, const std::string& message) {
    nlohmann::ordered_json rec{{"error", kind}, {"code", code}, {"message", message}};
    err << rec.dump() << '\n';
}

void add_io(CLI::App* sub, Io& io, bool with_input = true) {
    if (with_input) {
        sub->add_option("input", io.input, "Price CSV with header date,close; '-' reads standard input")
            ->capture_default_str();
    }
    sub->add_option("-o,--output", io.output, "Output file; '-' writes standard output")->capture_default_str();
    sub->add_option("--format", io.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--plot", io.plot, "Write plot data files PREFIX_<curve>.dat");
    sub->add_flag("--svg", io.svg, "With --plot, also write PREFIX.svg");
}

void add_scaling(CLI::App* sub, ScalingOptions& o, bool rolling) {
    sub->add_option("--q", o.q,
                    rolling ? "Moment orders q (default: 1 1.5) [reference setting: H(1) trajectory, width H(1) - H(1.5)]"
                            : "Moment orders q (default: 1) [reference setting: q = 1]");
    sub->add_option("--tau-max-lo", o.tau_lo, "Smallest tau_max of the averaged fits [reference setting: 5]")
        ->capture_default_str();
    sub->add_option("--tau-max-hi", o.tau_hi, "Largest tau_max of the averaged fits [reference setting: 19]")
        ->capture_default_str();
    sub->add_flag("--weighted,!--unweighted", o.weighted,
                  "Exponentially weighted averages (--unweighted for plain averages) [reference setting: weighted]")
        ->capture_default_str();
    sub->add_option("--theta", o.theta, "Characteristic time of the weights in days [reference setting: 250, one trading year]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--raw-price", o.raw_price, "Analyse price levels instead of log-prices");
    if (rolling) {
        sub->add_option("--window", o.window, "Window length in days [reference setting: 750, three trading years]")
            ->capture_default_str();
        sub->add_option("--shift", o.shift, "Days between successive window ends [reference setting: 50]")
            ->capture_default_str();
        sub->add_option("--anchor", o.anchor, "Align the last window with the series end, or the first with its start")
            ->check(CLI::IsMember({"end", "start"}))
            ->capture_default_str();
    }
}

void add_tail(CLI::App* sub, TailOptions& o, bool pvalue) {
    auto* xmin = sub->add_option("--xmin", o.x_min, "Fixed lower cutoff of the power-law tail");
    auto* scan = sub->add_flag("--xmin-scan", "Choose the cutoff minimising the KS distance (default)");
    xmin->excludes(scan);
    xmin->each([&o](const std::string&) { o.scan = false; });
    sub->add_option("--min-tail", o.min_tail, "Minimum number of tail points")->capture_default_str();
    sub->add_option("--tail-side", o.side, "Tail sample: |r|, positive returns, or negated negative returns")
        ->check(CLI::IsMember({"abs", "upper", "lower"}))
        ->capture_default_str();
    if (pvalue) {
        sub->add_option("--pvalue-replicates", o.replicates, "Bootstrap replicates for the p-value (0 skips it)")
            ->capture_default_str();
        sub->add_option("--exclude-from", o.exclude_from, "First date (YYYY-MM-DD) of a period to exclude");
        sub->add_option("--exclude-to", o.exclude_to, "Last date (YYYY-MM-DD) of a period to exclude");
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"hurstlab: weighted generalized Hurst exponent and power-law tail analysis"};
    app.require_subcommand(1);

    Io io;
    ScalingOptions scaling;
    TailOptions tails;
    GenerateOptions gen;
    std::optional<std::uint64_t> seed_flag;
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed_flag, "Random seed (falls back to $HURSTLAB_SEED, then 0)");
    };

    auto* returns_cmd = app.add_subcommand("returns", "Daily log-returns of a price series");
    add_io(returns_cmd, io);

    auto* ghe_cmd = app.add_subcommand("ghe", "Generalized Hurst exponent of a whole series (or its last --window days)");
    add_io(ghe_cmd, io);
    add_scaling(ghe_cmd, scaling, false);
    auto* ghe_window = ghe_cmd->add_option("--window", scaling.window, "Analyse only the last WINDOW observations");

    auto* rolling_cmd = app.add_subcommand("rolling", "Generalized Hurst exponent over overlapping moving windows");
    add_io(rolling_cmd, io);
    add_scaling(rolling_cmd, scaling, true);

    auto* mf_cmd = app.add_subcommand("multifractal", "Rolling multifractality width H(q1) - H(q2)");
    add_io(mf_cmd, io);
    add_scaling(mf_cmd, scaling, true);

    auto* tails_cmd = app.add_subcommand("tails", "Power-law fit of the log-return tail with bootstrap p-value");
    add_io(tails_cmd, io);
    add_tail(tails_cmd, tails, true);
    add_seed(tails_cmd);

    auto* cmp_cmd = app.add_subcommand("compare-ha", "Per-window H(1) against the fitted tail exponent");
    add_io(cmp_cmd, io);
    add_scaling(cmp_cmd, scaling, true);
    add_tail(cmp_cmd, tails, false);

    auto* gen_cmd = app.add_subcommand("generate", "Synthetic price series with a known scaling exponent");
    add_io(gen_cmd, io, false);
    add_seed(gen_cmd);
    gen_cmd->add_option("--kind", gen.kind, "Process kind")
        ->check(CLI::IsMember({"gaussian", "fbm", "levy", "splice"}))
        ->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Number of prices")->capture_default_str();
    gen_cmd->add_option("--hurst", gen.hurst, "Hurst exponent of fbm (first segment of a splice)")->capture_default_str();
    gen_cmd->add_option("--alpha", gen.alpha, "Stable index of levy (first segment of a splice)")->capture_default_str();
    gen_cmd->add_option("--fbm-method", gen.fbm_method, "Exact fbm sampler")
        ->check(CLI::IsMember({"davies-harte", "hosking"}))
        ->capture_default_str();
    gen_cmd->add_option("--splice-at", gen.splice_at, "Length of the first splice segment (default n/2)");
    gen_cmd->add_option("--first-kind", gen.first_kind, "Kind of the first splice segment")
        ->check(CLI::IsMember({"gaussian", "fbm", "levy"}))
        ->capture_default_str();
    gen_cmd->add_option("--second-kind", gen.second_kind, "Kind of the second splice segment")
        ->check(CLI::IsMember({"gaussian", "fbm", "levy"}))
        ->capture_default_str();
    gen_cmd->add_option("--hurst2", gen.hurst2, "Hurst exponent of the second splice segment")->capture_default_str();
    gen_cmd->add_option("--alpha2", gen.alpha2, "Stable index of the second splice segment")->capture_default_str();
    gen_cmd->add_option("--scale", gen.scale, "Log-price units per generated unit")->capture_default_str();
    gen_cmd->add_option("--base-price", gen.base_price, "Price at the first date")->capture_default_str();
    gen_cmd->add_option("--start-date", gen.start_date, "First date; later prices fall on consecutive days")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_record(err, "parse_error", 2, e.what());
        return 2;
    }

    if (scaling.q.empty()) {
        scaling.q = (*rolling_cmd || *mf_cmd) ? std::vector<double>{1.0, 1.5} : std::vector<double>{1.0};
    }

    try {
        if (*returns_cmd) cmd_returns(io, in, out);
        if (*ghe_cmd) cmd_ghe(io, scaling, ghe_window->count() > 0, in, out);
        if (*rolling_cmd) cmd_rolling(io, scaling, in, out);
        if (*mf_cmd) cmd_multifractal(io, scaling, in, out);
        if (*tails_cmd) cmd_tails(io, tails, resolve_seed(seed_flag), in, out);
        if (*cmp_cmd) cmd_compare(io, scaling, tails, in, out);
        if (*gen_cmd) cmd_generate(io, gen, resolve_seed(seed_flag), out);
    } catch (const Error& e) {
        error_record(err, to_string(e.kind()), exit_code(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        error_record(err, "internal", 5, e.what());
        return 5;
    }
    return 0;
}

}  // namespace hurstlab::cli

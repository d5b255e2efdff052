#include "fracwave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracwave/verification.hpp"
#include "fracwave/wave_models.hpp"

namespace fracwave::cli {
namespace {

std::string fmt_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

bool write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    return out.good();
}

std::string plot_path_for(const std::string& csv_path) {
    if (csv_path.size() >= 4 && csv_path.compare(csv_path.size() - 4, 4, ".csv") == 0) {
        return csv_path.substr(0, csv_path.size() - 4) + ".svg";
    }
    return csv_path + ".svg";
}

// fixed palette cycled across orders; paired with the legend entries
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

std::string render_svg(const std::vector<double>& s, const std::vector<std::vector<double>>& cols,
                       const std::vector<double>& orders, const char* order_symbol,
                       double range_max) {
    constexpr double kW = 960.0, kH = 600.0;
    constexpr double kLeft = 70.0, kRight = 730.0, kTop = 40.0, kBottom = 540.0;

    double lo = cols[0][0], hi = cols[0][0];
    for (const auto& c : cols) {
        for (double v : c) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto px = [&](double x) { return kLeft + (x / range_max) * (kRight - kLeft); };
    auto py = [&](double y) { return kBottom - (y - lo) / (hi - lo) * (kBottom - kTop); };
    auto num = [](double v) {
        char b[32];
        std::snprintf(b, sizeof b, "%.2f", v);
        return std::string(b);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt_label(kW) + " " +
           fmt_label(kH) + "\">\n";
    svg += "<rect width=\"" + fmt_label(kW) + "\" height=\"" + fmt_label(kH) +
           "\" fill=\"white\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        double xv = range_max * i / 5.0;
        double yv = lo + (hi - lo) * i / 5.0;
        svg += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px(xv)) +
               "\" y2=\"" + num(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(kRight) +
               "\" y2=\"" + num(py(yv)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        char lbl[32];
        std::snprintf(lbl, sizeof lbl, "%.3g", xv);
        svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kBottom + 22.0) +
               "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" + lbl +
               "</text>\n";
        std::snprintf(lbl, sizeof lbl, "%.3g", yv);
        svg += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(py(yv) + 5.0) +
               "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"end\">" + lbl +
               "</text>\n";
    }
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + num((kLeft + kRight) / 2.0) + "\" y=\"" + num(kBottom + 45.0) +
           "\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\">s</text>\n";
    svg += "<text x=\"" + num(kLeft) + "\" y=\"" + num(kTop - 14.0) +
           "\" font-family=\"monospace\" font-size=\"15\">u(s)</text>\n";

    for (std::size_t c = 0; c < cols.size(); ++c) {
        const char* color = kPalette[c % (sizeof kPalette / sizeof kPalette[0])];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) svg += ' ';
            svg += num(px(s[i])) + "," + num(py(cols[c][i]));
        }
        svg += "\"/>\n";
        double ly = kTop + 18.0 + 22.0 * static_cast<double>(c);
        svg += "<line x1=\"" + num(kRight + 20.0) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(kRight + 56.0) + "\" y2=\"" + num(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(kRight + 64.0) + "\" y=\"" + num(ly + 5.0) +
               "\" font-family=\"monospace\" font-size=\"14\">";
        svg += order_symbol;
        svg += " = " + fmt_label(orders[c]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

int run_curves(const RunConfig& config) {
    std::vector<double> orders = config.orders;
    std::sort(orders.begin(), orders.end());

    bool time_mode = config.mode == RunMode::time;
    const char* column_prefix = time_mode ? "u_gamma_" : "u_delta_";
    const char* order_symbol = time_mode ? "gamma" : "delta";

    std::vector<double> s(config.samples);
    double ds = config.range_max / (config.samples - 1);
    for (int i = 0; i < config.samples; ++i) s[i] = i * ds;

    std::vector<std::vector<double>> cols;
    cols.reserve(orders.size());
    for (double o : orders) {
        waves::FractionalOrder order(o);
        std::vector<double> col(s.size());
        if (config.coupling == Coupling::coupled) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                col[i] = time_mode ? waves::time_solution_dimensionless(order, s[i])
                                   : waves::space_solution_dimensionless(order, s[i]);
            }
        } else if (time_mode) {
            waves::TimeFractionalWave w(order, config.omega0, *config.sigma);
            for (std::size_t i = 0; i < s.size(); ++i) {
                col[i] = waves::time_solution_u(w, s[i] / config.omega0);
            }
        } else {
            waves::SpaceFractionalWave w(order, config.k, *config.sigma_x);
            for (std::size_t i = 0; i < s.size(); ++i) {
                col[i] = waves::space_solution_u(w, s[i] / config.k);
            }
        }
        cols.push_back(std::move(col));
    }

    std::string csv = "s";
    for (double o : orders) csv += "," + std::string(column_prefix) + fmt_label(o);
    csv += '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        csv += fmt_cell(s[i]);
        for (const auto& col : cols) csv += "," + fmt_cell(col[i]);
        csv += '\n';
    }
    if (!write_text_file(config.output_path, csv)) {
        std::fprintf(stderr, "error: cannot write %s\n", config.output_path.c_str());
        return 1;
    }

    if (config.plot) {
        std::string svg = render_svg(s, cols, orders, order_symbol, config.range_max);
        std::string path = plot_path_for(config.output_path);
        if (!write_text_file(path, svg)) {
            std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
            return 1;
        }
    }
    return 0;
}

int run_verify(const RunConfig& config) {
    std::vector<double> order_values = config.orders;
    std::sort(order_values.begin(), order_values.end());
    std::vector<waves::FractionalOrder> orders;
    orders.reserve(order_values.size());
    for (double o : order_values) orders.emplace_back(o);

    auto reports = verification::convergence_study(orders, config.grids,
                                                   verification::Mode::time);

    constexpr double kRange = 5.0;  // convergence_study domain length
    std::string csv = "order,grid,dt,residual_inf,empirical_order\n";
    bool complete = true;
    for (const auto& rep : reports) {
        for (std::size_t i = 0; i < rep.residual_inf_norms.size(); ++i) {
            csv += fmt_label(rep.gamma_or_delta);
            csv += "," + std::to_string(rep.grid_sizes[i]);
            csv += "," + fmt_cell(kRange / rep.grid_sizes[i]);
            csv += "," + fmt_cell(rep.residual_inf_norms[i]);
            csv += "," + fmt_cell(rep.empirical_order);
            csv += '\n';
        }
        if (rep.residual_inf_norms.size() != config.grids.size()) complete = false;
    }
    if (!write_text_file(config.output_path, csv)) {
        std::fprintf(stderr, "error: cannot write %s\n", config.output_path.c_str());
        return 1;
    }
    if (!complete) {
        std::fprintf(stderr, "error: residual evaluation failed for at least one order\n");
        return 1;
    }
    return 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& argv) {
    RunConfig config;
    std::string mode_str = "time";
    bool flag_coupled = false, flag_free = false, flag_plot = false;

    CLI::App app{"fracwave: closed-form fractional plane-wave families and their\n"
                 "numerical residual verification"};
    app.add_option("--mode", mode_str,
                   "time | space | verify (default time); verify runs the time-equation\n"
                   "residual refinement study")
        ->check(CLI::IsMember({"time", "space", "verify"}));
    app.add_option("--orders", config.orders,
                   "comma-separated fractional orders, each in (0, 1]")
        ->delimiter(',');
    app.add_flag("--coupled", flag_coupled,
                 "tie sigma to the order (default): gamma = sigma^2 omega0^2");
    app.add_flag("--free", flag_free, "treat sigma as an independent input");
    auto* sigma_opt =
        app.add_option("--sigma", "fractional time parameter, free time mode only");
    auto* sigma_x_opt =
        app.add_option("--sigma-x", "fractional length parameter, free space mode only");
    app.add_option("--omega0", config.omega0, "fundamental frequency 1/T0 (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--k", config.k, "wavevector 1/lambda (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--range", config.range_max, "upper end of the s axis (default 10)")
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", config.samples, "points per curve (default 1001)");
    app.add_option("--out", config.output_path, "output CSV path (default fracwave_out.csv)");
    app.add_flag("--plot", flag_plot,
                 "also write an SVG overlay of all curves next to the CSV");
    app.add_option("--grids", config.grids,
                   "verify mode refinement grids, strictly increasing (default\n"
                   "256,512,1024,2048)")
        ->delimiter(',');

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw help_request{app.help()};
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    if (mode_str == "time") config.mode = RunMode::time;
    else if (mode_str == "space") config.mode = RunMode::space;
    else config.mode = RunMode::verify;

    if (flag_coupled && flag_free) throw usage_error("--coupled and --free are exclusive");
    config.coupling = flag_free ? Coupling::free_sigma : Coupling::coupled;
    config.plot = flag_plot;
    if (sigma_opt->count() > 0) config.sigma = sigma_opt->as<double>();
    if (sigma_x_opt->count() > 0) config.sigma_x = sigma_x_opt->as<double>();

    if (config.orders.empty()) throw usage_error("--orders: needs at least one order");
    for (double o : config.orders) {
        if (!(o > 0.0) || o > 1.0) {
            throw usage_error("--orders: each order must be in (0, 1], got " + fmt_label(o));
        }
    }
    if (config.samples < 2) throw usage_error("--samples: need at least 2");

    if (config.coupling == Coupling::coupled) {
        if (config.sigma) throw usage_error("--sigma requires --free");
        if (config.sigma_x) throw usage_error("--sigma-x requires --free");
    } else {
        if (config.mode == RunMode::verify) {
            throw usage_error("--free is not meaningful in verify mode");
        }
        if (config.mode == RunMode::time) {
            if (!config.sigma) throw usage_error("--free time mode requires --sigma");
            if (!(*config.sigma > 0.0) || *config.sigma > 1.0 / config.omega0 * (1.0 + 1e-12)) {
                throw usage_error("--sigma must lie in (0, 1/omega0]");
            }
        } else {
            if (!config.sigma_x) throw usage_error("--free space mode requires --sigma-x");
            if (!(*config.sigma_x > 0.0) || *config.sigma_x > 1.0 / config.k * (1.0 + 1e-12)) {
                throw usage_error("--sigma-x must lie in (0, 1/k]");
            }
        }
    }

    if (config.mode == RunMode::verify) {
        if (config.grids.size() < 3) throw usage_error("--grids: need at least 3 sizes");
        for (std::size_t i = 0; i < config.grids.size(); ++i) {
            if (config.grids[i] < 64) throw usage_error("--grids: each size must be >= 64");
            if (i > 0 && config.grids[i] <= config.grids[i - 1]) {
                throw usage_error("--grids: sizes must be strictly increasing");
            }
        }
    }
    return config;
}

int run(const RunConfig& config) {
    try {
        return config.mode == RunMode::verify ? run_verify(config) : run_curves(config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace fracwave::cli

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracwave::cli {

// invalid command line; the caller should print the message and exit 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// thrown by parse_config on --help; carries the full usage text
struct help_request {
    std::string text;
};

enum class RunMode { time, space, verify };
enum class Coupling { coupled, free_sigma };

// One CLI invocation. Defaults reproduce the dimensionless solution-family
// figure: coupled mode, orders {0.25, 0.5, 0.75, 1.0}, s in [0, 10].
struct RunConfig {
    RunMode mode = RunMode::time;
    std::vector<double> orders = {0.25, 0.5, 0.75, 1.0};
    Coupling coupling = Coupling::coupled;
    double omega0 = 1.0;
    double k = 1.0;
    std::optional<double> sigma;    // required in free time mode
    std::optional<double> sigma_x;  // required in free space mode
    double range_max = 10.0;
    int samples = 1001;
    std::string output_path = "fracwave_out.csv";
    bool plot = false;
    std::vector<int> grids = {256, 512, 1024, 2048};  // verify mode refinement
};

// Parses argv (program name excluded). Throws usage_error on any invalid
// flag or value and help_request when --help is present.
RunConfig parse_config(const std::vector<std::string>& argv);

// Executes the run: curve CSV (plus optional SVG plot) in time/space mode,
// residual-report CSV in verify mode. Returns 0 on success, 1 on runtime
// failure (file I/O, evaluator accuracy), printing a diagnostic to stderr.
// Output is byte-deterministic for a given config.
int run(const RunConfig& config);

}  // namespace fracwave::cli

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "fracwave/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        fracwave::cli::RunConfig config = fracwave::cli::parse_config(args);
        return fracwave::cli::run(config);
    } catch (const fracwave::cli::help_request& help) {
        std::fputs(help.text.c_str(), stdout);
        return 0;
    } catch (const fracwave::cli::usage_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

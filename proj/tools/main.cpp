#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    pbwt::cli::job_config cfg;

    CLI::App app{
        "Online construction of the parameterized Burrows-Wheeler transform.\n"
        "Reads the whole input, appends the sentinel, and consumes it right to left."};
    app.add_option("input", cfg.input_path, "input text file (default: standard input)");
    app.add_option("--sigma", cfg.sigma_spec,
                   "static symbols besides the sentinel, one UTF-8 string (sorted by code point)");
    app.add_option("--pi", cfg.pi_spec,
                   "parameter symbols, one UTF-8 string (sorted by code point)");
    app.add_option("--sentinel", cfg.sentinel, "sentinel symbol")->capture_default_str();
    app.add_option("--mode", cfg.mode, "build | verify | dump | bench")
        ->check(CLI::IsMember({"build", "verify", "dump", "bench"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "build output format: tokens | json")
        ->check(CLI::IsMember({"tokens", "json"}))
        ->capture_default_str();
    app.add_option("--max-verify-len", cfg.max_verify_len,
                   "length cap for the quadratic verify and dump modes")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "bench text seed")->capture_default_str();
    app.add_option("--min-n", cfg.bench_min_n, "bench smallest text length")
        ->capture_default_str();
    app.add_option("--max-n", cfg.bench_max_n, "bench largest text length (doubling schedule)")
        ->capture_default_str();
    app.add_option("-o,--output", cfg.output_path, "output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    return pbwt::cli::run(cfg, std::cout, std::cerr);
}

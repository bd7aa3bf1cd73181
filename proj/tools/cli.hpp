#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <pbwt/pbwt.hpp>

namespace pbwt::cli {

struct job_config {
    std::string input_path;  // empty: standard input
    std::string output_path; // empty: standard output
    std::string sigma_spec;  // static symbols besides the sentinel
    std::string pi_spec;     // parameter symbols
    std::string sentinel = "$";
    std::string mode = "build"; // build | verify | dump | bench
    std::string format = "tokens";
    std::size_t max_verify_len = 5000; // verify and dump are quadratic; refuse longer inputs
    std::uint64_t seed = 42;
    std::size_t bench_min_n = std::size_t{1} << 10;
    std::size_t bench_max_n = std::size_t{1} << 20;
};

//! Split a UTF-8 string into its scalar substrings. Throws
//! std::invalid_argument on malformed input.
std::vector<std::string> utf8_scalars(const std::string& s);

//! Mapping between textual symbols and dense codes. Symbol order within each
//! alphabet is by code point, independent of flag order.
struct symbol_table {
    alphabet ab{1, 0};
    std::vector<std::string> names; // code -> scalar; sentinel, statics, parameters
    std::map<std::string, symbol_t> codes;

    static symbol_table make(const std::string& sentinel, const std::string& sigma_spec,
                             const std::string& pi_spec);

    //! Output token for one transform entry: statics print as themselves,
    //! parameter counts as decimal integers.
    std::string token_of(symbol_t enc) const;
};

//! Text to codes; rejects symbols outside the alphabets and any occurrence
//! of the sentinel, reporting the 1-based position.
pstring encode_text(const symbol_table& st, const std::string& text);

struct mismatch {
    std::string array; // "n", "L", "F", or "LCPinf"
    std::size_t index; // 1-based
};

//! First position where a builder snapshot disagrees with reference tables.
std::optional<mismatch> first_mismatch(const oracle::tables& want,
                                       const builder::snapshot_t& got);

//! Execute one job; returns the process exit code (0 ok, 1 verification
//! mismatch, 2 input/alphabet error).
int run(const job_config& cfg, std::ostream& out, std::ostream& err);

} // namespace pbwt::cli

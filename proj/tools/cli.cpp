#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pbwt::cli {

namespace {

struct cli_error {
    int code;
    std::string msg;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_trailing_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i != 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::vector<std::string> transform_tokens(const symbol_table& st, const enc_string& enc) {
    std::vector<std::string> tokens;
    tokens.reserve(enc.size());
    for (symbol_t e : enc) tokens.push_back(st.token_of(e));
    return tokens;
}

int run_build(const symbol_table& st, const pstring& body, const std::string& format,
              std::ostream& out) {
    builder b(st.ab);
    for (auto it = body.rbegin(); it != body.rend(); ++it) b.prepend(*it);
    const auto tokens = transform_tokens(st, b.pbwt());
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = b.size();
        j["L"] = tokens;
        out << j.dump(2) << '\n';
    } else {
        out << join_tokens(tokens) << '\n';
    }
    return 0;
}

int run_verify(const symbol_table& st, const pstring& body, std::size_t cap,
               std::ostream& out) {
    if (body.size() + 1 > cap) {
        throw cli_error{2, "input length " + std::to_string(body.size()) +
                               " exceeds the verify cap of " + std::to_string(cap)};
    }
    builder b(st.ab);
    pstring suffix{alphabet::sentinel};
    for (std::size_t step = 0; step <= body.size(); ++step) {
        if (step != 0) {
            const symbol_t c = body[body.size() - step];
            b.prepend(c);
            suffix.insert(suffix.begin(), c);
        }
        const auto tb = oracle::build_tables(suffix, st.ab);
        if (const auto mm = first_mismatch(tb, b.snapshot())) {
            out << "mismatch after prepend " << step << ": array " << mm->array
                << ", first differing index " << mm->index << '\n';
            return 1;
        }
    }
    out << "verified " << (body.size() + 1) << " prefixes\n";
    return 0;
}

int run_dump(const symbol_table& st, const pstring& text, std::size_t cap, std::ostream& out) {
    if (text.size() > cap) {
        throw cli_error{2, "input length " + std::to_string(text.size() - 1) +
                               " exceeds the verify cap of " + std::to_string(cap)};
    }
    const auto tb = oracle::build_tables(text, st.ab);
    nlohmann::ordered_json j;
    j["n"] = tb.n;
    j["sigma"] = std::vector<std::string>(st.names.begin(), st.names.begin() + st.ab.sigma());
    j["pi"] = std::vector<std::string>(st.names.begin() + st.ab.sigma(), st.names.end());
    auto records = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= tb.n; ++i) {
        const pstring rot = rotate(text, tb.ra[i - 1]);
        std::vector<std::string> prev_tokens;
        for (pv_symbol pv : prev_encode(rot, st.ab)) {
            if (pv.is_static()) {
                prev_tokens.push_back(st.names[pv.static_code()]);
            } else if (pv.is_infinity()) {
                prev_tokens.push_back("inf");
            } else {
                prev_tokens.push_back(std::to_string(pv.distance()));
            }
        }
        nlohmann::ordered_json rec;
        rec["i"] = i;
        rec["RA"] = tb.ra[i - 1];
        rec["LCPinf"] = tb.lcp[i - 1];
        rec["prev_encoding"] = join_tokens(prev_tokens);
        rec["F"] = st.token_of(tb.f[i - 1]);
        rec["encoding"] = join_tokens(transform_tokens(st, rot_encode(rot, st.ab)));
        rec["L"] = st.token_of(tb.l[i - 1]);
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    out << j.dump(2) << '\n';
    return 0;
}

int run_bench(const symbol_table& st, const job_config& cfg, std::ostream& out) {
    if (st.ab.size() < 2) {
        throw cli_error{2, "bench requires at least one non-sentinel symbol"};
    }
    if (cfg.bench_min_n == 0 || cfg.bench_min_n > cfg.bench_max_n) {
        throw cli_error{2, "bench length schedule is empty"};
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<symbol_t> dist(1, st.ab.size() - 1);
    out << "n\tpi_size\ttotal_seconds\tns_per_char\n";
    for (std::size_t n = cfg.bench_min_n; n <= cfg.bench_max_n; n *= 2) {
        pstring body(n);
        for (symbol_t& c : body) c = dist(rng);
        builder b(st.ab);
        const auto t0 = std::chrono::steady_clock::now();
        for (auto it = body.rbegin(); it != body.rend(); ++it) b.prepend(*it);
        const auto t1 = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(t1 - t0).count();
        out << n << '\t' << st.ab.pi() << '\t' << secs << '\t'
            << secs * 1e9 / static_cast<double>(n) << '\n';
        out.flush();
    }
    return 0;
}

} // namespace

std::vector<std::string> utf8_scalars(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        if (b < 0x80) {
            len = 1;
        } else if ((b & 0xE0) == 0xC0) {
            len = 2;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
        }
        if (len == 0 || i + len > s.size()) {
            throw std::invalid_argument("malformed UTF-8 input");
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
                throw std::invalid_argument("malformed UTF-8 input");
            }
        }
        out.push_back(s.substr(i, len));
        i += len;
    }
    return out;
}

symbol_table symbol_table::make(const std::string& sentinel, const std::string& sigma_spec,
                                const std::string& pi_spec) {
    const auto sent = utf8_scalars(sentinel);
    if (sent.size() != 1) {
        throw std::invalid_argument("sentinel must be a single symbol");
    }
    auto statics = utf8_scalars(sigma_spec);
    auto params = utf8_scalars(pi_spec);
    std::sort(statics.begin(), statics.end());
    std::sort(params.begin(), params.end());

    symbol_table st;
    st.names.push_back(sent[0]);
    st.names.insert(st.names.end(), statics.begin(), statics.end());
    st.names.insert(st.names.end(), params.begin(), params.end());
    for (std::size_t code = 0; code < st.names.size(); ++code) {
        if (!st.codes.emplace(st.names[code], static_cast<symbol_t>(code)).second) {
            throw std::invalid_argument("alphabets must be disjoint; symbol \"" +
                                        st.names[code] + "\" is declared twice");
        }
    }
    st.ab = alphabet(static_cast<std::uint32_t>(1 + statics.size()),
                     static_cast<std::uint32_t>(params.size()));
    return st;
}

std::string symbol_table::token_of(symbol_t enc) const {
    if (ab.enc_is_static(enc)) return names[enc];
    return std::to_string(ab.count_of_enc(enc));
}

pstring encode_text(const symbol_table& st, const std::string& text) {
    const auto scalars = utf8_scalars(text);
    pstring out;
    out.reserve(scalars.size());
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        const auto it = st.codes.find(scalars[i]);
        if (it == st.codes.end()) {
            throw std::invalid_argument("symbol \"" + scalars[i] + "\" at position " +
                                        std::to_string(i + 1) +
                                        " is outside the declared alphabets");
        }
        if (it->second == alphabet::sentinel) {
            throw std::invalid_argument("sentinel at position " + std::to_string(i + 1) +
                                        "; the sentinel may not occur in the text");
        }
        out.push_back(it->second);
    }
    return out;
}

std::optional<mismatch> first_mismatch(const oracle::tables& want,
                                       const builder::snapshot_t& got) {
    if (want.n != got.n) return mismatch{"n", 1};
    for (std::size_t i = 0; i < want.n; ++i) {
        if (got.l[i] != want.l[i]) return mismatch{"L", i + 1};
    }
    for (std::size_t i = 0; i < want.n; ++i) {
        if (got.f[i] != want.f[i]) return mismatch{"F", i + 1};
    }
    for (std::size_t i = 0; i < want.n; ++i) {
        if (got.lcp[i] != want.lcp[i]) return mismatch{"LCPinf", i + 1};
    }
    return std::nullopt;
}

int run(const job_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        const symbol_table st = symbol_table::make(cfg.sentinel, cfg.sigma_spec, cfg.pi_spec);

        std::ofstream ofs;
        std::ostream* sink = &out;
        if (!cfg.output_path.empty()) {
            ofs.open(cfg.output_path, std::ios::binary);
            if (!ofs) throw cli_error{2, "cannot open output file: " + cfg.output_path};
            sink = &ofs;
        }

        if (cfg.mode == "bench") return run_bench(st, cfg, *sink);

        std::string raw;
        if (cfg.input_path.empty()) {
            raw = read_all(std::cin);
        } else {
            std::ifstream f(cfg.input_path, std::ios::binary);
            if (!f) throw cli_error{2, "cannot open input file: " + cfg.input_path};
            raw = read_all(f);
        }
        const pstring body = encode_text(st, strip_trailing_newline(std::move(raw)));

        if (cfg.mode == "build") return run_build(st, body, cfg.format, *sink);
        if (cfg.mode == "verify") return run_verify(st, body, cfg.max_verify_len, *sink);
        if (cfg.mode == "dump") {
            pstring text = body;
            text.push_back(alphabet::sentinel);
            return run_dump(st, text, cfg.max_verify_len, *sink);
        }
        throw cli_error{2, "unknown mode: " + cfg.mode};
    } catch (const cli_error& e) {
        err << "error: " << e.msg << '\n';
        return e.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace pbwt::cli

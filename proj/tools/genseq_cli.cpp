// Command-line front end. Talks to the library exclusively through the C
// API in genseq.h; output formatting happens here.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "genseq.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;  // verification failures found
constexpr int kExitUsage = 2;     // bad arguments or violated hypothesis

struct ParamsHandle {
    genseq_params* ptr = nullptr;
    ~ParamsHandle() { genseq_params_destroy(ptr); }
};

struct CString {
    char* ptr = nullptr;
    ~CString() { genseq_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

int complain(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int complain_status() { return complain(genseq_last_error()); }

// "7" or "-1..4" (inclusive).
bool parse_range(const std::string& text, int64_t& lo, int64_t& hi) {
    auto parse_int = [](const std::string& tok, int64_t& out) {
        try {
            std::size_t used = 0;
            out = std::stoll(tok, &used);
            return used == tok.size() && !tok.empty();
        } catch (const std::exception&) {
            return false;
        }
    };
    std::size_t sep = text.find("..");
    if (sep == std::string::npos) {
        if (!parse_int(text, lo)) return false;
        hi = lo;
        return true;
    }
    return parse_int(text.substr(0, sep), lo) && parse_int(text.substr(sep + 2), hi) && lo <= hi;
}

int run_eval(const ParamsHandle& params, const std::string& n_text, const std::string& kind,
             const std::string& backend, const std::string& format) {
    int64_t lo = 0, hi = 0;
    if (!parse_range(n_text, lo, hi)) return complain("bad index or range: " + n_text);
    CString out;
    if (genseq_eval(params.ptr, kind.c_str(), backend.c_str(), lo, hi, &out.ptr) != GENSEQ_OK) {
        return complain_status();
    }
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    json doc = json::parse(out.str());
    if (format == "csv") std::cout << "n,value\n";
    for (const auto& entry : doc["values"]) {
        if (format == "csv") {
            std::cout << entry["n"].get<int64_t>() << "," << entry["value"].get<std::string>()
                      << "\n";
        } else {
            std::cout << entry["value"].get<std::string>() << "\n";
        }
    }
    return kExitOk;
}

int run_tilings(const ParamsHandle& params, int64_t n, const std::string& type, bool count_only,
                int64_t limit) {
    CString out;
    if (count_only) {
        if (genseq_count_tilings(params.ptr, type.c_str(), n, &out.ptr) != GENSEQ_OK) {
            return complain_status();
        }
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    if (genseq_render_tilings(params.ptr, type.c_str(), n, limit, &out.ptr) != GENSEQ_OK) {
        return complain_status();
    }
    std::cout << out.str();
    return kExitOk;
}

int run_verify(const std::string& identity, int64_t imax, int64_t kmax, int64_t rmax,
               int64_t smax, int64_t nmax, const std::string& format) {
    CString out;
    int64_t failures = 0;
    if (genseq_verify(identity.c_str(), imax, kmax, rmax, smax, nmax, &failures, &out.ptr) !=
        GENSEQ_OK) {
        return complain_status();
    }
    json doc = json::parse(out.str());
    if (format == "json") {
        std::cout << out.str() << "\n";
    } else {
        json list = doc.contains("identities") ? doc["identities"] : json::array({doc});
        if (format == "csv") std::cout << "identity,checked,passed,failed\n";
        for (const auto& rep : list) {
            if (format == "csv") {
                std::cout << rep["identity"].get<std::string>() << "," << rep["checked"] << ","
                          << rep["passed"] << "," << rep["failed"] << "\n";
            } else {
                std::cout << rep["identity"].get<std::string>() << ": checked=" << rep["checked"]
                          << " passed=" << rep["passed"] << " failed=" << rep["failed"] << "\n";
                for (const auto& ce : rep["counterexamples"]) {
                    std::cout << "  counterexample: " << ce.dump() << "\n";
                }
            }
        }
        if (format == "plain" && doc.contains("identities")) {
            std::cout << "total: checked=" << doc["checked"] << " passed=" << doc["passed"]
                      << " failed=" << doc["failed"] << "\n";
        }
    }
    return failures == 0 ? kExitOk : kExitFailures;
}

int run_genfun(const ParamsHandle& params, int64_t coeffs, const std::string& format) {
    CString out;
    if (coeffs > 0) {
        if (genseq_genfun_coeffs(params.ptr, coeffs, &out.ptr) != GENSEQ_OK) {
            return complain_status();
        }
        if (format == "json") {
            std::cout << out.str() << "\n";
            return kExitOk;
        }
        json doc = json::parse(out.str());
        std::string sep;
        for (const auto& c : doc["coefficients"]) {
            std::cout << sep << c.get<std::string>();
            sep = " ";
        }
        std::cout << "\n";
        return kExitOk;
    }
    if (genseq_genfun(params.ptr, &out.ptr) != GENSEQ_OK) return complain_status();
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    json doc = json::parse(out.str());
    auto print_poly = [](const char* label, const json& coeffs) {
        std::cout << label << ":";
        for (const auto& c : coeffs) std::cout << " " << c.get<std::string>();
        std::cout << "\n";
    };
    print_poly("numerator", doc["numerator"]);
    print_poly("denominator", doc["denominator"]);
    return kExitOk;
}

int print_matrix(const std::string& text, const std::string& format) {
    if (format == "json") {
        std::cout << text << "\n";
        return kExitOk;
    }
    json doc = json::parse(text);
    for (const auto& row : doc["entries"]) {
        std::string sep;
        for (const auto& value : row) {
            std::cout << sep << value.get<std::string>();
            sep = " ";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_oeis(const std::string& name, const std::string& bfile_path, const std::string& range,
             const std::string& format) {
    std::ifstream in(bfile_path, std::ios::binary);
    if (!in) return complain("cannot open b-file: " + bfile_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    int64_t lo = 1, hi = 0;  // lo > hi means "use the reference coverage"
    if (!range.empty() && !parse_range(range, lo, hi)) {
        return complain("bad range: " + range);
    }
    CString out;
    int64_t failures = 0;
    if (genseq_compare_bfile(name.c_str(), text.c_str(), lo, hi, &failures, &out.ptr) !=
        GENSEQ_OK) {
        return complain_status();
    }
    if (format == "json") {
        std::cout << out.str() << "\n";
    } else {
        json doc = json::parse(out.str());
        std::cout << doc["sequence"].get<std::string>() << " range "
                  << doc["range"]["lo"].get<int64_t>() << ".." << doc["range"]["hi"].get<int64_t>()
                  << ": checked=" << doc["checked"] << " failed=" << doc["failed"] << "\n";
        for (const auto& mm : doc["mismatches"]) {
            std::cout << "  mismatch at " << mm["index"] << ": expected "
                      << mm["expected"].get<std::string>() << ", got "
                      << mm["actual"].get<std::string>() << "\n";
        }
    }
    return failures == 0 ? kExitOk : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-parameter generalized Fibonacci/Lucas sequence tool"};
    app.require_subcommand(1);
    app.footer("GENSEQ_THREADS caps the verifier's worker threads.");

    long i = 1, k = 1, r = 1, s = 1;
    auto add_params = [&](CLI::App* cmd, bool need_ik) {
        auto* oi = cmd->add_option("-i", i, "short step length");
        auto* ok = cmd->add_option("-k", k, "long step length");
        cmd->add_option("-r", r, "colors of the short step")->default_val(1);
        cmd->add_option("-s", s, "colors of the long step")->default_val(1);
        if (need_ik) {
            oi->required();
            ok->required();
        }
    };
    auto make_params = [&](ParamsHandle& handle) {
        return genseq_params_create(i, k, r, s, &handle.ptr) == GENSEQ_OK;
    };

    std::string format = "plain";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "plain, csv, or json")
            ->check(CLI::IsMember({"plain", "csv", "json"}))
            ->default_val("plain");
    };

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate F or L through a chosen backend");
    std::string n_text, kind = "f", backend = "recurrence";
    add_params(eval_cmd, true);
    eval_cmd->add_option("-n", n_text, "index or inclusive range a..b")->required();
    eval_cmd->add_option("--kind", kind, "f or l")->check(CLI::IsMember({"f", "l"}));
    eval_cmd
        ->add_option("--backend", backend,
                     "recurrence, closed, genfun, matrix, or tilings")
        ->check(CLI::IsMember({"recurrence", "closed", "genfun", "matrix", "tilings"}));
    add_format(eval_cmd);

    // tilings
    auto* tilings_cmd = app.add_subcommand("tilings", "enumerate or count board tilings");
    int64_t board_n = 0, limit = 1000;
    std::string type = "f";
    bool count_only = false, render = false;
    add_params(tilings_cmd, true);
    tilings_cmd->add_option("-n", board_n, "board index (board length is n+1)")->required();
    tilings_cmd->add_option("--type", type, "f or l")->check(CLI::IsMember({"f", "l"}));
    auto* count_flag = tilings_cmd->add_flag("--count-only", count_only, "print only the count");
    tilings_cmd->add_flag("--render", render, "render tilings (the default)")
        ->excludes(count_flag);
    tilings_cmd->add_option("--limit", limit, "maximum number of tilings to render")
        ->default_val(1000);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check identities over a parameter grid");
    std::string identity = "all";
    int64_t imax = 4, kmax = 4, rmax = 3, smax = 3, nmax = 24;
    verify_cmd->add_option("--identity", identity, "registry id or 'all'")->default_val("all");
    verify_cmd->add_option("--imax", imax)->default_val(4);
    verify_cmd->add_option("--kmax", kmax)->default_val(4);
    verify_cmd->add_option("--rmax", rmax)->default_val(3);
    verify_cmd->add_option("--smax", smax)->default_val(3);
    verify_cmd->add_option("--nmax", nmax)->default_val(24);
    add_format(verify_cmd);

    // genfun
    auto* genfun_cmd = app.add_subcommand("genfun", "generating function and its coefficients");
    int64_t coeffs = 0;
    add_params(genfun_cmd, true);
    genfun_cmd->add_option("--coeffs", coeffs, "print the first N series coefficients");
    add_format(genfun_cmd);

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "generator matrices and determinants");
    int64_t power_n = 0, cassini_n = 0;
    bool want_det = false, want_det_a = false;
    add_params(matrix_cmd, true);
    auto* power_opt = matrix_cmd->add_option("--power", power_n, "print A * Q^(n+1)");
    matrix_cmd->add_flag("--det", want_det, "determinant of the step matrix Q");
    matrix_cmd->add_flag("--det-a", want_det_a, "determinant of the initial-value matrix A");
    auto* cassini_opt =
        matrix_cmd->add_option("--cassini", cassini_n, "closed-form det(A Q^(n+1)), i = 1");
    add_format(matrix_cmd);

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "compare a named sequence against a b-file");
    std::string seq_name, bfile_path, range_text;
    oeis_cmd->add_option("name", seq_name, "sequence name or OEIS id")->required();
    oeis_cmd->add_option("--bfile", bfile_path, "path to reference b-file")->required();
    oeis_cmd->add_option("--range", range_text, "inclusive index range a..b");
    add_format(oeis_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (eval_cmd->parsed()) {
        ParamsHandle params;
        if (!make_params(params)) return complain_status();
        return run_eval(params, n_text, kind, backend, format);
    }
    if (tilings_cmd->parsed()) {
        ParamsHandle params;
        if (!make_params(params)) return complain_status();
        (void)render;  // rendering is the default when --count-only is absent
        return run_tilings(params, board_n, type, count_only, limit);
    }
    if (verify_cmd->parsed()) {
        return run_verify(identity, imax, kmax, rmax, smax, nmax, format);
    }
    if (genfun_cmd->parsed()) {
        ParamsHandle params;
        if (!make_params(params)) return complain_status();
        return run_genfun(params, coeffs, format);
    }
    if (matrix_cmd->parsed()) {
        ParamsHandle params;
        if (!make_params(params)) return complain_status();
        int actions = (power_opt->count() > 0) + want_det + want_det_a + (cassini_opt->count() > 0);
        if (actions != 1) {
            return complain("choose exactly one of --power, --det, --det-a, --cassini");
        }
        CString out;
        if (power_opt->count() > 0) {
            if (genseq_matrix_power(params.ptr, power_n, &out.ptr) != GENSEQ_OK) {
                return complain_status();
            }
            return print_matrix(out.str(), format);
        }
        genseq_status status;
        if (want_det) {
            status = genseq_matrix_det_q(params.ptr, &out.ptr);
        } else if (want_det_a) {
            status = genseq_matrix_det_a(params.ptr, &out.ptr);
        } else {
            status = genseq_cassini(params.ptr, cassini_n, &out.ptr);
        }
        if (status != GENSEQ_OK) return complain_status();
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    if (oeis_cmd->parsed()) {
        return run_oeis(seq_name, bfile_path, range_text, format);
    }
    return kExitUsage;
}

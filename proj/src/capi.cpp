#include "genseq.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genseq/closed_form.hpp"
#include "genseq/core.hpp"
#include "genseq/genfun.hpp"
#include "genseq/identities.hpp"
#include "genseq/matrixgen.hpp"
#include "genseq/specializations.hpp"
#include "genseq/tilings.hpp"

using json = nlohmann::json;

struct genseq_params {
    genseq::Params p;
};

namespace {

thread_local std::string g_last_error;

genseq_status fail(genseq_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

genseq_status emit(char** out, const std::string& text) {
    if (out == nullptr) return fail(GENSEQ_ERROR_ARGUMENT, "null output pointer");
    *out = dup_string(text);
    return *out == nullptr ? fail(GENSEQ_ERROR_INTERNAL, "allocation failed") : GENSEQ_OK;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
genseq_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(GENSEQ_ERROR_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(GENSEQ_ERROR_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(GENSEQ_ERROR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(GENSEQ_ERROR_INTERNAL, e.what());
    }
}

json params_json(const genseq::Params& p) {
    return json{{"i", p.i}, {"k", p.k}, {"r", p.r}, {"s", p.s}};
}

// One pass over [lo, hi] for a (kind, backend) pair. The genfun backend
// extracts all coefficients once; the others evaluate per index.
std::vector<std::pair<long, genseq::Int>> eval_values(const genseq::Params& p,
                                                      const std::string& kind,
                                                      const std::string& backend, long lo,
                                                      long hi) {
    using namespace genseq;
    if (lo > hi) throw std::invalid_argument("bad range: lo > hi");
    if (kind != "f" && kind != "l") throw std::invalid_argument("kind must be 'f' or 'l'");

    std::vector<std::pair<long, Int>> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    if (kind == "l") {
        if (backend == "recurrence") {
            for (long n = lo; n <= hi; ++n) out.emplace_back(n, eval_l(p, n));
        } else if (backend == "tilings") {
            for (long n = lo; n <= hi; ++n) out.emplace_back(n, count_l_tilings(p, n));
        } else {
            throw std::domain_error("backend '" + backend + "' does not support kind 'l'");
        }
        return out;
    }
    if (backend == "recurrence") {
        std::vector<Int> values = eval_f_range(p, lo, hi);
        for (long n = lo; n <= hi; ++n) {
            out.emplace_back(n, std::move(values[static_cast<std::size_t>(n - lo)]));
        }
    } else if (backend == "closed") {
        for (long n = lo; n <= hi; ++n) out.emplace_back(n, closed_f(p, n));
    } else if (backend == "genfun") {
        if (lo < kMinIndex) throw std::domain_error("sequence index must be >= -1");
        std::vector<Int> coeffs = series_coeffs(rational_genfun(p), hi + 2);
        for (long n = lo; n <= hi; ++n) {
            out.emplace_back(n, std::move(coeffs[static_cast<std::size_t>(n + 1)]));
        }
    } else if (backend == "matrix") {
        for (long n = lo; n <= hi; ++n) {
            IntMatrix m = f_matrix(p, n);
            out.emplace_back(n, m.at(p.k - 1, p.k - 1));
        }
    } else if (backend == "tilings") {
        for (long n = lo; n <= hi; ++n) out.emplace_back(n, count_f_tilings(p, n));
    } else {
        throw std::invalid_argument("unknown backend: " + backend);
    }
    return out;
}

json matrix_json(const genseq::IntMatrix& m) {
    json rows = json::array();
    for (long row = 0; row < m.dim(); ++row) {
        json cols = json::array();
        for (long col = 0; col < m.dim(); ++col) cols.push_back(m.at(row, col).get_str());
        rows.push_back(std::move(cols));
    }
    return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

json report_json(const genseq::IdentityReport& rep) {
    json counterexamples = json::array();
    for (const auto& ce : rep.counterexamples) {
        json aux = json::object();
        for (const auto& [name, value] : ce.binding.aux) aux[name] = value;
        counterexamples.push_back(json{{"params", params_json(ce.binding.p)},
                                       {"n", ce.binding.n},
                                       {"aux", std::move(aux)},
                                       {"lhs", ce.lhs.get_str()},
                                       {"rhs", ce.rhs.get_str()}});
    }
    return json{{"identity", rep.id},
                {"checked", rep.checked},
                {"passed", rep.passed},
                {"failed", rep.failed},
                {"counterexamples", std::move(counterexamples)}};
}

const genseq::Params& params_of(const genseq_params* handle) {
    if (handle == nullptr) throw std::invalid_argument("null params handle");
    return handle->p;
}

}  // namespace

extern "C" {

const char* genseq_version(void) { return "1.0.0"; }

const char* genseq_last_error(void) { return g_last_error.c_str(); }

void genseq_string_free(char* str) { std::free(str); }

genseq_status genseq_params_create(int64_t i, int64_t k, int64_t r, int64_t s,
                                   genseq_params** out) {
    return guarded([&] {
        if (out == nullptr) return fail(GENSEQ_ERROR_ARGUMENT, "null output pointer");
        genseq::Params p = genseq::validate_params(i, k, r, s);
        *out = new genseq_params{p};
        return GENSEQ_OK;
    });
}

void genseq_params_destroy(genseq_params* params) { delete params; }

genseq_status genseq_eval(const genseq_params* params, const char* kind, const char* backend,
                          int64_t lo, int64_t hi, char** out_json) {
    return guarded([&] {
        const genseq::Params& p = params_of(params);
        std::string kind_str = kind == nullptr ? "f" : kind;
        std::string backend_str = backend == nullptr ? "recurrence" : backend;
        auto values = eval_values(p, kind_str, backend_str, lo, hi);
        json value_list = json::array();
        for (const auto& [n, value] : values) {
            value_list.push_back(json{{"n", n}, {"value", value.get_str()}});
        }
        json doc{{"params", params_json(p)},
                 {"kind", kind_str},
                 {"backend", backend_str},
                 {"values", std::move(value_list)}};
        return emit(out_json, doc.dump());
    });
}

genseq_status genseq_count_tilings(const genseq_params* params, const char* type, int64_t n,
                                   char** out_decimal) {
    return guarded([&] {
        const genseq::Params& p = params_of(params);
        std::string type_str = type == nullptr ? "f" : type;
        genseq::Int count;
        if (type_str == "f") {
            count = genseq::count_f_tilings(p, n);
        } else if (type_str == "l") {
            count = genseq::count_l_tilings(p, n);
        } else {
            throw std::invalid_argument("type must be 'f' or 'l'");
        }
        return emit(out_decimal, count.get_str());
    });
}

genseq_status genseq_render_tilings(const genseq_params* params, const char* type, int64_t n,
                                    int64_t limit, char** out_text) {
    return guarded([&] {
        const genseq::Params& p = params_of(params);
        std::string type_str = type == nullptr ? "f" : type;
        if (type_str != "f" && type_str != "l") {
            throw std::invalid_argument("type must be 'f' or 'l'");
        }
        if (type_str == "l" && p.k <= p.i) {
            throw std::domain_error("type-L tilings require k > i");
        }
        std::string text;
        int64_t emitted = 0;
        if (limit > 0) {
            genseq::for_each_f_tiling(p, n, [&](const genseq::Tiling& t) {
                if (type_str == "l" && !genseq::is_type_l(p, n, t)) return true;
                text += genseq::render_tiling(t);
                text += '\n';
                return ++emitted < limit;
            });
        }
        return emit(out_text, text);
    });
}

genseq_status genseq_genfun(const genseq_params* params, char** out_json) {
    return guarded([&] {
        genseq::RationalSeries rs = genseq::rational_genfun(params_of(params));
        json num = json::array(), den = json::array();
        for (const auto& c : rs.numerator) num.push_back(c.get_str());
        for (const auto& c : rs.denominator) den.push_back(c.get_str());
        json doc{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
        return emit(out_json, doc.dump());
    });
}

genseq_status genseq_genfun_coeffs(const genseq_params* params, int64_t count, char** out_json) {
    return guarded([&] {
        auto coeffs = genseq::series_coeffs(genseq::rational_genfun(params_of(params)), count);
        json list = json::array();
        for (const auto& c : coeffs) list.push_back(c.get_str());
        return emit(out_json, json{{"coefficients", std::move(list)}}.dump());
    });
}

genseq_status genseq_matrix_q(const genseq_params* params, char** out_json) {
    return guarded([&] {
        return emit(out_json, matrix_json(genseq::build_q(params_of(params))).dump());
    });
}

genseq_status genseq_matrix_a(const genseq_params* params, char** out_json) {
    return guarded([&] {
        return emit(out_json, matrix_json(genseq::build_a(params_of(params))).dump());
    });
}

genseq_status genseq_matrix_power(const genseq_params* params, int64_t n, char** out_json) {
    return guarded([&] {
        return emit(out_json, matrix_json(genseq::f_matrix(params_of(params), n)).dump());
    });
}

genseq_status genseq_matrix_det_q(const genseq_params* params, char** out_decimal) {
    return guarded([&] {
        return emit(out_decimal, genseq::det(genseq::build_q(params_of(params))).get_str());
    });
}

genseq_status genseq_matrix_det_a(const genseq_params* params, char** out_decimal) {
    return guarded([&] {
        return emit(out_decimal, genseq::det(genseq::build_a(params_of(params))).get_str());
    });
}

genseq_status genseq_cassini(const genseq_params* params, int64_t n, char** out_decimal) {
    return guarded([&] {
        return emit(out_decimal, genseq::cassini(params_of(params), n).get_str());
    });
}

genseq_status genseq_identity_list(char** out_json) {
    return guarded([&] {
        json list = json::array();
        for (const auto& spec : genseq::identity_registry()) {
            list.push_back(json{
                {"id", spec.id}, {"summary", spec.summary}, {"aux", spec.aux_names}});
        }
        return emit(out_json, list.dump());
    });
}

genseq_status genseq_verify(const char* identity, int64_t i_max, int64_t k_max, int64_t r_max,
                            int64_t s_max, int64_t n_max, int64_t* out_failures,
                            char** out_json) {
    return guarded([&] {
        std::string id = identity == nullptr ? "all" : identity;
        genseq::IdentityGrid grid;
        grid.i_max = i_max;
        grid.k_max = k_max;
        grid.r_max = r_max;
        grid.s_max = s_max;
        grid.n_max = n_max;
        if (grid.i_max < 1 || grid.k_max < 1 || grid.r_max < 1 || grid.s_max < 1 ||
            grid.n_max < genseq::kMinIndex) {
            throw std::invalid_argument("grid bounds must cover at least one binding");
        }

        json doc;
        long failures = 0;
        if (id == "all") {
            genseq::VerificationReport report = genseq::verify_all(grid);
            json list = json::array();
            for (const auto& rep : report.identities) list.push_back(report_json(rep));
            failures = report.failed();
            doc = json{{"identities", std::move(list)},
                       {"checked", report.checked()},
                       {"passed", report.passed()},
                       {"failed", report.failed()}};
        } else {
            if (genseq::find_identity(id) == nullptr) {
                return fail(GENSEQ_ERROR_NOT_FOUND, "unknown identity: " + id);
            }
            genseq::VerificationReport report = genseq::verify_identity_grid(id, grid);
            failures = report.failed();
            doc = report_json(report.identities.front());
        }
        if (out_failures != nullptr) *out_failures = failures;
        return emit(out_json, doc.dump());
    });
}

genseq_status genseq_named_value(const char* name, int64_t m, char** out_decimal) {
    return guarded([&] {
        if (name == nullptr) return fail(GENSEQ_ERROR_ARGUMENT, "null sequence name");
        if (genseq::find_sequence(name) == nullptr) {
            return fail(GENSEQ_ERROR_NOT_FOUND, std::string("unknown sequence: ") + name);
        }
        return emit(out_decimal, genseq::named_value(name, m).get_str());
    });
}

genseq_status genseq_compare_bfile(const char* name, const char* bfile_text, int64_t lo,
                                   int64_t hi, int64_t* out_failures, char** out_json) {
    return guarded([&] {
        if (name == nullptr || bfile_text == nullptr) {
            return fail(GENSEQ_ERROR_ARGUMENT, "null argument");
        }
        const genseq::NamedSequence* seq = genseq::find_sequence(name);
        if (seq == nullptr) {
            return fail(GENSEQ_ERROR_NOT_FOUND, std::string("unknown sequence: ") + name);
        }
        genseq::BFile ref;
        try {
            ref = genseq::parse_bfile(bfile_text);
        } catch (const std::invalid_argument& e) {
            return fail(GENSEQ_ERROR_PARSE, e.what());
        }
        if (ref.entries.empty()) return fail(GENSEQ_ERROR_PARSE, "reference is empty");

        long lo_idx = lo, hi_idx = hi;
        if (lo > hi) {  // default to the reference's own coverage
            lo_idx = std::max<long>(seq->min_index, ref.entries.front().first);
            hi_idx = ref.entries.back().first;
        }
        genseq::CompareResult result = genseq::compare_reference(seq->name, ref, lo_idx, hi_idx);
        json mismatches = json::array();
        for (const auto& mm : result.mismatches) {
            mismatches.push_back(json{{"index", mm.index},
                                      {"expected", mm.expected.get_str()},
                                      {"actual", mm.actual.get_str()}});
        }
        if (out_failures != nullptr) *out_failures = result.failed;
        json doc{{"sequence", seq->name},
                 {"range", json{{"lo", lo_idx}, {"hi", hi_idx}}},
                 {"checked", result.checked},
                 {"failed", result.failed},
                 {"mismatches", std::move(mismatches)}};
        return emit(out_json, doc.dump());
    });
}

}  // extern "C"

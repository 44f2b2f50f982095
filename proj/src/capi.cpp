#include "obslab/obslab.h"

#include <fstream>
#include <sstream>
#include <string>

#include "obslab/diophantine.hpp"
#include "obslab/errors.hpp"
#include "obslab/experiment.hpp"

struct obslab_experiment {
    obslab::Json config;
    std::optional<std::uint64_t> seed;
};

struct obslab_report {
    std::string json;
    std::optional<std::string> csv;
    bool passed;
};

namespace {

thread_local std::string last_error;

obslab_status fail(obslab_status status, const std::string& message) {
    last_error = message;
    return status;
}

/// Maps the library exception hierarchy onto status codes.
template <class F>
obslab_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const obslab::PreconditionError& e) {
        return fail(OBSLAB_ERR_PRECONDITION, e.what());
    } catch (const obslab::ConfigError& e) {
        return fail(OBSLAB_ERR_CONFIG, e.what());
    } catch (const obslab::InvalidArgument& e) {
        return fail(OBSLAB_ERR_CONFIG, e.what());
    } catch (const obslab::Json::exception& e) {
        return fail(OBSLAB_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(OBSLAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(OBSLAB_ERR_INTERNAL, "unknown error");
    }
}

obslab_status null_argument(const char* name) { return fail(OBSLAB_ERR_CONFIG, std::string(name) + " is NULL"); }

}  // namespace

extern "C" {

const char* obslab_version(void) { return OBSLAB_VERSION; }

const char* obslab_last_error(void) { return last_error.c_str(); }

obslab_status obslab_experiment_from_json(const char* json_text, obslab_experiment** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    if (!json_text) return null_argument("json_text");
    return guarded([&] {
        auto config = obslab::Json::parse(json_text);
        obslab::ExperimentConfig::parse(config);
        *out = new obslab_experiment{std::move(config), std::nullopt};
        return OBSLAB_OK;
    });
}

obslab_status obslab_experiment_from_file(const char* path, obslab_experiment** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    if (!path) return null_argument("path");
    std::ifstream in(path);
    if (!in) return fail(OBSLAB_ERR_IO, std::string("cannot open config file '") + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return obslab_experiment_from_json(text.str().c_str(), out);
}

obslab_status obslab_experiment_set_seed(obslab_experiment* experiment, uint64_t seed) {
    if (!experiment) return null_argument("experiment");
    experiment->seed = seed;
    return OBSLAB_OK;
}

void obslab_experiment_free(obslab_experiment* experiment) { delete experiment; }

obslab_status obslab_run(const obslab_experiment* experiment, const char* command, obslab_report** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    if (!experiment) return null_argument("experiment");
    if (!command) return null_argument("command");
    return guarded([&] {
        const auto result = obslab::run_experiment(command, experiment->config, experiment->seed);
        *out = new obslab_report{result.report.dump(2) + "\n", result.csv, result.pass};
        return result.pass ? OBSLAB_OK : OBSLAB_FAIL;
    });
}

const char* obslab_report_json(const obslab_report* report) { return report ? report->json.c_str() : nullptr; }

const char* obslab_report_csv(const obslab_report* report) {
    return report && report->csv ? report->csv->c_str() : nullptr;
}

int obslab_report_passed(const obslab_report* report) { return report && report->passed ? 1 : 0; }

void obslab_report_free(obslab_report* report) { delete report; }

obslab_status obslab_m_ab(double a, double b, double* value, int* attained_n) {
    if (!value) return null_argument("value");
    return guarded([&] {
        const auto r = obslab::m_ab(a, b);
        *value = r.value;
        if (attained_n) *attained_n = r.attained_n;
        return OBSLAB_OK;
    });
}

obslab_status obslab_symmetry_constants(double alpha, int* p, double* m_p, double* M_p) {
    if (!p || !m_p || !M_p) return null_argument("output pointer");
    return guarded([&] {
        const int order = obslab::SymmetrySpec::from_alpha(alpha, obslab::Axis::x1).p();
        const auto c = obslab::symmetry_constants(order, alpha);
        *p = c.p;
        *m_p = c.m_p;
        *M_p = c.M_p;
        return OBSLAB_OK;
    });
}

obslab_status obslab_gamma_hat(int M, int64_t K_max, double* gamma_hat, int64_t* argmin_k) {
    if (!gamma_hat) return null_argument("gamma_hat");
    return guarded([&] {
        const auto points = obslab::build_algebraic_points(M, 1.0);
        const auto r = obslab::estimate_gamma(points, K_max);
        *gamma_hat = r.gamma_hat;
        if (argmin_k) *argmin_k = r.argmin_k;
        return OBSLAB_OK;
    });
}

obslab_status obslab_predicted_constant(const char* scenario, double T, double m_ab, double m_cd, double m_p,
                                        double M_p, double m_q, double M_q, double* T_threshold, int* has_c,
                                        double* c) {
    if (!scenario) return null_argument("scenario");
    if (!T_threshold || !has_c || !c) return null_argument("output pointer");
    return guarded([&] {
        obslab::ScenarioParams params;
        params.T = T;
        params.m_ab = m_ab;
        params.m_cd = m_cd;
        params.m_p = m_p;
        params.M_p = M_p;
        params.m_q = m_q;
        params.M_q = M_q;
        const auto p = obslab::predicted_constant(obslab::scenario_from_string(scenario), params);
        if (!p.has_formula) throw obslab::InvalidArgument(std::string("scenario '") + scenario + "' has no explicit constant");
        *T_threshold = p.T_threshold;
        *has_c = p.c ? 1 : 0;
        *c = p.c ? *p.c : 0.0;
        return OBSLAB_OK;
    });
}

}  // extern "C"

#include "obslab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "obslab/diophantine.hpp"
#include "obslab/errors.hpp"

namespace obslab {

using std::numbers::pi;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing config key '") + key + "'");
    return j.at(key);
}

double number_or(const Json& j, const char* key, double fallback) {
    return j.is_object() && j.contains(key) ? json_number(j.at(key), key) : fallback;
}

template <class Int>
Int integer(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (v.is_number_integer()) return v.get<Int>();
    // 1e6 style literals
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (x == std::floor(x) && std::abs(x) < 9e15) return static_cast<Int>(x);
    }
    throw ConfigError(std::string("config key '") + key + "' must be an integer");
}

template <class Int>
Int integer_or(const Json& j, const char* key, Int fallback) {
    return j.is_object() && j.contains(key) ? integer<Int>(j, key) : fallback;
}

bool is_square_pi(const RectangleGeometry& g) {
    return std::abs(g.ell1() - pi) <= 1e-12 && std::abs(g.ell2() - pi) <= 1e-12;
}

ObservationSpec wave_term(Region r, Field f, double T) { return {std::move(r), f, T, Model::wave}; }

/// A config term {"region": name, ...} with the model and field that region observes.
ObservationSpec term_from_json(const Json& j, double T) {
    const std::string kind = member(j, "region").get<std::string>();
    if (kind == "vertical_segments") {
        region::VerticalSegments r;
        for (const Json& s : member(j, "segments")) {
            r.segments.push_back({json_number(member(s, "alpha"), "alpha"), json_interval(member(s, "x2"), "x2")});
        }
        return {r, Field::displacement, T, Model::plate};
    }
    if (kind == "open_rect") {
        return {region::OpenRect{json_interval(member(j, "t"), "t"), json_interval(member(j, "x2"), "x2"),
                                 json_number(member(j, "alpha"), "alpha")},
                Field::displacement, T, Model::plate};
    }
    if (kind == "boundary_bottom") return wave_term(region::BoundaryEdgeBottom{}, Field::normal_derivative, T);
    if (kind == "boundary_left") return wave_term(region::BoundaryEdgeLeft{}, Field::normal_derivative, T);
    if (kind == "boundary_gamma0") return wave_term(region::BoundaryGamma0{}, Field::normal_derivative, T);
    if (kind == "vertical_strip") {
        return wave_term(region::VerticalStrip{json_interval(member(j, "x1"), "x1")}, Field::velocity, T);
    }
    if (kind == "horizontal_strip") {
        return wave_term(region::HorizontalStrip{json_interval(member(j, "x2"), "x2")}, Field::velocity, T);
    }
    if (kind == "cross_strips") {
        return wave_term(region::CrossStrips{json_interval(member(j, "x1"), "x1"), json_interval(member(j, "x2"), "x2")},
                         Field::velocity, T);
    }
    if (kind == "vertical_line") {
        return wave_term(region::VerticalLine{json_number(member(j, "alpha"), "alpha")}, Field::velocity, T);
    }
    if (kind == "horizontal_line") {
        return wave_term(region::HorizontalLine{json_number(member(j, "beta"), "beta")}, Field::velocity, T);
    }
    throw ConfigError("unknown observation region '" + kind + "'");
}

double m_value(double a, double b) {
    const MabResult r = m_ab(a, b);
    return r.value;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(17) << x;
    return out.str();
}

Json base_report(const std::string& command, const ExperimentConfig& cfg) {
    return {{"command", command}, {"version", OBSLAB_VERSION}, {"config", cfg.raw}, {"seed", cfg.seed}};
}

bool eigen_certificate(const ConstantReport& r, const Prediction& p) {
    if (p.c) return r.c_min >= *p.c * (1.0 - kVerifySlack);
    return r.c_min > kPositivityTolerance * r.c_max;
}

ConstantReport constants_at(const ExperimentSetup& s, const ModeSetPtr& modes) {
    const GramForm gram = assemble_gram(s.terms, modes);
    return empirical_constants(gram, s.weight, symmetry_mask(*modes, s.p_x1, s.q_x2));
}

Prediction prediction_for(const ExperimentSetup& s) {
    return s.scenario ? predicted_constant(*s.scenario, s.params) : Prediction{};
}

// verify
CommandResult cmd_verify(const ExperimentConfig& cfg) {
    const double T = cfg.horizon();
    const ExperimentSetup s = cfg.setup(T);
    if (!s.scenario) throw ConfigError("verify needs a 'scenario'");
    const auto modes = cfg.modes();
    const GramForm gram = assemble_gram(s.terms, modes);
    const auto states = cfg.sample_states(s, modes);
    const auto report = verify_observability(*s.scenario, gram, s.weight, states, s.params,
                                             symmetry_mask(*modes, s.p_x1, s.q_x2));
    CommandResult out;
    out.pass = report.pass;
    out.report = base_report("verify", cfg);
    out.report["T"] = T;
    out.report["result"] = to_json(report);
    out.report["pass"] = report.pass;
    return out;
}

// scan-t
std::vector<double> scan_values(const Json& raw) {
    const Json& scan = member(raw, "T_scan");
    std::vector<double> values;
    if (scan.is_array()) {
        for (const Json& v : scan) values.push_back(json_number(v, "T_scan"));
    } else {
        const double from = json_number(member(scan, "from"), "from");
        const double to = json_number(member(scan, "to"), "to");
        const int steps = integer<int>(scan, "steps");
        if (steps < 1) throw ConfigError("T_scan.steps must be at least 1");
        for (int i = 0; i < steps; ++i) {
            values.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
        }
    }
    if (values.empty()) throw ConfigError("T_scan is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) throw ConfigError("T_scan values must be positive");
        if (i > 0 && !(values[i] > values[i - 1])) throw ConfigError("T_scan values must be increasing");
    }
    return values;
}

CommandResult cmd_scan(const ExperimentConfig& cfg) {
    const auto modes = cfg.modes();
    std::ostringstream csv;
    csv << "T,c_min,c_predicted,pass\n";
    Json rows = Json::array();
    bool all_pass = true;
    bool monotone = true;
    double previous = -std::numeric_limits<double>::infinity();
    for (double T : scan_values(cfg.raw)) {
        const ExperimentSetup s = cfg.setup(T);
        const ConstantReport r = constants_at(s, modes);
        const Prediction p = prediction_for(s);
        const bool pass = eigen_certificate(r, p);
        all_pass = all_pass && pass;
        if (r.c_min < previous - 1e-9 * r.c_max) monotone = false;
        previous = r.c_min;
        const double c = p.c ? *p.c : std::numeric_limits<double>::quiet_NaN();
        csv << format_double(T) << ',' << format_double(r.c_min) << ',' << format_double(c) << ','
            << (pass ? 1 : 0) << '\n';
        rows.push_back({{"T", T}, {"c_min", r.c_min}, {"c_max", r.c_max}, {"c_predicted", finite_or_null(c)},
                        {"pass", pass}});
    }
    CommandResult out;
    out.pass = all_pass;
    out.csv = csv.str();
    out.report = base_report("scan-t", cfg);
    out.report["rows"] = rows;
    out.report["c_min_nondecreasing"] = monotone;
    out.report["pass"] = all_pass;
    return out;
}

// constants
CommandResult cmd_constants(const ExperimentConfig& cfg) {
    CommandResult out;
    out.report = base_report("constants", cfg);
    out.pass = true;
    const Json& raw = cfg.raw;
    if (raw.contains("observation") || raw.contains("scenario") || raw.contains("terms")) {
        const double T = cfg.horizon();
        const ExperimentSetup s = cfg.setup(T);
        const auto modes = cfg.modes();
        const ConstantReport r = constants_at(s, modes);
        const Prediction p = prediction_for(s);
        out.pass = eigen_certificate(r, p);
        out.report["T"] = T;
        out.report["constants"] = to_json(r, raw.value("include_argmin", false));
        if (s.scenario) out.report["prediction"] = to_json(p);
    }
    if (raw.contains("four_family")) {
        const Json& ff = raw.at("four_family");
        const TimeSpaceWindow omega{json_interval(member(ff, "t"), "t"), json_interval(member(ff, "x2"), "x2")};
        Json rows = Json::array();
        for (const Json& k : member(ff, "K")) {
            const int K = k.get<int>();
            const auto modes = build_mode_set(cfg.geometry, K, K);
            const Extremes e = hermitian_extremes(four_family_gram(omega, *modes));
            rows.push_back({{"K", K}, {"c1", e.min}, {"c2", e.max}});
            out.pass = out.pass && e.min > 0.0;
        }
        out.report["four_family"] = rows;
    }
    out.report["pass"] = out.pass;
    return out;
}

// diophantine
CommandResult cmd_diophantine(const ExperimentConfig& cfg) {
    const Json& d = member(cfg.raw, "diophantine");
    const int M = integer<int>(d, "M");
    const auto K_max = integer<long long>(d, "K_max");
    const double ell1 = number_or(d, "ell1", cfg.geometry.ell1());
    const AlgebraicPointSet points = build_algebraic_points(M, ell1);
    const DiophantineReport r = estimate_gamma(points, K_max);
    CommandResult out;
    out.report = base_report("diophantine", cfg);
    out.report["result"] = to_json(points, r);
    out.pass = r.gamma_hat > 0.0;
    if (d.contains("k1_max")) {
        const int k1_max = integer<int>(d, "k1_max");
        long long failures = 0;
        for (int k1 = 1; k1 <= k1_max; ++k1) {
            if (!sin_sum_lower_bound_check(k1, points.alphas, ell1, M, r.gamma_hat)) ++failures;
        }
        out.report["sin_sum_chain"] = {{"k1_max", k1_max}, {"failures", failures}};
        out.pass = out.pass && failures == 0;
    }
    out.report["pass"] = out.pass;
    return out;
}

CommandResult cmd_mab(const ExperimentConfig& cfg) {
    const Json& m = member(cfg.raw, "mab");
    const MabResult r = m_ab(json_number(member(m, "a"), "a"), json_number(member(m, "b"), "b"),
                             integer_or<int>(m, "max_n", 1000000));
    CommandResult out;
    out.pass = r.value > 0.0 && r.value <= pi / 2.0;
    out.report = base_report("mab", cfg);
    out.report["result"] = to_json(r);
    out.report["pass"] = out.pass;
    return out;
}

CommandResult cmd_symmetry(const ExperimentConfig& cfg) {
    const Json& s = member(cfg.raw, "symmetry");
    const double alpha = json_number(member(s, "alpha"), "alpha");
    const int p = s.contains("p") ? integer<int>(s, "p") : SymmetrySpec::from_alpha(alpha, Axis::x1).p();
    const SymmetryConstants c = symmetry_constants(p, alpha);
    CommandResult out;
    out.pass = true;
    out.report = base_report("symmetry", cfg);
    out.report["result"] = to_json(c);
    out.report["pass"] = true;
    return out;
}

// ingham
InequalityCheck checked_mehrenberger(const ExponentialSum& sum, double T) {
    if (!(T > 2.0 * pi / sum.gamma)) {
        throw PreconditionError("T = " + format_double(T) + " does not exceed 2 pi / gamma = " +
                                format_double(2.0 * pi / sum.gamma));
    }
    return mehrenberger_check(sum, T);
}

CommandResult cmd_ingham(const ExperimentConfig& cfg) {
    const Json& ing = member(cfg.raw, "ingham");
    CommandResult out;
    out.report = base_report("ingham", cfg);
    out.pass = true;
    if (ing.contains("exponents")) {
        ExponentialSum sum;
        sum.first_index = integer_or<int>(ing, "first_index", 1);
        sum.n = integer_or<int>(ing, "n", 0);
        for (const Json& w : ing.at("exponents")) sum.exponents.push_back(json_number(w, "exponent"));
        for (const Json& c : member(ing, "coefficients")) {
            if (!c.is_array() || c.size() != 2) throw ConfigError("coefficients are [re, im] pairs");
            sum.coefficients.emplace_back(json_number(c[0], "re"), json_number(c[1], "im"));
        }
        if (sum.coefficients.size() != sum.exponents.size()) {
            throw ConfigError("exponents and coefficients differ in length");
        }
        const PartialGap gap = partial_gap_analysis(sum.exponents, sum.n, sum.first_index);
        sum.gamma = ing.contains("gamma") ? json_number(ing.at("gamma"), "gamma") : gap.gamma;
        const InequalityCheck check = checked_mehrenberger(sum, json_number(member(ing, "T"), "T"));
        out.report["result"] = to_json(check);
        out.report["gamma"] = sum.gamma;
        out.pass = check.holds;
    }
    if (ing.contains("random")) {
        const Json& r = ing.at("random");
        const int trials = integer_or<int>(r, "trials", 200);
        const int terms = integer_or<int>(r, "terms", 50);
        const double jitter = number_or(r, "jitter", 0.1);
        const double factor = number_or(r, "T_factor", 2.5);
        std::vector<int> ns{0, 5};
        if (r.contains("n")) ns = r.at("n").get<std::vector<int>>();
        if (trials < 1 || terms < 2) throw ConfigError("random ingham needs trials >= 1 and terms >= 2");
        if (!(jitter >= 0.0 && jitter < 0.5)) throw ConfigError("jitter must lie in [0, 0.5)");
        UniformSource rng(cfg.seed);
        int failures = 0;
        double worst_margin = std::numeric_limits<double>::infinity();
        for (int t = 0; t < trials; ++t) {
            ExponentialSum sum;
            sum.first_index = 1;
            for (int k = 1; k <= terms; ++k) {
                sum.exponents.push_back(k + jitter * rng.symmetric());
                sum.coefficients.push_back(rng.unit_disc());
            }
            for (int n : ns) {
                sum.n = n;
                sum.gamma = partial_gap_analysis(sum.exponents, n, sum.first_index).gamma;
                const InequalityCheck c = checked_mehrenberger(sum, factor * 2.0 * pi / sum.gamma);
                if (!c.holds) ++failures;
                worst_margin = std::min(worst_margin, c.lhs - c.rhs);
            }
        }
        out.report["random"] = {{"trials", trials}, {"terms", terms}, {"failures", failures},
                                {"worst_margin", worst_margin}};
        out.pass = out.pass && failures == 0;
    }
    if (ing.contains("row")) {
        const Json& r = ing.at("row");
        const int k2 = integer<int>(r, "k2");
        const int N = integer<int>(r, "N");
        const double T = json_number(member(r, "T"), "T");
        if (!(T > 4.0 * std::numbers::sqrt2 * pi)) throw PreconditionError("row check needs T > 4 sqrt(2) pi");
        UniformSource rng(splitmix64(cfg.seed));
        std::vector<Complex> a, b;
        for (int i = 0; i < N; ++i) {
            a.push_back(rng.unit_disc());
            b.push_back(rng.unit_disc());
        }
        const InequalityCheck c = row_ingham_check(k2, a, b, T);
        out.report["row"] = to_json(c);
        out.pass = out.pass && c.holds;
    }
    if (!out.report.contains("result") && !out.report.contains("random") && !out.report.contains("row")) {
        throw ConfigError("ingham needs 'exponents', 'random' or 'row'");
    }
    out.report["pass"] = out.pass;
    return out;
}

// oracle-check
CommandResult cmd_oracle(const ExperimentConfig& cfg) {
    const Json o = cfg.raw.value("oracle", Json::object());
    const int resolution = integer_or<int>(o, "resolution", 512);
    const int count = integer_or<int>(o, "samples", 5);
    const double tolerance = number_or(o, "tolerance", 1e-6);
    const double T = cfg.horizon();
    const ExperimentSetup s = cfg.setup(T);
    const auto modes = cfg.modes();
    const GramForm gram = assemble_gram(s.terms, modes);
    Json rows = Json::array();
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const SpectralState state = random_state(modes, splitmix64(cfg.seed + static_cast<std::uint64_t>(i)),
                                                 cfg.decay);
        const double spectral = gram.quadratic(state);
        double quadrature = 0.0;
        for (const auto& term : s.terms) quadrature += quadrature_oracle(state, term, resolution);
        const double rel = std::abs(spectral - quadrature) / std::max(std::abs(quadrature), 1e-300);
        worst = std::max(worst, rel);
        rows.push_back({{"gram", spectral}, {"quadrature", quadrature}, {"relative_error", rel}});
    }
    CommandResult out;
    out.pass = worst <= tolerance;
    out.report = base_report("oracle-check", cfg);
    out.report["T"] = T;
    out.report["resolution"] = resolution;
    out.report["samples"] = rows;
    out.report["max_relative_error"] = worst;
    out.report["tolerance"] = tolerance;
    out.report["pass"] = out.pass;
    return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const Json& config) {
    if (!config.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig cfg;
    cfg.raw = config;
    try {
        if (config.contains("geometry")) {
            const Json& g = config.at("geometry");
            if (g.is_array()) {
                if (g.size() != 2) throw ConfigError("geometry must be [ell1, ell2]");
                cfg.geometry = RectangleGeometry(json_number(g[0], "ell1"), json_number(g[1], "ell2"));
            } else {
                cfg.geometry = RectangleGeometry(json_number(member(g, "ell1"), "ell1"),
                                                 json_number(member(g, "ell2"), "ell2"));
            }
        }
        if (config.contains("K")) cfg.K1 = cfg.K2 = integer<int>(config, "K");
        if (config.contains("truncation")) {
            const Json& t = config.at("truncation");
            cfg.K1 = integer<int>(t, "K1");
            cfg.K2 = integer<int>(t, "K2");
        }
        if (cfg.K1 < 1 || cfg.K2 < 1) throw ConfigError("truncation must be at least 1 in each direction");
        if (config.contains("seed")) cfg.seed = integer<std::uint64_t>(config, "seed");
        cfg.samples = integer_or<int>(config, "samples", cfg.samples);
        if (cfg.samples < 0) throw ConfigError("samples must be nonnegative");
        cfg.decay = number_or(config, "decay", 0.0);
        if (!(cfg.decay >= 0.0)) throw ConfigError("decay must be nonnegative");
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

double ExperimentConfig::horizon() const {
    const Json& t = member(raw, "T");
    if (t.is_object()) {
        const double factor = json_number(member(t, "threshold_factor"), "threshold_factor");
        const ExperimentSetup s = setup(1.0);
        const Prediction p = prediction_for(s);
        if (!p.has_formula) throw ConfigError("threshold_factor needs a scenario with an explicit threshold");
        return factor * p.T_threshold;
    }
    const double T = json_number(t, "T");
    if (!(T > 0.0)) throw ConfigError("T must be positive");
    return T;
}

ExperimentSetup ExperimentConfig::setup(double T) const {
    ExperimentSetup s;
    const Json obs = raw.value("observation", Json::object());
    if (raw.contains("terms")) {
        for (const Json& j : raw.at("terms")) s.terms.push_back(term_from_json(j, T));
        if (s.terms.empty()) throw ConfigError("terms is empty");
        const Model model = s.terms.front().model;
        for (const auto& t : s.terms) {
            if (t.model != model) throw ConfigError("all terms must observe the same model");
        }
        s.weight = model == Model::plate ? EnergyWeight::plate(number_or(raw, "weight_s", 0.0))
                                         : EnergyWeight::wave();
        if (raw.contains("mask")) {
            s.p_x1 = integer_or<int>(raw.at("mask"), "p", 0);
            s.q_x2 = integer_or<int>(raw.at("mask"), "q", 0);
        }
    } else {
        if (!raw.contains("scenario")) throw ConfigError("config needs a 'scenario' or a 'terms' list");
        const Scenario sc = scenario_from_string(raw.at("scenario").get<std::string>());
        s.scenario = sc;
        s.params.T = T;
        s.params.paper_literal = raw.value("paper_literal", false);
        s.weight = EnergyWeight::wave();
        if (has_explicit_constant(sc) && !is_square_pi(geometry)) {
            throw ConfigError(std::string(to_string(sc)) + " has explicit constants only on the square (0, pi)^2");
        }
        const auto symmetric = [&](const char* key, Axis axis, int& p, double& m, double& M) {
            const double angle = json_number(member(obs, key), key);
            p = SymmetrySpec::from_alpha(angle, axis).p();
            const SymmetryConstants c = symmetry_constants(p, angle);
            m = c.m_p;
            M = c.M_p;
            return angle;
        };
        switch (sc) {
            case Scenario::plate_segments: {
                const int M = integer_or<int>(obs, "M", obs.contains("alphas") ? static_cast<int>(obs.at("alphas").size()) : 1);
                std::vector<double> alphas;
                if (obs.contains("alphas")) {
                    for (const Json& a : obs.at("alphas")) alphas.push_back(json_number(a, "alpha"));
                    if (static_cast<int>(alphas.size()) != M) throw ConfigError("need exactly M alphas");
                } else {
                    alphas = build_algebraic_points(M, geometry.ell1()).alphas;
                }
                std::vector<Interval> spans;
                const Json& iv = member(obs, "intervals");
                if (iv.is_array() && iv.size() == 2 && !iv[0].is_array()) {
                    spans.assign(static_cast<std::size_t>(M), json_interval(iv, "intervals"));
                } else {
                    for (const Json& i : iv) spans.push_back(json_interval(i, "intervals"));
                }
                if (static_cast<int>(spans.size()) != M) throw ConfigError("need one interval per segment");
                region::VerticalSegments r;
                for (int j = 0; j < M; ++j) r.segments.push_back({alphas[static_cast<std::size_t>(j)], spans[static_cast<std::size_t>(j)]});
                s.terms.push_back({r, Field::displacement, T, Model::plate});
                s.weight = EnergyWeight::plate(number_or(raw, "weight_s", -1.0 / M));
                break;
            }
            case Scenario::boundary_gamma0:
                s.terms.push_back(wave_term(region::BoundaryGamma0{}, Field::normal_derivative, T));
                break;
            case Scenario::cross_strips: {
                const Interval x1 = json_interval(member(obs, "x1"), "x1");
                const Interval x2 = json_interval(member(obs, "x2"), "x2");
                s.terms.push_back(wave_term(region::CrossStrips{x1, x2}, Field::velocity, T));
                s.params.m_ab = m_value(x1.lo, x1.hi);
                s.params.m_cd = m_value(x2.lo, x2.hi);
                break;
            }
            case Scenario::bottom_edge_and_strip: {
                const Interval x1 = json_interval(member(obs, "x1"), "x1");
                s.terms.push_back(wave_term(region::BoundaryEdgeBottom{}, Field::normal_derivative, T));
                s.terms.push_back(wave_term(region::VerticalStrip{x1}, Field::velocity, T));
                s.params.m_ab = m_value(x1.lo, x1.hi);
                break;
            }
            case Scenario::line_and_strip: {
                const double alpha = symmetric("alpha", Axis::x1, s.p_x1, s.params.m_p, s.params.M_p);
                const Interval x2 = json_interval(member(obs, "x2"), "x2");
                s.terms.push_back(wave_term(region::VerticalLine{alpha}, Field::velocity, T));
                s.terms.push_back(wave_term(region::HorizontalStrip{x2}, Field::velocity, T));
                s.params.m_cd = m_value(x2.lo, x2.hi);
                break;
            }
            case Scenario::line_and_bottom_edge: {
                const double alpha = symmetric("alpha", Axis::x1, s.p_x1, s.params.m_p, s.params.M_p);
                s.terms.push_back(wave_term(region::VerticalLine{alpha}, Field::velocity, T));
                s.terms.push_back(wave_term(region::BoundaryEdgeBottom{}, Field::normal_derivative, T));
                break;
            }
            case Scenario::two_lines: {
                const double alpha = symmetric("alpha", Axis::x1, s.p_x1, s.params.m_p, s.params.M_p);
                const double beta = symmetric("beta", Axis::x2, s.q_x2, s.params.m_q, s.params.M_q);
                s.terms.push_back(wave_term(region::VerticalLine{alpha}, Field::velocity, T));
                s.terms.push_back(wave_term(region::HorizontalLine{beta}, Field::velocity, T));
                break;
            }
        }
    }
    for (const auto& t : s.terms) t.validate(geometry);
    return s;
}

std::vector<SpectralState> ExperimentConfig::sample_states(const ExperimentSetup& s, const ModeSetPtr& modes) const {
    std::vector<SpectralState> states;
    states.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        SpectralState state = random_state(modes, splitmix64(seed + static_cast<std::uint64_t>(i)), decay);
        if (s.p_x1 >= 2) state = project_p_symmetric(state, s.p_x1, Axis::x1);
        if (s.q_x2 >= 2) state = project_p_symmetric(state, s.q_x2, Axis::x2);
        states.push_back(std::move(state));
    }
    return states;
}

const std::vector<std::string>& experiment_commands() {
    static const std::vector<std::string> commands{"verify", "scan-t",   "constants", "diophantine",
                                                   "mab",    "symmetry", "ingham",    "oracle-check"};
    return commands;
}

CommandResult run_experiment(const std::string& command, const Json& config, std::optional<std::uint64_t> seed) {
    Json effective = config;
    if (seed) effective["seed"] = *seed;
    const ExperimentConfig cfg = ExperimentConfig::parse(effective);
    try {
        if (command == "verify") return cmd_verify(cfg);
        if (command == "scan-t") return cmd_scan(cfg);
        if (command == "constants") return cmd_constants(cfg);
        if (command == "diophantine") return cmd_diophantine(cfg);
        if (command == "mab") return cmd_mab(cfg);
        if (command == "symmetry") return cmd_symmetry(cfg);
        if (command == "ingham") return cmd_ingham(cfg);
        if (command == "oracle-check") return cmd_oracle(cfg);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace obslab

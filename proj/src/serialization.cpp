#include "obslab/serialization.hpp"

#include <cmath>
#include <string>

#include "obslab/errors.hpp"
#include "obslab/expression.hpp"

namespace obslab {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json interval_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Field field_from_string(const std::string& name) {
    for (Field f : {Field::displacement, Field::velocity, Field::normal_derivative}) {
        if (name == to_string(f)) return f;
    }
    throw ConfigError("unknown field '" + name + "'");
}

}  // namespace

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double json_number(const Json& value, const char* what) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) return evaluate_expression(value.get<std::string>());
    throw ConfigError(std::string(what) + " must be a number or an expression string");
}

Interval json_interval(const Json& value, const char* what) {
    if (!value.is_array() || value.size() != 2) throw ConfigError(std::string(what) + " must be a pair [lo, hi]");
    return {json_number(value[0], what), json_number(value[1], what)};
}

Json to_json(const RectangleGeometry& g) { return {{"ell1", g.ell1()}, {"ell2", g.ell2()}}; }

Json to_json(const ObservationSpec& spec) {
    Json j{{"region", region_name(spec.region)}, {"field", to_string(spec.field)}, {"model", to_string(spec.model)}};
    if (!std::holds_alternative<region::OpenRect>(spec.region)) j["T"] = spec.T;
    std::visit(overloaded{
                   [&](const region::VerticalSegments& r) {
                       Json segments = Json::array();
                       for (const auto& s : r.segments) {
                           segments.push_back({{"alpha", s.alpha}, {"x2", interval_json(s.span)}});
                       }
                       j["segments"] = segments;
                   },
                   [&](const region::VerticalStrip& r) { j["x1"] = interval_json(r.x1); },
                   [&](const region::HorizontalStrip& r) { j["x2"] = interval_json(r.x2); },
                   [&](const region::CrossStrips& r) {
                       j["x1"] = interval_json(r.x1);
                       j["x2"] = interval_json(r.x2);
                   },
                   [&](const region::VerticalLine& r) { j["alpha"] = r.alpha; },
                   [&](const region::HorizontalLine& r) { j["beta"] = r.beta; },
                   [&](const region::OpenRect& r) {
                       j["t"] = interval_json(r.t);
                       j["x2"] = interval_json(r.x2);
                       j["alpha"] = r.alpha;
                   },
                   [](const auto&) {},
               },
               spec.region);
    return j;
}

Json to_json(const EnergyWeight& w) {
    Json j{{"model", to_string(w.model)}, {"scale", w.scale}};
    if (w.model == Model::plate) j["s"] = w.s;
    return j;
}

Json to_json(const SpectralState& state) {
    const ModeSet& modes = state.mode_set();
    Json coefficients = Json::array();
    for (std::size_t m = 0; m < modes.size(); ++m) {
        const Complex a = state.a(m);
        const Complex b = state.b(m);
        coefficients.push_back({modes[m].k1, modes[m].k2, a.real(), a.imag(), b.real(), b.imag()});
    }
    return {{"geometry", to_json(modes.geometry())},
            {"K1", modes.K1()},
            {"K2", modes.K2()},
            {"coefficients", coefficients}};
}

SpectralState state_from_json(const Json& j) {
    try {
        const Json& g = j.at("geometry");
        const RectangleGeometry geometry(json_number(g.at("ell1"), "ell1"), json_number(g.at("ell2"), "ell2"));
        auto modes = build_mode_set(geometry, j.at("K1").get<int>(), j.at("K2").get<int>());
        SpectralState state(modes);
        for (const Json& row : j.at("coefficients")) {
            if (!row.is_array() || row.size() != 6) throw ConfigError("coefficient rows need 6 entries");
            const int k1 = row[0].get<int>();
            const int k2 = row[1].get<int>();
            state.set(modes->index_of(k1, k2), {row[2].get<double>(), row[3].get<double>()},
                      {row[4].get<double>(), row[5].get<double>()});
        }
        return state;
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed state JSON: ") + e.what());
    }
}

Json to_json(const GramForm& gram) {
    const ModeSet& modes = gram.mode_set();
    Json order = Json::array();
    for (std::size_t m = 0; m < modes.size(); ++m) {
        order.push_back({modes[m].k1, modes[m].k2, "a"});
        order.push_back({modes[m].k1, modes[m].k2, "b"});
    }
    Json terms = Json::array();
    for (const auto& t : gram.terms()) terms.push_back(to_json(t));
    Json rows = Json::array();
    const auto& G = gram.matrix();
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < G.cols(); ++k) row.push_back(complex_json(G(i, k)));
        rows.push_back(std::move(row));
    }
    return {{"geometry", to_json(modes.geometry())},
            {"K1", modes.K1()},
            {"K2", modes.K2()},
            {"index_order", order},
            {"terms", terms},
            {"matrix", rows}};
}

ObservationSpec spec_from_json(const Json& j) {
    try {
        const std::string kind = j.at("region").get<std::string>();
        const Field field = field_from_string(j.at("field").get<std::string>());
        const Model model = j.at("model").get<std::string>() == "plate" ? Model::plate : Model::wave;
        const double T = j.contains("T") ? j.at("T").get<double>() : 0.0;
        Region region;
        if (kind == "vertical_segments") {
            region::VerticalSegments r;
            for (const Json& s : j.at("segments")) {
                r.segments.push_back({s.at("alpha").get<double>(), json_interval(s.at("x2"), "x2")});
            }
            region = r;
        } else if (kind == "boundary_bottom") {
            region = region::BoundaryEdgeBottom{};
        } else if (kind == "boundary_left") {
            region = region::BoundaryEdgeLeft{};
        } else if (kind == "boundary_gamma0") {
            region = region::BoundaryGamma0{};
        } else if (kind == "vertical_strip") {
            region = region::VerticalStrip{json_interval(j.at("x1"), "x1")};
        } else if (kind == "horizontal_strip") {
            region = region::HorizontalStrip{json_interval(j.at("x2"), "x2")};
        } else if (kind == "cross_strips") {
            region = region::CrossStrips{json_interval(j.at("x1"), "x1"), json_interval(j.at("x2"), "x2")};
        } else if (kind == "vertical_line") {
            region = region::VerticalLine{j.at("alpha").get<double>()};
        } else if (kind == "horizontal_line") {
            region = region::HorizontalLine{j.at("beta").get<double>()};
        } else if (kind == "open_rect") {
            region = region::OpenRect{json_interval(j.at("t"), "t"), json_interval(j.at("x2"), "x2"),
                                      j.at("alpha").get<double>()};
        } else {
            throw ConfigError("unknown region '" + kind + "'");
        }
        return {region, field, T, model};
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed observation JSON: ") + e.what());
    }
}

GramForm gram_from_json(const Json& j) {
    try {
        const Json& g = j.at("geometry");
        const RectangleGeometry geometry(g.at("ell1").get<double>(), g.at("ell2").get<double>());
        auto modes = build_mode_set(geometry, j.at("K1").get<int>(), j.at("K2").get<int>());
        const Json& order = j.at("index_order");
        const auto dim = static_cast<Eigen::Index>(modes->dimension());
        if (order.size() != modes->dimension()) throw ConfigError("index_order does not match the truncation");
        for (std::size_t m = 0; m < modes->size(); ++m) {
            for (int branch = 0; branch < 2; ++branch) {
                const Json& e = order.at(2 * m + static_cast<std::size_t>(branch));
                if (e.at(0).get<int>() != (*modes)[m].k1 || e.at(1).get<int>() != (*modes)[m].k2 ||
                    e.at(2).get<std::string>() != (branch == 0 ? "a" : "b")) {
                    throw ConfigError("index_order differs from the library mode order");
                }
            }
        }
        const Json& rows = j.at("matrix");
        if (static_cast<Eigen::Index>(rows.size()) != dim) throw ConfigError("matrix has the wrong number of rows");
        Eigen::MatrixXcd G(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            const Json& row = rows.at(static_cast<std::size_t>(r));
            if (static_cast<Eigen::Index>(row.size()) != dim) throw ConfigError("matrix row has the wrong length");
            for (Eigen::Index c = 0; c < dim; ++c) {
                const Json& z = row.at(static_cast<std::size_t>(c));
                G(r, c) = {z.at(0).get<double>(), z.at(1).get<double>()};
            }
        }
        std::vector<ObservationSpec> terms;
        for (const Json& t : j.at("terms")) terms.push_back(spec_from_json(t));
        return GramForm(modes, std::move(G), std::move(terms));
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed Gram JSON: ") + e.what());
    }
}

Json to_json(const ConstantReport& r, bool include_argmin) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back(to_json(t));
    Json j{{"terms", terms},
           {"weight", to_json(r.weight)},
           {"K1", r.K1},
           {"K2", r.K2},
           {"c_min", r.c_min},
           {"c_max", r.c_max},
           {"rayleigh_residual", r.rayleigh_residual},
           {"admissible_dimension", r.admissible_dimension}};
    if (include_argmin && r.argmin_state) j["argmin_state"] = to_json(*r.argmin_state);
    return j;
}

Json to_json(const Prediction& p) {
    Json j{{"has_formula", p.has_formula}};
    if (!p.has_formula) return j;
    j["T2_threshold"] = p.T2_threshold;
    j["T_threshold"] = p.T_threshold;
    j["above_threshold"] = p.above_threshold;
    j["c"] = p.c ? Json(*p.c) : Json(nullptr);
    return j;
}

Json to_json(const VerificationReport& r) {
    return {{"scenario", to_string(r.scenario)},
            {"prediction", to_json(r.prediction)},
            {"empirical", to_json(r.empirical)},
            {"states_checked", r.states_checked},
            {"zero_states_skipped", r.zero_states_skipped},
            {"min_ratio", r.min_ratio ? Json(*r.min_ratio) : Json(nullptr)},
            {"samples_pass", r.samples_pass},
            {"eigen_pass", r.eigen_pass},
            {"pass", r.pass}};
}

Json to_json(const MabResult& r) {
    return {{"value", r.value},
            {"attained_n", r.attained_n == 0 ? Json("limit") : Json(r.attained_n)},
            {"cutoff", r.cutoff},
            {"certified", r.certified}};
}

Json to_json(const SymmetryConstants& s) {
    return {{"p", s.p}, {"alpha", s.alpha}, {"m_p", s.m_p}, {"M_p", s.M_p}};
}

Json to_json(const AlgebraicPointSet& points, const DiophantineReport& report) {
    Json theta = Json::array();
    for (long double t : points.theta) theta.push_back(static_cast<double>(t));
    return {{"M", report.M},
            {"generator", points.generator},
            {"field_degree", points.field_degree},
            {"theta", theta},
            {"alphas", points.alphas},
            {"ell1", points.ell1},
            {"K_max", report.K_max},
            {"gamma_hat", report.gamma_hat},
            {"argmin_k", report.argmin_k},
            {"assumption", "rational independence of theta_1..theta_M and 1 follows from the construction and is "
                           "not checked at runtime"}};
}

Json to_json(const InequalityCheck& c) { return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}}; }

}  // namespace obslab

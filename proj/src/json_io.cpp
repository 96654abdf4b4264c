#include "wq/json_io.hpp"

#include <sstream>

namespace wq {

namespace {

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Json to_json(const GaussianRational& v) {
    return Json{{"re", rat_to_string(v.re())}, {"im", rat_to_string(v.im())}};
}

GaussianRational gauss_from_json(const Json& j) {
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    return {rat_from_string(j.at("re").get<std::string>()), rat_from_string(j.at("im").get<std::string>())};
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (int k = 0; k < p.arity(); ++k) exps.push_back(static_cast<int>(e.e[k]));
        terms.push_back(Json{{"exp", exps}, {"c", to_json(c)}});
    }
    return Json{{"arity", p.arity()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
    int arity = j.at("arity").get<int>();
    MultiPoly p = MultiPoly::zero(arity);
    for (const auto& term : j.at("terms")) {
        ExpVec e;
        const auto& exps = term.at("exp");
        for (std::size_t k = 0; k < exps.size(); ++k) e.e[k] = static_cast<std::uint8_t>(exps[k].get<int>());
        p.add_term(e, gauss_from_json(term.at("c")));
    }
    return p;
}

Json to_json(const UhElement& u) {
    Json terms = Json::array();
    for (const auto& [mask, p] : u.terms()) terms.push_back(Json{{"mask", mask}, {"coeff", to_json(p)}});
    return Json{{"arity", u.arity()}, {"terms", terms}, {"text", u.str()}};
}

UhElement uh_from_json(const Json& j) {
    UhElement u(j.at("arity").get<int>());
    for (const auto& term : j.at("terms"))
        u.add_term(term.at("mask").get<std::uint32_t>(), poly_from_json(term.at("coeff")));
    return u;
}

Json to_json(const WGenSet& g) {
    auto list = [](const std::vector<UhElement>& v) {
        Json out = Json::array();
        for (const auto& e : v) out.push_back(to_json(e));
        return out;
    };
    return Json{{"n", g.n},
                {"phi", list(g.phi)},
                {"z", list(g.z)},
                {"u_even", list(g.u_even)},
                {"u_odd", list(g.u_odd)}};
}

WGenSet wgens_from_json(const Json& j) {
    WGenSet g;
    g.n = j.at("n").get<int>();
    auto list = [](const Json& arr) {
        std::vector<UhElement> out;
        for (const auto& e : arr) out.push_back(uh_from_json(e));
        return out;
    };
    g.phi = list(j.at("phi"));
    g.z = list(j.at("z"));
    g.u_even = list(j.at("u_even"));
    g.u_odd = list(j.at("u_odd"));
    return g;
}

Json to_json(const RationalSeries& s) {
    return Json{{"num", scalar_list_json(s.num())}, {"den", scalar_list_json(s.den())}};
}

RationalSeries series_from_json(const Json& j) {
    return RationalSeries(scalar_list_from_json(j.at("num")), scalar_list_from_json(j.at("den")));
}

Json to_json(const SuperModule& m) {
    auto [d0, d1] = m.graded_dims();
    Json grading = Json::array();
    for (Eigen::Index k = 0; k < m.dim(); ++k) grading.push_back(m.grading(k) == GaussianRational(1) ? 1 : -1);
    Json actions = Json::object();
    for (const auto& [label, mat] : m.actions) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < mat.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j2 = 0; j2 < mat.cols(); ++j2) row.push_back(mat(i, j2).str());
            rows.push_back(row);
        }
        actions[label] = rows;
    }
    return Json{{"dims", Json::array({d0, d1})}, {"grading", grading}, {"actions", actions}};
}

SuperModule module_from_json(const Json& j) {
    SuperModule m;
    const auto& grading = j.at("grading");
    m.grading = VectorXg(static_cast<Eigen::Index>(grading.size()));
    for (std::size_t k = 0; k < grading.size(); ++k) m.grading(static_cast<Eigen::Index>(k)) = GaussianRational(grading[k].get<int>());
    for (const auto& [label, rows] : j.at("actions").items()) {
        MatrixXg mat(static_cast<Eigen::Index>(rows.size()),
                     rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c)
                mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                    GaussianRational::parse(rows[i][c].get<std::string>());
        m.actions[label] = std::move(mat);
    }
    return m;
}

Json scalar_list_json(std::span<const GaussianRational> values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

std::vector<GaussianRational> scalar_list_from_json(const Json& j) {
    std::vector<GaussianRational> out;
    for (const auto& v : j) out.push_back(gauss_from_json(v));
    return out;
}

std::vector<GaussianRational> parse_scalar_list(const std::string& text) {
    std::vector<GaussianRational> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(GaussianRational::parse(token));
    }
    return out;
}

}  // namespace wq

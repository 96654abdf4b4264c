#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wq/json_io.hpp"
#include "wq/meataxe.hpp"
#include "wq/suite.hpp"
#include "wq/symmetric.hpp"
#include "wq/yangian.hpp"

namespace {

using namespace wq;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) {
        os << k << ": ";
        if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
        os << "\n";
    }
    return os.str();
}

int cmd_gens(int n, const std::string& format, const std::string& out, const std::string& cache_dir) {
    const WGenSet& g = cached_wgens(n, cache_dir);
    if (format == "json") {
        emit(to_json(g).dump(2) + "\n", out);
        return kExitPass;
    }
    std::ostringstream os;
    for (int k = 0; k < n; ++k) os << "phi_" << k << " = " << g.phi[k].str() << "\n";
    for (int k = 0; k < n; ++k) os << "z_" << k << " = " << g.z[k].str() << "\n";
    for (int k = 0; k <= n; ++k) {
        os << "u_" << k << "(0) = " << g.u_even[k].str() << "\n";
        os << "u_" << k << "(1) = " << g.u_odd[k].str() << "\n";
    }
    emit(os.str(), out);
    return kExitPass;
}

int cmd_verify(SuiteConfig cfg, const std::string& format, const std::string& out) {
    Report report = run_suites(cfg);
    if (format == "json")
        emit(report_json(report).dump(2) + "\n", out);
    else
        emit(report_text(report), out);
    return report.pass() ? kExitPass : kExitCheckFailed;
}

Json module_report(const SuperModule& m, int n, const std::vector<GaussianRational>& s) {
    auto [d0, d1] = m.graded_dims();
    auto verdict = is_simple(m, w_labels(n));
    Json j;
    j["schema"] = kSchema;
    j["dims"] = Json::array({d0, d1});
    switch (verdict.verdict) {
        case SimpleVerdict::SimpleM: j["simple"] = "SimpleM"; break;
        case SimpleVerdict::SimpleQ: j["simple"] = "SimpleQ"; break;
        case SimpleVerdict::Reducible: j["simple"] = "Reducible"; break;
    }
    j["certificate"] = verdict.certificate;
    if (verdict.verdict == SimpleVerdict::Reducible) {
        Json w = Json::array();
        for (Eigen::Index c = 0; c < verdict.witness.cols(); ++c) {
            Json col = Json::array();
            for (Eigen::Index i = 0; i < verdict.witness.rows(); ++i) col.push_back(verdict.witness(i, c).str());
            w.push_back(col);
        }
        j["witness"] = w;
    } else {
        j["type"] = verdict.verdict == SimpleVerdict::SimpleQ ? "Q" : "M";
    }
    j["char_series"] = to_json(char_series(s));
    Json cr = Json::array();
    for (const auto& v : core(s).values) cr.push_back(v.str());
    j["core"] = cr;
    return j;
}

int cmd_module_v(const std::string& roots_text, const std::string& format, const std::string& out,
                 const std::string& cache_dir) {
    RootVector roots{parse_scalar_list(roots_text)};
    if (roots.n() == 0) throw CLI::ValidationError("--roots must list at least one root");
    auto s = roots.s();
    SuperModule m = w_action(build_V(roots), cached_wgens(roots.n(), cache_dir), s);
    Json j = module_report(m, roots.n(), s);
    j["kind"] = "module-v";
    Json rs = Json::array();
    for (const auto& rt : roots.roots) rs.push_back(rt.str());
    j["roots"] = rs;
    Json ss = Json::array();
    for (const auto& v : s) ss.push_back(v.str());
    j["s"] = ss;
    emit(render(j, format), out);
    return kExitPass;
}

int cmd_module_s(int r, const std::string& t_text, const std::string& lroots_text, const std::string& format,
                 const std::string& out) {
    SModuleSpec spec;
    spec.r = r;
    spec.t = parse_scalar_list(t_text);
    spec.lambda_roots = parse_scalar_list(lroots_text);
    spec.validate();
    SuperModule m = build_S(spec);
    Json j = module_report(m, spec.n(), spec.lambda());
    j["kind"] = "module-s";
    j["r"] = spec.r;
    Json tt = Json::array();
    for (const auto& v : spec.t) tt.push_back(v.str());
    j["t"] = tt;
    Json lr = Json::array();
    for (const auto& v : spec.lambda_roots) lr.push_back(v.str());
    j["lambda_roots"] = lr;
    emit(render(j, format), out);
    return kExitPass;
}

int cmd_core(const std::string& s_text, const std::string& format, const std::string& out) {
    auto s = parse_scalar_list(s_text);
    CoreData c = core(s);
    Json j;
    j["schema"] = kSchema;
    Json vals = Json::array();
    for (const auto& v : c.values) vals.push_back(v.str());
    j["core"] = vals;
    j["length"] = c.length();
    emit(render(j, format), out);
    return kExitPass;
}

int cmd_char(const std::string& s_text, int order, const std::string& format, const std::string& out) {
    auto s = parse_scalar_list(s_text);
    RationalSeries chi = char_series(s);
    auto expansion = chi.expand(order);
    Json j;
    j["schema"] = kSchema;
    j["series"] = to_json(chi);
    Json exp = Json::array();
    for (const auto& v : expansion) exp.push_back(v.str());
    j["expansion"] = exp;
    if (auto rec = find_recurrence(expansion)) {
        Json c = Json::array();
        for (const auto& v : rec->c) c.push_back(v.str());
        j["recurrence"] = Json{{"c", c}, {"onset", rec->onset}};
    } else {
        j["recurrence"] = nullptr;
    }
    emit(render(j, format), out);
    return kExitPass;
}

int cmd_iso(int r1, const std::string& t1, const std::string& l1, int r2, const std::string& t2,
            const std::string& l2, const std::string& format, const std::string& out) {
    SModuleSpec a, b;
    a.r = r1;
    a.t = parse_scalar_list(t1);
    a.lambda_roots = parse_scalar_list(l1);
    b.r = r2;
    b.t = parse_scalar_list(t2);
    b.lambda_roots = parse_scalar_list(l2);
    bool iso = iso_class_S(a, b);
    Json j;
    j["schema"] = kSchema;
    j["isomorphic"] = iso;
    emit(render(j, format), out);
    return kExitPass;
}

int cmd_yangian_verify(int n, int order_max, std::uint64_t seed, const std::string& format,
                       const std::string& out, const std::string& cache_dir) {
    SuiteConfig cfg;
    cfg.n_max = n;
    cfg.order = order_max;
    cfg.seed = seed;
    cfg.suites = {"yangian"};
    cfg.cache_dir = cache_dir;
    return cmd_verify(cfg, format, out);
}

int cmd_yangian_diagram(int m, int n, int order, const std::string& format, const std::string& out) {
    DiagramReport rep = check_diagram(m, n, order);
    Json j;
    j["schema"] = kSchema;
    j["m"] = m;
    j["n"] = n;
    j["order"] = order;
    j["commutes"] = rep.commutes;
    j["convention"] = rep.convention;
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    emit(render(j, format), out);
    return rep.commutes ? kExitPass : kExitCheckFailed;
}

int cmd_yangian_twist(const std::string& f_text, const std::string& g_text, const std::string& format,
                      const std::string& out) {
    GammaF f(parse_scalar_list(f_text));
    GammaF g(parse_scalar_list(g_text));
    GammaF fg = f * g;
    const int order = 2 * (f.degree() + g.degree()) + 2;
    bool holds = twist(gamma_module(f, order), g) == gamma_module(fg, order);
    Json j;
    j["schema"] = kSchema;
    Json coeffs = Json::array();
    for (const auto& v : fg.coeffs()) coeffs.push_back(v.str());
    j["product_coefficients"] = coeffs;
    j["gamma_tensor_identity"] = holds;
    emit(render(j, format), out);
    return holds ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact W(Q(n)) / YQ(1) computer-algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", out_path, cache_flag;
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path);
    app.add_option("--cache-dir", cache_flag);

    auto* gens = app.add_subcommand("gens", "Print the W-algebra generators for one n");
    int gens_n = 2;
    gens->add_option("--n", gens_n)->required();

    auto* verify = app.add_subcommand("verify", "Run identity suites");
    SuiteConfig cfg;
    std::string suites_text = "all";
    verify->add_option("--suite", suites_text, "comma list of uh,wgen,modules,yangian,all");
    verify->add_option("--n-max", cfg.n_max);
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--trials", cfg.trials);
    verify->add_option("--order", cfg.order);

    auto* module = app.add_subcommand("module", "Build and analyze a module");
    module->require_subcommand(1);
    auto* module_v = module->add_subcommand("v", "Clifford module V(s) from square roots");
    std::string roots_text;
    module_v->add_option("--roots", roots_text)->required();
    auto* module_s = module->add_subcommand("s", "Simple module S(t, lambda)");
    std::string t_text, lroots_text;
    int spec_r = 0;
    module_s->add_option("--t", t_text);
    module_s->add_option("--lambda-roots", lroots_text);
    module_s->add_option("--r", spec_r);

    auto* core_cmd = app.add_subcommand("core", "Core of an s-vector");
    std::string s_text;
    core_cmd->add_option("--s", s_text)->required();

    auto* char_cmd = app.add_subcommand("char", "Central character series of an s-vector");
    std::string char_s;
    int char_order = 8;
    char_cmd->add_option("--s", char_s)->required();
    char_cmd->add_option("--order", char_order);

    auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test for two S(t, lambda) specs");
    std::string iso_t1, iso_l1, iso_t2, iso_l2;
    int iso_r1 = 0, iso_r2 = 0;
    iso_cmd->add_option("--t", iso_t1);
    iso_cmd->add_option("--lambda-roots", iso_l1);
    iso_cmd->add_option("--r", iso_r1);
    iso_cmd->add_option("--t2", iso_t2);
    iso_cmd->add_option("--lambda-roots2", iso_l2);
    iso_cmd->add_option("--r2", iso_r2);

    auto* yangian = app.add_subcommand("yangian", "Super Yangian layer");
    yangian->require_subcommand(1);
    auto* y_verify = yangian->add_subcommand("verify", "Relation checks on phi_n images");
    int y_n = 2, y_order = 4;
    std::uint64_t y_seed = 1;
    y_verify->add_option("--n", y_n);
    y_verify->add_option("--order-max", y_order);
    y_verify->add_option("--seed", y_seed);
    auto* y_diagram = yangian->add_subcommand("diagram", "Coproduct diagram check");
    int d_m = 1, d_n = 1, d_order = 4;
    y_diagram->add_option("--m", d_m);
    y_diagram->add_option("--n", d_n);
    y_diagram->add_option("--order", d_order);
    auto* y_twist = yangian->add_subcommand("twist", "Gamma_f tensor Gamma_g = Gamma_fg");
    std::string f_text, g_text;
    y_twist->add_option("--f", f_text)->required();
    y_twist->add_option("--g", g_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::string cache_dir = resolve_cache_dir(cache_flag);
        if (*gens) {
            if (gens_n < 1 || gens_n > 10) {
                std::cerr << "error: --n out of range [1, 10]\n";
                return kExitUsage;
            }
            return cmd_gens(gens_n, format, out_path, cache_dir);
        }
        if (*verify) {
            cfg.suites.clear();
            std::istringstream is(suites_text);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                if (tok.empty()) continue;
                if (tok != "all" && tok != "uh" && tok != "wgen" && tok != "modules" && tok != "yangian") {
                    std::cerr << "error: unknown suite '" << tok << "'\n";
                    return kExitUsage;
                }
                cfg.suites.push_back(tok);
            }
            if (cfg.suites.empty()) cfg.suites = {"all"};
            cfg.cache_dir = cache_dir;
            return cmd_verify(cfg, format, out_path);
        }
        if (*module_v) return cmd_module_v(roots_text, format, out_path, cache_dir);
        if (*module_s) return cmd_module_s(spec_r, t_text, lroots_text, format, out_path);
        if (*core_cmd) return cmd_core(s_text, format, out_path);
        if (*char_cmd) return cmd_char(char_s, char_order, format, out_path);
        if (*iso_cmd) return cmd_iso(iso_r1, iso_t1, iso_l1, iso_r2, iso_t2, iso_l2, format, out_path);
        if (*y_verify) return cmd_yangian_verify(y_n, y_order, y_seed, format, out_path, cache_dir);
        if (*y_diagram) return cmd_yangian_diagram(d_m, d_n, d_order, format, out_path);
        if (*y_twist) return cmd_yangian_twist(f_text, g_text, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

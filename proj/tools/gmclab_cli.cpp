// gmclab command-line front end. Every run writes a JSON report
// {schema_version, command, params, seed, versions, results, residuals, timing}.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmclab/barnes_beta.hpp"
#include "gmclab/errors.hpp"
#include "gmclab/gmc_laws.hpp"
#include "gmclab/gmc_sim.hpp"
#include "gmclab/multigamma.hpp"
#include "gmclab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using gmclab::cplx;

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.1.0";

enum class Format { json, csv, table };

struct Report {
    json results = json::array();
    json residuals = json::array();
    std::string csv;  // set by commands that produce sample dumps
    bool failed = false;
};

json number(cplx z) {
    if (z.imag() == 0.0) return z.real();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json suite_json(const gmclab::SuiteReport& s, Report& rep) {
    json checks = json::array();
    for (const auto& c : s.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"reference", c.reference},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
        rep.residuals.push_back({{"name", s.name + ": " + c.name}, {"residual", c.residual}});
    }
    if (!s.pass()) rep.failed = true;
    return {{"suite", s.name},  {"title", s.title},   {"pass", s.pass()}, {"demo", s.demo},
            {"max_residual", s.max_residual()}, {"seconds", s.seconds}, {"notes", s.notes}, {"checks", checks}};
}

gmclab::Geometry parse_geometry(const std::string& s) {
    if (s == "interval") return gmclab::Geometry::interval;
    if (s == "circle") return gmclab::Geometry::circle;
    throw gmclab::DomainError("geometry must be interval or circle");
}

gmclab::Representation parse_representation(const std::string& s) {
    using R = gmclab::Representation;
    static const std::map<std::string, R> m = {{"double_gamma", R::double_gamma},
                                               {"infinite_product", R::infinite_product},
                                               {"levy_khinchine", R::levy_khinchine},
                                               {"asymptotic_series", R::asymptotic_series},
                                               {"decomposition", R::decomposition}};
    auto it = m.find(s);
    if (it == m.end()) throw gmclab::DomainError("unknown representation '" + s + "'");
    return it->second;
}

std::string samples_csv(const gmclab::SampleBatch& b) {
    std::ostringstream os;
    gmclab::write_csv(b, os);
    return os.str();
}

// Options shared by the commands below; bound into CLI11 once.
struct Args {
    std::uint64_t seed = 0;
    int threads = 0;
    std::string output;
    std::string format = "json";

    std::vector<double> a{1.0, 2.0};
    std::vector<double> b{1.0, 1.0, 1.0};
    double w = 1.0, wi = 0.0;
    double q = 1.0, qi = 0.0;
    std::string geometry = "interval";
    double tau = 2.0, lambda1 = 0.0, lambda2 = 0.0;
    std::string representation = "double_gamma";
    std::string form = "all";
    int max_order = 3;
    std::size_t n = 1000;
    std::uint64_t stream = 0;
    int N = 1024;
    double kappa = 0.0;
    double beta = 0.5;
    int ipr_n = 2;
    std::vector<int> orders{1, 2};
    std::vector<int> sizes;
    std::string suite;
    int criterion = 0;
    double mc_scale = 1.0;
    std::string report_file;
};

struct Command {
    std::string name;
    CLI::App* app = nullptr;
    std::function<void(Report&)> run;
};

void add_law_options(CLI::App* c, Args& a) {
    c->add_option("--geometry", a.geometry, "interval or circle")->capture_default_str();
    c->add_option("--tau", a.tau, "1/beta^2")->capture_default_str();
    c->add_option("--lambda1", a.lambda1)->capture_default_str();
    c->add_option("--lambda2", a.lambda2)->capture_default_str();
}

void add_field_options(CLI::App* c, Args& a) {
    c->add_option("--geometry", a.geometry, "interval or circle")->capture_default_str();
    c->add_option("--N", a.N, "grid size, power of two")->capture_default_str();
    c->add_option("--kappa", a.kappa, "diagonal constant")->capture_default_str();
    c->add_option("--stream", a.stream)->capture_default_str();
}

gmclab::GMCLawParams law_params(const Args& a) {
    gmclab::GMCLawParams p{parse_geometry(a.geometry), a.tau, a.lambda1, a.lambda2};
    p.validate();
    return p;
}

gmclab::FieldConfig field_config(const Args& a) {
    gmclab::FieldConfig c{parse_geometry(a.geometry), a.N, a.kappa, a.seed, a.stream};
    c.validate();
    return c;
}

gmclab::BarnesBetaParams beta_params(const Args& a) {
    gmclab::BarnesBetaParams p{a.a, a.b};
    p.validate();
    return p;
}

std::vector<Command> build(CLI::App& app, Args& a) {
    using namespace gmclab;
    std::vector<Command> cmds;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* c = parent->add_subcommand(name, desc);
        return c;
    };

    // gamma / sine
    auto* gamma = app.add_subcommand("gamma", "multiple gamma function");
    auto* gamma_eval = leaf(gamma, "eval", "log Gamma_M(w|a)");
    gamma_eval->add_option("--a", a.a, "periods")->delimiter(',')->capture_default_str();
    gamma_eval->add_option("--w", a.w)->capture_default_str();
    gamma_eval->add_option("--wi", a.wi, "imaginary part of w")->capture_default_str();
    cmds.push_back({"gamma eval", gamma_eval, [&](Report& r) {
                        auto e = log_multiple_gamma(MultiGammaParams{a.a}, cplx(a.w, a.wi));
                        r.results.push_back({{"log_value", number(e.value)},
                                             {"method", to_string(e.method)},
                                             {"error_estimate", e.error_estimate},
                                             {"shifts", e.shifts},
                                             {"warning", e.warning}});
                    }});

    auto* sine = app.add_subcommand("sine", "multiple sine function");
    auto* sine_eval = leaf(sine, "eval", "log S_M(w|a)");
    sine_eval->add_option("--a", a.a, "periods")->delimiter(',')->capture_default_str();
    sine_eval->add_option("--w", a.w)->capture_default_str();
    sine_eval->add_option("--wi", a.wi)->capture_default_str();
    cmds.push_back({"sine eval", sine_eval, [&](Report& r) {
                        cplx v = log_multiple_sine(a.a, cplx(a.w, a.wi));
                        r.results.push_back({{"log_value", number(v)}, {"value", number(std::exp(v))}});
                    }});

    // eta
    auto* eta = app.add_subcommand("eta", "Barnes beta distributions");
    auto add_beta = [&](CLI::App* c) {
        c->add_option("--a", a.a, "a_1..a_M")->delimiter(',')->capture_default_str();
        c->add_option("--b", a.b, "b_0..b_N")->delimiter(',')->capture_default_str();
    };
    auto* eta_eval = leaf(eta, "eval", "Mellin transform eta(q|a,b)");
    add_beta(eta_eval);
    eta_eval->add_option("--q", a.q)->capture_default_str();
    eta_eval->add_option("--qi", a.qi)->capture_default_str();
    cmds.push_back({"eta eval", eta_eval, [&](Report& r) {
                        auto p = beta_params(a);
                        cplx v = log_eta(p, cplx(a.q, a.qi));
                        r.results.push_back({{"params", p.describe()},
                                             {"log_value", number(v)},
                                             {"value", number(std::exp(v))}});
                    }});
    auto* eta_sample = leaf(eta, "sample", "i.i.d. samples");
    add_beta(eta_sample);
    eta_sample->add_option("--n", a.n, "sample count")->capture_default_str();
    eta_sample->add_option("--stream", a.stream)->capture_default_str();
    cmds.push_back({"eta sample", eta_sample, [&](Report& r) {
                        auto p = beta_params(a);
                        auto batch = barnes_beta_sample(p, a.n, a.seed, a.stream, a.threads);
                        json m = json::array();
                        for (int k = 1; k <= 2; ++k) {
                            auto e = sample_moment(batch.values, k);
                            m.push_back({{"k", k},
                                         {"mc", e.value},
                                         {"std_error", e.std_error},
                                         {"exact", std::exp(log_eta(p, double(k)))}});
                        }
                        r.results.push_back({{"params", p.describe()}, {"count", batch.count}, {"moments", m}});
                        r.csv = samples_csv(batch);
                    }});
    auto* eta_verify = leaf(eta, "verify", "Levy-Khinchine and functional equation residuals");
    add_beta(eta_verify);
    eta_verify->add_option("--q", a.q)->capture_default_str();
    eta_verify->add_option("--qi", a.qi)->capture_default_str();
    cmds.push_back({"eta verify", eta_verify, [&](Report& r) {
                        auto p = beta_params(a);
                        cplx q(a.q, a.qi);
                        cplx direct = log_eta(p, q), lk = levy_khinchine_log_eta(p, q);
                        r.results.push_back({{"log_value", number(direct)}, {"levy_khinchine", number(lk)}});
                        r.residuals.push_back({{"name", "levy-khinchine"}, {"residual", std::abs(lk - direct)}});
                        for (int i = 0; i < p.M() && p.variant() == BetaVariant::standard; ++i) {
                            std::vector<double> ahat = p.a;
                            ahat.erase(ahat.begin() + i);
                            cplx fe = log_eta(p, q + p.a[i]) - direct + s_log_gamma(ahat, q, p.b);
                            r.residuals.push_back(
                                {{"name", "functional equation i=" + std::to_string(i + 1)}, {"residual", std::abs(fe)}});
                        }
                    }});

    // law
    auto* law = app.add_subcommand("law", "Selberg and Morris laws");
    auto* law_eval = leaf(law, "eval", "E[M^q]");
    add_law_options(law_eval, a);
    law_eval->add_option("--q", a.q)->capture_default_str();
    law_eval->add_option("--qi", a.qi)->capture_default_str();
    law_eval->add_option("--representation", a.representation)->capture_default_str();
    cmds.push_back({"law eval", law_eval, [&](Report& r) {
                        auto p = law_params(a);
                        auto m = law_mellin(cplx(a.q, a.qi), p, parse_representation(a.representation));
                        r.results.push_back({{"value", number(m.value)},
                                             {"log_value", number(m.log_value)},
                                             {"representation", to_string(m.kind)},
                                             {"error_estimate", m.error_estimate},
                                             {"terms", m.terms}});
                    }});
    auto* law_moments = leaf(law, "moments", "integer moments, positive and negative");
    add_law_options(law_moments, a);
    law_moments->add_option("--max-order", a.max_order)->capture_default_str();
    cmds.push_back({"law moments", law_moments, [&](Report& r) {
                        auto p = law_params(a);
                        for (int n = 1; n <= a.max_order; ++n) {
                            json row{{"n", n}};
                            if (n < p.tau) {
                                double prod = p.geometry == Geometry::interval ? selberg_moment_product(n, p)
                                                                               : morris_moment_product(n, p);
                                double mel = law_mellin(double(n), p, Representation::double_gamma).value.real();
                                row["positive"] = prod;
                                r.residuals.push_back(
                                    {{"name", "moment " + std::to_string(n)}, {"residual", std::abs(mel / prod - 1.0)}});
                            }
                            double neg = negative_moment_product(n, p);
                            double meln = law_mellin(-double(n), p, Representation::double_gamma).value.real();
                            row["negative"] = neg;
                            r.residuals.push_back(
                                {{"name", "moment -" + std::to_string(n)}, {"residual", std::abs(meln / neg - 1.0)}});
                            r.results.push_back(row);
                        }
                    }});
    auto* law_samp = leaf(law, "sample", "samples through the factor decomposition");
    add_law_options(law_samp, a);
    law_samp->add_option("--n", a.n)->capture_default_str();
    law_samp->add_option("--stream", a.stream)->capture_default_str();
    cmds.push_back({"law sample", law_samp, [&](Report& r) {
                        auto p = law_params(a);
                        auto batch = law_sample(p, a.n, a.seed, a.stream, a.threads);
                        json m = json::array();
                        for (int k = 1; k < std::min(3.0, p.tau); ++k) {
                            auto e = sample_moment(batch.values, k);
                            m.push_back({{"k", k},
                                         {"mc", e.value},
                                         {"std_error", e.std_error},
                                         {"exact", law_mellin(double(k), p, Representation::double_gamma).value.real()}});
                        }
                        r.results.push_back({{"count", batch.count}, {"moments", m}});
                        r.csv = samples_csv(batch);
                    }});
    auto* law_crit = leaf(law, "critical", "critical (tau -> 1) Mellin transform");
    law_crit->add_option("--geometry", a.geometry)->capture_default_str();
    law_crit->add_option("--lambda1", a.lambda1)->capture_default_str();
    law_crit->add_option("--lambda2", a.lambda2)->capture_default_str();
    law_crit->add_option("--q", a.q)->capture_default_str();
    law_crit->add_option("--qi", a.qi)->capture_default_str();
    cmds.push_back({"law critical", law_crit, [&](Report& r) {
                        cplx v = log_critical_mellin(cplx(a.q, a.qi), parse_geometry(a.geometry), a.lambda1, a.lambda2);
                        r.results.push_back({{"log_value", number(v)}, {"value", number(std::exp(v))}});
                    }});

    // complex Selberg
    auto* cs = app.add_subcommand("complex-selberg", "continued complex Selberg integral");
    auto* cs_eval = leaf(cs, "eval", "value at q in the strip");
    cs_eval->add_option("--tau", a.tau)->capture_default_str();
    cs_eval->add_option("--lambda1", a.lambda1)->capture_default_str();
    cs_eval->add_option("--lambda2", a.lambda2)->capture_default_str();
    cs_eval->add_option("--q", a.q)->capture_default_str();
    cs_eval->add_option("--qi", a.qi)->capture_default_str();
    cs_eval->add_option("--form", a.form, "sine, gamma2 or all")->capture_default_str();
    cmds.push_back({"complex-selberg eval", cs_eval, [&](Report& r) {
                        ComplexSelbergParams p{a.tau, a.lambda1, a.lambda2};
                        p.validate();
                        cplx q(a.q, a.qi);
                        auto [lo, hi] = p.strip();
                        json row{{"strip", {lo, hi}}};
                        if (a.form == "sine" || a.form == "all")
                            row["sine"] = number(std::exp(log_complex_selberg(q, p, ComplexSelbergForm::sine)));
                        if (a.form == "gamma2" || a.form == "all")
                            row["gamma2"] = number(std::exp(log_complex_selberg(q, p, ComplexSelbergForm::gamma2)));
                        if (!row.contains("sine") && !row.contains("gamma2"))
                            throw DomainError("form must be sine, gamma2 or all");
                        if (q.imag() == 0.0 && q.real() == std::round(q.real()) && q.real() >= 1.0)
                            row["direct"] = complex_selberg_integral(int(q.real()), p);
                        r.results.push_back(row);
                    }});

    // simulate
    auto* sim = app.add_subcommand("simulate", "log-correlated field Monte Carlo");
    auto* sim_field = leaf(sim, "field", "draw fields");
    add_field_options(sim_field, a);
    sim_field->add_option("--n", a.n, "field count")->capture_default_str();
    cmds.push_back({"simulate field", sim_field, [&](Report& r) {
                        auto cfg = field_config(a);
                        auto fields = sample_field(cfg, a.n, a.threads);
                        std::ostringstream os;
                        os.precision(17);
                        os << "x";
                        for (std::size_t f = 0; f < fields.size(); ++f) os << ",field" << f;
                        os << '\n';
                        for (int i = 0; i < cfg.N; ++i) {
                            os << fields.at(0).grid[i];
                            for (const auto& fs : fields) os << ',' << fs.values[i];
                            os << '\n';
                        }
                        r.csv = os.str();
                        double s2 = 0.0;
                        for (const auto& fs : fields) s2 += fs.values[0] * fs.values[0];
                        r.results.push_back({{"config_hash", cfg.hash()},
                                             {"count", fields.size()},
                                             {"point_variance_target", FieldGenerator(cfg).point_variance()},
                                             {"point_variance_empirical", s2 / double(fields.size())}});
                    }});
    auto* sim_mom = leaf(sim, "moments", "total-mass moments against the closed forms");
    add_field_options(sim_mom, a);
    sim_mom->add_option("--beta", a.beta)->capture_default_str();
    sim_mom->add_option("--lambda1", a.lambda1)->capture_default_str();
    sim_mom->add_option("--lambda2", a.lambda2)->capture_default_str();
    sim_mom->add_option("--orders", a.orders)->delimiter(',')->capture_default_str();
    sim_mom->add_option("--n", a.n, "field count")->capture_default_str();
    cmds.push_back({"simulate moments", sim_mom, [&](Report& r) {
                        auto rep = moment_experiment(field_config(a), a.beta, a.lambda1, a.lambda2, a.orders, a.n,
                                                     a.threads);
                        for (const auto& [k, e] : rep.estimates) {
                            double t = rep.targets.at(k);
                            json row{
                                {"order", k}, {"value", e.value}, {"std_error", e.std_error}, {"target", t}};
                            if (auto c = rep.controlled.find(k); c != rep.controlled.end()) {
                                row["controlled_value"] = c->second.value;
                                row["controlled_std_error"] = c->second.std_error;
                            }
                            r.results.push_back(row);
                            r.residuals.push_back({{"name", "order " + std::to_string(int(k)) + " [|z|]"},
                                                   {"residual", std::abs(e.value - t) / e.std_error}});
                        }
                        r.results.push_back({{"config_hash", rep.config_hash},
                                             {"n_samples", rep.n_samples},
                                             {"wall_time", rep.wall_time},
                                             {"notes", rep.notes}});
                    }});
    auto* sim_ipr = leaf(sim, "ipr", "inverse participation ratio scaling (circle)");
    sim_ipr->add_option("--beta", a.beta)->capture_default_str();
    sim_ipr->add_option("--ipr-n", a.ipr_n, "IPR order n")->capture_default_str();
    sim_ipr->add_option("--n", a.n, "fields per size")->capture_default_str();
    sim_ipr->add_option("--sizes", a.sizes, "grid sizes (default 2^8..2^12)")->delimiter(',');
    sim_ipr->add_option("--stream", a.stream)->capture_default_str();
    cmds.push_back({"simulate ipr", sim_ipr, [&](Report& r) {
                        FieldConfig base{Geometry::circle, 256, 0.0, a.seed, a.stream};
                        std::vector<int> sizes = a.sizes.empty() ? std::vector<int>{256, 512, 1024, 2048, 4096} : a.sizes;
                        auto rep = ipr_experiment(base, a.beta, a.ipr_n, a.n, sizes, a.threads);
                        for (std::size_t i = 0; i < rep.sizes.size(); ++i)
                            r.results.push_back({{"N", rep.sizes[i]},
                                                 {"ratio", rep.ratios[i].value},
                                                 {"std_error", rep.ratios[i].std_error},
                                                 {"predicted", rep.predicted[i]}});
                        r.results.push_back({{"fitted_slope", rep.fitted_slope},
                                             {"slope_std_error", rep.slope_std_error},
                                             {"predicted_slope", rep.predicted_slope},
                                             {"prefactor", rep.prefactor},
                                             {"predicted_prefactor", rep.predicted_prefactor},
                                             {"status", "conjecture-dependent"}});
                        r.residuals.push_back(
                            {{"name", "slope"}, {"residual", std::abs(rep.fitted_slope - rep.predicted_slope)}});
                    }});
    auto* sim_max = leaf(sim, "max", "maximum of the field (demo)");
    sim_max->add_option("--n", a.n, "fields per size")->capture_default_str();
    sim_max->add_option("--sizes", a.sizes, "grid sizes (default 2^10..2^12)")->delimiter(',');
    sim_max->add_option("--geometry", a.geometry)->capture_default_str();
    sim_max->add_option("--kappa", a.kappa)->capture_default_str();
    sim_max->add_option("--stream", a.stream)->capture_default_str();
    cmds.push_back({"simulate max", sim_max, [&](Report& r) {
                        FieldConfig base{parse_geometry(a.geometry), 1024, a.kappa, a.seed, a.stream};
                        std::vector<int> sizes = a.sizes.empty() ? std::vector<int>{1024, 2048, 4096} : a.sizes;
                        auto rep = maximum_experiment(base, a.n, sizes, a.threads);
                        for (std::size_t i = 0; i < rep.sizes.size(); ++i)
                            r.results.push_back({{"N", rep.sizes[i]},
                                                 {"mean_max", rep.mean_max[i].value},
                                                 {"std_error", rep.mean_max[i].std_error},
                                                 {"quantiles_10_50_90", rep.quantiles[i]},
                                                 {"trend_2logN_minus_1.5loglogN",
                                                  2.0 * std::log(double(rep.sizes[i])) -
                                                      1.5 * std::log(std::log(double(rep.sizes[i])))}});
                        r.results.push_back({{"increments", rep.increments},
                                             {"coef_logN", rep.coef_logN},
                                             {"coef_loglogN", rep.coef_loglogN},
                                             {"status", "demo only; conjectural asymptotics"}});
                    }});

    // verify
    auto* ver = app.add_subcommand("verify", "named verification suites");
    ver->add_option("--suite", a.suite, "multigamma|barnesbeta|selberg|morris|critical|complex|involution|mc");
    ver->add_option("--criterion", a.criterion, "acceptance criterion 1..13");
    ver->add_option("--mc-scale", a.mc_scale, "scales Monte Carlo sample counts")->capture_default_str();
    cmds.push_back({"verify", ver, [&](Report& r) {
                        VerifyOptions o;
                        o.seed = a.seed ? a.seed : o.seed;
                        o.threads = a.threads;
                        o.mc_scale = a.mc_scale;
                        if (a.suite.empty() == (a.criterion == 0))
                            throw DomainError("verify: give exactly one of --suite or --criterion");
                        auto s = a.suite.empty() ? acceptance_criterion(a.criterion, o) : run_suite(a.suite, o);
                        r.results.push_back(suite_json(s, r));
                    }});

    return cmds;
}

// params of the invoked command: option name -> value(s), defaults included
json collect_params(const CLI::App* c) {
    json p = json::object();
    for (const CLI::Option* o : c->get_options()) {
        if (o->get_lnames().empty()) continue;
        const std::string name = o->get_lnames().front();
        if (o->count() > 0) {
            const auto& res = o->results();
            p[name] = res.size() == 1 ? json(res.front()) : json(res);
        } else if (!o->get_default_str().empty()) {
            p[name] = o->get_default_str();
        }
    }
    return p;
}

int run(int argc, char** argv);

// rebuilds an argv from a saved report and runs it again
int rerun(const std::string& path, const std::string& output) {
    std::ifstream in(path);
    if (!in) throw gmclab::DomainError("cannot open report '" + path + "'");
    json rep = json::parse(in);
    std::vector<std::string> args{"gmclab"};
    if (rep.contains("seed")) args.insert(args.end(), {"--seed", std::to_string(rep["seed"].get<std::uint64_t>())});
    if (!output.empty()) args.insert(args.end(), {"--output", output});
    std::istringstream words(rep.at("command").get<std::string>());
    for (std::string w; words >> w;) args.push_back(w);
    for (auto& [k, v] : rep.at("params").items()) {
        args.push_back("--" + k);
        if (v.is_array()) {
            std::string joined;
            for (const auto& x : v) joined += (joined.empty() ? "" : ",") + x.get<std::string>();
            args.push_back(joined);
        } else {
            args.push_back(v.get<std::string>());
        }
    }
    std::vector<char*> cargv;
    for (auto& s : args) cargv.push_back(s.data());
    return run(int(cargv.size()), cargv.data());
}

void emit(const json& report, const Report& r, Format fmt, const std::string& output) {
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw gmclab::DomainError("cannot write '" + output + "'");
    }
    std::ostream& os = output.empty() ? std::cout : file;
    if (fmt == Format::csv) {
        if (!r.csv.empty()) {
            os << r.csv;
            return;
        }
        os << "key,value\n";
        for (const auto& row : report["results"])
            for (auto& [k, v] : row.items()) os << k << ',' << v.dump() << '\n';
        return;
    }
    if (fmt == Format::table) {
        for (const auto& row : report["results"]) {
            for (auto& [k, v] : row.items())
                if (!v.is_array() || v.size() < 8) os << "  " << k << " = " << v.dump() << '\n';
            os << '\n';
        }
        for (const auto& res : report["residuals"])
            os << "  residual " << res["name"].get<std::string>() << " = " << res["residual"].dump() << '\n';
        return;
    }
    os << report.dump(2) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"gmclab: Barnes beta distributions and Selberg/Morris laws of GMC total mass"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file overriding defaults");
    Args a;
    app.add_option("--seed", a.seed, "random seed")->capture_default_str();
    app.add_option("--threads", a.threads, "worker threads (0: GMCLAB_THREADS or hardware)")->capture_default_str();
    app.add_option("--output", a.output, "report file (default stdout)");
    app.add_option("--format", a.format, "json, csv or table")->capture_default_str();
    auto* re = app.add_subcommand("rerun", "re-run the command stored in a JSON report");
    re->add_option("report", a.report_file)->required();
    auto cmds = build(app, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (re->parsed()) return rerun(a.report_file, a.output);

        const Command* cmd = nullptr;
        for (const auto& c : cmds)
            if (c.app->parsed()) cmd = &c;
        if (!cmd) {
            std::cerr << app.help();
            return 1;
        }
        Format fmt = a.format == "csv" ? Format::csv : a.format == "table" ? Format::table : Format::json;
        if (a.format != "csv" && a.format != "table" && a.format != "json")
            throw gmclab::DomainError("format must be json, csv or table");

        Report r;
        auto t0 = std::chrono::steady_clock::now();
        cmd->run(r);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        json report{{"schema_version", kSchemaVersion},
                    {"command", cmd->name},
                    {"params", collect_params(cmd->app)},
                    {"seed", a.seed},
                    {"versions", {{"gmclab", kVersion}, {"compiler", __VERSION__}}},
                    {"results", r.results},
                    {"residuals", r.residuals},
                    {"timing", {{"seconds", secs}}}};
        emit(report, r, fmt, a.output);
        return r.failed ? 2 : 0;
    } catch (const gmclab::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const gmclab::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

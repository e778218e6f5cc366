// ufrechet: command-line front end to the unit-Fréchet library.

#include "cli_io.h"

#include "unifrechet/bivariate.h"
#include "unifrechet/core.h"
#include "unifrechet/descriptive.h"
#include "unifrechet/inference.h"
#include "unifrechet/kernels.h"
#include "unifrechet/moments.h"
#include "unifrechet/simulation.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace uf::cli {

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kOutDirEnv = "UFRECHET_OUT_DIR";

// What a file-producing command records about itself.
struct Manifest {
    std::string command;
    std::vector<std::string> argv;
    std::map<std::string, std::string> options;
    std::optional<std::string> input;
    std::optional<std::string> input_digest;
    std::optional<std::uint64_t> master_seed;
    std::vector<std::string> outputs;
};

std::string out_dir_env() {
    const char* v = std::getenv(kOutDirEnv);
    return v ? std::string(v) : std::string();
}

std::string resolve_out_dir(const std::string& flag) {
    std::string dir = flag;
    if (dir.empty()) dir = out_dir_env();
    if (dir.empty()) dir = ".";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CliError(kUnreadable, fmt::format("cannot create output directory '{}': {}", dir, ec.message()));
    return dir;
}

std::string join_path(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

std::map<std::string, std::string> collect_options(const CLI::App* sub) {
    std::map<std::string, std::string> out;
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string value;
        for (const std::string& r : opt->results()) value += (value.empty() ? "" : ",") + r;
        out[opt->get_name()] = value;
    }
    return out;
}

void write_manifest(const std::string& path, const Manifest& m) {
    json j;
    j["command"] = m.command;
    j["argv"] = m.argv;
    j["options"] = m.options;
    j["input"] = m.input ? json(*m.input) : json(nullptr);
    j["input_digest"] = m.input_digest ? json(*m.input_digest) : json(nullptr);
    j["tool_version"] = kToolVersion;
    j["master_seed"] = m.master_seed ? json(*m.master_seed) : json(nullptr);
    j["working_directory"] = fs::current_path().string();
    const std::string env = out_dir_env();
    j["out_dir_env"] = env.empty() ? json(nullptr) : json(env);
    json outs = json::object();
    for (const std::string& p : m.outputs) outs[p] = hex_digest(read_file(p));
    j["outputs"] = outs;
    write_file(path, j.dump(2) + "\n");
}

// --- report rendering ------------------------------------------------------------

json report_json(const FitReport& r) {
    json j;
    j["model"] = std::string(model_name(r.model));
    j["status"] = std::string(status_name(r.status));
    j["n"] = r.n;
    json params = json::object();
    for (std::size_t i = 0; i < r.theta_hat.size(); ++i) params[r.param_names[i]] = r.theta_hat[i];
    j["theta_hat"] = params;
    j["loglik"] = r.loglik;
    j["k_params"] = r.k_params;
    j["aic"] = r.aic;
    j["bic"] = r.bic;
    j["ks_stat"] = r.ks_stat;
    j["ks_pvalue"] = r.ks_pvalue;
    j["converged"] = r.converged;
    j["boundary_hit"] = r.boundary_hit;
    j["iterations"] = r.iterations;
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.candidates.empty()) {
        json cands = json::array();
        for (const FitCandidate& c : r.candidates) {
            cands.push_back({{"origin", c.origin}, {"theta", c.theta}, {"loglik", c.loglik}, {"converged", c.converged}});
        }
        j["candidates"] = cands;
    }
    return j;
}

std::string report_text(const FitReport& r) {
    std::string out;
    const auto kv = [&](std::string_view k, const std::string& v) { out += fmt::format("{} = {}\n", k, v); };
    kv("model", std::string(model_name(r.model)));
    kv("status", std::string(status_name(r.status)));
    kv("n", std::to_string(r.n));
    for (std::size_t i = 0; i < r.theta_hat.size(); ++i) kv(r.param_names[i], fmt_double(r.theta_hat[i]));
    kv("loglik", fmt_double(r.loglik));
    kv("k_params", std::to_string(r.k_params));
    kv("aic", fmt_double(r.aic));
    kv("bic", fmt_double(r.bic));
    kv("ks_stat", fmt_double(r.ks_stat));
    kv("ks_pvalue", fmt_double(r.ks_pvalue));
    kv("converged", r.converged ? "true" : "false");
    kv("boundary_hit", r.boundary_hit ? "true" : "false");
    kv("iterations", std::to_string(r.iterations));
    if (!r.message.empty()) kv("message", r.message);
    out += "--- json ---\n" + report_json(r).dump(2) + "\n";
    return out;
}

std::string descriptive_text(const Descriptive& d) {
    return fmt::format(
        "n = {}\nmean = {:.5f}\nmedian = {:.5f}\nsd = {:.5f}\nmin = {:.5f}\nmax = {:.5f}\n"
        "q1 = {:.5f}\nq3 = {:.5f}\nskewness = {:.5f}\nkurtosis = {:.5f}\n",
        d.n, d.mean, d.median, d.sd, d.min, d.max, d.q1, d.q3, d.skewness, d.kurtosis);
}

std::string ranking_text(const std::vector<FitReport>& reports, std::optional<int> k) {
    std::string out = fmt::format("{:<12} {:>3} {:>12} {:>12} {:>12}\n", "model", "k", "loglik", "aic", "bic");
    for (const RankedModel& m : model_select(reports, k)) {
        out += fmt::format("{:<12} {:>3} {:>12.4f} {:>12.4f} {:>12.4f}\n", model_name(m.model), m.k_params, m.loglik,
                           m.aic, m.bic);
    }
    return out;
}

// --- plot data ---------------------------------------------------------------------

std::string plot_density_csv(const DataSeries& data, const std::vector<FitReport>& reports) {
    std::string out = "series,x,y\n";
    const std::size_t n = data.size();
    const auto bins = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    std::vector<std::size_t> counts(bins, 0);
    for (double w : data.values()) counts[std::min(bins - 1, static_cast<std::size_t>(w * static_cast<double>(bins)))]++;
    const double width = 1.0 / static_cast<double>(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        const double density = static_cast<double>(counts[b]) / (static_cast<double>(n) * width);
        out += fmt::format("histogram,{},{}\n", fmt_double((static_cast<double>(b) + 0.5) * width), fmt_double(density));
    }
    for (const FitReport& r : reports) {
        if (r.status == FitStatus::ill_posed) continue;
        const Distribution d = r.distribution();
        for (int i = 1; i < 200; ++i) {
            const double x = i / 200.0;
            out += fmt::format("{},{},{}\n", d.name, fmt_double(x), fmt_double(d.pdf(x)));
        }
    }
    return out;
}

std::string plot_cdf_csv(const DataSeries& data, const std::vector<FitReport>& reports) {
    std::string out = "series,x,y\n";
    std::vector<double> s = data.values();
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
        out += fmt::format("ecdf,{},{}\n", fmt_double(s[i]),
                           fmt_double(static_cast<double>(i + 1) / static_cast<double>(s.size())));
    }
    for (const FitReport& r : reports) {
        if (r.status == FitStatus::ill_posed) continue;
        const Distribution d = r.distribution();
        for (int i = 1; i < 200; ++i) {
            const double x = i / 200.0;
            out += fmt::format("{},{},{}\n", d.name, fmt_double(x), fmt_double(d.cdf(x)));
        }
    }
    return out;
}

std::string plot_qq_csv(const std::vector<FitReport>& reports) {
    std::string out = "model,theoretical,sample\n";
    const boost::math::normal_distribution<double> normal;
    for (const FitReport& r : reports) {
        if (r.residuals.empty()) continue;
        std::vector<double> s = r.residuals;
        std::sort(s.begin(), s.end());
        const double n = static_cast<double>(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double q = boost::math::quantile(normal, (static_cast<double>(i) + 0.5) / n);
            out += fmt::format("{},{},{}\n", model_name(r.model), fmt_double(q), fmt_double(s[i]));
        }
    }
    return out;
}

// --- commands ------------------------------------------------------------------------

struct FitArgs {
    std::string input;
    std::string models = "uf,beta,kumaraswamy";
    std::optional<std::string> column;
    std::string out;
};

int cmd_fit(const FitArgs& a, Manifest& manifest) {
    const DataSeries data = load_input(a.input, a.column);

    std::vector<Model> models;
    for (const auto& part : CLI::detail::split(a.models, ',')) {
        const std::string m = CLI::detail::trim_copy(part);
        if (m == "uf") models.push_back(Model::UF);
        else if (m == "beta") models.push_back(Model::Beta);
        else if (m == "kumaraswamy") models.push_back(Model::Kumaraswamy);
        else throw CliError(kUsage, fmt::format("unknown model '{}' (expected uf, beta, kumaraswamy)", m));
    }
    if (models.empty()) throw CliError(kUsage, "no models requested");

    const std::string dir = resolve_out_dir(a.out);
    std::vector<FitReport> reports;
    for (Model m : models) {
        if (m == Model::UF) reports.push_back(fit_uf(data));
        if (m == Model::Beta) reports.push_back(fit_beta(data));
        if (m == Model::Kumaraswamy) reports.push_back(fit_kumaraswamy(data));
    }

    const Descriptive desc = describe(data.values());
    std::string summary = "[descriptive]\n" + descriptive_text(desc);
    const auto emit = [&](const std::string& name, const std::string& content) {
        const std::string p = join_path(dir, name);
        write_file(p, content);
        manifest.outputs.push_back(p);
    };

    emit("descriptive.txt", descriptive_text(desc));
    bool all_ok = true;
    for (const FitReport& r : reports) {
        emit(fmt::format("fit_{}.txt", model_name(r.model)), report_text(r));
        all_ok = all_ok && r.status == FitStatus::ok;
    }

    summary += "\n[fits]\n";
    summary += fmt::format("{:<12} {:>10} {:>10} {:>10} {:>8} {:>8}  {}\n", "model", "loglik", "aic", "bic", "ks",
                           "p", "status");
    for (const FitReport& r : reports) {
        summary += fmt::format("{:<12} {:>10.4f} {:>10.4f} {:>10.4f} {:>8.4f} {:>8.4f}  {}", model_name(r.model),
                               r.loglik, r.aic, r.bic, r.ks_stat, r.ks_pvalue, status_name(r.status));
        std::string params;
        for (std::size_t i = 0; i < r.theta_hat.size(); ++i) {
            params += fmt::format("{}{}={:.5f}", i ? " " : "", r.param_names[i], r.theta_hat[i]);
        }
        summary += "  " + params + "\n";
    }

    std::vector<FitReport> usable;
    for (const FitReport& r : reports) {
        if (r.status != FitStatus::ill_posed) usable.push_back(r);
    }
    if (usable.size() >= 2) {
        std::string cmp = "[ranking: each model's own k]\n" + ranking_text(usable, std::nullopt);
        cmp += "\n[ranking: common k = 3]\n" + ranking_text(usable, 3);
        json cj = json::array();
        for (const RankedModel& m : model_select(usable)) {
            cj.push_back({{"model", std::string(model_name(m.model))}, {"k_params", m.k_params}, {"loglik", m.loglik},
                          {"aic", m.aic}, {"bic", m.bic}});
        }
        cmp += "--- json ---\n" + cj.dump(2) + "\n";
        emit("comparison.txt", cmp);
        summary += "\n" + cmp.substr(0, cmp.find("--- json ---"));
    }

    std::string res = "index,w,model,residual\n";
    for (const FitReport& r : reports) {
        for (std::size_t i = 0; i < r.residuals.size(); ++i) {
            res += fmt::format("{},{},{},{}\n", i, fmt_double(data.values()[i]), model_name(r.model),
                               fmt_double(r.residuals[i]));
        }
    }
    emit("residuals.csv", res);
    emit("plot_density.csv", plot_density_csv(data, reports));
    emit("plot_cdf.csv", plot_cdf_csv(data, reports));
    emit("plot_qq.csv", plot_qq_csv(reports));

    manifest.input = a.input;
    manifest.input_digest = hex_digest(input_bytes(a.input));
    write_manifest(join_path(dir, "manifest.json"), manifest);

    std::cout << summary;
    return all_ok ? kOk : kNumerical;
}

struct SampleArgs {
    double sigma = 1.0, alpha = 1.0, rho = 0.0;
    double sigma1 = 1.0, sigma2 = 1.0;
    bool bivariate = false;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
};

int cmd_sample(const SampleArgs& a, Manifest& manifest) {
    if (a.n < 1) throw CliError(kUsage, "-n must be at least 1");
    std::string path = a.out;
    if (path.empty()) path = join_path(resolve_out_dir(""), "sample.csv");
    else if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());

    std::string out;
    if (a.bivariate) {
        const BivParams p(a.sigma1, a.sigma2, a.alpha, a.rho);
        const BivSample s = kernels::biv_sample_parallel(p, a.n, a.seed, a.threads);
        out = "x1,x2,w\n";
        for (const auto& [x1, x2] : s.pairs) {
            out += fmt::format("{},{},{}\n", fmt_double(x1), fmt_double(x2), fmt_double(x1 / (x1 + x2)));
        }
        if (s.redraws > 0) std::cerr << fmt::format("note: {} pairs were redrawn after overflow\n", s.redraws);
    } else {
        const UfParams theta(a.sigma, a.alpha, a.rho);
        out = "w\n";
        for (double w : kernels::uf_sample_parallel(theta, a.n, a.seed, a.threads)) out += fmt_double(w) + "\n";
    }
    write_file(path, out);
    manifest.outputs.push_back(path);
    manifest.master_seed = a.seed;
    write_manifest(path + ".manifest.json", manifest);
    std::cout << fmt::format("wrote {} rows to {}\n", a.n, path);
    return kOk;
}

// --- simulation config -------------------------------------------------------------------

double json_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    return j.get<double>();
}

std::uint64_t json_count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        throw ConfigError(path, "expected a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
    for (const auto& [key, _] : obj.items()) {
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; })) {
            throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

SimConfig parse_sim_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", fmt::format("invalid JSON: {}", e.what()));
    }
    if (!j.is_object()) throw ConfigError("<root>", "expected an object");
    reject_unknown(j, "", {"thetas", "sample_sizes", "replications", "master_seed", "parallelism", "fit"});

    SimConfig cfg;
    if (!j.contains("thetas") || (j["thetas"].is_string() && j["thetas"] == "default")) {
        cfg.thetas = default_theta_grid();
    } else if (j["thetas"].is_array()) {
        for (std::size_t i = 0; i < j["thetas"].size(); ++i) {
            const json& t = j["thetas"][i];
            const std::string p = fmt::format("thetas[{}]", i);
            if (!t.is_object()) throw ConfigError(p, "expected an object with sigma, alpha, rho");
            reject_unknown(t, p, {"sigma", "alpha", "rho"});
            for (const char* k : {"sigma", "alpha", "rho"}) {
                if (!t.contains(k)) throw ConfigError(p + "." + k, "missing");
            }
            try {
                cfg.thetas.emplace_back(json_number(t["sigma"], p + ".sigma"), json_number(t["alpha"], p + ".alpha"),
                                        json_number(t["rho"], p + ".rho"));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError(p, e.what());
            }
        }
    } else {
        throw ConfigError("thetas", "expected an array or \"default\"");
    }
    if (j.contains("sample_sizes")) {
        if (!j["sample_sizes"].is_array()) throw ConfigError("sample_sizes", "expected an array");
        cfg.sample_sizes.clear();
        for (std::size_t i = 0; i < j["sample_sizes"].size(); ++i) {
            cfg.sample_sizes.push_back(json_count(j["sample_sizes"][i], fmt::format("sample_sizes[{}]", i)));
        }
    }
    if (j.contains("replications")) cfg.replications = json_count(j["replications"], "replications");
    if (j.contains("master_seed")) cfg.master_seed = json_count(j["master_seed"], "master_seed");
    if (j.contains("parallelism")) cfg.parallelism = static_cast<int>(json_count(j["parallelism"], "parallelism"));
    if (j.contains("fit")) {
        const json& f = j["fit"];
        if (!f.is_object()) throw ConfigError("fit", "expected an object");
        reject_unknown(f, "fit", {"refine_starts", "polish"});
        if (f.contains("refine_starts")) {
            cfg.fit.refine_starts = static_cast<int>(json_count(f["refine_starts"], "fit.refine_starts"));
        }
        if (f.contains("polish")) {
            cfg.fit.polish = static_cast<int>(json_count(f["polish"], "fit.polish"));
            if (cfg.fit.polish < 1) throw ConfigError("fit.polish", "must be at least 1");
        }
    }
    validate(cfg);
    return cfg;
}

std::string sim_csv(const SimReport& r) {
    static constexpr const char* kNames[] = {"sigma", "alpha", "rho"};
    std::string out = "theta_index,sigma,alpha,rho,n,param,rb,mse,rmse,used,failures,boundary_count\n";
    for (const SimRow& row : r.rows) {
        for (int c = 0; c < 3; ++c) {
            out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", row.theta_index, fmt_double(row.theta.sigma()),
                               fmt_double(row.theta.alpha()), fmt_double(row.theta.rho()), row.n, kNames[c],
                               fmt_double(row.rb[c]), fmt_double(row.mse[c]), fmt_double(row.rmse[c]), row.used,
                               row.failures, row.boundary_count);
        }
    }
    return out;
}

struct SimulateArgs {
    std::string config;
    std::string out;
    std::optional<int> threads;
};

int cmd_simulate(const SimulateArgs& a, Manifest& manifest) {
    SimConfig cfg = parse_sim_config(read_file(a.config));
    if (a.threads) cfg.parallelism = *a.threads;
    const std::string dir = resolve_out_dir(a.out);
    const SimReport report = run_study(cfg);
    const std::string path = join_path(dir, "simulation.csv");
    write_file(path, sim_csv(report));
    manifest.outputs.push_back(path);
    manifest.input = a.config;
    manifest.input_digest = hex_digest(read_file(a.config));
    manifest.master_seed = cfg.master_seed;
    write_manifest(join_path(dir, "manifest.json"), manifest);

    std::cout << fmt::format("{:>5} {:>6} {:>6} {:>6} {:>5} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>5}\n", "theta",
                             "sigma", "alpha", "rho", "n", "rb_sigma", "rb_alpha", "rb_rho", "rmse_s", "rmse_a",
                             "rmse_r", "fail");
    for (const SimRow& row : report.rows) {
        std::cout << fmt::format("{:>5} {:>6.3g} {:>6.3g} {:>6.3g} {:>5} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f} "
                                 "{:>9.4f} {:>5}\n",
                                 row.theta_index, row.theta.sigma(), row.theta.alpha(), row.theta.rho(), row.n,
                                 row.rb[0], row.rb[1], row.rb[2], row.rmse[0], row.rmse[1], row.rmse[2], row.failures);
    }
    return kOk;
}

struct MomentsArgs {
    double sigma1 = 1.0, sigma2 = 1.0, alpha = 0.0, rho = 0.0;
    std::optional<double> cov;
    bool estimate = false;
    std::size_t n = 100000;
    std::uint64_t seed = 0;
};

int cmd_moments(const MomentsArgs& a) {
    const BivParams p(a.sigma1, a.sigma2, a.alpha, a.rho);
    MomentInputs m = frechet_moments(p);
    std::cout << fmt::format("mu1 = {}\nmu2 = {}\n", fmt_double(m.mu1), fmt_double(m.mu2));
    if (!m.var1) {
        std::cout << "var1 = unavailable (alpha <= 2)\nvar2 = unavailable (alpha <= 2)\n";
        return kOk;
    }
    std::cout << fmt::format("var1 = {}\nvar2 = {}\n", fmt_double(*m.var1), fmt_double(*m.var2));
    if (a.cov && a.estimate) throw CliError(kUsage, "--cov and --estimate-cov are mutually exclusive");
    if (a.cov) {
        m.cov = *a.cov;
    } else if (a.estimate) {
        const CovEstimate c = estimate_cov(p, a.n, a.seed);
        m.cov = c.cov;
        std::cout << fmt::format("cov_estimate = {}\ncov_std_error = {}\ncov_n = {}\n", fmt_double(c.cov),
                                 fmt_double(c.std_error), c.n);
        // A Monte Carlo estimate can stray past the Cauchy–Schwarz bound by noise.
        const double bound = std::sqrt(*m.var1 * *m.var2);
        m.cov = std::clamp(*m.cov, -bound, bound);
    } else {
        throw CliError(kUsage, "moments needs --cov VALUE or --estimate-cov");
    }
    std::cout << fmt::format("cov = {}\n", fmt_double(*m.cov));
    const VarApprox v = approx_var(m);
    std::cout << fmt::format("E(W) = {}\nE(W^2) = {}\nVar(W) = {}\nVar(W) truncated = {}\n",
                             fmt_double(approx_moment(1.0, m)), fmt_double(approx_moment(2.0, m)),
                             fmt_double(v.composed), fmt_double(v.truncated));
    for (const std::string& w : quality_warnings(m)) std::cout << "warning: " << w << "\n";
    return kOk;
}

int run(std::vector<std::string> args);

int cmd_replay(const std::string& manifest_path) {
    json m;
    try {
        m = json::parse(read_file(manifest_path));
    } catch (const json::parse_error& e) {
        throw CliError(kUsage, fmt::format("{}: invalid manifest: {}", manifest_path, e.what()));
    }
    if (!m.contains("argv") || !m["argv"].is_array()) throw CliError(kUsage, "manifest has no argv");

    const fs::path previous = fs::current_path();
    if (m.contains("working_directory") && m["working_directory"].is_string()) {
        fs::current_path(m["working_directory"].get<std::string>());
    }
    if (m.contains("out_dir_env") && m["out_dir_env"].is_string()) {
        setenv(kOutDirEnv, m["out_dir_env"].get<std::string>().c_str(), 1);
    } else {
        unsetenv(kOutDirEnv);
    }

    if (m["input"].is_string() && m["input_digest"].is_string()) {
        const std::string input = m["input"].get<std::string>();
        const std::string digest = hex_digest(input_bytes(input));
        if (digest != m["input_digest"].get<std::string>()) {
            fs::current_path(previous);
            throw CliError(kReplayMismatch, fmt::format("input '{}' changed: digest {} != recorded {}", input, digest,
                                                        m["input_digest"].get<std::string>()));
        }
    }

    const int code = run(m["argv"].get<std::vector<std::string>>());
    std::size_t same = 0;
    std::vector<std::string> differ;
    for (const auto& [path, digest] : m["outputs"].items()) {
        std::string now;
        try {
            now = hex_digest(read_file(path));
        } catch (const CliError&) {
            now = "<missing>";
        }
        if (now == digest.get<std::string>()) ++same;
        else differ.push_back(path);
    }
    fs::current_path(previous);
    for (const std::string& p : differ) std::cerr << "replay: output differs: " << p << "\n";
    std::cout << fmt::format("replay: {} of {} outputs identical\n", same, same + differ.size());
    if (!differ.empty()) return kReplayMismatch;
    return code;
}

int run(std::vector<std::string> args) {
    CLI::App app{"Unit-Fréchet distribution: evaluation, sampling, fitting and simulation", "ufrechet"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    FitArgs fit;
    CLI::App* fit_cmd = app.add_subcommand("fit", "Fit models to a unit-interval sample");
    fit_cmd->add_option("input", fit.input, "CSV file or bundled:uefa")->required();
    fit_cmd->add_option("--models", fit.models, "Comma-separated subset of uf,beta,kumaraswamy")
        ->capture_default_str();
    fit_cmd->add_option("--column", fit.column, "Column index (0-based) or header name");
    fit_cmd->add_option("--out", fit.out, "Output directory (default $UFRECHET_OUT_DIR or .)");

    SampleArgs sample;
    CLI::App* sample_cmd = app.add_subcommand("sample", "Draw a UF or bivariate Fréchet sample");
    sample_cmd->add_option("--sigma", sample.sigma, "UF scale ratio")->capture_default_str();
    sample_cmd->add_option("--alpha", sample.alpha, "Shape")->capture_default_str();
    sample_cmd->add_option("--rho", sample.rho, "Association in [0,1]")->capture_default_str();
    sample_cmd->add_flag("--bivariate", sample.bivariate, "Sample (X1, X2) and their ratio");
    sample_cmd->add_option("--sigma1", sample.sigma1, "Bivariate scale of X1")->capture_default_str();
    sample_cmd->add_option("--sigma2", sample.sigma2, "Bivariate scale of X2")->capture_default_str();
    sample_cmd->add_option("-n", sample.n, "Sample size")->required();
    sample_cmd->add_option("--seed", sample.seed, "64-bit seed")->required();
    sample_cmd->add_option("--threads", sample.threads, "OpenMP threads (0 = default)");
    sample_cmd->add_option("--out", sample.out, "Output CSV (default $UFRECHET_OUT_DIR/sample.csv)");

    SimulateArgs sim;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Run a Monte Carlo study from a JSON config");
    sim_cmd->add_option("--config", sim.config, "JSON config file")->required();
    sim_cmd->add_option("--out", sim.out, "Output directory (default $UFRECHET_OUT_DIR or .)");
    sim_cmd->add_option("--threads", sim.threads, "Override config parallelism");

    double p = 0.0, w = 0.0;
    double sigma = 1.0, alpha = 1.0, rho = 0.0;
    const auto theta_opts = [&](CLI::App* c) {
        c->add_option("--sigma", sigma, "Scale ratio")->required();
        c->add_option("--alpha", alpha, "Shape")->required();
        c->add_option("--rho", rho, "Association in [0,1]")->required();
    };
    CLI::App* quantile_cmd = app.add_subcommand("quantile", "Print Q_W(p)");
    quantile_cmd->add_option("-p", p, "Probability in (0,1)")->required();
    theta_opts(quantile_cmd);
    CLI::App* cdf_cmd = app.add_subcommand("cdf", "Print F_W(w)");
    cdf_cmd->add_option("-w", w, "Point")->required();
    theta_opts(cdf_cmd);
    CLI::App* pdf_cmd = app.add_subcommand("pdf", "Print f_W(w)");
    pdf_cmd->add_option("-w", w, "Point in (0,1)")->required();
    theta_opts(pdf_cmd);
    CLI::App* ss_cmd = app.add_subcommand("stress-strength", "Print 1 - F_W(1/2) = P(X2 < X1)");
    theta_opts(ss_cmd);

    MomentsArgs mom;
    CLI::App* mom_cmd = app.add_subcommand("moments", "Second-order approximations to E(W), Var(W)");
    mom_cmd->add_option("--sigma1", mom.sigma1)->required();
    mom_cmd->add_option("--sigma2", mom.sigma2)->required();
    mom_cmd->add_option("--alpha", mom.alpha)->required();
    mom_cmd->add_option("--rho", mom.rho)->required();
    mom_cmd->add_option("--cov", mom.cov, "Cov(X1, X2)");
    mom_cmd->add_flag("--estimate-cov", mom.estimate, "Estimate Cov(X1, X2) by Monte Carlo");
    mom_cmd->add_option("--mc-n", mom.n, "Monte Carlo size for --estimate-cov")->capture_default_str();
    mom_cmd->add_option("--seed", mom.seed, "Seed for --estimate-cov")->capture_default_str();

    std::string manifest_path;
    CLI::App* replay_cmd = app.add_subcommand("replay", "Re-run a recorded command and compare outputs");
    replay_cmd->add_option("manifest", manifest_path, "manifest.json written by fit, sample or simulate")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Manifest manifest;
    manifest.argv = args;
    try {
        for (CLI::App* sub : app.get_subcommands()) {
            manifest.command = sub->get_name();
            manifest.options = collect_options(sub);
        }
        if (fit_cmd->parsed()) return cmd_fit(fit, manifest);
        if (sample_cmd->parsed()) return cmd_sample(sample, manifest);
        if (sim_cmd->parsed()) return cmd_simulate(sim, manifest);
        if (mom_cmd->parsed()) return cmd_moments(mom);
        if (replay_cmd->parsed()) return cmd_replay(manifest_path);

        const UfParams theta(sigma, alpha, rho);
        if (quantile_cmd->parsed()) {
            if (!(p > 0.0 && p < 1.0)) throw CliError(kUsage, "-p must lie in (0,1)");
            std::cout << fmt_double(uf_quantile(p, theta)) << "\n";
        } else if (cdf_cmd->parsed()) {
            std::cout << fmt_double(uf_cdf(w, theta)) << "\n";
        } else if (pdf_cmd->parsed()) {
            std::cout << fmt_double(uf_pdf(UnitValue(w), theta)) << "\n";
        } else if (ss_cmd->parsed()) {
            std::cout << fmt_double(stress_strength(theta)) << "\n";
        }
        return kOk;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace

}  // namespace uf::cli

int main(int argc, char** argv) { return uf::cli::run(std::vector<std::string>(argv + 1, argv + argc)); }

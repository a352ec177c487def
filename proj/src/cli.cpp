#include "ngfisk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ngfisk/competitors.hpp"
#include "ngfisk/dataset.hpp"
#include "ngfisk/distribution.hpp"
#include "ngfisk/estimation.hpp"
#include "ngfisk/kernels.hpp"
#include "ngfisk/selection.hpp"
#include "ngfisk/simstudy.hpp"

namespace ngfisk::cli {
namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

Format parse_format(const std::string& s, Format fallback) {
    if (s.empty()) {
        return fallback;
    }
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    throw InputError("unknown format '" + s + "' (expected json or csv)");
}

std::string num(double v, int precision) {
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// A model selected on the command line: NG-Fisk or one of the competitors.
struct ModelChoice {
    bool is_ngfisk = true;
    competitors::Kind kind = competitors::Kind::kuw;

    std::string name() const {
        return is_ngfisk ? "NG-F" : std::string(competitors::display_name(kind));
    }
    std::vector<std::string> param_names() const {
        return is_ngfisk ? est::ngfisk_param_names() : competitors::param_names(kind);
    }
    est::ParamBox default_box() const {
        return is_ngfisk ? est::ngfisk_default_box() : competitors::default_box(kind);
    }
};

ModelChoice parse_model(const std::string& raw) {
    const std::string key = lowercase(raw);
    if (key == "ngfisk" || key == "ng-f" || key == "ngf" || key == "ng-fisk") {
        return {};
    }
    try {
        return {false, competitors::parse_kind(raw)};
    } catch (const std::invalid_argument&) {
        throw InputError("unknown model '" + raw +
                         "' (expected ngfisk, NEx-FW, FW, KWP, Ku-W or Z-W)");
    }
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw InputError(what + ": '" + item + "' is not a number");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (double v : parse_real_list(text, what)) {
        if (v != std::floor(v) || v < 1 || v > 1e9) {
            throw InputError(what + ": expected positive integers");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

void apply_box_overrides(est::ParamBox& box, const std::vector<std::string>& names,
                         const std::vector<std::string>& specs) {
    for (const auto& spec : specs) {
        const auto eq = spec.find('=');
        const auto colon = spec.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos) {
            throw InputError("--box expects NAME=LO:HI, got '" + spec + "'");
        }
        const std::string name = spec.substr(0, eq);
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            throw InputError("--box: unknown parameter '" + name + "'");
        }
        const auto lo = parse_real_list(spec.substr(eq + 1, colon - eq - 1), "--box");
        const auto hi = parse_real_list(spec.substr(colon + 1), "--box");
        if (lo.size() != 1 || hi.size() != 1) {
            throw InputError("--box expects NAME=LO:HI, got '" + spec + "'");
        }
        try {
            box.set_bounds(static_cast<std::size_t>(it - names.begin()), lo[0], hi[0]);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--box: ") + e.what());
        }
    }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json dataset_json(const data::Dataset& d) { return {{"source", d.source}, {"n", d.n()}}; }

json fit_json(const est::FitResult& fit) {
    json estimates = json::object();
    json ses = json::object();
    json profile = json::object();
    json ci = json::object();
    json boundary = json::object();
    for (std::size_t j = 0; j < fit.param_names.size(); ++j) {
        const auto& name = fit.param_names[j];
        estimates[name] = fit.estimates[j];
        ses[name] = optional_number(fit.std_errors[j]);
        ci[name] = fit.ci95[j] ? json::array({fit.ci95[j]->lower, fit.ci95[j]->upper}) : json(nullptr);
        boundary[name] = static_cast<bool>(fit.at_boundary[j]);
        if (!fit.profile_std_errors.empty()) {
            profile[name] = optional_number(fit.profile_std_errors[j]);
        }
    }
    json out = {{"model", fit.model},
                {"estimates", estimates},
                {"std_errors", ses},
                {"ci95", ci},
                {"loglik", fit.loglik},
                {"nll", fit.nll},
                {"converged", fit.converged},
                {"n_obs", fit.n_obs},
                {"at_boundary", boundary},
                {"gradient_norm", fit.gradient_norm}};
    if (!fit.profile_std_errors.empty()) {
        out["profile_std_errors"] = profile;
    }
    if (fit.ridge) {
        out["ridge"] = *fit.ridge;
    }
    if (fit.effective_scale) {
        out["effective_scale"] = *fit.effective_scale;
    }
    json restarts = json::array();
    for (const auto& r : fit.restarts) {
        restarts.push_back({{"start", r.start},
                            {"estimates", r.estimates},
                            {"nll", r.nll},
                            {"converged", r.converged},
                            {"accepted", r.accepted}});
    }
    out["restarts"] = restarts;
    return out;
}

void fit_csv(std::ostream& out, const est::FitResult& fit, int precision) {
    out << "model,parameter,estimate,std_error,profile_std_error,ci_lower,ci_upper,at_boundary,"
           "nll,loglik,converged,ridge,effective_scale\n";
    auto opt = [&](const std::optional<double>& v) { return v ? num(*v, precision) : std::string(); };
    for (std::size_t j = 0; j < fit.param_names.size(); ++j) {
        out << fit.model << ',' << fit.param_names[j] << ',' << num(fit.estimates[j], precision)
            << ',' << opt(fit.std_errors[j]) << ','
            << (fit.profile_std_errors.empty() ? "" : opt(fit.profile_std_errors[j])) << ','
            << (fit.ci95[j] ? num(fit.ci95[j]->lower, precision) : "") << ','
            << (fit.ci95[j] ? num(fit.ci95[j]->upper, precision) : "") << ','
            << (fit.at_boundary[j] ? "true" : "false") << ',' << num(fit.nll, precision) << ','
            << num(fit.loglik, precision) << ',' << (fit.converged ? "true" : "false") << ','
            << (fit.ridge ? (*fit.ridge ? "true" : "false") : "") << ','
            << (fit.effective_scale ? num(*fit.effective_scale, precision) : "") << '\n';
    }
}

est::FitResult fit_model(const ModelChoice& model, const data::Dataset& d, const est::ParamBox& box,
                         const est::FitOptions& options) {
    if (model.is_ngfisk) {
        return est::fit_ngfisk(d.values, box, options);
    }
    auto spec = competitors::model_spec(model.kind);
    spec.box = box;
    return est::fit_mle(spec, d.values, options);
}

std::function<double(double)> fitted_cdf(const ModelChoice& model, const est::FitResult& fit) {
    if (model.is_ngfisk) {
        const auto p = NgFiskParams::from_array(fit.estimates);
        return [p](double x) { return cdf(p, x); };
    }
    const competitors::CompetitorModel m(model.kind, fit.estimates);
    return [m](double x) { return competitors::cdf(m, x); };
}

// Shared flags. Each subcommand registers the subset it uses.
struct Flags {
    std::string data{data::kBuiltinDataFT};
    std::string model{"ngfisk"};
    std::string models{"NG-F,Ku-W,Z-W,KWP,FW,NEx-FW"};
    std::uint64_t seed = 1;
    bool seed_set = false;
    int reps = 200;
    bool full = false;
    std::string n_list;
    std::string truth;
    int which_case = 0;
    std::string params;
    std::string grid;
    std::string xs;
    std::string format;
    int precision = 6;
    int starts = 0;
    std::vector<std::string> boxes;
    std::optional<double> fix_delta;
    bool serial = false;
};

void add_output_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--format", f.format, "Output format: json or csv");
    sub->add_option("--precision", f.precision, "Significant digits in CSV/text output")
        ->check(CLI::Range(1, 17));
}

void add_fit_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--seed", f.seed, "Seed for multi-start jitter");
    sub->add_option("--starts", f.starts, "Optimizer starts (default 8 NG-F, 24 competitors)")
        ->check(CLI::Range(1, 1000));
    sub->add_option("--box", f.boxes, "Parameter box override NAME=LO:HI (repeatable)");
}

est::FitOptions fit_options(const Flags& f, bool ngfisk) {
    est::FitOptions options;
    options.starts = f.starts > 0 ? f.starts : (ngfisk ? 8 : competitors::kCompetitorStarts);
    options.seed = f.seed;
    options.fixed_delta = f.fix_delta;
    return options;
}

// --------------------------------------------------------------------------
// Commands

int cmd_describe(const Flags& f, std::ostream& out) {
    const auto d = data::ingest(f.data);
    const auto s = data::describe(d);
    if (parse_format(f.format, Format::json) == Format::csv) {
        out << "min,q1,median,mean,q3,max\n"
            << num(s.min, f.precision) << ',' << num(s.q1, f.precision) << ','
            << num(s.median, f.precision) << ',' << num(s.mean, f.precision) << ','
            << num(s.q3, f.precision) << ',' << num(s.max, f.precision) << '\n';
        return 0;
    }
    json j = {{"Dataset", dataset_json(d)},
              {"SixNumberSummary",
               {{"min", s.min}, {"q1", s.q1}, {"median", s.median}, {"mean", s.mean},
                {"q3", s.q3}, {"max", s.max}}}};
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_fit(const Flags& f, std::ostream& out) {
    const ModelChoice model = parse_model(f.model);
    const Format format = parse_format(f.format, Format::json);
    if (f.fix_delta && !model.is_ngfisk) {
        throw InputError("--fix-delta applies to the ngfisk model only");
    }
    const auto d = data::ingest(f.data);
    auto box = model.default_box();
    apply_box_overrides(box, model.param_names(), f.boxes);
    const auto fit = fit_model(model, d, box, fit_options(f, model.is_ngfisk));
    if (format == Format::csv) {
        fit_csv(out, fit, f.precision);
    } else {
        out << json({{"Dataset", dataset_json(d)}, {"FitResult", fit_json(fit)}}).dump(2) << '\n';
    }
    return 0;
}

int cmd_compare(const Flags& f, std::ostream& out) {
    const Format format = parse_format(f.format, Format::json);
    std::vector<ModelChoice> models;
    std::stringstream ss(f.models);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            models.push_back(parse_model(item));
        }
    }
    if (models.empty()) {
        throw InputError("--models: no models given");
    }
    const auto d = data::ingest(f.data);
    const int n = static_cast<int>(d.n());

    std::vector<selection::ModelScore> scores;
    json fits = json::array();
    json errors = json::array();
    for (const auto& model : models) {
        try {
            auto box = model.default_box();
            if (model.is_ngfisk) {
                apply_box_overrides(box, model.param_names(), f.boxes);
            }
            const auto fit = fit_model(model, d, box, fit_options(f, model.is_ngfisk));
            const double cm = selection::cramer_von_mises(d.values, fitted_cdf(model, fit));
            scores.push_back(selection::make_score(model.name(),
                                                   static_cast<int>(fit.estimates.size()), n,
                                                   fit.nll, cm));
            fits.push_back(fit_json(fit));
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            errors.push_back({{"model", model.name()}, {"message", e.what()}});
        }
    }
    const auto ranked = selection::rank_models(scores);

    if (format == Format::csv) {
        out << "rank,model,k,n,nll,aic,bic,caic,hqic,cm\n";
        int rank = 1;
        for (const auto& s : ranked) {
            out << rank++ << ',' << s.name << ',' << s.k << ',' << s.n << ','
                << num(s.nll, f.precision) << ',' << num(s.aic, f.precision) << ','
                << num(s.bic, f.precision) << ',' << num(s.caic, f.precision) << ','
                << num(s.hqic, f.precision) << ',' << num(s.cm, f.precision) << '\n';
        }
        for (const auto& e : errors) {
            out << ",error," << e["model"].get<std::string>() << ",,,,,,,\n";
        }
    } else {
        json rows = json::array();
        int rank = 1;
        for (const auto& s : ranked) {
            rows.push_back({{"rank", rank++}, {"name", s.name}, {"k", s.k}, {"n", s.n},
                            {"nll", s.nll}, {"aic", s.aic}, {"bic", s.bic}, {"caic", s.caic},
                            {"hqic", s.hqic}, {"cm", s.cm}});
        }
        out << json({{"Dataset", dataset_json(d)},
                     {"ModelScore", rows},
                     {"FitResult", fits},
                     {"errors", errors}})
                   .dump(2)
            << '\n';
    }
    return errors.empty() ? 0 : 1;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
    const Format format = parse_format(f.format, Format::json);
    const int reps = f.full ? 1000 : f.reps;
    const std::uint64_t seed = f.seed_set ? f.seed : 2024;
    sim::SimCase sim_case = sim::reference_case(1, reps, seed);
    if (!f.truth.empty()) {
        const auto truth = parse_real_list(f.truth, "--truth");
        try {
            sim_case.truth = NgFiskParams::from_array(truth);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--truth: ") + e.what());
        }
    } else if (f.which_case != 0) {
        sim_case = sim::reference_case(f.which_case, reps, seed);
    } else {
        throw InputError("simulate needs --case 1|2|3 or --truth alpha,beta,theta,delta");
    }
    if (!f.n_list.empty()) {
        sim_case.sample_sizes = parse_int_list(f.n_list, "--n");
    }
    if (f.starts > 0) {
        sim_case.starts = f.starts;
    }
    apply_box_overrides(sim_case.box, est::ngfisk_param_names(), f.boxes);
    try {
        sim_case.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto summary =
        sim::run_case(sim_case, f.serial ? kernels::Exec::serial : kernels::Exec::parallel);

    if (format == Format::csv) {
        out << "n,parameter,truth,mle,mse,bias,variance,ci_lower,ci_upper,convergence_rate\n";
        for (const auto& size : summary.sizes) {
            for (const auto& p : size.params) {
                out << size.n << ',' << p.name << ',' << num(p.truth, f.precision) << ','
                    << num(p.mle_mean, f.precision) << ',' << num(p.mse, f.precision) << ','
                    << num(p.bias, f.precision) << ',' << num(p.variance, f.precision) << ','
                    << num(p.ci95.lower, f.precision) << ',' << num(p.ci95.upper, f.precision)
                    << ',' << num(size.convergence_rate, f.precision) << '\n';
            }
        }
        return 0;
    }
    const auto& t = sim_case.truth;
    json sizes = json::array();
    for (const auto& size : summary.sizes) {
        json params = json::array();
        for (const auto& p : size.params) {
            params.push_back({{"name", p.name}, {"truth", p.truth}, {"mle", p.mle_mean},
                              {"mse", p.mse}, {"bias", p.bias}, {"variance", p.variance},
                              {"ci95", {p.ci95.lower, p.ci95.upper}}});
        }
        sizes.push_back({{"n", size.n}, {"replications", size.replications},
                         {"converged", size.converged}, {"excluded", size.excluded},
                         {"convergence_rate", size.convergence_rate}, {"params", params}});
    }
    json j = {{"SimCase",
               {{"truth", {t.alpha(), t.beta(), t.theta(), t.delta()}},
                {"sample_sizes", sim_case.sample_sizes},
                {"replications", sim_case.replications},
                {"seed", sim_case.seed},
                {"starts", sim_case.starts}}},
              {"SimSummary", {{"sizes", sizes}}}};
    out << j.dump(2) << '\n';
    return 0;
}

std::vector<double> curve_grid(const Flags& f) {
    std::vector<double> xs;
    if (!f.xs.empty()) {
        xs = parse_real_list(f.xs, "--x");
    } else if (!f.grid.empty()) {
        const auto first = f.grid.find(':');
        const auto second = f.grid.find(':', first == std::string::npos ? 0 : first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            throw InputError("--grid expects LO:HI:N");
        }
        const auto lo = parse_real_list(f.grid.substr(0, first), "--grid");
        const auto hi = parse_real_list(f.grid.substr(first + 1, second - first - 1), "--grid");
        const auto count = parse_int_list(f.grid.substr(second + 1), "--grid");
        if (lo.size() != 1 || hi.size() != 1 || count.size() != 1 || !(hi[0] > lo[0])) {
            throw InputError("--grid expects LO:HI:N with LO < HI and N >= 1");
        }
        const int m = count[0];
        for (int i = 0; i < m; ++i) {
            xs.push_back(m == 1 ? lo[0] : lo[0] + (hi[0] - lo[0]) * i / (m - 1));
        }
    } else {
        throw InputError("curves needs --grid LO:HI:N or --x LIST");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] >= 0.0) || (i > 0 && !(xs[i] > xs[i - 1]))) {
            throw InputError("curve grid must be nonnegative and strictly ascending");
        }
    }
    return xs;
}

int cmd_curves(const Flags& f, std::ostream& out) {
    const ModelChoice model = parse_model(f.model);
    const Format format = parse_format(f.format, Format::csv);
    const auto params = parse_real_list(f.params, "--params");
    const auto xs = curve_grid(f);

    struct Cell {
        std::optional<double> value;
    };
    struct Row {
        double x;
        Cell pdf, cdf, survival, hazard;
    };
    std::vector<Row> rows;
    try {
        if (model.is_ngfisk) {
            const auto p = NgFiskParams::from_array(params);
            for (const auto& r : kernels::curves(p, xs, kernels::Exec::parallel)) {
                rows.push_back({r.x, {r.pdf}, {r.cdf}, {r.survival}, {r.hazard}});
            }
        } else {
            const competitors::CompetitorModel m(model.kind, params);
            auto guarded = [](auto&& fn) -> Cell {
                try {
                    const double v = fn();
                    return {std::isfinite(v) ? std::optional<double>(v) : std::nullopt};
                } catch (const std::exception&) {
                    return {std::nullopt};
                }
            };
            for (double x : xs) {
                Row r{x, {}, {}, {}, {}};
                r.pdf = guarded([&] { return competitors::pdf(m, x); });
                r.cdf = guarded([&] { return competitors::cdf(m, x); });
                r.survival = guarded([&] { return 1.0 - competitors::cdf(m, x); });
                r.hazard = guarded([&] { return competitors::pdf(m, x) / (1.0 - competitors::cdf(m, x)); });
                rows.push_back(r);
            }
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--params: ") + e.what());
    }

    auto flags_of = [](const Row& r) {
        std::string flag;
        auto mark = [&](const Cell& c, const char* name) {
            if (!c.value || !std::isfinite(*c.value)) {
                flag += flag.empty() ? name : std::string(";") + name;
            }
        };
        mark(r.pdf, "pdf");
        mark(r.cdf, "cdf");
        mark(r.survival, "survival");
        mark(r.hazard, "hazard");
        return flag;
    };
    if (format == Format::csv) {
        auto cell = [&](const Cell& c) {
            return c.value && std::isfinite(*c.value) ? num(*c.value, f.precision) : std::string();
        };
        out << "x,pdf,cdf,survival,hazard,flag\n";
        for (const auto& r : rows) {
            out << num(r.x, f.precision) << ',' << cell(r.pdf) << ',' << cell(r.cdf) << ','
                << cell(r.survival) << ',' << cell(r.hazard) << ',' << flags_of(r) << '\n';
        }
        return 0;
    }
    auto cell = [](const Cell& c) {
        return c.value && std::isfinite(*c.value) ? json(*c.value) : json(nullptr);
    };
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"x", r.x}, {"pdf", cell(r.pdf)}, {"cdf", cell(r.cdf)},
                       {"survival", cell(r.survival)}, {"hazard", cell(r.hazard)},
                       {"flag", flags_of(r)}});
    }
    out << json({{"model", model.name()}, {"params", params}, {"curves", arr}}).dump(2) << '\n';
    return 0;
}

int cmd_sample(const Flags& f, std::ostream& out) {
    const auto params = parse_real_list(f.params, "--params");
    std::optional<NgFiskParams> p;
    try {
        p = NgFiskParams::from_array(params);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--params: ") + e.what());
    }
    const auto counts = f.n_list.empty() ? std::vector<double>{} : parse_real_list(f.n_list, "--n");
    if (counts.size() != 1 || counts[0] < 0 || counts[0] != std::floor(counts[0])) {
        throw InputError("sample needs --n COUNT (a nonnegative integer)");
    }
    const auto values = kernels::sample_batch(*p, static_cast<std::size_t>(counts[0]), f.seed,
                                              kernels::Exec::parallel);
    if (parse_format(f.format, Format::csv) == Format::json) {
        out << json({{"sample", values}}).dump() << '\n';
        return 0;
    }
    for (double v : values) {
        out << num(v, f.precision) << '\n';
    }
    return 0;
}

void emit_error(std::ostream& err, const std::string& type, const std::string& message) {
    err << json({{"error", {{"type", type}, {"message", message}}}}).dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"NG-Fisk lifetime distribution: fitting, model comparison and simulation"};
    app.require_subcommand(1);
    Flags f;

    auto* describe = app.add_subcommand("describe", "Six-number summary of a dataset");
    describe->add_option("--data", f.data, "Data file or builtin:dataFT");
    add_output_flags(describe, f);

    auto* fit = app.add_subcommand("fit", "Maximum-likelihood fit of one model");
    fit->add_option("--data", f.data, "Data file or builtin:dataFT");
    fit->add_option("--model", f.model, "ngfisk, NEx-FW, FW, KWP, Ku-W or Z-W");
    fit->add_option("--fix-delta", f.fix_delta, "NG-F: hold delta fixed and profile the rest");
    add_fit_flags(fit, f);
    add_output_flags(fit, f);

    auto* compare = app.add_subcommand("compare", "Fit several models and rank them");
    compare->add_option("--data", f.data, "Data file or builtin:dataFT");
    compare->add_option("--models", f.models, "Comma-separated model list");
    add_fit_flags(compare, f);
    add_output_flags(compare, f);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo study of NG-F estimators");
    simulate->add_option("--case", f.which_case, "Reference case 1, 2 or 3")->check(CLI::Range(1, 3));
    simulate->add_option("--truth", f.truth, "alpha,beta,theta,delta");
    simulate->add_option("--n", f.n_list, "Comma-separated sample sizes");
    simulate->add_option("--reps", f.reps, "Replications per sample size (>= 40)");
    simulate->add_flag("--full", f.full, "Use 1000 replications");
    simulate->add_flag("--serial", f.serial, "Run replicates on one thread");
    simulate->add_option("--seed", f.seed, "Case seed (default 2024)")
        ->each([&](const std::string&) { f.seed_set = true; });
    simulate->add_option("--starts", f.starts, "Optimizer starts per fit")->check(CLI::Range(1, 1000));
    simulate->add_option("--box", f.boxes, "Parameter box override NAME=LO:HI (repeatable)");
    add_output_flags(simulate, f);

    auto* curves = app.add_subcommand("curves", "Tabulate pdf, cdf, survival and hazard");
    curves->add_option("--model", f.model, "ngfisk, NEx-FW, FW, KWP, Ku-W or Z-W");
    curves->add_option("--params", f.params, "Comma-separated parameters")->required();
    curves->add_option("--grid", f.grid, "LO:HI:N evenly spaced points");
    curves->add_option("--x", f.xs, "Comma-separated evaluation points");
    add_output_flags(curves, f);

    auto* sample = app.add_subcommand("sample", "Draw NG-F variates by inverse transform");
    sample->add_option("--params", f.params, "alpha,beta,theta,delta")->required();
    sample->add_option("--n", f.n_list, "Number of draws")->required();
    sample->add_option("--seed", f.seed, "Generator seed");
    add_output_flags(sample, f);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what());
        return 2;
    }

    try {
        if (describe->parsed()) return cmd_describe(f, out);
        if (fit->parsed()) return cmd_fit(f, out);
        if (compare->parsed()) return cmd_compare(f, out);
        if (simulate->parsed()) return cmd_simulate(f, out);
        if (curves->parsed()) return cmd_curves(f, out);
        if (sample->parsed()) return cmd_sample(f, out);
    } catch (const InputError& e) {
        emit_error(err, "input", e.what());
        return 1;
    } catch (const data::ParseError& e) {
        emit_error(err, "parse", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit_error(err, "invalid_argument", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error(err, "runtime", e.what());
        return 1;
    }
    return 2;
}

}  // namespace ngfisk::cli

#include <cmath>
#include <memory>

#include "cli.hpp"
#include "twisted/bohr.hpp"
#include "twisted/error.hpp"
#include "twisted/kronecker.hpp"

namespace twisted::cli {

namespace {

aap::AAPFunction load_function(const std::string& path) {
  return io::aap_function_from_json(io::read_json_file(path), path);
}

struct EvalArgs {
  std::string f;
  std::optional<double> at;
  std::vector<double> torus;
};

Report run_eval(const EvalArgs& a) {
  Report r;
  r.config = {{"command", "aap eval"}, {"f", a.f}};
  const auto f = load_function(a.f);
  if (a.at) {
    r.config["at"] = *a.at;
    r.result = {{"value", io::to_json(aap::evaluate(f, *a.at))},
                {"torus_image", aap::natural_map(f.basis(), *a.at).theta}};
  } else {
    require(!a.torus.empty(), "give --at t or --torus angles");
    require(a.torus.size() == f.basis().dimension(), "--torus needs one angle per frequency");
    r.config["torus"] = a.torus;
    const aap::SpectrumPoint p = aap::torus_point(a.torus);
    r.result = {{"value", io::to_json(aap::evaluate_character(p, f))}};
  }
  return r;
}

struct DecomposeArgs {
  std::string f;
  int K = 1;
  double T = 1000.0;
  std::int64_t panels = 0;
};

Report run_decompose(const DecomposeArgs& a) {
  Report r;
  r.config = {{"command", "aap decompose"}, {"f", a.f}, {"K", a.K}, {"T", a.T}};
  if (a.panels > 0) r.config["panels"] = a.panels;
  const auto f = load_function(a.f);
  aap::DecomposeOptions options;
  options.support_bound = a.K;
  options.T = a.T;
  options.panels = a.panels;
  const auto d = aap::decompose(f, options);

  Json coefficients = Json::array();
  for (const auto& c : d.coefficients) {
    Json row{{"k", c.k}, {"frequency", c.frequency}, {"estimate", io::to_json(c.estimate)},
             {"bound", c.bound}};
    if (c.exact) {
      row["exact"] = io::to_json(*c.exact);
      row["abs_error"] = std::abs(c.estimate - *c.exact);
    }
    coefficients.push_back(row);
  }
  Json residuals = Json::array();
  for (const auto& w : d.residuals) residuals.push_back({{"start", w.start}, {"max_abs", w.max_abs}});
  r.result = {{"ap_estimate", io::to_json(d.ap_estimate)},
              {"coefficients", coefficients},
              {"residuals", residuals},
              {"max_coefficient_error", d.max_coefficient_error.value_or(0.0)},
              {"within_bound", d.within_bound.value_or(true)}};
  if (d.within_bound && !*d.within_bound) {
    r.ok = false;
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
      const auto& c = d.coefficients[i];
      if (std::abs(c.estimate - *c.exact) > c.bound) {
        r.witness = coefficients[i];
        break;
      }
    }
  }
  return r;
}

struct KroneckerArgs {
  std::vector<double> lambda, theta;
  double eps = 0.0, tmax = 0.0;
};

Report run_kronecker(const KroneckerArgs& a) {
  Report r;
  r.config = {{"command", "aap kronecker"}, {"lambda", a.lambda}, {"theta", a.theta},
              {"eps", a.eps}, {"tmax", a.tmax}};
  const aap::FrequencyBasis basis(a.lambda);
  const auto t = aap::kronecker_search(basis, a.theta, a.eps, a.tmax);
  if (t) {
    const auto target = aap::torus_point(a.theta);
    const auto image = aap::natural_map(basis, *t);
    r.result = {{"t", *t},
                {"torus_image", image.theta},
                {"distance", aap::torus_distance(image.theta, target.theta)}};
  } else {
    r.result = {{"t", nullptr}};
    r.ok = false;
    r.witness = {{"searched", "|t| <= tmax"}, {"tmax", a.tmax}, {"eps", a.eps}};
  }
  return r;
}

struct MeanArgs {
  std::string f;
  std::vector<double> T;
  std::int64_t panels = 0;
};

Report run_mean(const MeanArgs& a) {
  Report r;
  r.config = {{"command", "aap mean"}, {"f", a.f}, {"T", a.T}};
  if (a.panels > 0) r.config["panels"] = a.panels;
  const auto f = load_function(a.f);
  const aap::Complex c0 = f.ap.coefficient(aap::FrequencyIndex(f.basis().dimension(), 0));
  CsvTable table{{"T", "estimate_re", "estimate_im", "bound", "abs_error"}, {}};
  Json rows = Json::array();
  for (double T : a.T) {
    require(T > 0.0, "--T values must be positive");
    const std::int64_t panels =
        a.panels > 0 ? a.panels : aap::recommended_panels(T, f.ap.max_frequency());
    const auto m = aap::bohr_mean(f, T, panels);
    const double err = std::abs(m.value - c0);
    table.rows.push_back({number(T), number(m.value.real()), number(m.value.imag()),
                          number(m.bound()), number(err)});
    Json row{{"T", T}, {"panels", panels}, {"estimate", io::to_json(m.value)},
             {"bound", m.bound()}, {"abs_error", err}};
    rows.push_back(row);
    if (err > m.bound() && r.ok) {
      r.ok = false;
      r.witness = row;
    }
  }
  r.result = {{"mean", io::to_json(c0)}, {"rows", rows}};
  r.csv = std::move(table);
  return r;
}

}  // namespace

void add_aap(CLI::App& app, Action& action) {
  auto* aapc = app.add_subcommand("aap", "Asymptotically almost periodic functions");
  aapc->require_subcommand(1);

  auto eval_args = std::make_shared<EvalArgs>();
  auto* eval = aapc->add_subcommand("eval", "Evaluate at a real point or a torus character");
  eval->add_option("--f", eval_args->f, "Function (JSON)")->required()->check(CLI::ExistingFile);
  auto* at = eval->add_option("--at", eval_args->at, "Real point t");
  auto* torus = eval->add_option("--torus", eval_args->torus, "Torus angles θ₁ … θ_d");
  at->excludes(torus);
  eval->callback([&action, eval_args] {
    action = [eval_args](const Global&) { return run_eval(*eval_args); };
  });

  auto dec_args = std::make_shared<DecomposeArgs>();
  auto* dec = aapc->add_subcommand("decompose", "Estimate Fourier-Bohr coefficients on a box");
  dec->add_option("--f", dec_args->f, "Function (JSON)")->required()->check(CLI::ExistingFile);
  dec->add_option("--K", dec_args->K, "Support bound |k|∞ <= K")->check(CLI::NonNegativeNumber);
  dec->add_option("--T", dec_args->T, "Averaging half-window")->check(CLI::PositiveNumber);
  dec->add_option("--panels", dec_args->panels, "Midpoint panels (default: recommended)")
      ->check(CLI::PositiveNumber);
  dec->callback([&action, dec_args] {
    action = [dec_args](const Global&) { return run_decompose(*dec_args); };
  });

  auto kr_args = std::make_shared<KroneckerArgs>();
  auto* kr = aapc->add_subcommand("kronecker", "Find t with ι(t) within eps of a torus point");
  kr->add_option("--lambda", kr_args->lambda, "Frequency basis")->required();
  kr->add_option("--theta", kr_args->theta, "Target angles")->required();
  kr->add_option("--eps", kr_args->eps, "Angular tolerance")->required()->check(CLI::PositiveNumber);
  kr->add_option("--tmax", kr_args->tmax, "Search bound on |t|")->required()->check(CLI::PositiveNumber);
  kr->callback([&action, kr_args] {
    action = [kr_args](const Global&) { return run_kronecker(*kr_args); };
  });

  auto mean_args = std::make_shared<MeanArgs>();
  auto* mean = aapc->add_subcommand("mean", "Bohr mean over [-T, T] with its error bound");
  mean->add_option("--f", mean_args->f, "Function (JSON)")->required()->check(CLI::ExistingFile);
  mean->add_option("--T", mean_args->T, "One or more half-windows")->required();
  mean->add_option("--panels", mean_args->panels, "Midpoint panels (default: recommended)")
      ->check(CLI::PositiveNumber);
  mean->callback([&action, mean_args] {
    action = [mean_args](const Global&) { return run_mean(*mean_args); };
  });
}

}  // namespace twisted::cli

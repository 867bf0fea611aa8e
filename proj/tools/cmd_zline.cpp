#include <memory>

#include "cli.hpp"
#include "twisted/error.hpp"
#include "twisted/zline.hpp"

namespace twisted::cli {

namespace {

Json model_json(const zline::TwistedZ& t) {
  if (!t.map()) return {{"z", nullptr}};
  const auto& f = *t.map();
  Json exceptions = Json::array();
  for (const auto& [k, v] : f.exceptions()) exceptions.push_back({k, v});
  Json out{{"z", io::to_json(t.z())},
           {"f", {{"m", f.modulus()}, {"residue_values", f.residue_values()},
                  {"exceptions", exceptions}}}};
  if (!t.labels.empty()) out["labels"] = t.labels;
  return out;
}

Json labelled(const zline::TwistedZ& t, fintop::PointSet s) {
  Json out = Json::array();
  for (int p : fintop::members(s)) {
    if (t.labels.empty())
      out.push_back(p);
    else
      out.push_back(t.labels[static_cast<std::size_t>(p)]);
  }
  return out;
}

zline::TwistedZ load_model(const std::string& path) {
  return io::zline_model_from_json(io::read_json_file(path), path);
}

struct AnalyzeArgs {
  std::string model, set;
};

Report run_analyze(const AnalyzeArgs& a) {
  Report r;
  r.config = {{"command", "zline analyze"}, {"model", a.model}, {"set", a.set}};
  const auto t = load_model(a.model);
  const auto s = io::zsumset_from_json(io::read_json_file(a.set), a.set);
  require(fintop::is_subset(s.zpart, t.z_full()), a.set + ":/z: point outside Z");

  const auto open = zline::is_open(t, s);
  const auto compact = zline::is_compact(t, s);
  r.result = {{"open", open.open},
              {"closed", zline::is_closed(t, s)},
              {"closure", io::to_json(zline::closure(t, s))},
              {"interior", io::to_json(zline::interior(t, s))},
              {"compact", compact.compact}};
  if (open.open) {
    Json parts = Json::array();
    for (const auto& e : open.decomposition) parts.push_back(io::to_json(e));
    r.result["decomposition"] = parts;
  } else {
    Json why{{"reason", open.reason}};
    if (open.witness_point) why["z_point"] = *open.witness_point;
    if (open.witness_defect) why["defect"] = io::to_json(*open.witness_defect);
    r.result["not_open_because"] = why;
  }
  if (!compact.compact) r.result["uncovered"] = io::to_json(compact.uncovered);
  return r;
}

Report run_onepoint() {
  Report r;
  r.config = {{"command", "zline onepoint"}};
  const auto t = zline::one_point_model();
  const zline::ZSumSet line{zline::PeriodicSet::all(), 0};
  const zline::ZSumSet whole{zline::PeriodicSet::all(), t.z_full()};
  const auto coincide = zline::sums_coincide(t);
  const auto limit = zline::limit_points(t, 0, 1);
  r.result = {{"model", model_json(t)},
              {"hausdorff", zline::is_hausdorff(t)},
              {"line_compact", zline::is_compact(t, line).compact},
              {"whole_compact", zline::is_compact(t, whole).compact},
              {"sums_coincide", coincide.coincide()},
              {"limit_of_0_1_2", labelled(t, limit.limit_set)}};
  // The classical one-point compactification of ℤ.
  const bool expected = r.result["hausdorff"] == true && r.result["line_compact"] == false &&
                        r.result["whole_compact"] == true &&
                        r.result["sums_coincide"] == false && limit.converges == 0;
  if (!expected) {
    r.ok = false;
    r.witness = r.result;
  }
  return r;
}

struct LimitsArgs {
  std::vector<std::int64_t> seq;
  std::string model;
};

Report run_limits(const LimitsArgs& a) {
  Report r;
  r.config = {{"command", "zline limits"}, {"seq", a.seq}};
  if (!a.model.empty()) r.config["model"] = a.model;
  const auto t = a.model.empty() ? zline::one_point_model() : load_model(a.model);
  const auto limit = zline::limit_points(t, a.seq[0], a.seq[1]);
  r.result = {{"recurring_values", labelled(t, limit.recurring_values)},
              {"limit_set", labelled(t, limit.limit_set)},
              {"converges_to", limit.converges
                                   ? labelled(t, fintop::singleton(*limit.converges))[0]
                                   : Json(nullptr)}};
  return r;
}

}  // namespace

void add_zline(CLI::App& app, Action& action) {
  auto* zl = app.add_subcommand("zline", "Twisted sums with Y the integers");
  zl->require_subcommand(1);

  auto analyze_args = std::make_shared<AnalyzeArgs>();
  auto* analyze = zl->add_subcommand("analyze", "Open/closed/closure/interior/compact of a set");
  analyze->add_option("--model", analyze_args->model, "Model (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--set", analyze_args->set, "Set (JSON)")->required()->check(CLI::ExistingFile);
  analyze->callback([&action, analyze_args] {
    action = [analyze_args](const Global&) { return run_analyze(*analyze_args); };
  });

  auto* onepoint = zl->add_subcommand("onepoint", "The one-point compactification fixture");
  onepoint->callback([&action] { action = [](const Global&) { return run_onepoint(); }; });

  auto limits_args = std::make_shared<LimitsArgs>();
  auto* limits = zl->add_subcommand("limits", "Limit set of the progression a, a+d, a+2d, ...");
  limits->add_option("--seq", limits_args->seq, "Start and step")->required()->expected(2);
  limits->add_option("--model", limits_args->model, "Model (JSON); default one-point")
      ->check(CLI::ExistingFile);
  limits->callback([&action, limits_args] {
    action = [limits_args](const Global&) { return run_limits(*limits_args); };
  });
}

}  // namespace twisted::cli

#include <memory>

#include "cli.hpp"
#include "twisted/error.hpp"
#include "twisted/fintop.hpp"

namespace twisted::cli {

namespace {

struct CheckArgs {
  std::string y, z, f;
  std::vector<int> exhaustive;
};

Report run_check(const CheckArgs& a) {
  Report r;
  r.config = {{"command", "fintop check"}};
  const bool single = !a.y.empty() || !a.z.empty() || !a.f.empty();
  require(single || !a.exhaustive.empty(), "give --y/--z/--f, --exhaustive n m, or both");

  if (single) {
    require(!a.y.empty() && !a.z.empty() && !a.f.empty(), "--y, --z and --f go together");
    r.config["y"] = a.y;
    r.config["z"] = a.z;
    r.config["f"] = a.f;
    const auto y = io::topology_from_json(io::read_json_file(a.y), a.y);
    const auto z = io::topology_from_json(io::read_json_file(a.z), a.z);
    const auto f = io::map_from_json(io::read_json_file(a.f), y, z, a.f);
    const auto report = fintop::check_diagram(y, z, f);
    r.result["diagram"] = io::to_json(report);
    r.result["twisted"] = io::to_json(fintop::twisted_sum(y, z, f).topology());
    r.result["direct"] = io::to_json(fintop::direct_sum(y, z).topology());
    if (!report.consistent()) {
      r.ok = false;
      Json broken = Json::array();
      for (const auto& i : report.implications)
        if (i.applicable && !i.holds) broken.push_back(i.name);
      r.witness = {{"implications", broken}, {"y", io::to_json(y)}, {"z", io::to_json(z)},
                   {"f", {{"values", f.values()}}}};
    }
  }

  if (!a.exhaustive.empty()) {
    const int n = a.exhaustive[0], m = a.exhaustive[1];
    require(n >= 0 && m >= 0 && n + m <= fintop::kMaxPoints,
            "--exhaustive sizes must be >= 0 with n + m <= " + std::to_string(fintop::kMaxPoints));
    r.config["exhaustive"] = a.exhaustive;
    const auto sweep = fintop::sweep(n, m);
    r.result["exhaustive"] = io::to_json(sweep);
    if (!sweep.ok() && r.ok) {
      r.ok = false;
      r.witness = io::to_json(sweep)["failures"][0];
    }
  }
  return r;
}

}  // namespace

void add_fintop(CLI::App& app, Action& action) {
  auto* fintop = app.add_subcommand("fintop", "Twisted sums of finite spaces");
  fintop->require_subcommand(1);
  auto args = std::make_shared<CheckArgs>();
  auto* check = fintop->add_subcommand("check", "Diagram of statements for one map, or a sweep");
  check->add_option("--y", args->y, "Topology on Y (JSON)")->check(CLI::ExistingFile);
  check->add_option("--z", args->z, "Topology on Z (JSON)")->check(CLI::ExistingFile);
  check->add_option("--f", args->f, "Continuous map Y -> Z (JSON)")->check(CLI::ExistingFile);
  check->add_option("--exhaustive", args->exhaustive, "Sweep all instances with |Y| <= n, |Z| <= m")
      ->expected(2);
  check->callback([&action, args] { action = [args](const Global&) { return run_check(*args); }; });
}

}  // namespace twisted::cli

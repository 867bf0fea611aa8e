#include <cstdlib>
#include <iostream>

#include "cli.hpp"
#include "twisted/error.hpp"

namespace twisted::cli {

std::string number(double v) { return Json(v).dump(); }

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kParseError = 2;
constexpr int kInvariantBreach = 3;

void write(const Global& g, const Report& r) {
  if (g.format == "json") {
    Json out;
    out["config"] = r.config;
    out["config"]["seed"] = g.seed;
    out["status"] = r.ok ? "ok" : "fail";
    out["result"] = r.result;
    if (!r.ok) out["witness"] = r.witness;
    std::cout << out.dump(2) << "\n";
    return;
  }
  const std::string header = "seed=" + std::to_string(g.seed) + " config=" + r.config.dump();
  if (g.format == "csv") {
    require(r.csv.has_value(), "csv output is only available for convergence tables");
    std::cout << "# " << header << "\n";
    for (std::size_t i = 0; i < r.csv->header.size(); ++i)
      std::cout << (i ? "," : "") << r.csv->header[i];
    std::cout << "\n";
    for (const auto& row : r.csv->rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    if (!r.ok) std::cout << "# fail witness=" << r.witness.dump() << "\n";
    return;
  }
  std::cout << "# " << header << "\n" << io::to_table(r.result);
  std::cout << "status  " << (r.ok ? "ok" : "fail") << "\n";
  if (!r.ok) std::cout << "witness  " << r.witness.dump() << "\n";
}

}  // namespace

}  // namespace twisted::cli

int main(int argc, char** argv) {
  using namespace twisted::cli;
  CLI::App app{"Twisted sums of topological spaces: finite models, the integer line, "
               "asymptotically almost periodic spectra and their measures"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", global.seed, "Seed for randomized checks (TWISTED_SPECTRA_SEED wins)");

  Action action;
  add_fintop(app, action);
  add_zline(app, action);
  add_aap(app, action);
  add_measures(app, action);

  try {
    app.parse(argc, argv);
    if (const char* env = std::getenv("TWISTED_SPECTRA_SEED")) {
      try {
        std::size_t used = 0;
        global.seed = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw twisted::InputError("TWISTED_SPECTRA_SEED: expected an unsigned integer");
      }
    }
    if (!action) throw twisted::InputError("no command given");
    const Report report = action(global);
    write(global, report);
    return report.ok ? kOk : kCheckFailed;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  } catch (const twisted::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const twisted::InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariantBreach;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantBreach;
  }
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twisted/io.hpp"

namespace twisted::cli {

using io::Json;

struct Global {
  std::string format = "json";
  std::uint64_t seed = 0;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand hands back to the driver. `ok == false` means a
// requested check failed; `witness` then holds enough to replay it.
struct Report {
  Json config = Json::object();
  Json result = Json::object();
  bool ok = true;
  Json witness;
  std::optional<CsvTable> csv;
};

using Action = std::function<Report(const Global&)>;

// Each registers its subcommands on `app`; the chosen one stores its action.
void add_fintop(CLI::App& app, Action& action);
void add_zline(CLI::App& app, Action& action);
void add_aap(CLI::App& app, Action& action);
void add_measures(CLI::App& app, Action& action);

// Shortest round-trip decimal form, as used in every output format.
std::string number(double v);

}  // namespace twisted::cli

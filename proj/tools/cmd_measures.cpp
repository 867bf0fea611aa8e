#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "cli.hpp"
#include "twisted/error.hpp"
#include "twisted/measures.hpp"

namespace twisted::cli {

namespace {

using namespace twisted::measures;

struct Property {
  explicit Property(std::string n) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  Json witness;
};

void fail_with(Property& p, Json witness) {
  if (p.pass) p.witness = std::move(witness);
  p.pass = false;
}

// Reads [{"point": P, "w": real}] at j[key], or nothing when absent.
template <typename Point, typename Read>
AtomicMeasure<Point> atoms_from(const Json& j, const char* key, const std::string& where,
                                Read read) {
  AtomicMeasure<Point> m;
  if (!j.is_object() || !j.contains(key)) return m;
  const Json& list = j[key];
  const std::string lw = where + "/" + key;
  require(list.is_array(), lw + ": expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = lw + "/" + std::to_string(i);
    require(list[i].is_object() && list[i].contains("point") && list[i].contains("w"),
            w + ": expected {\"point\", \"w\"}");
    require(list[i]["w"].is_number(), w + "/w: expected a number");
    const double weight = list[i]["w"].get<double>();
    require(std::isfinite(weight) && weight >= 0.0, w + "/w: weight must be finite and >= 0");
    m.add(read(list[i]["point"], w + "/point"), weight);
  }
  return m;
}

int int_point(const Json& j, const std::string& where) {
  require(j.is_number_integer(), where + ": expected an integer");
  return j.get<int>();
}

const Json& z_part(const Json& fixture) {
  static const Json empty = Json::object();
  return fixture.contains("z") ? fixture["z"] : empty;
}

std::vector<Property> verify_finite(const Json& fx, const std::string& where) {
  require(fx.contains("space"), where + ": missing key \"space\"");
  const Json& sj = fx["space"];
  const std::string sw = where + "/space";
  require(sj.is_object() && sj.contains("y") && sj.contains("z") && sj.contains("f"),
          sw + ": expected {\"y\", \"z\", \"f\"}");
  const auto y = io::topology_from_json(sj["y"], sw + "/y");
  const auto z = io::topology_from_json(sj["z"], sw + "/z");
  const auto f = io::map_from_json(sj["f"], y, z, sw + "/f");
  const auto tw = fintop::twisted_sum(y, z, f);
  const auto direct = fintop::direct_sum(y, z);

  FiniteSumMeasure m;
  m.mu_y = atoms_from<int>(fx, "y_atoms", where, int_point);
  m.mu_z = atoms_from<int>(z_part(fx), "atoms", where + "/z", int_point);

  std::vector<Property> out;
  Property borel{"borel_algebras_equal"};
  const auto algebra = fintop::borel_algebra(tw);
  if (algebra != fintop::borel_algebra(direct) || algebra != fintop::product_algebra(y, z))
    fail_with(borel, {{"twisted_members", algebra.size()},
                      {"direct_members", fintop::borel_algebra(direct).size()}});
  out.push_back(borel);

  AlgebraMeasure mu;
  for (auto s : algebra) mu[s] = measure_of(m, tw, s);
  Property round{"decompose_recombine"};
  const auto d = decompose_measure(tw, mu);
  if (!d.recombines) fail_with(round, {{"set", fintop::members(*d.witness)}});
  if (recombine(tw, d.mu_y, d.mu_z) != mu) fail_with(round, {{"recombine", "differs from mu"}});
  for (const auto& [a, v] : d.mu_y)
    if (v != m.mu_y.measure([a](int p) { return fintop::contains(a, p); }))
      fail_with(round, {{"y_set", fintop::members(a)}, {"value", v}});
  for (const auto& [b, v] : d.mu_z)
    if (v != m.mu_z.measure([b](int p) { return fintop::contains(b, p); }))
      fail_with(round, {{"z_set", fintop::members(b)}, {"value", v}});
  out.push_back(round);

  Property additive{"additive_and_monotone"};
  const double tol = 1e-12 * std::max(1.0, m.mass());
  for (auto a : algebra)
    for (auto b : algebra) {
      if (fintop::is_subset(a, b) && mu[a] > mu[b])
        fail_with(additive, {{"subset", fintop::members(a)}, {"superset", fintop::members(b)}});
      if ((a & b) == 0 && std::abs(mu[a | b] - (mu[a] + mu[b])) > tol)
        fail_with(additive, {{"a", fintop::members(a)}, {"b", fintop::members(b)}});
    }
  out.push_back(additive);
  return out;
}

zline::ZSumSet random_zset(std::mt19937_64& rng, int z_size) {
  std::uniform_int_distribution<int> mod(1, 6), small(-20, 20), coin(0, 1);
  const int m = mod(rng);
  std::vector<std::int64_t> residues, added, removed;
  for (int r = 0; r < m; ++r)
    if (coin(rng)) residues.push_back(r);
  for (int i = 0; i < 3; ++i) {
    if (coin(rng)) added.push_back(small(rng));
    if (coin(rng)) removed.push_back(small(rng));
  }
  fintop::PointSet zpart = 0;
  for (int p = 0; p < z_size; ++p)
    if (coin(rng)) zpart |= fintop::singleton(p);
  return {zline::PeriodicSet(m, residues, added, removed), zpart};
}

std::vector<Property> verify_zline(const Json& fx, const std::string& where, std::uint64_t seed) {
  require(fx.contains("model"), where + ": missing key \"model\"");
  const auto t = io::zline_model_from_json(fx["model"], where + "/model");
  ZLineSumMeasure m;
  m.mu_y = atoms_from<std::int64_t>(fx, "y_atoms", where, [](const Json& j, const std::string& w) {
    require(j.is_number_integer(), w + ": expected an integer");
    return j.get<std::int64_t>();
  });
  m.mu_z = atoms_from<int>(z_part(fx), "atoms", where + "/z", int_point);
  for (const auto& [p, w] : m.mu_z.atoms())
    require(p >= 0 && p < t.z().size(), where + "/z/atoms: point outside Z");

  std::vector<zline::ZSumSet> sets;
  if (fx.contains("sets")) {
    require(fx["sets"].is_array(), where + "/sets: expected an array");
    for (std::size_t i = 0; i < fx["sets"].size(); ++i)
      sets.push_back(io::zsumset_from_json(fx["sets"][i], where + "/sets/" + std::to_string(i)));
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) sets.push_back(random_zset(rng, t.z().size()));
  }

  Property inner{"inner_regularity"};
  Property monotone{"monotone"};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& s = sets[i];
    require(fintop::is_subset(s.zpart, t.z_full()), where + "/sets: point outside Z");
    const auto report = inner_regularity_check(m, t, s);
    if (!report.ok())
      fail_with(inner, {{"set", io::to_json(s)},
                        {"measure", report.measure},
                        {"compact_measure", report.compact_measure},
                        {"witness", io::to_json(report.compact_witness)}});
    for (const auto& other : sets) {
      const auto both = zline::intersect(s, other);
      if (measure_of(m, both) > measure_of(m, s)) fail_with(monotone, {{"set", io::to_json(s)}});
    }
  }
  return {inner, monotone};
}

std::vector<Property> verify_aap(const Json& fx, const std::string& where, std::uint64_t seed) {
  require(fx.contains("basis"), where + ": missing key \"basis\"");
  const auto basis = io::basis_from_json(fx["basis"], where + "/basis");
  const std::size_t d = basis.dimension();
  AapSumMeasure m;
  m.mu_y = atoms_from<double>(fx, "y_atoms", where, [](const Json& j, const std::string& w) {
    require(j.is_number(), w + ": expected a number");
    return j.get<double>();
  });
  const Json& zj = z_part(fx);
  if (zj.contains("haar")) {
    require(zj["haar"].is_number() && zj["haar"].get<double>() >= 0.0,
            where + "/z/haar: expected a number >= 0");
    m.mu_z.haar_weight = zj["haar"].get<double>();
  }
  m.mu_z.atoms = atoms_from<std::vector<double>>(
      zj, "atoms", where + "/z", [d](const Json& j, const std::string& w) {
        require(j.is_array() && j.size() == d, w + ": expected one angle per frequency");
        std::vector<double> theta;
        for (const auto& a : j) {
          require(a.is_number(), w + ": expected numbers");
          theta.push_back(aap::reduce_angle(a.get<double>()));
        }
        return theta;
      });

  const aap::TrigPolynomial f1 = fx.contains("ap") ? io::trig_from_json(fx["ap"], basis, where + "/ap")
                                                   : aap::TrigPolynomial(basis);
  std::vector<double> shifts;
  if (fx.contains("shifts")) {
    for (const auto& s : fx["shifts"]) {
      require(s.is_number(), where + "/shifts: expected numbers");
      shifts.push_back(s.get<double>());
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 20; ++i) shifts.push_back(u(rng));
  }

  Property invariant{"haar_integral_invariant"};
  Property modulus{"coefficient_modulus_preserved"};
  const aap::Complex base = haar_integral(f1);
  for (double s : shifts) {
    const auto moved = translation_action(f1, s);
    if (haar_integral(moved) != base)
      fail_with(invariant, {{"shift", s}, {"moved", io::to_json(haar_integral(moved))}});
    for (const auto& [k, c] : f1.coefficients())
      if (std::abs(std::abs(moved.coefficient(k)) - std::abs(c)) > 1e-12 * std::max(1.0, std::abs(c)))
        fail_with(modulus, {{"shift", s}, {"k", k}});
  }

  Property bounded{"set_measures_bounded"};
  if (fx.contains("sets")) {
    require(fx["sets"].is_array(), where + "/sets: expected an array");
    const double tol = 1e-12 * std::max(1.0, m.mass());
    for (std::size_t i = 0; i < fx["sets"].size(); ++i) {
      const auto s = io::aap_set_from_json(fx["sets"][i], where + "/sets/" + std::to_string(i));
      const double v = measure_of(m, s, d);
      if (v < 0.0 || v > m.mass() + tol) fail_with(bounded, {{"set", i}, {"measure", v}});
    }
  }
  Property total{"haar_total_mass"};
  if (haar_box(std::vector<aap::Arc>(d, aap::Arc{0.0, aap::kTwoPi})) != 1.0)
    fail_with(total, {{"dimension", d}});
  return {invariant, modulus, bounded, total};
}

struct VerifyArgs {
  std::string model, fixture;
};

Report run_verify(const VerifyArgs& a, const Global& g) {
  Report r;
  r.config = {{"command", "measures verify"}, {"model", a.model}, {"fixture", a.fixture}};
  const Json fx = io::read_json_file(a.fixture);
  require(fx.is_object(), a.fixture + ": expected an object");
  std::vector<Property> props;
  if (a.model == "finite")
    props = verify_finite(fx, a.fixture + ":");
  else if (a.model == "zline")
    props = verify_zline(fx, a.fixture + ":", g.seed);
  else
    props = verify_aap(fx, a.fixture + ":", g.seed);

  Json list = Json::array();
  for (const auto& p : props) {
    Json row{{"name", p.name}, {"pass", p.pass}};
    if (!p.pass) {
      row["witness"] = p.witness;
      if (r.ok) r.witness = {{"property", p.name}, {"witness", p.witness}};
      r.ok = false;
    }
    list.push_back(row);
  }
  r.result = {{"properties", list}};
  return r;
}

}  // namespace

void add_measures(CLI::App& app, Action& action) {
  auto* ms = app.add_subcommand("measures", "Finite Borel measures on twisted sums");
  ms->require_subcommand(1);
  auto args = std::make_shared<VerifyArgs>();
  auto* verify = ms->add_subcommand("verify", "Check the measure properties on a fixture");
  verify->add_option("--model", args->model, "Carrier model")
      ->required()
      ->check(CLI::IsMember({"finite", "zline", "aap"}));
  verify->add_option("--fixture", args->fixture, "Fixture (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  verify->callback([&action, args] {
    action = [args](const Global& g) { return run_verify(*args, g); };
  });
}

}  // namespace twisted::cli

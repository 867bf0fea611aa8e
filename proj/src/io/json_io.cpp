#include <cmath>
#include <fstream>
#include <sstream>

#include "twisted/error.hpp"
#include "twisted/io.hpp"

namespace twisted::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string sub(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

double as_real(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::int64_t> int_list(const Json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i)
    out.push_back(as_int(j[i], sub(where, i)));
  return out;
}

std::vector<double> real_list(const Json& j, const std::string& where) {
  std::vector<double> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i)
    out.push_back(as_real(j[i], sub(where, i)));
  return out;
}

int small_int(const Json& j, const std::string& where) {
  const auto v = as_int(j, where);
  if (v < -(1 << 30) || v > (1 << 30)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

fintop::PointSet point_set(const Json& j, int n, const std::string& where) {
  fintop::PointSet s = 0;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    const int p = small_int(j[i], sub(where, i));
    if (p < 0 || p >= n) fail(sub(where, i), "point index out of range");
    s |= fintop::singleton(p);
  }
  return s;
}

Json point_list(fintop::PointSet s) {
  Json out = Json::array();
  for (int p : fintop::members(s)) out.push_back(p);
  return out;
}

// Runs a constructor, re-throwing its validation errors at `where`.
template <typename F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path, e.what());
  }
}

fintop::FiniteTopology topology_from_json(const Json& j, const std::string& where) {
  const auto n = small_int(field(j, "n", where), sub(where, "n"));
  if (n < 0 || n > fintop::kMaxPoints)
    fail(sub(where, "n"), "size must be between 0 and " + std::to_string(fintop::kMaxPoints));
  const auto& opens = as_array(field(j, "opens", where), sub(where, "opens"));
  std::vector<fintop::PointSet> sets;
  for (std::size_t i = 0; i < opens.size(); ++i)
    sets.push_back(point_set(opens[i], n, sub(sub(where, "opens"), i)));
  return located(where, [&] { return fintop::FiniteTopology(n, std::move(sets)); });
}

fintop::ContinuousFiniteMap map_from_json(const Json& j, const fintop::FiniteTopology& y,
                                          const fintop::FiniteTopology& z,
                                          const std::string& where) {
  const auto raw = int_list(field(j, "values", where), sub(where, "values"));
  std::vector<int> values;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= z.size()) fail(sub(sub(where, "values"), i), "value out of range");
    values.push_back(static_cast<int>(raw[i]));
  }
  return located(where, [&] { return fintop::ContinuousFiniteMap(y, z, std::move(values)); });
}

zline::PeriodicSet periodic_set_from_json(const Json& j, const std::string& where) {
  const auto m = as_int(field(j, "m", where), sub(where, "m"));
  auto list = [&](const char* key) {
    return j.contains(key) ? int_list(j[key], sub(where, key)) : std::vector<std::int64_t>{};
  };
  return located(where, [&] {
    return zline::PeriodicSet(m, list("residues"), list("added"), list("removed"));
  });
}

zline::TwistedZ zline_model_from_json(const Json& j, const std::string& where) {
  const auto& zj = field(j, "z", where);
  if (zj.is_null()) return zline::TwistedZ::without_boundary();
  const auto z = topology_from_json(zj, sub(where, "z"));
  const std::string fw = sub(where, "f");
  const auto& fj = field(j, "f", where);
  const auto m = as_int(field(fj, "m", fw), sub(fw, "m"));
  std::vector<int> residue_values;
  const std::string rw = sub(fw, "residue_values");
  const Json& rv = as_array(field(fj, "residue_values", fw), rw);
  for (std::size_t i = 0; i < rv.size(); ++i) residue_values.push_back(small_int(rv[i], sub(rw, i)));
  std::map<std::int64_t, int> exceptions;
  if (fj.contains("exceptions")) {
    const std::string ew = sub(fw, "exceptions");
    const auto& ex = as_array(fj["exceptions"], ew);
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (!ex[i].is_array() || ex[i].size() != 2) fail(sub(ew, i), "expected a [k, value] pair");
      exceptions[as_int(ex[i][0], sub(ew, i))] = small_int(ex[i][1], sub(ew, i));
    }
  }
  zline::TwistedZ t = located(
      fw, [&] { return zline::TwistedZ(zline::PeriodicMap(z, m, residue_values, exceptions)); });
  if (j.contains("labels")) {
    const std::string lw = sub(where, "labels");
    for (std::size_t i = 0; i < as_array(j["labels"], lw).size(); ++i) {
      if (!j["labels"][i].is_string()) fail(sub(lw, i), "expected a string");
      t.labels.push_back(j["labels"][i].get<std::string>());
    }
    if (t.labels.size() != static_cast<std::size_t>(z.size()))
      fail(lw, "need one label per point of Z");
  }
  return t;
}

zline::ZSumSet zsumset_from_json(const Json& j, const std::string& where) {
  zline::ZSumSet s;
  s.ypart = periodic_set_from_json(field(j, "y", where), sub(where, "y"));
  s.zpart = point_set(field(j, "z", where), fintop::kMaxPoints, sub(where, "z"));
  return s;
}

aap::FrequencyBasis basis_from_json(const Json& j, const std::string& where) {
  const auto lambda = real_list(field(j, "lambda", where), sub(where, "lambda"));
  return located(where, [&] { return aap::FrequencyBasis(lambda); });
}

aap::TrigPolynomial trig_from_json(const Json& ap, const aap::FrequencyBasis& basis,
                                   const std::string& where) {
  std::map<aap::FrequencyIndex, aap::Complex> coeffs;
  for (std::size_t i = 0; i < as_array(ap, where).size(); ++i) {
    const std::string w = sub(where, i);
    const Json& kj = as_array(field(ap[i], "k", w), sub(w, "k"));
    if (kj.size() != basis.dimension()) fail(sub(w, "k"), "index has the wrong dimension");
    aap::FrequencyIndex k;
    for (std::size_t c = 0; c < kj.size(); ++c) k.push_back(small_int(kj[c], sub(sub(w, "k"), c)));
    const aap::Complex c(as_real(field(ap[i], "re", w), sub(w, "re")),
                         as_real(field(ap[i], "im", w), sub(w, "im")));
    coeffs[k] += c;
  }
  return located(where, [&] { return aap::TrigPolynomial(basis, std::move(coeffs)); });
}

aap::AAPFunction aap_function_from_json(const Json& j, const std::string& where) {
  const auto basis = basis_from_json(field(j, "basis", where), sub(where, "basis"));
  aap::TrigPolynomial ap = j.contains("ap") ? trig_from_json(j["ap"], basis, sub(where, "ap"))
                                            : aap::TrigPolynomial(basis);
  std::vector<aap::Tent> tents;
  if (j.contains("bumps")) {
    const std::string bw = sub(where, "bumps");
    for (std::size_t i = 0; i < as_array(j["bumps"], bw).size(); ++i) {
      const std::string w = sub(bw, i);
      const Json& b = j["bumps"][i];
      tents.push_back({as_real(field(b, "center", w), sub(w, "center")),
                       as_real(field(b, "halfwidth", w), sub(w, "halfwidth")),
                       {as_real(field(b, "re", w), sub(w, "re")),
                        as_real(field(b, "im", w), sub(w, "im"))}});
    }
  }
  aap::BumpFunction c0 = located(where, [&] { return aap::BumpFunction(std::move(tents)); });
  return aap::AAPFunction{std::move(c0), std::move(ap)};
}

measures::AapSet aap_set_from_json(const Json& j, const std::string& where) {
  measures::AapSet s;
  if (j.contains("intervals")) {
    const std::string iw = sub(where, "intervals");
    for (std::size_t i = 0; i < as_array(j["intervals"], iw).size(); ++i) {
      const auto v = real_list(j["intervals"][i], sub(iw, i));
      if (v.size() != 2 || !(v[0] < v[1])) fail(sub(iw, i), "expected [lo, hi] with lo < hi");
      s.intervals.push_back({v[0], v[1]});
    }
  }
  if (j.contains("boxes")) {
    const std::string bw = sub(where, "boxes");
    for (std::size_t i = 0; i < as_array(j["boxes"], bw).size(); ++i) {
      std::vector<aap::Arc> box;
      const Json& arcs = as_array(j["boxes"][i], sub(bw, i));
      for (std::size_t c = 0; c < arcs.size(); ++c) {
        const auto v = real_list(arcs[c], sub(sub(bw, i), c));
        if (v.size() != 2 || !(v[1] > 0.0))
          fail(sub(sub(bw, i), c), "expected [start, length] with length > 0");
        box.push_back({v[0], v[1]});
      }
      s.boxes.push_back(std::move(box));
    }
  }
  return s;
}

Json to_json(const fintop::FiniteTopology& t) {
  Json opens = Json::array();
  for (auto u : t.opens()) opens.push_back(point_list(u));
  return Json{{"n", t.size()}, {"opens", opens}};
}

Json to_json(const fintop::DiagramReport& r) {
  Json implications = Json::array();
  for (const auto& i : r.implications)
    implications.push_back({{"name", i.name}, {"applicable", i.applicable}, {"holds", i.holds}});
  return Json{{"sums_coincide", r.sums_coincide},
              {"y_compact", r.y_compact},
              {"y_locally_compact", r.y_locally_compact},
              {"image_closed", r.image_closed},
              {"z_block_open", r.z_block_open},
              {"z_nicely_covered", r.z_nicely_covered},
              {"z_hausdorff", r.z_hausdorff},
              {"implications", implications},
              {"consistent", r.consistent()}};
}

Json to_json(const fintop::SweepReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"index", f.index},
                        {"property", f.property},
                        {"y", to_json(f.y)},
                        {"z", to_json(f.z)},
                        {"f", {{"values", f.values}}}});
  return Json{{"instances", r.instances},
              {"discrete_z_instances", r.discrete_z_instances},
              {"opens_decomposed", r.opens_decomposed},
              {"failures", failures},
              {"ok", r.ok()}};
}

Json to_json(const zline::PeriodicSet& s) {
  return Json{{"m", s.modulus()}, {"residues", s.residues()}, {"added", s.added()},
              {"removed", s.removed()}};
}

Json to_json(const zline::ZSumSet& s) {
  return Json{{"y", to_json(s.ypart)}, {"z", point_list(s.zpart)}};
}

Json to_json(const zline::ZBasisElement& e) {
  Json out{{"kind", e.kind == zline::ZBasisElement::Kind::type1 ? "type1" : "type23"},
           {"y", to_json(e.ypart)}};
  if (e.kind == zline::ZBasisElement::Kind::type23) {
    out["w"] = point_list(e.w);
    out["removed"] = e.removed;
  }
  return out;
}

Json to_json(const aap::TrigPolynomial& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.coefficients())
    out.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

Json to_json(aap::Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out << prefix << "  " << j.dump() << "\n";
  }
}

}  // namespace

std::string to_table(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace twisted::io

#include "bihardy/serialize.hpp"

#include <cmath>
#include <set>
#include <string>

namespace bihardy {

using nlohmann::json;

json element_to_json(const HardyElement& f) {
  json out = json::array();
  const DegreeWindow& w = f.window();
  for (int m = 0; m <= w.d1; ++m) {
    for (int n = 0; n <= w.d2; ++n) {
      const Complex c = f.coeff(m, n);
      if (std::abs(c.real()) < 1e-300 && std::abs(c.imag()) < 1e-300) continue;
      out.push_back(json::array({m, n, c.real(), c.imag()}));
    }
  }
  return out;
}

HardyElement element_from_json(const json& entries, const DegreeWindow& window) {
  if (!entries.is_array()) {
    throw InvalidInput("element: expected an array of [m, n, re, im] entries");
  }
  HardyElement out(window);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    const std::string where = "element entry " + std::to_string(i);
    if (!e.is_array() || e.size() != 4) {
      throw InvalidInput(where + ": expected [m, n, re, im]");
    }
    if (!e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InvalidInput(where + ": m and n must be integers");
    }
    if (!e[2].is_number() || !e[3].is_number()) {
      throw InvalidInput(where + ": re and im must be numbers");
    }
    const int m = e[0].get<int>();
    const int n = e[1].get<int>();
    const double re = e[2].get<double>();
    const double im = e[3].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InvalidInput(where + ": re and im must be finite");
    }
    if (!window.contains(m, n)) {
      throw InvalidInput(where + ": index (" + std::to_string(m) + ", " +
                         std::to_string(n) + ") lies outside the window");
    }
    if (!seen.insert({m, n}).second) {
      throw InvalidInput(where + ": duplicate index (" + std::to_string(m) + ", " +
                         std::to_string(n) + ")");
    }
    out.set_coeff(m, n, Complex(re, im));
  }
  return out;
}

json window_to_json(const DegreeWindow& w) {
  return json{{"d1", w.d1}, {"d2", w.d2}, {"margin", w.margin}};
}

DegreeWindow window_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d1") || !j.contains("d2")) {
    throw InvalidInput("window: expected an object with d1, d2 and optional margin");
  }
  if (!j["d1"].is_number_integer() || !j["d2"].is_number_integer()) {
    throw InvalidInput("window: d1 and d2 must be integers");
  }
  int margin = 0;
  if (j.contains("margin")) {
    if (!j["margin"].is_number_integer()) {
      throw InvalidInput("window: margin must be an integer");
    }
    margin = j["margin"].get<int>();
  }
  return DegreeWindow(j["d1"].get<int>(), j["d2"].get<int>(), margin);
}

GeneratorFile generator_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("window") || !j.contains("generators")) {
    throw InvalidInput("generator set: expected { \"window\": ..., \"generators\": [...] }");
  }
  const DegreeWindow window = window_from_json(j["window"]);
  const json& gens = j["generators"];
  if (!gens.is_array() || gens.empty()) {
    throw InvalidInput("generator set: generators must be a nonempty array");
  }
  std::vector<HardyElement> elements;
  elements.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      elements.push_back(element_from_json(gens[i], window));
    } catch (const InvalidInput& e) {
      throw InvalidInput("generator " + std::to_string(i) + ": " + e.what());
    }
  }
  return GeneratorFile{window, GeneratorSet(std::move(elements))};
}

namespace {

json point_to_json(const DiscPoint& p) {
  return json::array(
      {p.lambda1.real(), p.lambda1.imag(), p.lambda2.real(), p.lambda2.imag()});
}

}  // namespace

json build_analysis_report(const BeurlingVerdict& verdict,
                           const std::vector<IdentityRecord>& records,
                           const Tolerances& tols, std::uint64_t seed) {
  json report;
  report["window"] = window_to_json(verdict.basis.window());
  report["dim"] = verdict.basis.dim();
  report["dc_defect"] = verdict.dc.defect;
  report["wandering_dim"] = verdict.wandering_dim;
  report["phi"] =
      verdict.phi ? element_to_json(verdict.phi->candidate) : json(nullptr);
  report["phi_route_agreement"] =
      verdict.route_agreement ? json(*verdict.route_agreement) : json(nullptr);
  json inner;
  inner["origin"] = verdict.phi ? verdict.phi->origin_value : 0.0;
  inner["max_offorigin"] = verdict.phi ? verdict.phi->max_offorigin : 0.0;
  inner["is_inner"] = verdict.phi ? verdict.phi->is_inner : false;
  report["inner"] = inner;
  report["beurling_distance"] =
      verdict.beurling_distance ? json(*verdict.beurling_distance) : json(nullptr);
  report["verdict"] = to_string(verdict.verdict);
  json residuals = json::array();
  for (const auto& r : records) {
    json rec;
    rec["name"] = r.name;
    rec["lambda"] = point_to_json(r.lambda);
    rec["z"] = r.z ? point_to_json(*r.z) : json(nullptr);
    rec["residual"] = r.residual;
    rec["tail_bound"] = r.tail_bound;
    residuals.push_back(rec);
  }
  report["identity_residuals"] = residuals;
  report["tolerances"] = json{{"rank_tol", tols.rank_tol},
                              {"dc_tol", tols.dc_tol},
                              {"inner_tol", tols.inner_tol},
                              {"dist_tol", tols.dist_tol},
                              {"angle_tol", tols.angle_tol}};
  report["seed"] = seed;
  return report;
}

}  // namespace bihardy

#include "fracwave_cli/scenario.hpp"

#include "fracwave_cli/format.hpp"

namespace fracwave::cli {

namespace {

Scenario delta_evolution(const char* name, double nu) {
  Scenario s;
  s.name = name;
  s.description = "fundamental solution (f = delta, g = 0) at t = 0.25, 0.5, 0.75, 1";
  s.order = FracOrder::from_nu(nu);
  s.f = Signal::delta(0.0, 1.0);
  s.x_min = -5.0;
  s.x_max = 5.0;
  s.dx = 0.02;
  s.times = {0.25, 0.5, 0.75, 1.0};
  return s;
}

Scenario box_evolution(const char* name, double nu, double x_max) {
  Scenario s;
  s.name = name;
  s.description = "box f = 1 on [-1, 1], g = 0, at t = 0.5 and 1";
  s.order = FracOrder::from_nu(nu);
  s.f = Signal::box(-1.0, 1.0, 1.0);
  s.x_min = 0.0;
  s.x_max = x_max;
  s.dx = 0.01;
  s.times = {0.5, 1.0};
  return s;
}

std::vector<Scenario> all_builtins() {
  std::vector<Scenario> out;

  Scenario m;
  m.name = "fig5-mwright";
  m.description = "M_nu(|x|) on |x| <= 5 at t = 1 for nu = 0, 1/4, 3/8, 1/2, 5/8, 3/4";
  m.kind = ScenarioKind::MWright;
  m.nus = {0.0, 0.25, 0.375, 0.5, 0.625, 0.75};
  m.x_min = -5.0;
  m.x_max = 5.0;
  m.dx = 0.01;
  m.times = {1.0};
  m.tol = 1e-12;
  out.push_back(m);

  out.push_back(delta_evolution("fig6-delta-nu065", 0.65));
  out.push_back(delta_evolution("fig7-delta-nu075", 0.75));
  out.push_back(delta_evolution("fig8-delta-nu085", 0.85));
  out.push_back(box_evolution("fig9-box-nu050", 0.5, 3.5));
  out.push_back(box_evolution("fig10-box-nu075", 0.75, 3.5));
  out.push_back(box_evolution("fig11-box-nu100", 1.0, 3.0));
  return out;
}

}  // namespace

std::vector<BuiltinInfo> list_scenarios() {
  std::vector<BuiltinInfo> out;
  for (const auto& s : all_builtins()) {
    std::string text = s.description;
    if (s.kind == ScenarioKind::Cauchy) text += ", nu = " + format_short(s.order.nu());
    out.push_back({s.name, text});
  }
  return out;
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
  for (auto& s : all_builtins()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace fracwave::cli

#include "fracwave_cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fracwave/fd_solve.hpp>
#include <fracwave/solver.hpp>
#include <fracwave/specfun.hpp>
#include <fracwave/version.hpp>

#include "fracwave_cli/format.hpp"
#include "fracwave_cli/svg.hpp"

namespace fracwave::cli {

namespace {

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::ios_base::failure("cannot write " + path.string());
  }

  void comment(const std::string& line) { out_ << "# " << line << "\n"; }

  void embed(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out_ << "#| " << line << "\n";
  }

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_exact(values[i]);
    out_ << "\n";
  }

  void close() {
    out_.close();
    if (!out_) throw std::ios_base::failure("write failed for " + path_.string());
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

void write_metadata(CsvWriter& csv, const Scenario& s, const std::string& what) {
  csv.comment(std::string("fracwave ") + kVersion);
  csv.comment("scenario: " + s.name);
  if (s.kind == ScenarioKind::Cauchy) {
    csv.comment("nu: " + format_exact(s.order.nu()) + " (alpha = " + format_exact(s.order.alpha()) + ")");
  } else {
    csv.comment("nus: " + format_list(s.nus));
  }
  csv.comment(what);
  csv.comment("tol: " + format_exact(s.tol));
  csv.comment("grid: x_min = " + format_exact(s.x_min) + ", x_max = " + format_exact(s.x_max) +
              ", dx = " + format_exact(s.dx));
  csv.comment("rerun: fracwave run <this file>");
  // where the files went is not part of the run
  Scenario portable = s;
  portable.output_dir = Scenario{}.output_dir;
  csv.embed(to_text(portable));
}

std::string time_tag(double t) { return "t" + format_short(t); }

void note(std::ostream* log, const std::string& line) {
  if (log) *log << line << "\n";
}

void run_mwright(const Scenario& s, RunReport& report, std::ostream* log) {
  const auto xs = uniform_grid(s.x_min, s.x_max, s.dx);
  std::vector<std::vector<double>> cols;
  for (double nu : s.nus) {
    const MWrightOrder order(nu);
    std::vector<double> col(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) col[i] = m_wright(order, std::abs(xs[i]), s.tol).value;
    cols.push_back(std::move(col));
  }

  const auto csv_path = report.directory / "mwright.csv";
  CsvWriter csv(csv_path);
  write_metadata(csv, s, "t: 1 (profiles M_nu(|x|))");
  std::vector<std::string> header{"x"};
  for (double nu : s.nus) header.push_back("M_nu=" + format_short(nu));
  csv.header(header);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> row{xs[i]};
    for (const auto& c : cols) row.push_back(c[i]);
    csv.row(row);
  }
  csv.close();
  report.files.push_back(csv_path);

  LinePlot plot("M-Wright functions M_nu(|x|), t = 1", "x", "M_nu(|x|)");
  for (std::size_t k = 0; k < s.nus.size(); ++k) plot.add_series("nu = " + format_short(s.nus[k]), xs, cols[k]);
  const auto svg_path = report.directory / "mwright.svg";
  plot.write(svg_path);
  report.files.push_back(svg_path);
  note(log, "wrote " + csv_path.string());
}

void run_cauchy(const Scenario& s, RunReport& report, std::ostream* log) {
  const auto xs = uniform_grid(s.x_min, s.x_max, s.dx);
  const SolutionField field = solve_cauchy(s.order, s.f, s.g, xs, s.times, s.tol);
  field.validate();
  const std::string nu_text = "nu = " + format_short(s.order.nu());

  const bool show_f = !s.f.is_delta() && !s.f.is_zero();
  std::vector<double> f_values;
  if (show_f) {
    for (double x : xs) f_values.push_back(s.f.value_at(x));
  }

  for (std::size_t ti = 0; ti < s.times.size(); ++ti) {
    const double t = s.times[ti];
    const auto row = field.row(ti);
    const auto csv_path = report.directory / ("u_" + time_tag(t) + ".csv");
    CsvWriter csv(csv_path);
    write_metadata(csv, s, "t: " + format_exact(t));
    csv.comment(std::string("provenance: ") + std::string(to_string(field.provenance)));
    csv.header({"x", "u"});
    for (std::size_t i = 0; i < xs.size(); ++i) csv.row({xs[i], row[i]});
    csv.close();
    report.files.push_back(csv_path);

    LinePlot plot(s.name + ": " + nu_text + ", t = " + format_short(t), "x", "u(x, t)");
    plot.add_series("u", xs, std::vector<double>(row.begin(), row.end()));
    if (show_f) plot.add_series("f(x)", xs, f_values, true);
    const auto svg_path = report.directory / ("u_" + time_tag(t) + ".svg");
    plot.write(svg_path);
    report.files.push_back(svg_path);
    note(log, "wrote " + csv_path.string());
  }

  if (!s.oracle) return;

  const double half = std::max(std::abs(s.x_min), std::abs(s.x_max));
  const FDGrid grid = FDGrid::covering(s.order, half, s.times.back(), s.oracle_dx, s.oracle_dt);
  note(log, "finite-difference oracle: " + std::to_string(grid.intervals() + 1) + " nodes, " +
                std::to_string(grid.n_steps) + " steps");
  const SolutionField fd = fd_solve(grid, s.f, s.g, s.times);

  for (std::size_t ti = 0; ti < s.times.size(); ++ti) {
    const double t = s.times[ti];
    const auto row = field.row(ti);
    std::vector<double> u_fd(xs.size());
    std::vector<double> diff(xs.size());
    OracleStats st{t, 0.0, 0.0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      u_fd[i] = fd.interpolate(ti, xs[i]);
      diff[i] = std::abs(row[i] - u_fd[i]);
      st.linf = std::max(st.linf, diff[i]);
      st.l2 += diff[i] * diff[i] * s.dx;
    }
    st.l2 = std::sqrt(st.l2);
    report.oracle.push_back(st);

    const auto csv_path = report.directory / ("oracle_" + time_tag(t) + ".csv");
    CsvWriter csv(csv_path);
    write_metadata(csv, s, "t: " + format_exact(t));
    csv.comment("oracle: finite-difference dx = " + format_exact(grid.dx) + ", dt = " + format_exact(grid.dt) +
                ", x in [" + format_exact(grid.x_min) + ", " + format_exact(grid.x_max) + "]");
    csv.comment("linf: " + format_exact(st.linf) + ", l2: " + format_exact(st.l2));
    csv.header({"x", "u_analytic", "u_fd", "abs_diff"});
    for (std::size_t i = 0; i < xs.size(); ++i) csv.row({xs[i], row[i], u_fd[i], diff[i]});
    csv.close();
    report.files.push_back(csv_path);

    LinePlot plot(s.name + ": " + nu_text + ", t = " + format_short(t) + " (oracle)", "x", "u(x, t)");
    plot.add_series("convolution", xs, std::vector<double>(row.begin(), row.end()));
    plot.add_series("finite difference", xs, u_fd, true);
    const auto svg_path = report.directory / ("oracle_" + time_tag(t) + ".svg");
    plot.write(svg_path);
    report.files.push_back(svg_path);
  }
}

}  // namespace

RunReport run_scenario(const Scenario& s, std::ostream* log) {
  s.validate();
  RunReport report;
  report.directory = s.output_dir / s.name;
  std::filesystem::create_directories(report.directory);

  if (s.kind == ScenarioKind::MWright) {
    run_mwright(s, report, log);
  } else {
    run_cauchy(s, report, log);
  }

  std::ostringstream sum;
  sum << "scenario: " << s.name << "\n";
  if (!s.description.empty()) sum << "description: " << s.description << "\n";
  if (s.kind == ScenarioKind::Cauchy) {
    sum << "nu: " << format_exact(s.order.nu()) << "\n";
    sum << "f: " << s.f.describe() << "\n";
    sum << "g: " << s.g.describe() << "\n";
  } else {
    sum << "nus: " << format_list(s.nus) << "\n";
  }
  sum << "times: " << format_list(s.times) << "\n";
  sum << "tol: " << format_exact(s.tol) << "\n";
  for (const auto& st : report.oracle) {
    sum << "oracle t = " << format_exact(st.t) << ": linf = " << format_exact(st.linf)
        << ", l2 = " << format_exact(st.l2) << "\n";
  }
  sum << "files: " << report.files.size() << "\n";

  const auto summary_path = report.directory / "summary.txt";
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + summary_path.string());
  out << sum.str();
  out.close();
  if (!out) throw std::ios_base::failure("write failed for " + summary_path.string());
  report.files.push_back(summary_path);
  if (log) *log << sum.str();
  return report;
}

}  // namespace fracwave::cli

#include "fracwave_cli/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fracwave/errors.hpp>

#include "fracwave_cli/format.hpp"

namespace fracwave::cli {

void Scenario::validate() const {
  auto fail = [](const std::string& msg) { throw ScenarioError(msg); };
  if (name.empty()) fail("invalid scenario: empty name");
  if (!(dx > 0.0) || !std::isfinite(dx)) fail("invalid grid: dx must be positive");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    fail("invalid grid: x_min must be < x_max");
  }
  if (times.empty()) fail("invalid times: at least one output time is required");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || !std::isfinite(times[i])) fail("invalid times: every time must be > 0");
    if (i > 0 && !(times[i] > times[i - 1])) fail("invalid times: times must be strictly increasing");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) fail("invalid tolerance: tol must be > 0");
  if (kind == ScenarioKind::MWright) {
    if (nus.empty()) fail("invalid scenario: mwright needs at least one nu");
    for (double nu : nus) {
      if (!(nu >= 0.0 && nu < 1.0)) fail("invalid scenario: mwright nu must lie in [0, 1)");
    }
    return;
  }
  if (!g.is_zero() && order.nu() <= 0.5) {
    fail("invalid scenario: a nonzero g needs nu > 1/2");
  }
  if (oracle) {
    if (!(oracle_dx > 0.0) || !(oracle_dt > 0.0)) fail("invalid grid: oracle dx and dt must be positive");
  }
}

namespace {

using Section = std::map<std::string, std::string>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& text, const std::string& where) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ScenarioError("invalid number '" + text + "' for " + where);
  }
  return v;
}

std::vector<double> to_list(const std::string& text, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    out.push_back(to_double(t, where));
  }
  return out;
}

bool to_bool(const std::string& text, const std::string& where) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw ScenarioError("invalid boolean '" + text + "' for " + where);
}

// Reads a section with a fixed set of keys, rejecting anything else.
class Reader {
 public:
  Reader(const Section& sec, std::string name, std::set<std::string> allowed)
      : sec_(sec), name_(std::move(name)) {
    for (const auto& [k, v] : sec_) {
      if (!allowed.count(k)) throw ScenarioError("unknown key '" + k + "' in [" + name_ + "]");
    }
  }

  bool has(const std::string& key) const { return sec_.count(key) > 0; }
  std::string str(const std::string& key) const { return sec_.at(key); }
  double num(const std::string& key) const { return to_double(sec_.at(key), where(key)); }
  double num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }
  std::vector<double> list(const std::string& key) const { return to_list(sec_.at(key), where(key)); }
  bool flag(const std::string& key) const { return to_bool(sec_.at(key), where(key)); }
  std::string where(const std::string& key) const { return "[" + name_ + "] " + key; }

 private:
  const Section& sec_;
  std::string name_;
};

Signal parse_signal(const Section& sec, const std::string& name) {
  const Reader r(sec, name, {"kind", "x0", "weight", "left", "right", "height", "dx", "values"});
  const std::string kind = r.has("kind") ? r.str("kind") : "zero";
  if (kind == "zero") return Signal::zero();
  if (kind == "delta") return Signal::delta(r.num("x0", 0.0), r.num("weight", 1.0));
  if (kind == "box") return Signal::box(r.num("left", -1.0), r.num("right", 1.0), r.num("height", 1.0));
  if (kind == "sampled") {
    if (!r.has("dx") || !r.has("values")) {
      throw ScenarioError("[" + name + "] sampled signal needs dx and values");
    }
    return Signal::sampled(r.num("x0", 0.0), r.num("dx"), r.list("values"));
  }
  throw ScenarioError("unknown signal kind '" + kind + "' in [" + name + "]");
}

std::string signal_text(const Signal& s) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZeroSignal>) {
          os << "kind = zero\n";
        } else if constexpr (std::is_same_v<T, DeltaSignal>) {
          os << "kind = delta\nx0 = " << format_exact(v.x0) << "\nweight = " << format_exact(v.weight)
             << "\n";
        } else if constexpr (std::is_same_v<T, BoxSignal>) {
          os << "kind = box\nleft = " << format_exact(v.left) << "\nright = " << format_exact(v.right)
             << "\nheight = " << format_exact(v.height) << "\n";
        } else {
          os << "kind = sampled\nx0 = " << format_exact(v.x0) << "\ndx = " << format_exact(v.dx)
             << "\nvalues = " << format_list(v.values) << "\n";
        }
      },
      s.variant());
  return os.str();
}

std::string embedded_or_plain(std::string_view text) {
  std::string embedded;
  bool found = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#|", 0) == 0) {
      found = true;
      embedded += line.substr(2);
      embedded += '\n';
    }
  }
  return found ? embedded : std::string(text);
}

}  // namespace

Scenario parse_scenario(std::string_view raw) {
  const std::string text = embedded_or_plain(raw);
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ScenarioError("line " + std::to_string(lineno) + ": unterminated section");
      current = trim(std::string_view(t).substr(1, t.size() - 2));
      static const std::set<std::string> known{"scenario", "grid", "signal.f", "signal.g", "oracle"};
      if (!known.count(current)) throw ScenarioError("unknown section [" + current + "]");
      sections[current];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError("line " + std::to_string(lineno) + ": expected key = value");
    }
    if (current.empty()) throw ScenarioError("line " + std::to_string(lineno) + ": key outside a section");
    sections[current][trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
  }

  Scenario s;
  {
    const Reader r(sections["scenario"], "scenario",
                   {"name", "description", "kind", "nu", "alpha", "nus", "times", "tol", "oracle",
                    "output_dir"});
    if (r.has("name")) s.name = r.str("name");
    if (r.has("description")) s.description = r.str("description");
    if (r.has("kind")) {
      const std::string k = r.str("kind");
      if (k == "cauchy") {
        s.kind = ScenarioKind::Cauchy;
      } else if (k == "mwright") {
        s.kind = ScenarioKind::MWright;
      } else {
        throw ScenarioError("unknown scenario kind '" + k + "'");
      }
    }
    if (r.has("nu") && r.has("alpha")) throw ScenarioError("give either nu or alpha, not both");
    try {
      if (r.has("nu")) s.order = FracOrder::from_nu(r.num("nu"));
      if (r.has("alpha")) s.order = FracOrder::from_alpha(r.num("alpha"));
    } catch (const DomainError& e) {
      throw ScenarioError(std::string("invalid order: ") + e.what());
    }
    if (r.has("nus")) s.nus = r.list("nus");
    if (r.has("times")) s.times = r.list("times");
    if (r.has("tol")) s.tol = r.num("tol");
    if (r.has("oracle")) s.oracle = r.flag("oracle");
    if (r.has("output_dir")) s.output_dir = r.str("output_dir");
  }
  {
    const Reader r(sections["grid"], "grid", {"x_min", "x_max", "dx"});
    s.x_min = r.num("x_min", s.x_min);
    s.x_max = r.num("x_max", s.x_max);
    s.dx = r.num("dx", s.dx);
  }
  {
    const Reader r(sections["oracle"], "oracle", {"dx", "dt"});
    s.oracle_dx = r.num("dx", s.oracle_dx);
    s.oracle_dt = r.num("dt", s.oracle_dt);
  }
  try {
    s.f = parse_signal(sections["signal.f"], "signal.f");
    s.g = parse_signal(sections["signal.g"], "signal.g");
  } catch (const DomainError& e) {
    throw ScenarioError(std::string("invalid signal: ") + e.what());
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_text(const Scenario& s) {
  std::ostringstream os;
  os << "[scenario]\n";
  os << "name = " << s.name << "\n";
  if (!s.description.empty()) os << "description = " << s.description << "\n";
  if (s.kind == ScenarioKind::MWright) {
    os << "kind = mwright\n";
    os << "nus = " << format_list(s.nus) << "\n";
  } else {
    os << "kind = cauchy\n";
    os << "alpha = " << format_exact(s.order.alpha()) << "\n";
  }
  os << "times = " << format_list(s.times) << "\n";
  os << "tol = " << format_exact(s.tol) << "\n";
  os << "oracle = " << (s.oracle ? "true" : "false") << "\n";
  os << "output_dir = " << s.output_dir.generic_string() << "\n";
  os << "[grid]\n";
  os << "x_min = " << format_exact(s.x_min) << "\n";
  os << "x_max = " << format_exact(s.x_max) << "\n";
  os << "dx = " << format_exact(s.dx) << "\n";
  if (s.kind == ScenarioKind::Cauchy) {
    os << "[signal.f]\n" << signal_text(s.f);
    os << "[signal.g]\n" << signal_text(s.g);
    os << "[oracle]\n";
    os << "dx = " << format_exact(s.oracle_dx) << "\n";
    os << "dt = " << format_exact(s.oracle_dt) << "\n";
  }
  return os.str();
}

}  // namespace fracwave::cli

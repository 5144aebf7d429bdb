// ym2d: Witten zeta values, Yang-Mills partition functions on surfaces,
// their large-N limits and the verification suites, as CSV or JSON tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ym2d/partition_functions.hpp"
#include "ym2d/verify.hpp"
#include "ym2d/witten_zeta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ym2d;

constexpr int kExitUsage = 1;
constexpr int kExitRegime = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  bool orientable = true;
  bool non_orientable = false;
  int genus = 2;
  std::optional<double> area;
  std::optional<double> q;
  std::string group = "su";
  std::string n_spec;
  std::vector<std::size_t> Ns;
  double s = 2.0;
  std::int64_t k_max = 60;
  std::int64_t n_max = 0;
  double gamma = 0.3;
  std::uint64_t dim_cutoff = 100000;
  std::optional<double> target_width;
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 1;
  std::size_t cases = 10000;
  std::vector<std::string> suites;
};

/// "3", "2..10", "2,3,5" and mixtures such as "2..5,10".
std::vector<std::size_t> parse_n_list(const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  auto number = [&](const std::string& t) -> std::size_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(t, &pos);
    } catch (const std::exception&) {
      throw UsageError("invalid N list: " + spec);
    }
    if (pos != t.size() || v == 0) throw UsageError("invalid N list: " + spec);
    return static_cast<std::size_t>(v);
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const std::size_t lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError("empty N range");
  return out;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

GroupKind group_of(const RunConfig& c) {
  return c.group == "u" ? GroupKind::unitary : GroupKind::special_unitary;
}

double area_of(const RunConfig& c) {
  if (c.q) return area_from_q(*c.q);
  if (c.area) return *c.area;
  throw UsageError("one of --area or --q is required");
}

SurfaceSpec surface_of(const RunConfig& c, std::size_t N) {
  return {!c.non_orientable, c.genus, area_of(c), group_of(c), N};
}

TruncationParams truncation_of(const RunConfig& c) {
  return {c.k_max, c.n_max, c.gamma, c.dim_cutoff};
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["orientable"] = !c.non_orientable;
  j["genus"] = c.genus;
  j["area"] = c.area ? ordered_json(*c.area) : ordered_json(nullptr);
  j["q"] = c.q ? ordered_json(*c.q) : ordered_json(nullptr);
  j["group"] = c.group;
  j["N"] = c.Ns;
  j["s"] = c.s;
  j["k_max"] = c.k_max;
  j["n_max"] = c.n_max;
  j["gamma"] = c.gamma;
  j["dim_cutoff"] = c.dim_cutoff;
  j["target_width"] = c.target_width ? ordered_json(*c.target_width) : ordered_json(nullptr);
  j["format"] = c.format;
  j["seed"] = c.seed;
  return j;
}

/// Table cells are either numbers (printed with 17 significant digits) or text.
using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const RunConfig& c, const Table& t) {
  if (c.format == "json") {
    ordered_json j;
    j["config"] = config_json(c);
    j["rows"] = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row;
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        std::visit([&](const auto& v) { row[t.columns[i]] = v; }, r[i]);
      }
      j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ",";
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              os << fmt_double(v);
            } else if constexpr (std::is_same_v<V, bool>) {
              os << (v ? "true" : "false");
            } else {
              os << v;
            }
          },
          r[i]);
    }
    os << "\n";
  }
  return os.str();
}

Table cmd_zeta(const RunConfig& c) {
  Table t{{"N", "s", "lower", "upper", "width", "dim_cutoff"}, {}};
  for (std::size_t N : c.Ns) {
    ZetaResult r;
    if (c.target_width) {
      r = zeta_su_to_width(N, c.s, *c.target_width);
    } else {
      r = {zeta_su({N, c.s, c.dim_cutoff}), c.dim_cutoff};
    }
    t.rows.push_back({static_cast<std::int64_t>(N), c.s, r.value.lower, r.value.upper,
                      r.value.width(), static_cast<std::int64_t>(r.dim_cutoff)});
  }
  return t;
}

Table cmd_zn(const RunConfig& c) {
  Table t{{"N", "genus", "area", "group", "orientable", "lower", "upper"}, {}};
  for (std::size_t N : c.Ns) {
    const auto s = surface_of(c, N);
    const auto v = z_value(s, truncation_of(c));
    t.rows.push_back({static_cast<std::int64_t>(N), static_cast<std::int64_t>(c.genus), s.area,
                      c.group, s.orientable, v.lower, v.upper});
  }
  return t;
}

Table cmd_converge(const RunConfig& c) {
  Table t{{"N", "z_lower", "z_upper", "limit_lower", "limit_upper", "gap_bound", "gap_lower"}, {}};
  for (const auto& r : convergence_table(surface_of(c, 1), c.Ns, truncation_of(c))) {
    t.rows.push_back({static_cast<std::int64_t>(r.N), r.z.lower, r.z.upper, r.limit.lower,
                      r.limit.upper, r.gap_upper, r.gap_lower});
  }
  return t;
}

Table cmd_sweep(const RunConfig& c) {
  if (c.non_orientable) throw UsageError("sweep scans orientable surfaces");
  const auto rep = monotonicity_scan(c.genus, area_of(c), c.Ns, group_of(c), truncation_of(c));
  Table t{{"N_from", "N_to", "z_from_lower", "z_from_upper", "z_to_lower", "z_to_upper", "verdict"},
          {}};
  for (const auto& st : rep.steps) {
    t.rows.push_back({static_cast<std::int64_t>(st.N_from), static_cast<std::int64_t>(st.N_to),
                      st.z_from.lower, st.z_from.upper, st.z_to.lower, st.z_to.upper,
                      std::string(to_string(st.verdict))});
  }
  return t;
}

int cmd_verify(const RunConfig& c, std::string& out) {
  const auto& names = c.suites.empty() ? verify_suite_names() : c.suites;
  for (const auto& n : names) {
    if (std::find(verify_suite_names().begin(), verify_suite_names().end(), n) ==
        verify_suite_names().end()) {
      throw UsageError("unknown suite: " + n);
    }
  }
  const auto rep = run_verify(names, c.seed, c.cases);
  if (c.format == "json") {
    ordered_json j;
    ordered_json cfg = config_json(c);
    cfg["suites"] = names;
    cfg["cases"] = c.cases;
    j["config"] = cfg;
    j["pass"] = rep.pass();
    j["suites"] = ordered_json::array();
    for (const auto& s : rep.suites) {
      ordered_json js;
      js["name"] = s.name;
      js["pass"] = s.pass();
      js["checks"] = ordered_json::array();
      for (const auto& ch : s.checks) {
        ordered_json jc;
        jc["name"] = ch.name;
        jc["pass"] = ch.pass;
        jc["cases"] = ch.cases;
        jc["counterexample"] = ch.pass ? ordered_json(nullptr) : ordered_json(ch.counterexample);
        js["checks"].push_back(jc);
      }
      j["suites"].push_back(js);
    }
    if (rep.unitary_fs) {
      ordered_json d;
      d["checked"] = rep.unitary_fs->checked;
      d["mismatches"] = ordered_json::array();
      for (const auto& m : rep.unitary_fs->mismatches) {
        d["mismatches"].push_back(
            {{"weight", m.lambda.to_string()}, {"rule", m.rule}, {"quadrature", m.quadrature}});
      }
      j["unitary_fs_diagnostic"] = d;
    }
    out = j.dump(2) + "\n";
  } else {
    Table t{{"suite", "check", "pass", "cases", "counterexample"}, {}};
    for (const auto& s : rep.suites) {
      for (const auto& ch : s.checks) {
        t.rows.push_back({s.name, ch.name, ch.pass, static_cast<std::int64_t>(ch.cases),
                          ch.counterexample});
      }
    }
    if (rep.unitary_fs) {
      t.rows.push_back({std::string("fs"), std::string("unitary_fs_diagnostic"), true,
                        static_cast<std::int64_t>(rep.unitary_fs->checked),
                        std::to_string(rep.unitary_fs->mismatches.size()) + " mismatches"});
    }
    out = render(c, t);
  }
  return rep.pass() ? 0 : kExitRegime;
}

void add_surface_options(CLI::App* app, RunConfig& c) {
  auto* o = app->add_flag("--orientable", c.orientable, "orientable surface (default)");
  app->add_flag("--non-orientable", c.non_orientable, "connected sum of genus projective planes")
      ->excludes(o);
  app->add_option("--genus", c.genus, "genus g")->check(CLI::NonNegativeNumber);
  auto* a = app->add_option("--area", c.area, "area T >= 0");
  app->add_option("--q", c.q, "q = exp(-T/2) in (0, 1]")->excludes(a);
  app->add_option("--group", c.group, "u or su")->check(CLI::IsMember({"u", "su"}));
  app->add_option("--k-max", c.k_max, "cap on |alpha| + |beta|")->check(CLI::NonNegativeNumber);
  app->add_option("--n-max", c.n_max, "cap on |n| in shift sums (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--gamma", c.gamma, "split exponent in (0, 1/2)");
}

void add_common_options(CLI::App* app, RunConfig& c) {
  app->add_option("--N", c.n_spec, "N, N list or range such as 2..10")->required();
  app->add_option("--dim-cutoff", c.dim_cutoff, "dimension cutoff")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--output", c.output, "output file (default stdout)");
}

int run(int argc, char** argv) {
  // worker cap; results never depend on it
  if (const char* env = std::getenv("YM2_THREADS")) {
    char* end = nullptr;
    std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') {
      std::cerr << "YM2_THREADS must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  RunConfig c;
  CLI::App app{"Yang-Mills partition functions on surfaces and Witten zeta values"};
  app.require_subcommand(1);

  auto* zeta = app.add_subcommand("zeta", "Witten zeta function of SU(N)");
  add_common_options(zeta, c);
  zeta->add_option("--s", c.s, "exponent s > 1");
  zeta->add_option("--target-width", c.target_width, "raise the cutoff until this width")
      ->check(CLI::PositiveNumber);

  auto* zn = app.add_subcommand("zn", "partition function enclosures");
  auto* converge = app.add_subcommand("converge", "distance to the large-N limit");
  auto* sweep = app.add_subcommand("sweep", "monotonicity in N");
  for (auto* sub : {zn, converge, sweep}) {
    add_common_options(sub, c);
    add_surface_options(sub, c);
  }

  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("--suite", c.suites, "suite to run (repeatable)");
  verify->add_option("--seed", c.seed, "seed for randomized cases");
  verify->add_option("--cases", c.cases, "randomized cases per check")->check(CLI::PositiveNumber);
  verify->add_option("--report,--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", c.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::string out;
  int code = 0;
  try {
    c.command = app.get_subcommands().front()->get_name();
    if (c.command != "verify") c.Ns = parse_n_list(c.n_spec);
    if (c.command == "zeta") {
      out = render(c, cmd_zeta(c));
    } else if (c.command == "zn") {
      out = render(c, cmd_zn(c));
    } else if (c.command == "converge") {
      out = render(c, cmd_converge(c));
    } else if (c.command == "sweep") {
      out = render(c, cmd_sweep(c));
    } else {
      code = cmd_verify(c, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidArgument:
      case ErrorKind::NonPositiveArea:
      case ErrorKind::InvalidQ:
        return kExitUsage;
      default:
        return kExitRegime;
    }
  }

  if (c.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return kExitUsage;
    }
    f << out;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

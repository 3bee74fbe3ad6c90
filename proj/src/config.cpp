#include "gaudin/config.hpp"

#include "gaudin/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace gaudin {

bool SuiteFlags::any() const {
  return qybe || unitarity || re || dual_re || classical_limit || transfer_commutativity || gaudin ||
         bethe || eigen || partition || scalar_products || intermediate;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError(key + ": not a number: '" + s + "'");
  }
  return v;
}

template <typename Int>
Int to_int(const std::string& key, const std::string& s) {
  const std::string t = trim(s);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError(key + ": not an integer: '" + s + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& s) {
  const std::string t = trim(s);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(key + ": not a boolean: '" + s + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + f(xs[i]);
  return out;
}

struct Binding {
  std::string section, key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <typename Member>
Binding number(const std::string& section, const std::string& key, Member getter) {
  const std::string name = section + "." + key;
  return {section, key,
          [=](RunConfig& c, const std::string& s) {
            auto& field = getter(c);
            using T = std::remove_reference_t<decltype(field)>;
            if constexpr (std::is_same_v<T, double>) {
              field = to_double(name, s);
            } else if constexpr (std::is_same_v<T, bool>) {
              field = to_bool(name, s);
            } else {
              field = to_int<T>(name, s);
            }
          },
          [=](const RunConfig& c) {
            auto& field = getter(const_cast<RunConfig&>(c));
            using T = std::remove_reference_t<decltype(field)>;
            if constexpr (std::is_same_v<T, double>) {
              return fmt(field);
            } else if constexpr (std::is_same_v<T, bool>) {
              return std::string(field ? "true" : "false");
            } else {
              return std::to_string(field);
            }
          }};
}

Binding real_param(const std::string& key, Complex ModelParams::*member) {
  const std::string name = "model." + key;
  return {"model", key,
          [=](RunConfig& c, const std::string& s) { c.model.*member = to_double(name, s); },
          [=](const RunConfig& c) { return fmt((c.model.*member).real()); }};
}

Binding int_list(const std::string& section, const std::string& key,
                 std::vector<int> CheckSizes::*member) {
  const std::string name = section + "." + key;
  return {section, key,
          [=](RunConfig& c, const std::string& s) {
            std::vector<int> out;
            for (const auto& item : split_list(s)) out.push_back(to_int<int>(name, item));
            c.checks.*member = out;
          },
          [=](const RunConfig& c) {
            return join<int>(c.checks.*member, [](const int& v) { return std::to_string(v); });
          }};
}

Binding text(const std::string& section, const std::string& key, std::string OutputPaths::*member) {
  return {section, key, [=](RunConfig& c, const std::string& s) { c.output.*member = trim(s); },
          [=](const RunConfig& c) { return c.output.*member; }};
}

#define GAUDIN_FIELD(section, key, expr) \
  number(section, #key, [](RunConfig& c) -> auto& { return expr; })

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table = [] {
    std::vector<Binding> b;
    b.push_back(GAUDIN_FIELD("run", rng_seed, c.rng_seed));

    b.push_back(real_param("lambda1", &ModelParams::lambda1));
    b.push_back(real_param("lambda2", &ModelParams::lambda2));
    b.push_back(real_param("xi", &ModelParams::xi));
    b.push_back(real_param("delta", &ModelParams::delta));
    b.push_back(real_param("eta", &ModelParams::eta));
    b.push_back({"model", "z",
                 [](RunConfig& c, const std::string& s) {
                   c.model.z.clear();
                   for (const auto& item : split_list(s)) c.model.z.emplace_back(to_double("model.z", item));
                 },
                 [](const RunConfig& c) {
                   return join<Complex>(c.model.z, [](const Complex& v) { return fmt(v.real()); });
                 }});

    b.push_back(GAUDIN_FIELD("tolerances", eps_degenerate, c.tolerances.eps_degenerate));
    b.push_back(GAUDIN_FIELD("tolerances", tol_onshell, c.tolerances.tol_onshell));
    b.push_back(GAUDIN_FIELD("tolerances", tol_ba, c.tolerances.tol_ba));
    b.push_back(GAUDIN_FIELD("tolerances", tol_identity, c.tolerances.tol_identity));
    b.push_back(GAUDIN_FIELD("tolerances", tol_transfer, c.tolerances.tol_transfer));
    b.push_back(GAUDIN_FIELD("tolerances", tol_slope, c.tolerances.tol_slope));
    b.push_back(GAUDIN_FIELD("tolerances", tol_gaudin, c.tolerances.tol_gaudin));
    b.push_back(GAUDIN_FIELD("tolerances", tol_commutator, c.tolerances.tol_commutator));
    b.push_back(GAUDIN_FIELD("tolerances", tol_eigen, c.tolerances.tol_eigen));
    b.push_back(GAUDIN_FIELD("tolerances", tol_partition, c.tolerances.tol_partition));
    b.push_back(GAUDIN_FIELD("tolerances", tol_partition_large, c.tolerances.tol_partition_large));
    b.push_back(GAUDIN_FIELD("tolerances", tol_scalar, c.tolerances.tol_scalar));
    b.push_back(GAUDIN_FIELD("tolerances", tol_intermediate, c.tolerances.tol_intermediate));
    b.push_back(GAUDIN_FIELD("tolerances", control_factor, c.tolerances.control_factor));
    b.push_back(GAUDIN_FIELD("tolerances", fd_step, c.tolerances.fd_step));
    b.push_back(GAUDIN_FIELD("tolerances", fd_levels, c.tolerances.fd_levels));
    b.push_back(GAUDIN_FIELD("tolerances", fd_tolerance, c.tolerances.fd_tolerance));

    b.push_back(GAUDIN_FIELD("solver", seed, c.solver.seed));
    b.push_back(GAUDIN_FIELD("solver", starts, c.solver.starts));
    b.push_back(GAUDIN_FIELD("solver", max_iter, c.solver.max_iter));
    b.push_back(GAUDIN_FIELD("solver", max_imag, c.solver.max_imag));

    b.push_back(GAUDIN_FIELD("checks", algebra_draws, c.checks.algebra_draws));
    b.push_back(GAUDIN_FIELD("checks", classical_draws, c.checks.classical_draws));
    b.push_back(int_list("checks", "transfer_sizes", &CheckSizes::transfer_sizes));
    b.push_back(int_list("checks", "gaudin_sizes", &CheckSizes::gaudin_sizes));
    b.push_back(GAUDIN_FIELD("checks", gaudin_draws, c.checks.gaudin_draws));
    b.push_back(int_list("checks", "partition_sizes", &CheckSizes::partition_sizes));
    b.push_back(GAUDIN_FIELD("checks", partition_draws, c.checks.partition_draws));
    b.push_back(GAUDIN_FIELD("checks", scalar_draws, c.checks.scalar_draws));

    b.push_back(GAUDIN_FIELD("suites", qybe, c.suites.qybe));
    b.push_back(GAUDIN_FIELD("suites", unitarity, c.suites.unitarity));
    b.push_back(GAUDIN_FIELD("suites", re, c.suites.re));
    b.push_back(GAUDIN_FIELD("suites", dual_re, c.suites.dual_re));
    b.push_back(GAUDIN_FIELD("suites", classical_limit, c.suites.classical_limit));
    b.push_back(GAUDIN_FIELD("suites", transfer_commutativity, c.suites.transfer_commutativity));
    b.push_back(GAUDIN_FIELD("suites", gaudin, c.suites.gaudin));
    b.push_back(GAUDIN_FIELD("suites", bethe, c.suites.bethe));
    b.push_back(GAUDIN_FIELD("suites", eigen, c.suites.eigen));
    b.push_back(GAUDIN_FIELD("suites", partition, c.suites.partition));
    b.push_back(GAUDIN_FIELD("suites", scalar_products, c.suites.scalar_products));
    b.push_back(GAUDIN_FIELD("suites", intermediate, c.suites.intermediate));

    b.push_back(text("output", "report", &OutputPaths::report));
    b.push_back(text("output", "roots", &OutputPaths::roots));
    b.push_back(GAUDIN_FIELD("output", timing, c.output.timing));
    return b;
  }();
  return table;
}

#undef GAUDIN_FIELD

const Binding* find_binding(const std::string& section, const std::string& key) {
  for (const auto& b : bindings())
    if (b.section == section && b.key == key) return &b;
  return nullptr;
}

}  // namespace

void RunConfig::validate() const {
  const Tolerances& t = tolerances;
  for (const double v : {t.eps_degenerate, t.tol_onshell, t.tol_ba, t.tol_identity, t.tol_transfer,
                         t.tol_slope, t.tol_gaudin, t.tol_commutator, t.tol_eigen, t.tol_partition,
                         t.tol_partition_large, t.tol_scalar, t.tol_intermediate, t.control_factor,
                         t.fd_step, t.fd_tolerance}) {
    if (!(v > 0.0)) throw ConfigError("all tolerances must be positive");
  }
  if (t.fd_levels < 2) throw ConfigError("tolerances.fd_levels must be at least 2");
  if (!suites.any()) throw ConfigError("no suite selected");
  if (solver.starts < 1 || solver.max_iter < 1) throw ConfigError("solver.starts and solver.max_iter must be positive");
  if (model.n_sites() % 2 != 0) throw ConfigError("model.z must have an even number of sites");
  try {
    model.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  RunConfig c;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config: key '" + section + "' outside a section");
    for (const auto& [key, value] : body) {
      const Binding* b = find_binding(section, key);
      if (!b) throw ConfigError("config: unknown key '" + section + "." + key + "'");
      b->set(c, value.data());
    }
  }
  c.model.eps_degenerate = c.tolerances.eps_degenerate;
  c.solver.tol = c.tolerances.tol_onshell;
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_ini(const RunConfig& config) {
  std::string out, current;
  for (const auto& b : bindings()) {
    if (b.section != current) {
      out += (current.empty() ? "[" : "\n[") + b.section + "]\n";
      current = b.section;
    }
    out += b.key + " = " + b.get(config) + "\n";
  }
  return out;
}

}  // namespace gaudin

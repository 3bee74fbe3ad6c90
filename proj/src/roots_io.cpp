#include "gaudin/roots_io.hpp"

#include "gaudin/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gaudin {

std::string roots_to_string(const std::vector<BetheRootSet>& sets, const ModelParams& params) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : sets) {
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const Complex r : s.roots) roots.push_back({{"re", r.real()}, {"im", r.imag()}});
    arr.push_back({{"kind", to_int(s.kind)},
                   {"M", s.roots.size()},
                   {"roots", roots},
                   {"residual_norm", s.residual_norm},
                   {"params_hash", params.hash_hex()}});
  }
  return arr.dump(2) + "\n";
}

void write_roots(const std::string& path, const std::vector<BetheRootSet>& sets,
                 const ModelParams& params) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write roots file " + path);
  out << roots_to_string(sets, params);
}

RootsFile parse_roots(const std::string& text) {
  RootsFile file;
  try {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw ConfigError("roots file: top level must be an array");
    for (const auto& e : arr) {
      BetheRootSet s;
      s.kind = kind_from_int(e.at("kind").get<int>());
      for (const auto& r : e.at("roots")) {
        s.roots.emplace_back(r.at("re").get<double>(), r.at("im").get<double>());
      }
      if (e.at("M").get<std::size_t>() != s.roots.size()) {
        throw ConfigError("roots file: M does not match the number of roots");
      }
      s.residual_norm = e.at("residual_norm").get<double>();
      s.converged = s.residual_norm < kDefaultTolOnShell;
      const auto hash = e.at("params_hash").get<std::string>();
      if (file.params_hash.empty()) {
        file.params_hash = hash;
      } else if (hash != file.params_hash) {
        throw ConfigError("roots file: entries carry different params_hash values");
      }
      file.sets.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("roots file: ") + e.what());
  } catch (const IndexError& e) {
    throw ConfigError(std::string("roots file: ") + e.what());
  }
  return file;
}

RootsFile read_roots(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read roots file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_roots(buf.str());
}

}  // namespace gaudin

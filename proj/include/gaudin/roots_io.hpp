#pragma once

// Root-set files: a JSON array of
//   {"kind": 1|2, "M": int, "roots": [{"re": x, "im": y}, ...],
//    "residual_norm": x, "params_hash": "16 hex digits"}

#include "gaudin/bethe.hpp"
#include "gaudin/params.hpp"

#include <string>
#include <vector>

namespace gaudin {

struct RootsFile {
  std::string params_hash;
  std::vector<BetheRootSet> sets;
};

std::string roots_to_string(const std::vector<BetheRootSet>& sets, const ModelParams& params);
void write_roots(const std::string& path, const std::vector<BetheRootSet>& sets,
                 const ModelParams& params);

// ConfigError on malformed content or entries with differing hashes.
RootsFile parse_roots(const std::string& text);
RootsFile read_roots(const std::string& path);

}  // namespace gaudin

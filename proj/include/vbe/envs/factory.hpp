#pragma once

#include <memory>
#include <string>

#include "vbe/envs/deepsea.hpp"
#include "vbe/envs/environment.hpp"
#include "vbe/envs/mountaincar.hpp"
#include "vbe/envs/puddleworld.hpp"
#include "vbe/envs/riverswim.hpp"

namespace vbe::envs {

/// Everything needed to build one environment; only the fields relevant to
/// `name` are read.
struct EnvSpec {
  std::string name = "deepsea";  // deepsea | deepsea_pure | riverswim | puddleworld | mountaincar_sparse
  int grid_size = 10;
  RiverSwimParams river{};
  PuddleWorldParams puddle{};
  MountainCarParams car{};
};

bool is_deepsea(const std::string& name);

/// Throws InvalidParameter for unknown names.
std::unique_ptr<Environment> make_environment(const EnvSpec& spec);

}  // namespace vbe::envs

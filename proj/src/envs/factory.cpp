#include "vbe/envs/factory.hpp"

#include "vbe/common/errors.hpp"

namespace vbe::envs {

bool is_deepsea(const std::string& name) { return name == "deepsea" || name == "deepsea_pure"; }

std::unique_ptr<Environment> make_environment(const EnvSpec& spec) {
  if (spec.name == "deepsea") return std::make_unique<Deepsea>(spec.grid_size, false);
  if (spec.name == "deepsea_pure") return std::make_unique<Deepsea>(spec.grid_size, true);
  if (spec.name == "riverswim") return std::make_unique<RiverSwim>(spec.river);
  if (spec.name == "puddleworld") return std::make_unique<PuddleWorld>(spec.puddle);
  if (spec.name == "mountaincar_sparse") return std::make_unique<MountainCar>(spec.car);
  throw InvalidParameter("unknown environment '" + spec.name + "'");
}

}  // namespace vbe::envs

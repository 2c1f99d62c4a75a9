#include "vbe/core/agent.hpp"

namespace vbe::core {

approx::Architecture AgentContext::architecture(int outputs) const {
  return approx::Architecture{features.output_dim(), network.hidden, outputs, network.bias};
}

approx::Mlp AgentContext::make_network(int outputs, Rng& rng) const {
  approx::Mlp net(architecture(outputs));
  net.initialize(network.init, rng);
  return net;
}

}  // namespace vbe::core

#include "vbe/explore/factory.hpp"

#include "vbe/common/errors.hpp"
#include "vbe/core/ddqn_agent.hpp"
#include "vbe/explore/bdqn_agent.hpp"
#include "vbe/explore/intrinsic.hpp"
#include "vbe/explore/vbe_agent.hpp"

namespace vbe::explore {

const std::vector<std::string>& agent_names() {
  static const std::vector<std::string> names{"vbe", "vbe_sl", "bdqn", "dqn_p", "rnd", "acb", "ddqn_eps"};
  return names;
}

std::unique_ptr<core::Agent> make_agent(const std::string& name, core::AgentContext ctx) {
  if (name == "vbe") return std::make_unique<VbeAgent>(std::move(ctx), PredictorLoss::td);
  if (name == "vbe_sl") return std::make_unique<VbeAgent>(std::move(ctx), PredictorLoss::supervised);
  if (name == "bdqn") return std::make_unique<BdqnAgent>(std::move(ctx), true);
  if (name == "dqn_p") return std::make_unique<BdqnAgent>(std::move(ctx), false);
  if (name == "rnd") return std::make_unique<IntrinsicAgent>(std::move(ctx), IntrinsicAgent::Kind::rnd);
  if (name == "acb") return std::make_unique<IntrinsicAgent>(std::move(ctx), IntrinsicAgent::Kind::acb);
  if (name == "ddqn_eps") return std::make_unique<core::DdqnAgent>(std::move(ctx));
  throw InvalidParameter("unknown agent '" + name + "'");
}

}  // namespace vbe::explore

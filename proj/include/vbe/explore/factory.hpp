#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vbe/core/agent.hpp"

namespace vbe::explore {

/// vbe | vbe_sl | bdqn | dqn_p | rnd | acb | ddqn_eps
const std::vector<std::string>& agent_names();

/// Throws InvalidParameter for unknown names.
std::unique_ptr<core::Agent> make_agent(const std::string& name, core::AgentContext ctx);

}  // namespace vbe::explore

#include "vbe/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "vbe/common/errors.hpp"
#include "vbe/explore/factory.hpp"

namespace vbe::harness {

namespace pt = boost::property_tree;

FeatureRegime parse_regime(const std::string& s) {
  if (s == "tabular") return FeatureRegime::tabular;
  if (s == "tile_linear") return FeatureRegime::tile_linear;
  if (s == "mlp") return FeatureRegime::mlp;
  throw InvalidParameter("unknown feature regime '" + s + "'");
}

std::string to_string(FeatureRegime r) {
  switch (r) {
    case FeatureRegime::tabular: return "tabular";
    case FeatureRegime::tile_linear: return "tile_linear";
    case FeatureRegime::mlp: return "mlp";
  }
  return "";
}

Metric parse_metric(const std::string& s) {
  if (s == "return_undiscounted") return Metric::return_undiscounted;
  if (s == "return_discounted") return Metric::return_discounted;
  if (s == "cumulative_reward") return Metric::cumulative_reward;
  if (s == "coverage") return Metric::coverage;
  throw InvalidParameter("unknown metric '" + s + "'");
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::return_undiscounted: return "return_undiscounted";
    case Metric::return_discounted: return "return_discounted";
    case Metric::cumulative_reward: return "cumulative_reward";
    case Metric::coverage: return "coverage";
  }
  return "";
}

void apply_regime(ExperimentConfig& cfg, FeatureRegime regime) {
  FeatureSpec& f = cfg.features;
  f.regime = regime;
  f.bias = regime == FeatureRegime::mlp;
  const std::string& env = cfg.env.name;
  if (env == "riverswim") {
    f.tiles = 4, f.tilings = 32, f.size = 128;
  } else if (env == "mountaincar_sparse") {
    f.tiles = 4, f.tilings = 16, f.size = 512;
  } else if (env == "puddleworld") {
    f.tiles = 5, f.tilings = 5, f.size = 128;
  }
}

ExperimentConfig default_config(const std::string& env) {
  ExperimentConfig cfg;
  cfg.env.name = env;
  if (envs::is_deepsea(env)) {
    cfg.episodes = 10000;
    cfg.runs = 5;
    cfg.metric = env == "deepsea_pure" ? Metric::coverage : Metric::return_undiscounted;
  } else if (env == "riverswim" || env == "puddleworld" || env == "mountaincar_sparse") {
    cfg.steps = 50000;
    cfg.runs = 30;
    cfg.metric = env == "riverswim"     ? Metric::cumulative_reward
                 : env == "puddleworld" ? Metric::return_undiscounted
                                        : Metric::return_discounted;
  } else {
    throw ConfigError("env.name", "unknown environment '" + env + "'");
  }
  apply_regime(cfg, FeatureRegime::mlp);
  return cfg;
}

namespace {

template <class T>
T convert(const std::string& key, const std::string& text) {
  try {
    return boost::lexical_cast<T>(boost::trim_copy(text));
  } catch (const boost::bad_lexical_cast&) {
    throw ConfigError(key, "cannot parse value '" + text + "'");
  }
}

template <>
bool convert<bool>(const std::string& key, const std::string& text) {
  const std::string v = boost::to_lower_copy(boost::trim_copy(text));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key, "expected a boolean, got '" + text + "'");
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::string t = boost::trim_copy(text);
  if (t.empty() || t == "none") return out;
  std::vector<std::string> parts;
  boost::split(parts, t, boost::is_any_of(","));
  for (const auto& p : parts) out.push_back(convert<int>(key, p));
  return out;
}

// Binds "section.key" names to setters over one config.
class Binder {
 public:
  using Setter = std::function<void(const std::string& key, const std::string& value)>;

  template <class T>
  void value(const std::string& key, T& target) {
    setters_[key] = [&target](const std::string& k, const std::string& v) { target = convert<T>(k, v); };
  }
  void custom(const std::string& key, Setter s) { setters_[key] = std::move(s); }

  void apply(const std::string& key, const std::string& value) const {
    auto it = setters_.find(key);
    if (it == setters_.end()) throw ConfigError(key, "unknown configuration key");
    it->second(key, value);
  }

 private:
  std::map<std::string, Setter> setters_;
};

template <class F>
auto wrap(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const InvalidParameter& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("<file>", e.what());
  }

  static const std::set<std::string> sections{"env", "agent", "training", "logging"};
  for (const auto& [name, sub] : tree) {
    if (!sections.count(name)) throw ConfigError(name, "unknown configuration section");
    (void)sub;
  }

  const std::string env_name = boost::trim_copy(tree.get<std::string>("env.name", "deepsea"));
  ExperimentConfig cfg = default_config(env_name);

  // The regime decides tile and bias defaults, so it goes first; explicit
  // keys below override what it sets.
  if (auto regime = tree.get_optional<std::string>("agent.features")) {
    wrap("agent.features", [&] { apply_regime(cfg, parse_regime(boost::trim_copy(*regime))); });
  }

  Binder b;
  b.custom("env.name", [](const std::string&, const std::string&) {});
  if (envs::is_deepsea(env_name)) {
    b.value("env.grid_size", cfg.env.grid_size);
  } else if (env_name == "riverswim") {
    auto& r = cfg.env.river;
    b.value("env.p_switch", r.p_switch);
    b.value("env.step_mean", r.step_mean);
    b.value("env.noise_std", r.noise_std);
    b.value("env.upstream_edge", r.upstream_edge);
    b.value("env.downstream_edge", r.downstream_edge);
    b.value("env.upstream_reward", r.upstream_reward);
    b.value("env.downstream_reward", r.downstream_reward);
    b.value("env.start_low", r.start_low);
    b.value("env.start_high", r.start_high);
  } else if (env_name == "puddleworld") {
    auto& p = cfg.env.puddle;
    b.value("env.step_mean", p.step_mean);
    b.value("env.noise_std", p.noise_std);
    b.value("env.step_reward", p.step_reward);
    b.value("env.puddle_radius", p.puddle_radius);
    b.value("env.penalty_scale", p.penalty_scale);
    b.value("env.goal_edge", p.goal_edge);
    b.value("env.max_episode_steps", p.max_episode_steps);
  } else {
    auto& m = cfg.env.car;
    b.value("env.force", m.force);
    b.value("env.gravity", m.gravity);
    b.value("env.goal_position", m.goal_position);
    b.value("env.max_episode_steps", m.max_episode_steps);
  }

  auto& a = cfg.agent_config;
  b.value("agent.name", cfg.agent);
  b.value("agent.k", a.k);
  b.value("agent.c", a.c);
  b.value("agent.tau", a.tau);
  b.value("agent.batch_size", a.batch_size);
  b.value("agent.learning_rate", a.learning_rate);
  b.value("agent.gamma", a.gamma);
  b.value("agent.epsilon", a.epsilon);
  b.value("agent.buffer_capacity", a.buffer_capacity);
  b.value("agent.rnd_embedding", a.rnd_embedding);
  b.custom("agent.target_policy", [&a](const std::string& k, const std::string& v) {
    a.target_policy = wrap(k, [&] { return core::parse_target_policy(boost::trim_copy(v)); });
  });
  b.custom("agent.optimizer", [&a](const std::string& k, const std::string& v) {
    const std::string t = boost::trim_copy(v);
    if (t == "adam") a.optimizer = approx::OptimizerKind::adam;
    else if (t == "sgd") a.optimizer = approx::OptimizerKind::sgd;
    else throw ConfigError(k, "expected adam or sgd, got '" + v + "'");
  });
  b.custom("agent.features", [](const std::string&, const std::string&) {});
  b.value("agent.tiles", cfg.features.tiles);
  b.value("agent.tilings", cfg.features.tilings);
  b.value("agent.feature_size", cfg.features.size);
  b.value("agent.bias", cfg.features.bias);
  b.custom("agent.hidden", [&cfg](const std::string& k, const std::string& v) {
    cfg.features.hidden = parse_int_list(k, v);
  });
  b.custom("agent.init", [&cfg](const std::string& k, const std::string& v) {
    const std::string t = boost::trim_copy(v);
    if (t == "uniform") cfg.features.init.kind = approx::InitKind::uniform_fan_in;
    else if (t == "gaussian") cfg.features.init.kind = approx::InitKind::gaussian_over_n;
    else throw ConfigError(k, "expected uniform or gaussian, got '" + v + "'");
  });
  b.value("agent.init_variance", cfg.features.init.variance);

  b.value("training.steps", cfg.steps);
  b.value("training.episodes", cfg.episodes);
  b.value("training.runs", cfg.runs);
  b.value("training.seed", cfg.seed);
  b.value("training.stop_at_full_coverage", cfg.stop_at_full_coverage);

  b.custom("logging.metric", [&cfg](const std::string& k, const std::string& v) {
    cfg.metric = wrap(k, [&] { return parse_metric(boost::trim_copy(v)); });
  });
  b.value("logging.interval", cfg.log_interval);
  b.custom("logging.output", [&cfg](const std::string&, const std::string& v) { cfg.output = boost::trim_copy(v); });

  for (const auto& [section, sub] : tree) {
    for (const auto& [key, node] : sub) b.apply(section + "." + key, node.data());
  }

  try {
    cfg.agent_config.validate();
  } catch (const InvalidParameter& e) {
    // messages lead with the field name
    const std::string msg = e.what();
    throw ConfigError("agent." + msg.substr(0, msg.find(' ')), msg);
  }
  const auto& names = explore::agent_names();
  if (std::find(names.begin(), names.end(), cfg.agent) == names.end()) {
    throw ConfigError("agent.name", "unknown agent '" + cfg.agent + "'");
  }
  if (cfg.runs < 1) throw ConfigError("training.runs", "must be >= 1");
  if (cfg.steps < 0) throw ConfigError("training.steps", "must be >= 0");
  if (cfg.episodes < 0) throw ConfigError("training.episodes", "must be >= 0");
  if (cfg.steps == 0 && cfg.episodes == 0) throw ConfigError("training.steps", "no step or episode budget");
  if (cfg.log_interval < 1) throw ConfigError("logging.interval", "must be >= 1");
  if (envs::is_deepsea(env_name) && cfg.env.grid_size < 1) throw ConfigError("env.grid_size", "must be >= 1");
  if (!envs::is_deepsea(env_name) && cfg.features.regime == FeatureRegime::tabular) {
    throw ConfigError("agent.features", "tabular features need a discrete environment");
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  return parse_config(in);
}

std::string to_ini(const ExperimentConfig& cfg) {
  std::ostringstream o;
  o.precision(17);
  const auto& e = cfg.env;
  o << "[env]\nname = " << e.name << "\n";
  if (envs::is_deepsea(e.name)) {
    o << "grid_size = " << e.grid_size << "\n";
  } else if (e.name == "riverswim") {
    const auto& r = e.river;
    o << "p_switch = " << r.p_switch << "\nstep_mean = " << r.step_mean << "\nnoise_std = " << r.noise_std
      << "\nupstream_edge = " << r.upstream_edge << "\ndownstream_edge = " << r.downstream_edge
      << "\nupstream_reward = " << r.upstream_reward << "\ndownstream_reward = " << r.downstream_reward
      << "\nstart_low = " << r.start_low << "\nstart_high = " << r.start_high << "\n";
  } else if (e.name == "puddleworld") {
    const auto& p = e.puddle;
    o << "step_mean = " << p.step_mean << "\nnoise_std = " << p.noise_std << "\nstep_reward = " << p.step_reward
      << "\npuddle_radius = " << p.puddle_radius << "\npenalty_scale = " << p.penalty_scale
      << "\ngoal_edge = " << p.goal_edge << "\nmax_episode_steps = " << p.max_episode_steps << "\n";
  } else {
    const auto& m = e.car;
    o << "force = " << m.force << "\ngravity = " << m.gravity << "\ngoal_position = " << m.goal_position
      << "\nmax_episode_steps = " << m.max_episode_steps << "\n";
  }
  const auto& a = cfg.agent_config;
  const auto& f = cfg.features;
  o << "\n[agent]\nname = " << cfg.agent << "\nk = " << a.k << "\nc = " << a.c << "\ntau = " << a.tau
    << "\nbatch_size = " << a.batch_size << "\nlearning_rate = " << a.learning_rate << "\ngamma = " << a.gamma
    << "\ntarget_policy = " << core::to_string(a.target_policy) << "\nepsilon = " << a.epsilon
    << "\nbuffer_capacity = " << a.buffer_capacity
    << "\noptimizer = " << (a.optimizer == approx::OptimizerKind::adam ? "adam" : "sgd")
    << "\nrnd_embedding = " << a.rnd_embedding << "\nfeatures = " << to_string(f.regime) << "\ntiles = " << f.tiles
    << "\ntilings = " << f.tilings << "\nfeature_size = " << f.size << "\nhidden = ";
  for (std::size_t i = 0; i < f.hidden.size(); ++i) o << (i ? "," : "") << f.hidden[i];
  if (f.hidden.empty()) o << "none";
  o << "\nbias = " << (f.bias ? "true" : "false")
    << "\ninit = " << (f.init.kind == approx::InitKind::uniform_fan_in ? "uniform" : "gaussian")
    << "\ninit_variance = " << f.init.variance << "\n";
  o << "\n[training]\nsteps = " << cfg.steps << "\nepisodes = " << cfg.episodes << "\nruns = " << cfg.runs
    << "\nseed = " << cfg.seed << "\nstop_at_full_coverage = " << (cfg.stop_at_full_coverage ? "true" : "false")
    << "\n";
  o << "\n[logging]\nmetric = " << to_string(cfg.metric) << "\ninterval = " << cfg.log_interval
    << "\noutput = " << cfg.output << "\n";
  return o.str();
}

approx::FeatureMap make_features(const ExperimentConfig& cfg, const envs::Environment& env) {
  if (envs::is_deepsea(cfg.env.name)) {
    const int n = cfg.env.grid_size;
    return approx::FeatureMap::one_hot(envs::deepsea_state_count(n), 2, [n](std::span<const double> obs) {
      return envs::deepsea_state_index(static_cast<int>(obs[0]), static_cast<int>(obs[1]), n);
    });
  }
  switch (cfg.features.regime) {
    case FeatureRegime::tile_linear:
      return approx::FeatureMap::tile_code(env.box(), cfg.features.tiles, cfg.features.tilings, cfg.features.size);
    case FeatureRegime::mlp:
      return approx::FeatureMap::identity(env.box(), true);
    case FeatureRegime::tabular:
      break;
  }
  throw ConfigError("agent.features", "tabular features need a discrete environment");
}

core::AgentContext make_context(const ExperimentConfig& cfg, const envs::Environment& env, std::uint64_t seed,
                                std::uint64_t run) {
  core::AgentContext ctx{make_features(cfg, env), env.num_actions(), {}, cfg.agent_config, seed, run};
  if (cfg.features.regime == FeatureRegime::mlp) ctx.network.hidden = cfg.features.hidden;
  ctx.network.bias = cfg.features.bias;
  ctx.network.init = cfg.features.init;
  return ctx;
}

}  // namespace vbe::harness

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "cpgb/error.hpp"
#include "cpgb/simulator.hpp"

namespace cpgb {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng Rng::for_replica(std::uint64_t seed, std::uint64_t stream, std::uint64_t replica) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) + replica));
}

std::size_t Rng::index(std::size_t n) {
  // Lemire's multiply-shift; bias below 2^-64 * n is irrelevant here.
  return static_cast<std::size_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
}

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

LatticeState::LatticeState(std::size_t size)
    : occupancy_(size, 0), occupied_pos_(size, kAbsent), active_pos_(2 * size, kAbsent) {
  if (size < 3) throw InvalidConfig("lattice needs at least 3 sites");
}

LatticeState LatticeState::all_occupied(std::size_t size) {
  LatticeState s(size);
  for (std::size_t i = 0; i < size; ++i) s.set(i, true);
  return s;
}

std::size_t LatticeState::target(std::size_t edge) const {
  std::size_t s = edge / 2;
  std::size_t n = size();
  if (edge % 2 == 0) return s == 0 ? n - 1 : s - 1;
  return s + 1 == n ? 0 : s + 1;
}

void LatticeState::refresh_edge(std::size_t edge) {
  bool active = occupancy_[edge / 2] && !occupancy_[target(edge)];
  std::size_t& pos = active_pos_[edge];
  if (active && pos == kAbsent) {
    pos = active_.size();
    active_.push_back(edge);
  } else if (!active && pos != kAbsent) {
    std::size_t last = active_.back();
    active_[pos] = last;
    active_pos_[last] = pos;
    active_.pop_back();
    pos = kAbsent;
  }
}

void LatticeState::set(std::size_t site, bool value) {
  if (occupied(site) == value) return;
  occupancy_[site] = value ? 1 : 0;
  if (value) {
    occupied_pos_[site] = occupied_.size();
    occupied_.push_back(site);
  } else {
    std::size_t pos = occupied_pos_[site];
    std::size_t last = occupied_.back();
    occupied_[pos] = last;
    occupied_pos_[last] = pos;
    occupied_.pop_back();
    occupied_pos_[site] = kAbsent;
  }
  std::size_t n = size();
  std::size_t left = site == 0 ? n - 1 : site - 1;
  std::size_t right = site + 1 == n ? 0 : site + 1;
  refresh_edge(2 * site);
  refresh_edge(2 * site + 1);
  refresh_edge(2 * left + 1);
  refresh_edge(2 * right);
}

std::size_t LatticeState::popcount() const {
  return static_cast<std::size_t>(std::count(occupancy_.begin(), occupancy_.end(), 1));
}

std::vector<LatticeState::SiteWeights> LatticeState::event_weights() const {
  std::vector<SiteWeights> w(size());
  for (std::size_t s : occupied_) ++w[s].death;
  for (std::size_t e : active_) ++w[target(e)].infection;
  return w;
}

std::optional<Step> next_event(const LatticeState& state, double lambda, Rng& rng) {
  if (state.empty()) return std::nullopt;
  double deaths = static_cast<double>(state.occupied_count());
  double infections = lambda * static_cast<double>(state.active_edge_count());
  double total = deaths + infections;
  double wait = rng.exponential(total);
  if (rng.uniform() * total < deaths || state.active_edge_count() == 0)
    return Step{wait, {Event::Kind::Death, state.occupied_site(rng.index(state.occupied_count()))}};
  return Step{wait, {Event::Kind::Infection, state.active_edge_target(rng.index(state.active_edge_count()))}};
}

void apply(LatticeState& state, const Event& event) {
  state.set(event.site, event.kind == Event::Kind::Infection);
}

void SimConfig::validate() const {
  if (!(lambda >= 0) || !std::isfinite(lambda)) throw InvalidConfig("lambda must be a finite value >= 0");
  if (L < 3) throw InvalidConfig("L must be at least 3");
  if (!(T > 0) || !std::isfinite(T)) throw InvalidConfig("T must be a finite value > 0");
  if (replicas < 1) throw InvalidConfig("replicas must be at least 1");
}

std::vector<std::size_t> centered_sites(const ConfigurationPattern& pattern, std::size_t L) {
  std::size_t width = static_cast<std::size_t>(pattern.span());
  std::size_t margin = L / 4;
  if (width + 2 * margin > L)
    throw InvalidConfig(fmt::format("pattern {} of width {} needs L >= {} for a margin of L/4 on each side",
                                    pattern.str(), width, 2 * width));
  std::size_t start = (L - width) / 2;
  std::vector<std::size_t> out;
  for (int s : pattern.sites()) out.push_back(start + static_cast<std::size_t>(s));
  return out;
}

namespace {

// Streams keep the two sides of the duality check independent.
constexpr std::uint64_t kExtinctionStream = 1;
constexpr std::uint64_t kDensityStream = 2;
constexpr std::uint64_t kVacancyStream = 3;

struct ReplicaOutcome {
  double value = 0;
  double sim_time = 0;
};

/// Runs the process until extinction or time T; returns the stop time.
double run_until(LatticeState& state, double lambda, double T, Rng& rng) {
  double t = 0;
  while (auto step = next_event(state, lambda, rng)) {
    if (t + step->wait > T) return T;
    t += step->wait;
    apply(state, step->event);
  }
  return t;
}

template <typename Replica>
std::vector<ReplicaOutcome> run_replicas(std::size_t replicas, unsigned threads, Replica replica) {
  std::vector<ReplicaOutcome> out(replicas);
  unsigned n = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, replicas));
  if (n <= 1) {
    for (std::size_t i = 0; i < replicas; ++i) out[i] = replica(i);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < n; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < replicas; i += n) out[i] = replica(i);
    });
  pool.clear();
  return out;
}

SimulationEstimate proportion(const std::vector<ReplicaOutcome>& outcomes) {
  SimulationEstimate e;
  e.replicas = outcomes.size();
  double hits = 0;
  for (const auto& o : outcomes) {
    hits += o.value;
    e.elapsed_sim_time += o.sim_time;
  }
  double n = static_cast<double>(e.replicas);
  e.mean = hits / n;
  e.half_width = 1.96 * std::sqrt(e.mean * (1 - e.mean) / n);
  return e;
}

SimulationEstimate sample_mean(const std::vector<ReplicaOutcome>& outcomes) {
  SimulationEstimate e;
  e.replicas = outcomes.size();
  double sum = 0;
  for (const auto& o : outcomes) {
    sum += o.value;
    e.elapsed_sim_time += o.sim_time;
  }
  double n = static_cast<double>(e.replicas);
  e.mean = sum / n;
  if (e.replicas > 1) {
    double ss = 0;
    for (const auto& o : outcomes) ss += (o.value - e.mean) * (o.value - e.mean);
    e.half_width = 1.96 * std::sqrt(ss / (n - 1) / n);
  }
  return e;
}

}  // namespace

SimulationEstimate extinction_probability(const SimConfig& config) {
  config.validate();
  if (config.initial.kind == InitialCondition::Kind::AllOnes)
    throw InvalidConfig("extinction probability needs a finite initial pattern");
  auto sites = centered_sites(config.initial.pattern, config.L);
  auto outcomes = run_replicas(config.replicas, config.threads, [&](std::size_t i) {
    Rng rng = Rng::for_replica(config.seed, kExtinctionStream, i);
    LatticeState state(config.L);
    for (auto s : sites) state.set(s, true);
    double t = run_until(state, config.lambda, config.T, rng);
    return ReplicaOutcome{state.empty() ? 1.0 : 0.0, t};
  });
  return proportion(outcomes);
}

SimulationEstimate density_estimate(const SimConfig& config) {
  config.validate();
  std::size_t lo = config.L / 4;
  std::size_t hi = lo + config.L / 2;
  auto outcomes = run_replicas(config.replicas, config.threads, [&](std::size_t i) {
    Rng rng = Rng::for_replica(config.seed, kDensityStream, i);
    auto state = LatticeState::all_occupied(config.L);
    double t = run_until(state, config.lambda, config.T, rng);
    std::size_t count = 0;
    for (std::size_t s = lo; s < hi; ++s) count += state.occupied(s) ? 1 : 0;
    return ReplicaOutcome{static_cast<double>(count) / static_cast<double>(hi - lo), t};
  });
  return sample_mean(outcomes);
}

DualityEstimate duality_check(double lambda, const ConfigurationPattern& pattern, std::size_t L, double T,
                              std::size_t replicas, std::uint64_t seed, unsigned threads) {
  SimConfig config{lambda, L, T, replicas, seed, InitialCondition::from_pattern(pattern), threads};
  config.validate();
  auto sites = centered_sites(pattern, L);
  auto vacancy = run_replicas(replicas, threads, [&](std::size_t i) {
    Rng rng = Rng::for_replica(seed, kVacancyStream, i);
    auto state = LatticeState::all_occupied(L);
    double t = run_until(state, lambda, T, rng);
    bool vacant = std::none_of(sites.begin(), sites.end(), [&](std::size_t s) { return state.occupied(s); });
    return ReplicaOutcome{vacant ? 1.0 : 0.0, t};
  });
  return {proportion(vacancy), extinction_probability(config)};
}

}  // namespace cpgb

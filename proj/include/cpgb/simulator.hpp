#pragma once

// Continuous-time Monte Carlo for the contact process on a ring of L sites:
// each occupied site dies at rate 1 and infects each vacant neighbor at
// rate λ.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cpgb/identities.hpp"

namespace cpgb {

/// Per-replica random stream: mt19937_64 seeded through SplitMix64 from
/// (seed, stream, replica).
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/splitmix64-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_replica(std::uint64_t seed, std::uint64_t stream, std::uint64_t replica);

  /// Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n);
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Occupancy on a periodic lattice, with the occupied sites and the
/// directed occupied-to-vacant adjacencies indexed for O(1) sampling.
class LatticeState {
 public:
  explicit LatticeState(std::size_t size);
  static LatticeState all_occupied(std::size_t size);

  std::size_t size() const { return occupancy_.size(); }
  bool occupied(std::size_t site) const { return occupancy_[site] != 0; }
  std::size_t occupied_count() const { return occupied_.size(); }
  /// Ordered pairs (occupied site, vacant neighbor).
  std::size_t active_edge_count() const { return active_.size(); }
  bool empty() const { return occupied_.empty(); }

  void set(std::size_t site, bool value);

  std::size_t occupied_site(std::size_t k) const { return occupied_[k]; }
  std::size_t active_edge_target(std::size_t k) const { return target(active_[k]); }

  /// Recount from the occupancy vector, independent of the indexes.
  std::size_t popcount() const;

  struct SiteWeights {
    std::uint32_t death = 0;      // multiplies rate 1
    std::uint32_t infection = 0;  // multiplies λ
  };
  /// Event weights per site as seen by the sampler's indexes.
  std::vector<SiteWeights> event_weights() const;

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::size_t target(std::size_t edge) const;
  void refresh_edge(std::size_t edge);

  std::vector<std::uint8_t> occupancy_;
  std::vector<std::size_t> occupied_;
  std::vector<std::size_t> occupied_pos_;
  // Edge 2s is s -> s-1, edge 2s+1 is s -> s+1.
  std::vector<std::size_t> active_;
  std::vector<std::size_t> active_pos_;
};

struct Event {
  enum class Kind { Death, Infection };
  Kind kind;
  std::size_t site;
};

struct Step {
  double wait;
  Event event;
};

/// Total rate (#occupied) + λ (#active edges). nullopt once extinct.
std::optional<Step> next_event(const LatticeState& state, double lambda, Rng& rng);
void apply(LatticeState& state, const Event& event);

struct InitialCondition {
  enum class Kind { SingleSite, Pattern, AllOnes };
  Kind kind = Kind::SingleSite;
  ConfigurationPattern pattern = ConfigurationPattern::parse("o");

  static InitialCondition single_site() { return {}; }
  static InitialCondition from_pattern(ConfigurationPattern p) { return {Kind::Pattern, std::move(p)}; }
  static InitialCondition all_ones() { return {Kind::AllOnes, ConfigurationPattern::parse("o")}; }
};

struct SimConfig {
  double lambda = 1.0;
  std::size_t L = 400;
  double T = 100.0;
  std::size_t replicas = 100;
  std::uint64_t seed = 1;
  InitialCondition initial;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;

  /// InvalidConfig unless λ >= 0, L >= 3, T > 0, replicas >= 1.
  void validate() const;
};

struct SimulationEstimate {
  double mean = 0;
  /// 95% normal-approximation half-width.
  double half_width = 0;
  std::size_t replicas = 0;
  /// Simulated time summed over replicas.
  double elapsed_sim_time = 0;
};

/// Sites of `pattern` placed around L/2. InvalidConfig unless the pattern
/// keeps a margin of L/4 on each side.
std::vector<std::size_t> centered_sites(const ConfigurationPattern& pattern, std::size_t L);

/// Fraction of replicas started from the pattern that die out by T.
SimulationEstimate extinction_probability(const SimConfig& config);
/// Mean occupancy of the middle L/2 sites at T, started from all ones.
SimulationEstimate density_estimate(const SimConfig& config);

struct DualityEstimate {
  /// ν(A): all sites of A vacant at T, started from all ones.
  SimulationEstimate vacancy;
  /// Extinction by T started from A.
  SimulationEstimate extinction;
};
DualityEstimate duality_check(double lambda, const ConfigurationPattern& pattern, std::size_t L, double T,
                              std::size_t replicas, std::uint64_t seed, unsigned threads = 0);

}  // namespace cpgb

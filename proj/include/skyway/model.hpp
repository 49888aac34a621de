#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skyway/time.hpp"

namespace skyway {

using StationId = std::int32_t;
using SegmentId = std::int32_t;
using PlayerId = std::int32_t;
using RequestId = std::int32_t;

inline constexpr StationId kNoStation = -1;
inline constexpr SegmentId kNoSegment = -1;
inline constexpr PlayerId kNoPlayer = -1;

// A rooftop recharging station. Position is planar, in km.
struct Station {
  StationId id = kNoStation;
  double x_km = 0.0;
  double y_km = 0.0;
  int pad_count = 1;  // number of recharging pads, >= 1
};

// A flyable line segment between two stations.
struct Segment {
  SegmentId id = kNoSegment;
  StationId from = kNoStation;
  StationId to = kNoStation;
  double distance_km = 0.0;
  bool bidirectional = true;
};

struct AdjacentEdge {
  StationId neighbor = kNoStation;
  SegmentId segment = kNoSegment;
};

// Graph of stations and segments with an adjacency index.
//
// add_station/add_segment enforce the structural invariants at call time
// (dense ids, existing endpoints, positive distance, no self-loops);
// from_parts accepts anything so that loaded files can be inspected with
// validate_network instead of crashing.
class SkywayNetwork {
 public:
  SkywayNetwork() = default;

  StationId add_station(double x_km, double y_km, int pad_count);
  SegmentId add_segment(StationId from, StationId to, double distance_km,
                        bool bidirectional = true);
  // Distance taken from endpoint positions.
  SegmentId add_segment_euclidean(StationId from, StationId to, bool bidirectional = true);

  static SkywayNetwork from_parts(std::vector<Station> stations,
                                  std::vector<Segment> segments);

  std::size_t station_count() const { return stations_.size(); }
  std::size_t segment_count() const { return segments_.size(); }

  const Station& station(StationId id) const;
  const Segment& segment(SegmentId id) const;

  std::span<const Station> stations() const { return stations_; }
  std::span<const Segment> segments() const { return segments_; }

  // Outgoing edges of a station, in insertion order.
  std::span<const AdjacentEdge> neighbors(StationId id) const;

  double euclidean_km(StationId a, StationId b) const;

 private:
  void index_segment(const Segment& seg);

  std::vector<Station> stations_;
  std::vector<Segment> segments_;
  std::vector<std::vector<AdjacentEdge>> adjacency_;
};

// Static drone parameters.
struct DroneSpec {
  std::string name;
  double max_speed_kmh = 0.0;
  double max_payload_kg = 0.0;
  double base_range_km = 0.0;     // range on a full charge at zero payload
  double battery_capacity = 1.0;  // normalized; 1.0 is a full charge
  double battery_mah = 0.0;       // descriptive only, unused by any formula
  Minutes full_recharge;          // empty-to-full recharge duration
  Minutes nominal_flight;         // zero disables the range/speed consistency check

  // DJI M200 V2: 81 km/h, 1.45 kg, 32.4 km, 60 min recharge, 24 min flight.
  static DroneSpec dji_m200_v2();
};

struct DeliveryRequest {
  RequestId id = -1;
  StationId src = kNoStation;
  StationId dst = kNoStation;
  double payload_kg = 0.0;
  Minutes release;  // earliest departure from src
};

// Per-stop cost of a strategy: total = travel + wait + recharge, exact in ticks.
struct PayoffBreakdown {
  Minutes travel;
  Minutes wait;
  Minutes recharge;
  Minutes total;
};

// One flown segment plus everything that happens at its endpoint.
// Arrival is depart + travel; recharging starts at arrival + wait.
struct PlanLeg {
  SegmentId segment = kNoSegment;
  StationId from = kNoStation;
  StationId to = kNoStation;
  Minutes depart;
  Minutes travel;
  Minutes wait;
  Minutes recharge;

  Minutes arrival() const { return depart + travel; }
  Minutes finish() const { return depart + travel + wait + recharge; }
};

struct CompositionPlan {
  std::vector<PlanLeg> legs;
  Minutes total_time;  // sum of all leg travel, wait, and recharge components

  bool empty() const { return legs.empty(); }
};

// A selfish player: one drone carrying one delivery request.
struct DroneAgent {
  PlayerId id = kNoPlayer;
  DroneSpec spec;
  DeliveryRequest request;
  double battery = 1.0;  // fraction of a full charge
  StationId location = kNoStation;
  CompositionPlan plan;  // committed plan, possibly partial
};

struct Violation {
  std::string code;    // short machine-checkable tag, e.g. "dangling endpoint"
  std::string detail;  // offending element and values
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

// Checks station ids (dense, unique), pad counts, segment endpoints,
// distances, and self-loops. Report-based; does not throw.
ValidationReport validate_network(const SkywayNetwork& net);

// Positivity of all parameters plus the range <= speed * flight-time
// consistency check when a nominal flight time is present.
ValidationReport validate_spec(const DroneSpec& spec);

// Flight duration for a segment at the drone's cruise speed.
Minutes travel_time(double distance_km, const DroneSpec& spec);
Minutes travel_time(const Segment& seg, const DroneSpec& spec);

}  // namespace skyway

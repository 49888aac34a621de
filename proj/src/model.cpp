#include "skyway/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skyway/errors.hpp"

namespace skyway {

std::string format_minutes(Minutes m) {
  std::int64_t t = m.ticks();
  const bool neg = t < 0;
  if (neg) t = -t;
  const std::int64_t whole = t / Minutes::kTicksPerMinute;
  const std::int64_t frac = t % Minutes::kTicksPerMinute;
  std::ostringstream out;
  if (neg) out << '-';
  out << whole << '.';
  out.width(2);
  out.fill('0');
  out << frac;
  return out.str();
}

StationId SkywayNetwork::add_station(double x_km, double y_km, int pad_count) {
  if (pad_count < 1) {
    throw ValidationError("station pad_count must be >= 1, got " + std::to_string(pad_count));
  }
  const auto id = static_cast<StationId>(stations_.size());
  stations_.push_back(Station{id, x_km, y_km, pad_count});
  adjacency_.emplace_back();
  return id;
}

SegmentId SkywayNetwork::add_segment(StationId from, StationId to, double distance_km,
                                     bool bidirectional) {
  const auto m = static_cast<StationId>(stations_.size());
  if (from < 0 || from >= m || to < 0 || to >= m) {
    throw ValidationError("segment endpoint out of range");
  }
  if (from == to) {
    throw ValidationError("self-loop segment at station " + std::to_string(from));
  }
  if (!(distance_km > 0.0)) {
    throw ValidationError("segment distance must be > 0, got " + std::to_string(distance_km));
  }
  const auto id = static_cast<SegmentId>(segments_.size());
  segments_.push_back(Segment{id, from, to, distance_km, bidirectional});
  index_segment(segments_.back());
  return id;
}

SegmentId SkywayNetwork::add_segment_euclidean(StationId from, StationId to, bool bidirectional) {
  const auto m = static_cast<StationId>(stations_.size());
  if (from < 0 || from >= m || to < 0 || to >= m) {
    throw ValidationError("segment endpoint out of range");
  }
  return add_segment(from, to, euclidean_km(from, to), bidirectional);
}

SkywayNetwork SkywayNetwork::from_parts(std::vector<Station> stations,
                                        std::vector<Segment> segments) {
  SkywayNetwork net;
  net.stations_ = std::move(stations);
  net.segments_ = std::move(segments);
  net.adjacency_.assign(net.stations_.size(), {});
  for (const auto& seg : net.segments_) {
    net.index_segment(seg);
  }
  return net;
}

void SkywayNetwork::index_segment(const Segment& seg) {
  const auto m = static_cast<StationId>(stations_.size());
  // Tolerate dangling endpoints here; validate_network reports them.
  if (seg.from < 0 || seg.from >= m || seg.to < 0 || seg.to >= m) return;
  adjacency_[static_cast<std::size_t>(seg.from)].push_back({seg.to, seg.id});
  if (seg.bidirectional) {
    adjacency_[static_cast<std::size_t>(seg.to)].push_back({seg.from, seg.id});
  }
}

const Station& SkywayNetwork::station(StationId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= stations_.size()) {
    throw DomainError("station id out of range: " + std::to_string(id));
  }
  return stations_[static_cast<std::size_t>(id)];
}

const Segment& SkywayNetwork::segment(SegmentId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= segments_.size()) {
    throw DomainError("segment id out of range: " + std::to_string(id));
  }
  return segments_[static_cast<std::size_t>(id)];
}

std::span<const AdjacentEdge> SkywayNetwork::neighbors(StationId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= adjacency_.size()) {
    throw DomainError("station id out of range: " + std::to_string(id));
  }
  return adjacency_[static_cast<std::size_t>(id)];
}

double SkywayNetwork::euclidean_km(StationId a, StationId b) const {
  const Station& sa = station(a);
  const Station& sb = station(b);
  return std::hypot(sa.x_km - sb.x_km, sa.y_km - sb.y_km);
}

DroneSpec DroneSpec::dji_m200_v2() {
  DroneSpec spec;
  spec.name = "DJI M200 V2";
  spec.max_speed_kmh = 81.0;
  spec.max_payload_kg = 1.45;
  spec.base_range_km = 32.4;
  spec.battery_capacity = 1.0;
  spec.battery_mah = 4280.0;
  spec.full_recharge = Minutes::from_minutes(60.0);
  spec.nominal_flight = Minutes::from_minutes(24.0);
  return spec;
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate_network(const SkywayNetwork& net) {
  ValidationReport report;
  const auto m = static_cast<StationId>(net.station_count());

  for (std::size_t i = 0; i < net.station_count(); ++i) {
    const Station& st = net.stations()[i];
    if (st.id != static_cast<StationId>(i)) {
      report.violations.push_back(
          {"non-dense station id",
           "station at index " + std::to_string(i) + " has id " + std::to_string(st.id)});
    }
    if (st.pad_count < 1) {
      report.violations.push_back(
          {"non-positive pad count",
           "station " + std::to_string(st.id) + " has pad_count " + std::to_string(st.pad_count)});
    }
  }

  for (std::size_t i = 0; i < net.segment_count(); ++i) {
    const Segment& seg = net.segments()[i];
    const std::string label = "segment " + std::to_string(seg.id);
    if (seg.id != static_cast<SegmentId>(i)) {
      report.violations.push_back(
          {"non-dense segment id",
           "segment at index " + std::to_string(i) + " has id " + std::to_string(seg.id)});
    }
    if (seg.from < 0 || seg.from >= m || seg.to < 0 || seg.to >= m) {
      report.violations.push_back(
          {"dangling endpoint", label + " references station " +
                                    std::to_string(seg.from < 0 || seg.from >= m ? seg.from : seg.to)});
      continue;
    }
    if (seg.from == seg.to) {
      report.violations.push_back({"self-loop", label + " loops at station " + std::to_string(seg.from)});
    }
    if (!(seg.distance_km > 0.0)) {
      report.violations.push_back(
          {"non-positive distance", label + " has distance " + std::to_string(seg.distance_km)});
    }
  }
  return report;
}

ValidationReport validate_spec(const DroneSpec& spec) {
  ValidationReport report;
  auto require_positive = [&](double value, const char* field) {
    if (!(value > 0.0)) {
      report.violations.push_back(
          {"non-positive spec field", std::string(field) + " = " + std::to_string(value)});
    }
  };
  require_positive(spec.max_speed_kmh, "max_speed_kmh");
  require_positive(spec.max_payload_kg, "max_payload_kg");
  require_positive(spec.base_range_km, "base_range_km");
  require_positive(spec.battery_capacity, "battery_capacity");
  if (spec.full_recharge <= Minutes{}) {
    report.violations.push_back({"non-positive spec field",
                                 "full_recharge = " + format_minutes(spec.full_recharge)});
  }
  if (spec.nominal_flight > Minutes{}) {
    const double reachable_km = spec.max_speed_kmh * spec.nominal_flight.count() / 60.0;
    if (spec.base_range_km > reachable_km + 1e-9) {
      report.violations.push_back(
          {"range exceeds speed x flight time",
           "base_range " + std::to_string(spec.base_range_km) + " km > " +
               std::to_string(reachable_km) + " km"});
    }
  }
  return report;
}

Minutes travel_time(double distance_km, const DroneSpec& spec) {
  if (distance_km < 0.0) throw DomainError("negative distance");
  if (!(spec.max_speed_kmh > 0.0)) throw DomainError("non-positive max speed");
  return Minutes::from_minutes(distance_km / spec.max_speed_kmh * 60.0);
}

Minutes travel_time(const Segment& seg, const DroneSpec& spec) {
  return travel_time(seg.distance_km, spec);
}

}  // namespace skyway

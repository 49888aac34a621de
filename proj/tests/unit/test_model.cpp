#include <doctest.h>

#include <random>

#include "skyway/errors.hpp"
#include "skyway/model.hpp"
#include "skyway/rng.hpp"

using namespace skyway;

TEST_CASE("Minutes round and format at tick resolution") {
  CHECK(Minutes::from_minutes(24.0).ticks() == 2400);
  CHECK(Minutes::from_minutes(0.004).ticks() == 0);
  CHECK(Minutes::from_minutes(0.006).ticks() == 1);
  CHECK(format_minutes(Minutes::from_minutes(24.0)) == "24.00");
  CHECK(format_minutes(Minutes::from_ticks(12345)) == "123.45");
  CHECK(format_minutes(Minutes::from_ticks(-350)) == "-3.50");
  CHECK(format_minutes(Minutes{}) == "0.00");
}

TEST_CASE("travel_time matches the reference drone numbers") {
  const DroneSpec spec = DroneSpec::dji_m200_v2();
  CHECK(travel_time(27.0, spec) == Minutes::from_minutes(20.0));
  CHECK(travel_time(32.4, spec) == Minutes::from_minutes(24.0));
  CHECK(travel_time(0.0, spec) == Minutes{});
}

TEST_CASE("travel_time is monotone in distance and speed") {
  std::mt19937_64 rng(7);
  DroneSpec spec = DroneSpec::dji_m200_v2();
  for (int i = 0; i < 200; ++i) {
    const double d1 = uniform_real(rng, 0.0, 100.0);
    const double d2 = d1 + uniform_real(rng, 0.0, 50.0);
    CHECK(travel_time(d1, spec) <= travel_time(d2, spec));

    DroneSpec slow = spec;
    DroneSpec fast = spec;
    slow.max_speed_kmh = uniform_real(rng, 10.0, 80.0);
    fast.max_speed_kmh = slow.max_speed_kmh + uniform_real(rng, 1.0, 50.0);
    CHECK(travel_time(d2, fast) <= travel_time(d2, slow));
  }
  // strictly increasing when the difference exceeds the tick quantum
  CHECK(travel_time(10.0, spec) < travel_time(11.0, spec));
}

TEST_CASE("default drone spec carries the DJI M200 V2 numbers") {
  const DroneSpec spec = DroneSpec::dji_m200_v2();
  CHECK(spec.max_speed_kmh == doctest::Approx(81.0));
  CHECK(spec.max_payload_kg == doctest::Approx(1.45));
  CHECK(spec.base_range_km == doctest::Approx(32.4));
  CHECK(spec.full_recharge == Minutes::from_minutes(60.0));
  CHECK(spec.nominal_flight == Minutes::from_minutes(24.0));
  CHECK(validate_spec(spec).ok());

  DroneSpec broken = spec;
  broken.base_range_km = 40.0;  // cannot fly 40 km in 24 min at 81 km/h
  CHECK_FALSE(validate_spec(broken).ok());
}

TEST_CASE("validate_network accepts a minimal valid graph") {
  SkywayNetwork net;
  net.add_station(0.0, 0.0, 1);
  net.add_station(5.0, 0.0, 1);
  net.add_segment(0, 1, 5.0);
  const ValidationReport report = validate_network(net);
  CHECK(report.ok());
}

TEST_CASE("validate_network reports dangling endpoints and bad distances") {
  std::vector<Station> stations{{0, 0.0, 0.0, 1}, {1, 1.0, 0.0, 1}, {2, 2.0, 0.0, 1}};
  std::vector<Segment> segments{{0, 0, 99, 1.0, true}};
  auto net = SkywayNetwork::from_parts(stations, segments);
  CHECK(validate_network(net).has("dangling endpoint"));

  segments = {{0, 0, 1, 0.0, true}};
  net = SkywayNetwork::from_parts(stations, segments);
  CHECK(validate_network(net).has("non-positive distance"));

  segments = {{0, 1, 1, 1.0, true}};
  net = SkywayNetwork::from_parts(stations, segments);
  CHECK(validate_network(net).has("self-loop"));

  stations[1].pad_count = 0;
  net = SkywayNetwork::from_parts(stations, {});
  CHECK(validate_network(net).has("non-positive pad count"));

  stations[1].pad_count = 1;
  stations[2].id = 7;
  net = SkywayNetwork::from_parts(stations, {});
  CHECK(validate_network(net).has("non-dense station id"));
}

TEST_CASE("construction-time checks reject bad inputs outright") {
  SkywayNetwork net;
  net.add_station(0.0, 0.0, 1);
  net.add_station(3.0, 4.0, 2);
  CHECK_THROWS_AS(net.add_station(0.0, 0.0, 0), ValidationError);
  CHECK_THROWS_AS(net.add_segment(0, 0, 1.0), ValidationError);
  CHECK_THROWS_AS(net.add_segment(0, 5, 1.0), ValidationError);
  CHECK_THROWS_AS(net.add_segment(0, 1, 0.0), ValidationError);
  CHECK(net.euclidean_km(0, 1) == doctest::Approx(5.0));
  const SegmentId id = net.add_segment_euclidean(0, 1);
  CHECK(net.segment(id).distance_km == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("adjacency honors directed segments") {
  SkywayNetwork net;
  net.add_station(0.0, 0.0, 1);
  net.add_station(1.0, 0.0, 1);
  net.add_segment(0, 1, 1.0, /*bidirectional=*/false);
  CHECK(net.neighbors(0).size() == 1);
  CHECK(net.neighbors(1).empty());
}

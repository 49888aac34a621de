#include "skyway/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "skyway/errors.hpp"
#include "skyway/rng.hpp"

namespace skyway {

bool is_connected(const SkywayNetwork& net) {
  const std::size_t n = net.station_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::deque<StationId> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const StationId cur = queue.front();
    queue.pop_front();
    for (const AdjacentEdge& e : net.neighbors(cur)) {
      if (!seen[static_cast<std::size_t>(e.neighbor)]) {
        seen[static_cast<std::size_t>(e.neighbor)] = true;
        ++count;
        queue.push_back(e.neighbor);
      }
    }
  }
  return count == n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

// Connects all pairs within max_edge_km, then adds closest cross-component
// edges up to cap_km. Returns false when a needed edge would exceed the cap.
bool build_edges(SkywayNetwork& net, double max_edge_km, double cap_km) {
  const auto n = static_cast<StationId>(net.station_count());
  UnionFind uf(static_cast<std::size_t>(n));
  for (StationId i = 0; i < n; ++i) {
    for (StationId j = static_cast<StationId>(i + 1); j < n; ++j) {
      if (net.euclidean_km(i, j) <= max_edge_km) {
        net.add_segment_euclidean(i, j);
        uf.merge(i, j);
      }
    }
  }
  while (true) {
    double best = -1.0;
    StationId bi = kNoStation;
    StationId bj = kNoStation;
    for (StationId i = 0; i < n; ++i) {
      for (StationId j = static_cast<StationId>(i + 1); j < n; ++j) {
        if (uf.find(i) == uf.find(j)) continue;
        const double d = net.euclidean_km(i, j);
        if (bi == kNoStation || d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == kNoStation) return true;  // single component
    if (best > cap_km) return false;
    net.add_segment_euclidean(bi, bj);
    uf.merge(bi, bj);
  }
}

void validate_scenario(const Scenario& scenario) {
  std::vector<std::string> problems;
  if (scenario.format_version != 1) {
    problems.push_back("unsupported format_version " + std::to_string(scenario.format_version));
  }
  const ValidationReport net_report = validate_network(scenario.network);
  for (const Violation& v : net_report.violations) {
    problems.push_back(v.code + ": " + v.detail);
  }
  const ValidationReport spec_report = validate_spec(scenario.drone);
  for (const Violation& v : spec_report.violations) {
    problems.push_back(v.code + ": " + v.detail);
  }
  if (scenario.payload_derating < 0.0 || scenario.payload_derating >= 1.0) {
    problems.push_back("payload_derating outside [0,1)");
  }
  if (scenario.planner.time_window.negative()) problems.push_back("negative time_window");
  if (scenario.planner.enumeration_budget < 1) problems.push_back("non-positive enumeration_budget");
  if (scenario.jitter.delta.negative()) problems.push_back("negative jitter delta");
  const auto m = static_cast<StationId>(scenario.network.station_count());
  for (const DeliveryRequest& req : scenario.requests) {
    const std::string label = "request " + std::to_string(req.id);
    if (req.src < 0 || req.src >= m || req.dst < 0 || req.dst >= m) {
      problems.push_back(label + " references a missing station");
      continue;
    }
    if (req.src == req.dst) problems.push_back(label + " has src == dst");
    if (req.payload_kg < 0.0 || req.payload_kg > scenario.drone.max_payload_kg) {
      problems.push_back(label + " payload outside [0, max_payload]");
    }
    if (req.release.negative()) problems.push_back(label + " has negative release time");
  }
  if (!problems.empty()) {
    std::string msg = "invalid scenario:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

}  // namespace

Scenario generate(const ScenarioConfig& config) {
  if (config.node_count < 2) throw ValidationError("node_count must be >= 2");
  if (config.player_count < 1) throw ValidationError("player_count must be >= 1");
  if (config.pad_min < 1 || config.pad_max < config.pad_min) {
    throw ValidationError("pad range must satisfy 1 <= pad_min <= pad_max");
  }
  if (!(config.area_side_km > 0.0)) throw ValidationError("area_side_km must be > 0");
  if (config.payload_kg < 0.0 || config.payload_kg > config.drone.max_payload_kg) {
    throw ValidationError("payload_kg outside [0, max_payload]");
  }
  const EnergyModel energy =
      EnergyModel::for_drone(config.drone, config.payload_derating, config.recharge_mode);
  if (config.max_edge_km > config.drone.base_range_km) {
    throw ValidationError("max_edge_km exceeds the drone's base range");
  }
  const double cap_km =
      effective_range(energy, config.payload_kg, config.drone.max_payload_kg);

  SkywayNetwork net;
  bool connected = false;
  for (int attempt = 0; attempt < config.max_retries && !connected; ++attempt) {
    std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(attempt)));
    SkywayNetwork candidate;
    for (int i = 0; i < config.node_count; ++i) {
      const double x = uniform_real(rng, 0.0, config.area_side_km);
      const double y = uniform_real(rng, 0.0, config.area_side_km);
      const int pads = static_cast<int>(
          uniform_i64(rng, config.pad_min, config.pad_max));
      candidate.add_station(x, y, pads);
    }
    if (build_edges(candidate, config.max_edge_km, cap_km)) {
      net = std::move(candidate);
      connected = true;
    }
  }
  if (!connected) {
    throw GenerationError("could not generate a connected network after " +
                          std::to_string(config.max_retries) + " attempts");
  }

  // Requests come from a separate stream so connectivity retries cannot
  // perturb them.
  std::mt19937_64 rng(mix_seed(config.seed, 0x7265712bULL));
  std::vector<DeliveryRequest> requests;
  requests.reserve(static_cast<std::size_t>(config.player_count));
  for (int k = 0; k < config.player_count; ++k) {
    const auto src = static_cast<StationId>(
        uniform_u64(rng, static_cast<std::uint64_t>(config.node_count)));
    StationId dst = src;
    while (dst == src) {
      dst = static_cast<StationId>(
          uniform_u64(rng, static_cast<std::uint64_t>(config.node_count)));
    }
    const Minutes release =
        Minutes::from_ticks(uniform_i64(rng, 0, config.release_horizon.ticks()));
    requests.push_back(DeliveryRequest{k, src, dst, config.payload_kg, release});
  }

  Scenario scenario;
  scenario.network = std::move(net);
  scenario.requests = std::move(requests);
  scenario.drone = config.drone;
  scenario.payload_derating = config.payload_derating;
  scenario.recharge_mode = config.recharge_mode;
  scenario.planner = config.planner;
  scenario.jitter = config.jitter;
  scenario.seed = config.seed;
  return scenario;
}

World make_world(const Scenario& scenario) {
  std::vector<DroneAgent> agents;
  agents.reserve(scenario.requests.size());
  for (std::size_t i = 0; i < scenario.requests.size(); ++i) {
    DroneAgent agent;
    agent.id = static_cast<PlayerId>(i);
    agent.spec = scenario.drone;
    agent.request = scenario.requests[i];
    agent.battery = 1.0;
    agent.location = scenario.requests[i].src;
    agents.push_back(std::move(agent));
  }
  return World::make(scenario.network, scenario.energy_model(), scenario.planner,
                     std::move(agents));
}

namespace {

const char* mode_name(RechargeMode mode) {
  return mode == RechargeMode::FullFixed ? "full_fixed" : "proportional";
}

RechargeMode mode_from_name(const std::string& name) {
  if (name == "full_fixed") return RechargeMode::FullFixed;
  if (name == "proportional") return RechargeMode::Proportional;
  throw ValidationError("unknown recharge_mode '" + name + "'");
}

}  // namespace

nlohmann::json to_json(const Scenario& scenario) {
  nlohmann::json j;
  j["format_version"] = scenario.format_version;
  j["seed"] = scenario.seed;

  nlohmann::json stations = nlohmann::json::array();
  for (const Station& st : scenario.network.stations()) {
    stations.push_back({{"id", st.id}, {"x_km", st.x_km}, {"y_km", st.y_km}, {"pads", st.pad_count}});
  }
  nlohmann::json segments = nlohmann::json::array();
  for (const Segment& seg : scenario.network.segments()) {
    segments.push_back({{"id", seg.id},
                        {"from", seg.from},
                        {"to", seg.to},
                        {"distance_km", seg.distance_km},
                        {"bidirectional", seg.bidirectional}});
  }
  j["network"] = {{"stations", stations}, {"segments", segments}};

  nlohmann::json requests = nlohmann::json::array();
  for (const DeliveryRequest& req : scenario.requests) {
    requests.push_back({{"id", req.id},
                        {"src", req.src},
                        {"dst", req.dst},
                        {"payload_kg", req.payload_kg},
                        {"release_min", req.release.count()}});
  }
  j["requests"] = requests;

  j["drone"] = {{"name", scenario.drone.name},
                {"max_speed_kmh", scenario.drone.max_speed_kmh},
                {"max_payload_kg", scenario.drone.max_payload_kg},
                {"base_range_km", scenario.drone.base_range_km},
                {"battery_capacity", scenario.drone.battery_capacity},
                {"battery_mah", scenario.drone.battery_mah},
                {"full_recharge_min", scenario.drone.full_recharge.count()},
                {"nominal_flight_min", scenario.drone.nominal_flight.count()}};
  j["energy"] = {{"payload_derating", scenario.payload_derating},
                 {"recharge_mode", mode_name(scenario.recharge_mode)}};
  j["planner"] = {{"time_window_min", scenario.planner.time_window.count()},
                  {"max_hops", scenario.planner.max_hops},
                  {"enumeration_budget", scenario.planner.enumeration_budget},
                  {"est_weight", scenario.planner.est_weight}};
  j["jitter"] = {{"delta_min", scenario.jitter.delta.count()}, {"seed", scenario.jitter.seed}};
  return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario scenario;
  if (!j.contains("format_version")) {
    throw ValidationError("scenario file is missing the mandatory format_version field");
  }
  scenario.format_version = j.at("format_version").get<int>();
  scenario.seed = j.at("seed").get<std::uint64_t>();

  std::vector<Station> stations;
  for (const auto& s : j.at("network").at("stations")) {
    stations.push_back(Station{s.at("id").get<StationId>(), s.at("x_km").get<double>(),
                               s.at("y_km").get<double>(), s.at("pads").get<int>()});
  }
  std::vector<Segment> segments;
  for (const auto& s : j.at("network").at("segments")) {
    segments.push_back(Segment{s.at("id").get<SegmentId>(), s.at("from").get<StationId>(),
                               s.at("to").get<StationId>(), s.at("distance_km").get<double>(),
                               s.at("bidirectional").get<bool>()});
  }
  scenario.network = SkywayNetwork::from_parts(std::move(stations), std::move(segments));

  for (const auto& r : j.at("requests")) {
    scenario.requests.push_back(DeliveryRequest{
        r.at("id").get<RequestId>(), r.at("src").get<StationId>(), r.at("dst").get<StationId>(),
        r.at("payload_kg").get<double>(),
        Minutes::from_minutes(r.at("release_min").get<double>())});
  }

  const auto& d = j.at("drone");
  scenario.drone.name = d.at("name").get<std::string>();
  scenario.drone.max_speed_kmh = d.at("max_speed_kmh").get<double>();
  scenario.drone.max_payload_kg = d.at("max_payload_kg").get<double>();
  scenario.drone.base_range_km = d.at("base_range_km").get<double>();
  scenario.drone.battery_capacity = d.at("battery_capacity").get<double>();
  scenario.drone.battery_mah = d.at("battery_mah").get<double>();
  scenario.drone.full_recharge = Minutes::from_minutes(d.at("full_recharge_min").get<double>());
  scenario.drone.nominal_flight = Minutes::from_minutes(d.at("nominal_flight_min").get<double>());

  const auto& e = j.at("energy");
  scenario.payload_derating = e.at("payload_derating").get<double>();
  scenario.recharge_mode = mode_from_name(e.at("recharge_mode").get<std::string>());

  const auto& p = j.at("planner");
  scenario.planner.time_window = Minutes::from_minutes(p.at("time_window_min").get<double>());
  scenario.planner.max_hops = p.at("max_hops").get<int>();
  scenario.planner.enumeration_budget = p.at("enumeration_budget").get<std::int64_t>();
  scenario.planner.est_weight = p.at("est_weight").get<double>();

  const auto& jt = j.at("jitter");
  scenario.jitter.delta = Minutes::from_minutes(jt.at("delta_min").get<double>());
  scenario.jitter.seed = jt.at("seed").get<std::uint64_t>();

  validate_scenario(scenario);
  return scenario;
}

nlohmann::json plan_to_json(const CompositionPlan& plan) {
  nlohmann::json legs = nlohmann::json::array();
  for (const PlanLeg& leg : plan.legs) {
    legs.push_back({{"segment", leg.segment},
                    {"from", leg.from},
                    {"to", leg.to},
                    {"depart_min", format_minutes(leg.depart)},
                    {"travel_min", format_minutes(leg.travel)},
                    {"wait_min", format_minutes(leg.wait)},
                    {"recharge_min", format_minutes(leg.recharge)}});
  }
  return nlohmann::json{{"total_min", format_minutes(plan.total_time)}, {"legs", legs}};
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << to_json(scenario).dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return scenario_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  return fields;
}

}  // namespace

SkywayNetwork import_nodes_csv(const std::filesystem::path& path, const CsvImportConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());

  std::string header_line;
  if (!std::getline(in, header_line)) throw ParseError(path.string() + ": empty file");
  const std::vector<std::string> header = split_csv_line(header_line);

  int x_col = -1, y_col = -1, lat_col = -1, lon_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = lower(header[i]);
    const int col = static_cast<int>(i);
    if (name == "x" || name == "x_km") x_col = col;
    if (name == "y" || name == "y_km") y_col = col;
    if (name == "lat" || name == "latitude") lat_col = col;
    if (name == "lon" || name == "lng" || name == "longitude") lon_col = col;
  }
  const bool planar = x_col >= 0 && y_col >= 0;
  const bool geographic = lat_col >= 0 && lon_col >= 0;
  if (!planar && !geographic) {
    throw ParseError(path.string() + ": header must contain x,y or lat,lon columns");
  }

  const int a_col = planar ? x_col : lat_col;
  const int b_col = planar ? y_col : lon_col;
  std::vector<std::pair<double, double>> points;
  std::string line;
  for (int line_no = 2; std::getline(in, line); ++line_no) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    const int needed = std::max(a_col, b_col);
    if (static_cast<int>(fields.size()) <= needed) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": too few fields");
    }
    try {
      points.emplace_back(std::stod(fields[static_cast<std::size_t>(a_col)]),
                          std::stod(fields[static_cast<std::size_t>(b_col)]));
    } catch (const std::exception&) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": non-numeric coordinate");
    }
  }

  // Project geographic coordinates to a local planar frame around the centroid.
  std::vector<std::pair<double, double>> xy;
  if (geographic && !planar) {
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
    double lat0 = 0.0, lon0 = 0.0;
    for (const auto& [lat, lon] : points) {
      lat0 += lat;
      lon0 += lon;
    }
    if (!points.empty()) {
      lat0 /= static_cast<double>(points.size());
      lon0 /= static_cast<double>(points.size());
    }
    const double cos_lat0 = std::cos(lat0 * kDegToRad);
    for (const auto& [lat, lon] : points) {
      xy.emplace_back(kEarthRadiusKm * cos_lat0 * (lon - lon0) * kDegToRad,
                      kEarthRadiusKm * (lat - lat0) * kDegToRad);
    }
  } else {
    xy = points;
  }

  // Greedy dedup in input order.
  std::vector<std::pair<double, double>> kept;
  for (const auto& [x, y] : xy) {
    bool merged = false;
    for (const auto& [kx, ky] : kept) {
      if (std::hypot(x - kx, y - ky) < config.dedup_radius_km) {
        merged = true;
        break;
      }
    }
    if (!merged) kept.emplace_back(x, y);
  }
  if (kept.size() < 2) {
    throw ValidationError(path.string() + ": fewer than 2 usable points after deduplication");
  }

  std::mt19937_64 rng(mix_seed(config.seed, 0x637376ULL));
  SkywayNetwork net;
  for (const auto& [x, y] : kept) {
    net.add_station(x, y, static_cast<int>(uniform_i64(rng, config.pad_min, config.pad_max)));
  }
  if (!build_edges(net, config.max_edge_km, config.flyable_cap_km)) {
    throw GenerationError(path.string() +
                          ": imported points cannot be connected within the flyable cap");
  }
  return net;
}

}  // namespace skyway

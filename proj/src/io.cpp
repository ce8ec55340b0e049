#include "uncrossed/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "uncrossed/error.hpp"

namespace uncrossed {

json to_json(const RotationSystem& r) {
  return json{{"n", r.graph().n()}, {"order", r.orders()}};
}

RotationSystem rotation_from_json(const json& j) {
  try {
    return RotationSystem::from_orders(j.at("n").get<int>(),
                                       j.at("order").get<std::vector<std::vector<Vertex>>>());
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("rotation JSON: ") + e.what());
  }
}

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidParameter("edge must be [u, v]");
    out.push_back(make_edge(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
  }
  return out;
}

json to_json(const SubdrawingCertificate& c) {
  json assignment = json::object();
  for (const auto& [e, face] : c.face_assignment) assignment[edge_key(e)] = face;
  return json{{"n", c.graph.n()},
              {"uncrossed", edges_to_json(c.uncrossed)},
              {"rotation", c.rotation.orders()},
              {"assignment", assignment}};
}

SubdrawingCertificate certificate_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    SubdrawingCertificate c;
    c.uncrossed = edges_from_json(j.at("uncrossed"));
    std::sort(c.uncrossed.begin(), c.uncrossed.end());
    std::vector<Edge> all = c.uncrossed;
    for (const auto& [key, face] : j.at("assignment").items()) {
      auto dash = key.find('-');
      if (dash == std::string::npos) throw MalformedCertificate("assignment key '" + key + "'");
      Edge e = make_edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
      c.face_assignment.emplace(e, face.get<int>());
      all.push_back(e);
    }
    c.graph = Graph(n, std::move(all));
    c.rotation = RotationSystem::from_orders(
        n, j.at("rotation").get<std::vector<std::vector<Vertex>>>());
    return c;
  } catch (const json::exception& e) {
    throw MalformedCertificate(std::string("certificate JSON: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw MalformedCertificate(std::string("certificate JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw MalformedCertificate(std::string("certificate JSON: ") + e.what());
  }
}

json to_json(const BoundReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json value = nullptr;
  if (r.value) {
    value = r.integral ? json(static_cast<std::int64_t>(*r.value)) : json(*r.value);
  }
  return json{{"name", r.name},
              {"value", value},
              {"applicable", r.applicable()},
              {"reason", r.reason},
              {"params", params}};
}

json to_json(const ConstructionRecord& rec) {
  json coords = json::array();
  for (const auto& p : rec.coordinates) coords.push_back({p.x(), p.y()});
  json hosts = json::array();
  for (const auto& h : rec.hosts) hosts.push_back({h[0], h[1], h[2]});
  json params = {{"n", rec.n}, {"x", rec.x}};
  params["epsilon"] = rec.epsilon_target ? json(to_string(*rec.epsilon_target)) : json(nullptr);
  params["x0"] = rec.x0 ? json(*rec.x0) : json(nullptr);
  std::vector<Edge> edges(rec.graph.edges().begin(), rec.graph.edges().end());
  return json{{"parameters", params},
              {"edges", edges_to_json(edges)},
              {"crossed_edges", edges_to_json(rec.crossed_edges)},
              {"certificate", to_json(rec.certificate)},
              {"hosts", hosts},
              {"coordinates", coords},
              {"stats",
               {{"m", rec.stats.m},
                {"m_prime", rec.stats.m_prime},
                {"t", rec.stats.t},
                {"f", rec.stats.f},
                {"density", to_string(rec.stats.density)}}}};
}

std::string format_number(double v) { return fmt::format("{:.10g}", v); }

std::string bound_csv_header() { return "name,n,m,k,alpha,value\n"; }

std::string bound_csv_row(const BoundReport& r) {
  auto field = [&](const char* key) -> std::string {
    auto it = r.params.find(key);
    return it == r.params.end() ? std::string() : format_number(it->second);
  };
  std::string value = "NA";
  if (r.value) {
    value = r.integral ? std::to_string(static_cast<std::int64_t>(*r.value)) : format_number(*r.value);
  }
  return r.name + "," + field("n") + "," + field("m") + "," + field("k") + "," + field("alpha") +
         "," + value + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  out << contents;
}

}  // namespace uncrossed

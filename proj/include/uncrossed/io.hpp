#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uncrossed/bounds.hpp"
#include "uncrossed/construction.hpp"
#include "uncrossed/embedding.hpp"
#include "uncrossed/oracle.hpp"

namespace uncrossed {

using nlohmann::json;

// {"n": n, "order": [[...], ...]}, each order starting at the pinned
// (smallest) neighbour.
json to_json(const RotationSystem& r);
RotationSystem rotation_from_json(const json& j);

// {"n", "uncrossed": [[u,v],...], "rotation": [[...],...],
//  "assignment": {"u-v": face_index}}. The graph is recovered as the union
// of the uncrossed and assigned edges. Throws MalformedCertificate on bad
// structure.
json to_json(const SubdrawingCertificate& c);
SubdrawingCertificate certificate_from_json(const json& j);

// {"name", "value", "applicable", "reason", "params": {...}}; integral
// values are written as JSON integers, a missing value as null.
json to_json(const BoundReport& r);

json to_json(const ConstructionRecord& rec);

std::string edge_key(const Edge& e);  // "u-v"
json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const json& j);

// '.' decimal point, 10 significant digits.
std::string format_number(double v);
// CSV header and rows "name,n,m,k,alpha,value"; blank fields when unused,
// "NA" for a value whose bound is not applicable.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace uncrossed

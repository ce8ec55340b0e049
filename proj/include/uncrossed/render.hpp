#pragma once

#include <string>
#include <vector>

#include "uncrossed/construction.hpp"
#include "uncrossed/io.hpp"
#include "uncrossed/oracle.hpp"

namespace uncrossed {

// Straight-line positions plus which edges are solid (uncrossed) and which
// dotted (crossed).
struct Drawing {
  std::vector<Point> coordinates;
  std::vector<Edge> solid;
  std::vector<Edge> dotted;
  // Dotted edges go around the outside of the unit circle (construction
  // records) instead of bulging off the chord.
  bool dotted_outside = false;
};

// Tutte embedding of a plane rotation system: the vertices of face 0 are
// pinned to a regular polygon on the unit circle and every other vertex
// sits at the mean of its neighbours.
std::vector<Point> barycentric_layout(const RotationSystem& r);

// Polyline from a to b (both on the unit circle) along the shorter angular
// direction, strictly outside the circle except at the endpoints.
std::vector<Point> chord_arc(const Point& a, const Point& b, int samples = 32);

Drawing drawing_from_record(const ConstructionRecord& rec);
Drawing drawing_from_certificate(const SubdrawingCertificate& c);

std::string render_svg(const Drawing& d);

// Accepts a construction record, a bare certificate, or an oracle result
// (its "witness" or first "cover" member). Throws RenderError when a
// record lacks coordinates for some vertex.
std::string render_json(const json& j);

}  // namespace uncrossed

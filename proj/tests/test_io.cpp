#include <doctest.h>

#include "uncrossed/error.hpp"
#include "uncrossed/io.hpp"
#include "uncrossed/render.hpp"

using namespace uncrossed;

TEST_CASE("rotation JSON round trip") {
  const RotationSystem r(make_complete(4), {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  const json j = to_json(r);
  CHECK(j["n"] == 4);
  CHECK(rotation_from_json(j) == r);
}

TEST_CASE("certificate JSON round trip") {
  const HResult h = exact_h(make_complete(5));
  const json j = to_json(h.witness);
  CHECK(j["assignment"].size() == 2);
  const SubdrawingCertificate back = certificate_from_json(j);
  CHECK(back.graph == make_complete(5));
  CHECK(back.uncrossed == h.witness.uncrossed);
  CHECK(back.rotation == h.witness.rotation);
  CHECK(back.face_assignment == h.witness.face_assignment);
  CHECK(verify_certificate(back));

  json broken = j;
  broken["assignment"] = {{"1-x", 0}};
  CHECK_THROWS_AS(certificate_from_json(broken), MalformedCertificate);
  CHECK_THROWS_AS(certificate_from_json(json::object()), MalformedCertificate);
}

TEST_CASE("bound report JSON") {
  const json a = to_json(report_unc_lower_new(8, 28));
  CHECK(a["value"].is_number_integer());
  CHECK(a["value"] == 2);
  CHECK(a["applicable"] == true);
  const json b = to_json(report_exact_unc_complete(4));
  CHECK(b["value"].is_null());
  CHECK(b["applicable"] == false);
  CHECK_FALSE(b["reason"].get<std::string>().empty());
}

TEST_CASE("CSV rows") {
  CHECK(bound_csv_header() == "name,n,m,k,alpha,value\n");
  CHECK(bound_csv_row(report_unc_lower_new(8, 28)) == "unc_lower_new,8,28,,,2\n");
  const BoundReport na = report_exact_unc_complete(4);
  CHECK(bound_csv_row(na).ends_with(",NA\n"));
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(16.516685226) == "16.51668523");
}

TEST_CASE("construction record JSON") {
  const ConstructionRecord rec = build_construction(Rational(3, 10), 20);
  const json j = to_json(rec);
  CHECK(j["parameters"]["x"] == 14);
  CHECK(j["parameters"]["epsilon"] == "3/10");
  CHECK(j["edges"].size() == 120);
  CHECK(j["crossed_edges"].size() == 77);
  CHECK(j["coordinates"].size() == 20);
  CHECK(j["stats"]["m_prime"] == 43);
  CHECK(verify_certificate(certificate_from_json(j["certificate"])));
}

TEST_CASE("rendering") {
  const ConstructionRecord rec = build_construction(Rational(3, 10), 20);
  const std::string svg = render_svg(drawing_from_record(rec));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(render_json(to_json(rec)) == svg);

  for (int s = 1; s < 31; ++s) {
    const auto arc = chord_arc(rec.coordinates[1], rec.coordinates[7]);
    CHECK(arc[s].norm() > 1.0);
  }

  const HResult h = exact_h(make_complete(5));
  const auto pts = barycentric_layout(h.witness.rotation);
  CHECK(pts.size() == 5);
  CHECK_NOTHROW(render_json(to_json(h.witness)));

  json no_coords = to_json(rec);
  no_coords["coordinates"].erase(no_coords["coordinates"].size() - 1);
  CHECK_THROWS_AS(render_json(no_coords), RenderError);
}

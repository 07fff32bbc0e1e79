#include "a2b/json_io.hpp"

#include <fstream>

namespace a2b {

namespace {

Vec<3> vec_from_json(const Json& j, const Field& field, const char* what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + " must be an array of three scalars", 0);
  Vec<3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_string() && !j[i].is_number_integer())
      throw ParseError(std::string(what) + " entries must be strings or integers", i);
    const std::string text = j[i].is_string() ? j[i].get<std::string>() : std::to_string(j[i].get<long>());
    v[i] = parse_scalar(text, field).in(field);
  }
  return v;
}

Json vec_json(const Vec<3>& v) { return Json::array({v[0].str(), v[1].str(), v[2].str()}); }

Json rationals(const std::array<Rational, 3>& a) {
  return Json::array({a[0].get_str(), a[1].get_str(), a[2].get_str()});
}

}  // namespace

Flag flag_from_json(const Json& j, const Field& field) {
  if (!j.is_object() || !j.contains("point") || !j.contains("line"))
    throw ParseError("a flag needs \"point\" and \"line\"", 0);
  return Flag(ProjPoint(vec_from_json(j["point"], field, "point")),
              ProjLine(vec_from_json(j["line"], field, "line")));
}

FlagTriple triple_from_json(const Json& j, const Field& field) {
  if (!j.is_object() || !j.contains("flags")) throw ParseError("expected an object with \"flags\"", 0);
  if (j.contains("field") && Field::parse(j["field"].get<std::string>()) != field)
    throw FieldMismatch("input declares field " + j["field"].get<std::string>() + " but " + field.str() +
                        " was selected");
  const Json& f = j["flags"];
  if (!f.is_array() || f.size() != 3) throw ParseError("\"flags\" must hold three flags", 0);
  return FlagTriple(flag_from_json(f[0], field), flag_from_json(f[1], field), flag_from_json(f[2], field));
}

FlagTriple read_triple_file(const std::string& path, const Field& field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON in ") + path, e.byte);
  }
  return triple_from_json(j, field);
}

Json to_json(const Val& v) { return v.str(); }

Json to_json(const Flag& f) { return {{"point", vec_json(f.point().coords())}, {"line", vec_json(f.line().coords())}}; }

Json to_json(const FlagTriple& t) { return {{"flags", Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])})}}; }

Json to_json(const FlatVector& v) {
  auto a = v.simple_root_coords();
  return {{"coords", rationals(v.coords())}, {"simple_roots", Json::array({a[0].get_str(), a[1].get_str()})}};
}

Json to_json(const BuildingPoint& x) {
  Json basis = Json::array();
  for (std::size_t j = 0; j < 3; ++j) basis.push_back(vec_json(x.basis_vector(j)));
  return {{"basis", basis}, {"weights", rationals(x.weights())}};
}

Json to_json(const TripleVal& z) { return Json::array({z[0].str(), z[1].str(), z[2].str()}); }

Json to_json(const Cell& c) {
  Json bounds = Json::array();
  for (const auto& b : c.bounds) {
    bounds.push_back({{"root", "alpha" + std::to_string(b.root + 1)},
                      {"relation", b.at_least ? ">=" : "<="},
                      {"bound", b.bound.get_str()},
                      {"anchor", b.anchor}});
  }
  return {{"label", c.label}, {"other", to_string(c.other)}, {"empty", c.empty}, {"bounds", bounds}};
}

Json to_json(const PartitionReport& r) {
  return {{"flat", to_string(r.flat)}, {"grid_points", r.grid_points}, {"failures", r.failures}, {"ok", r.ok()}};
}

Json to_json(const TripleType& t) {
  Json j{{"type", type_name(t)}};
  if (const auto* tp = std::get_if<Tripod>(&t)) {
    j["x"] = to_json(tp->x);
    j["x_star"] = to_json(tp->x_star);
  } else if (const auto* tr = std::get_if<FlatTriangle>(&t)) {
    j["vertices"] = Json::array({to_json(tr->x[0]), to_json(tr->x[1]), to_json(tr->x[2])});
  } else {
    j["x"] = to_json(std::get<CoincidentPoint>(t).x);
  }
  return j;
}

Json invariants_json(const TripleAnalysis& a) {
  return {{"Z", to_json(a.z())}, {"triple_ratio", a.triple_ratio().str()}, {"ray_class", ray_class(a.z())}};
}

Json report_json(const TripleReport& r) {
  Json special;
  for (std::size_t k = 0; k < 3; ++k) {
    special["y" + std::to_string(k + 1)] = to_json(r.special.y[k]);
    special["y" + std::to_string(k + 1) + "*"] = to_json(r.special.y_star[k]);
  }
  return {{"Z", to_json(r.z)},
          {"triple_ratio", r.triple_ratio.str()},
          {"ray_class", r.ray_class},
          {"classification", to_json(r.type)},
          {"special_points", special},
          {"verification", r.verification},
          {"all_pass", all_pass(r.verification)}};
}

Json cells_json(const TripleAnalysis& a) {
  Json out;
  for (FlatId id : kAllFlats) {
    Json cells = Json::array();
    for (const auto& c : a.sector_descriptions(id)) cells.push_back(to_json(c));
    Json special;
    for (const auto& [name, c] : a.special_on(id)) special[name] = to_json(c);
    out[to_string(id)] = {{"cells", cells}, {"special_points", special}};
  }
  return out;
}

Json two_points_json(const TwoPointsReport& r) {
  return {{"vector", to_json(r.vector)}, {"predicted_roots", rationals(r.predicted)}, {"checks", r.checks}};
}

Json point_line_json(const PointLineReport& r) {
  return {{"vector", to_json(r.vector)},
          {"z_minus", Json::array({r.z_minus[0].get_str(), r.z_minus[1].get_str()})},
          {"z_plus", Json::array({r.z_plus[0].get_str(), r.z_plus[1].get_str()})},
          {"checks", r.checks}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace a2b

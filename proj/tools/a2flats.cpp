// a2flats: invariants, classification, verification and figures for
// triples of flags over Q_p or Q(t).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "a2b/figure.hpp"
#include "a2b/json_io.hpp"

namespace {

using namespace a2b;

constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

struct Options {
  std::string field = "qt";
  std::string input;
  std::string remark_z;
  std::string margin;
  std::string step;
  std::string out = ".";
  std::vector<std::string> flats;
  bool suite = false;
  int samples = 100;
};

Rational parse_rational(const std::string& text, const char* what) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string("bad rational for ") + what + ": '" + text + "'", 0);
  }
}

FlagTriple load_triple(const Options& o, const Field& field) {
  if (!o.input.empty()) return read_triple_file(o.input, field);
  if (!o.remark_z.empty()) return remark_triple(parse_scalar(o.remark_z, field).in(field));
  throw ParseError("one of --input or --remark-z is required", 0);
}

GridSpec grid_for(const TripleAnalysis& a, const Options& o) {
  GridSpec g = a.default_grid();
  if (!o.margin.empty()) g.margin = parse_rational(o.margin, "--margin");
  if (!o.step.empty()) g.step = parse_rational(o.step, "--step");
  return g;
}

int emit(const Json& j, bool ok) {
  std::cout << dump(j);
  return ok ? 0 : kExitVerification;
}

int cmd_invariants(const Options& o) {
  const Field f = Field::parse(o.field);
  return emit(invariants_json(TripleAnalysis(load_triple(o, f))), true);
}

int cmd_classify(const Options& o) {
  const Field f = Field::parse(o.field);
  TripleAnalysis a(load_triple(o, f));
  const GridSpec g = grid_for(a, o);
  TripleReport r{a.z(), a.triple_ratio(), ray_class(a.z()), a.type(), a.special(), a.verify_theorems(g)};
  Json j = report_json(r);
  j["cells"] = cells_json(a);
  return emit(j, all_pass(r.verification));
}

int cmd_verify_suite(const Options& o) {
  const Field f = Field::parse(o.field);
  Json j;
  bool ok = true;

  Verification identities = check_cross_ratio_identities(f, kCrossRatioSeed, o.samples);
  ok = ok && all_pass(identities);
  j["cross_ratio_identities"] = {{"seed", kCrossRatioSeed}, {"samples", o.samples}, {"checks", identities}};

  auto run = [&](const char* name, std::uint64_t seed, auto&& one) {
    Sampler s(f, seed);
    int passed = 0;
    Json failures = Json::array();
    for (int n = 0; n < o.samples; ++n) {
      Verification v = one(s);
      if (all_pass(v)) {
        ++passed;
      } else {
        ok = false;
        if (failures.size() < 5) failures.push_back({{"sample", n}, {"checks", v}});
      }
    }
    j[name] = {{"seed", seed}, {"samples", o.samples}, {"passed", passed}, {"failures", failures}};
  };
  run("two_points_projection", kTwoPointsSeed, [](Sampler& s) {
    auto i = random_two_points_instance(s);
    return check_two_points_projection(i.p1, i.p2, i.p3, i.p, i.q).checks;
  });
  run("point_line_projection", kPointLineSeed, [](Sampler& s) {
    auto i = random_point_line_instance(s);
    return check_point_line_projection(i.f_minus, i.f_plus, i.p, i.d).checks;
  });
  j["field"] = f.str();
  j["all_pass"] = ok;
  return emit(j, ok);
}

int cmd_verify(const Options& o) {
  if (o.suite) return cmd_verify_suite(o);
  const Field f = Field::parse(o.field);
  TripleAnalysis a(load_triple(o, f));
  const GridSpec g = grid_for(a, o);
  Verification v = a.verify_theorems(g);
  Json j = invariants_json(a);
  j["type"] = type_name(a.type());
  j["grid"] = {{"margin", g.margin.get_str()}, {"step", g.step.get_str()}};
  Json partitions = Json::array();
  for (FlatId id : kAllFlats) partitions.push_back(to_json(a.partition_check(id, g)));
  j["partitions"] = partitions;
  j["verification"] = v;
  j["all_pass"] = all_pass(v);
  return emit(j, all_pass(v));
}

int cmd_figure(const Options& o) {
  const Field f = Field::parse(o.field);
  TripleAnalysis a(load_triple(o, f));
  const GridSpec g = grid_for(a, o);
  std::vector<FlatId> ids;
  for (const auto& name : o.flats) ids.push_back(parse_flat_id(name));
  if (ids.empty()) ids.assign(kAllFlats.begin(), kAllFlats.end());

  std::filesystem::create_directories(o.out);
  Json written = Json::array();
  for (FlatId id : ids) {
    const auto path = std::filesystem::path(o.out) / (std::string(to_string(id)) + ".svg");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string(), 0);
    out << flat_figure_svg(a, id, g);
    written.push_back(path.string());
  }
  return emit({{"type", type_name(a.type())}, {"figures", written}}, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triples of flags in the A2 Euclidean building of PGL3 over Q_p or Q(t)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_triple) {
    sub->add_option("--field", o.field, "qp:<prime> or qt")->capture_default_str();
    if (needs_triple) {
      auto* in = sub->add_option("--input", o.input, "JSON file with {\"flags\": [...]}");
      auto* rz = sub->add_option("--remark-z", o.remark_z, "build the normalized triple with triple ratio Z");
      in->excludes(rz);
    }
    sub->add_option("--margin", o.margin, "grid margin (rational), default 2 + |Z1| + |Z2|");
    sub->add_option("--step", o.step, "grid step (rational), default 1/2");
  };

  auto* inv = app.add_subcommand("invariants", "triple ratio and geometric triple ratio");
  common(inv, true);
  auto* cls = app.add_subcommand("classify", "tripod / flat triangle classification with its verification");
  common(cls, true);
  auto* ver = app.add_subcommand("verify", "verify the theorems on a triple, or run the randomized suites");
  common(ver, true);
  ver->add_flag("--suite", o.suite, "run the seeded projection and cross ratio suites instead");
  ver->add_option("--samples", o.samples, "instances per suite")->capture_default_str();
  auto* fig = app.add_subcommand("figure", "SVG picture of each flat and its cells");
  common(fig, true);
  fig->add_option("--out", o.out, "output directory")->capture_default_str();
  fig->add_option("--flat", o.flats, "A12, A23, A31, Ap or AD (repeatable); default all five");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (inv->parsed()) return cmd_invariants(o);
    if (cls->parsed()) return cmd_classify(o);
    if (ver->parsed()) return cmd_verify(o);
    return cmd_figure(o);
  } catch (const InternalError& e) {
    std::cerr << "a2flats: internal error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "a2flats: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "a2flats: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "a2flats: " << e.what() << "\n";
    return kExitInput;
  }
}

#include "cli.hpp"

#include "toricbb/bb_flow.hpp"
#include "toricbb/constructions.hpp"
#include "toricbb/criteria.hpp"
#include "toricbb/errors.hpp"
#include "toricbb/factorization.hpp"
#include "toricbb/flow_graph.hpp"
#include "toricbb/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <variant>

namespace toricbb::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalConsistencyError("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

json key_json(const std::vector<std::size_t>& key) { return json(key); }

struct Options {
  std::string output;

  // construct
  bool list = false;
  std::string name;
  int n = 0;
  std::string polytope;
  int dilate = 0;
  std::optional<long long> blowup;
  bool pop = false;
  std::string times;

  std::string v;
  std::string sign = "both";
  std::string what;
  std::string face;
  int bound = 0;
  std::string goal;
  long long origin = 0;
  std::string graph;
};

// Every report carries the command, a digest of its normalized inputs, the
// artifact version and the command-specific verdicts.
json report(const std::string& command, const json& inputs, json verdicts) {
  json digest_source = {{"command", command}, {"inputs", inputs}};
  return json{{"command", command},
              {"inputDigest", sha256_hex(digest_source.dump())},
              {"version", kVersion},
              {"verdicts", std::move(verdicts)}};
}

Polytope load_polytope(const std::string& path) { return polytope_from_json(read_json(path)); }

Cocharacter load_cocharacter(const Polytope& p, const std::string& text) {
  if (text.empty()) throw InputError("missing --v");
  Cocharacter c{parse_int_list(text)};
  if (c.v.size() != static_cast<std::size_t>(p.dim())) {
    throw InputError("cocharacter has " + std::to_string(c.v.size()) + " coordinates but the polytope has dimension " +
                     std::to_string(p.dim()));
  }
  return c;
}

json flow_header(const Flow& flow) {
  return json{{"cocharacter", vector_to_json(flow.cocharacter().v)}, {"orderKey", key_json(flow.order_key())}};
}

// ---------------------------------------------------------------------------

json cmd_construct(const Options& o) {
  if (o.list) {
    json fixtures = json::array();
    for (FixtureId id : all_fixtures()) fixtures.push_back(std::string(fixture_name(id)));
    return json{{"fixtures", fixtures},
                {"generators", {"simplex", "cube", "permutahedron"}},
                {"operations", {"dilate", "blowup", "pop", "times"}}};
  }
  if (o.name.empty() == o.polytope.empty()) throw InputError("construct needs exactly one of --name or --polytope");

  std::optional<Polytope> p;
  if (!o.polytope.empty()) {
    p = load_polytope(o.polytope);
  } else if (auto id = fixture_from_name(o.name)) {
    p = fixture(*id);
  } else if (o.name == "simplex" || o.name == "cube" || o.name == "permutahedron") {
    if (o.n < 1) throw InputError("--name " + o.name + " needs --n at least 1");
    p = o.name == "simplex" ? simplex(o.n) : o.name == "cube" ? cube(o.n) : permutahedron(o.n);
  } else {
    throw InputError("unknown construction '" + o.name + "' (see construct --list)");
  }

  int dilation = 1;
  bool scaled = false;
  if (o.dilate != 0) p = dilate(*p, o.dilate);
  if (o.blowup) {
    if (*o.blowup < 0) throw InputError("--blowup vertex index must be non-negative");
    Blowup b = blowup_at_vertex(*p, static_cast<VertexIndex>(*o.blowup));
    p = std::move(b.polytope);
    dilation *= b.dilation;
    scaled = true;
  }
  if (o.pop) {
    Blowup b = pop(*p);
    p = std::move(b.polytope);
    dilation *= b.dilation;
    scaled = true;
  }
  if (!o.times.empty()) p = product(*p, load_polytope(o.times));

  json out = polytope_to_json(*p);
  if (scaled) out["dilation"] = dilation;
  return out;
}

json cmd_facets(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  json facets = json::array();
  for (const auto& f : p.facets()) {
    facets.push_back(
        {{"normal", vector_to_json(f.normal)}, {"offset", integer_to_json(f.offset)}, {"vertices", vertex_set_to_json(f.vertices)}});
  }
  json edges = json::array();
  for (auto [a, b] : p.edges()) edges.push_back({a, b});
  json two_faces = json::array();
  for (FaceIndex i : p.faces_of_dim(2)) {
    two_faces.push_back({{"vertices", vertex_set_to_json(p.face(i).vertices)},
                         {"shape", to_string(classify_two_face(p, p.face(i)))}});
  }
  json verdicts{{"dim", p.dim()},       {"numVertices", p.num_vertices()}, {"faceCounts", p.face_counts()},
                {"simple", is_simple(p)}, {"smooth", is_smooth(p)},        {"facets", facets},
                {"edges", edges},         {"twoFaces", two_faces}};
  return report("facets", {{"polytope", polytope_to_json(p)}}, std::move(verdicts));
}

json cmd_bb(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  Flow flow(p, load_cocharacter(p, o.v));
  std::string sign = o.sign == "+" ? "plus" : o.sign == "-" ? "minus" : o.sign;
  BBDecomposition bb = decompose(flow);
  json vertices = json::array();
  for (VertexIndex q = 0; q < p.num_vertices(); ++q) {
    json row{{"vertex", q}, {"coords", vector_to_json(p.vertex(q))}, {"value", integer_to_json(flow.value(q))}};
    if (sign != "minus") {
      row["posFace"] = vertex_set_to_json(p.face(bb.pos_face[q]).vertices);
      row["posDim"] = bb.dims[q].pos;
    }
    if (sign != "plus") {
      row["negFace"] = vertex_set_to_json(p.face(bb.neg_face[q]).vertices);
      row["negDim"] = bb.dims[q].neg;
    }
    vertices.push_back(std::move(row));
  }
  json verdicts = flow_header(flow);
  verdicts["sign"] = sign;
  verdicts["filteringOrder"] = filtering_order(flow);
  verdicts["vertices"] = std::move(vertices);
  return report("bb", {{"polytope", polytope_to_json(p)}, {"v", vector_to_json(flow.cocharacter().v)}, {"sign", sign}},
                std::move(verdicts));
}

json cmd_graph(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  Flow flow(p, load_cocharacter(p, o.v));
  OrbitGraph g = orbit_graph(flow);
  json witnesses = json::array();
  for (const auto& e : g.edges) {
    witnesses.push_back({{"edge", {e.src, e.dst}}, {"face", vertex_set_to_json(p.face(e.witness).vertices)}});
  }
  json verdicts = flow_header(flow);
  verdicts["graph"] = g.to_flow_graph().to_json();
  verdicts["witnesses"] = std::move(witnesses);
  verdicts["filteringOrder"] = filtering_order(flow);
  return report("graph", {{"polytope", polytope_to_json(p)}, {"v", vector_to_json(flow.cocharacter().v)}},
                std::move(verdicts));
}

json strat_json(const Polytope& p, const StratVerdict& s) {
  static const char* names[] = {"faceContainment", "dimMonotone", "dimSum", "twoFaces"};
  json routes;
  for (std::size_t r = 0; r < 4; ++r) routes[names[r]] = s.routes[r];
  json violations = json::array();
  for (const auto& v : s.violations) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FaceContainmentViolation>) {
            violations.push_back({{"route", "faceContainment"}, {"p", x.p}, {"q", x.q}});
          } else if constexpr (std::is_same_v<T, DimMonotoneViolation>) {
            violations.push_back(
                {{"route", "dimMonotone"}, {"p", x.p}, {"q", x.q}, {"posDimP", x.pos_p}, {"posDimQ", x.pos_q}});
          } else if constexpr (std::is_same_v<T, DimSumViolation>) {
            violations.push_back(
                {{"route", "dimSum"}, {"p", x.p}, {"q", x.q}, {"negDimP", x.neg_p}, {"posDimQ", x.pos_q}});
          } else {
            violations.push_back({{"route", "twoFaces"},
                                  {"face", vertex_set_to_json(p.face(x.face).vertices)},
                                  {"orientation", to_string(x.orientation)}});
          }
        },
        v);
  }
  return json{{"isStratification", s.is_stratification}, {"routes", routes}, {"violations", violations}};
}

json witness_face_json(const Flow& flow, FaceIndex f) {
  const Polytope& p = flow.polytope();
  Extrema ex = face_extrema(flow, p.face(f));
  return json{{"face", vertex_set_to_json(p.face(f).vertices)}, {"up", ex.up}, {"down", ex.down}};
}

json cmd_check(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  Flow flow(p, load_cocharacter(p, o.v));
  json verdicts = flow_header(flow);
  verdicts["what"] = o.what;
  json inputs{{"polytope", polytope_to_json(p)}, {"v", vector_to_json(flow.cocharacter().v)}, {"what", o.what}};

  if (!o.face.empty() && o.what != "convex") throw InputError("--face only applies to --what convex");
  if (o.what == "stratify") {
    verdicts.update(strat_json(p, stratification_check(flow)));
  } else if (o.what == "convex") {
    if (o.face.empty()) {
      OrbitClosureVerdict v = orbit_closure_convexity_all(flow);
      verdicts["scope"] = "allFaces";
      verdicts["isConvex"] = v.all_convex;
      if (v.witness) {
        verdicts["face"] = vertex_set_to_json(p.face(v.witness->first).vertices);
        verdicts["witness"] = witness_face_json(flow, v.witness->second);
      }
    } else {
      VertexSet vs;
      for (const auto& x : parse_int_list(o.face)) {
        if (x < 0 || x >= p.num_vertices()) throw InputError("--face vertex index out of range");
        vs.push_back(static_cast<VertexIndex>(x));
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      auto fi = p.find_face(vs);
      if (!fi) throw InputError("--face vertices do not form a face of the polytope");
      ConvexityVerdict v = gm_convexity(flow, p.face(*fi));
      inputs["face"] = vertex_set_to_json(vs);
      verdicts["scope"] = "face";
      verdicts["face"] = vertex_set_to_json(vs);
      verdicts["isConvex"] = v.is_convex;
      if (v.witness) verdicts["witness"] = witness_face_json(flow, *v.witness);
    }
  } else if (o.what == "wellrounded") {
    WellRoundedVerdict v = well_rounded(flow);
    json violations = json::array();
    for (const auto& x : v.violations) {
      violations.push_back({{"vertex", x.vertex},
                            {"cell", vertex_set_to_json(p.face(x.cell).vertices)},
                            {"witness", witness_face_json(flow, x.witness)}});
    }
    verdicts["wellRounded"] = v.well_rounded;
    verdicts["violations"] = std::move(violations);
  } else {
    WellRounded3dVerdict v = well_rounded_3d(flow);
    json facets = json::array();
    for (FaceIndex f : v.violating_facets) facets.push_back(witness_face_json(flow, f));
    verdicts["wellRounded"] = v.well_rounded;
    verdicts["violatingFacets"] = std::move(facets);
  }
  return report("check", inputs, std::move(verdicts));
}

json cmd_classify(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  PolytopeClass c = classify_stratification(p);
  json census = json::object();
  for (auto shape : {TwoFaceShape::Triangle, TwoFaceShape::Parallelogram, TwoFaceShape::OtherQuadrilateral,
                     TwoFaceShape::CentrallySymmetricPolygon, TwoFaceShape::Other}) {
    auto it = c.census.find(shape);
    census[to_string(shape)] = it == c.census.end() ? 0 : it->second;
  }
  json verdicts{{"simple", is_simple(p)},
                {"smooth", is_smooth(p)},
                {"twoFaceCensus", census},
                {"existentiallyStratified", c.existentially_stratified},
                {"universallyStratified", c.universally_stratified},
                {"zonotopeLike", c.zonotope_like}};
  json inputs{{"polytope", polytope_to_json(p)}};
  if (o.bound > 0) {
    StratifyingWitness w = stratifying_witness(p, o.bound);
    inputs["bound"] = o.bound;
    verdicts["stratifyingWitness"] = {{"bound", w.bound},
                                      {"found", w.witness.has_value()},
                                      {"cocharacter", w.witness ? vector_to_json(w.witness->v) : json(nullptr)},
                                      {"absenceCertified", w.absence_certified}};
  }
  return report("classify", inputs, std::move(verdicts));
}

json cmd_sweep(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  if (o.bound < 1) throw InputError("--bound must be at least 1");
  SweepGoal goal = o.goal == "wellrounded"      ? SweepGoal::WellRounded
                   : o.goal == "notwellrounded" ? SweepGoal::NotWellRounded
                                                : SweepGoal::Stratifies;
  SweepReport r = cocharacter_sweep(p, o.bound, goal);
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"orderKey", key_json(c.order_key)},
                       {"representative", vector_to_json(c.representative)},
                       {"members", c.members},
                       {"satisfies", c.satisfies}});
  }
  json verdicts{{"bound", r.bound},           {"goal", to_string(r.goal)},      {"enumerated", r.enumerated},
                {"admissible", r.admissible}, {"classCount", r.classes.size()}, {"satisfying", r.satisfying},
                {"classes", classes}};
  return report("sweep", {{"polytope", polytope_to_json(p)}, {"bound", o.bound}, {"goal", to_string(goal)}},
                std::move(verdicts));
}

json cmd_factorize(const Options& o) {
  Polytope p = load_polytope(o.polytope);
  if (o.origin < 0 || static_cast<std::size_t>(o.origin) >= p.num_vertices()) {
    throw InputError("--origin vertex index out of range");
  }
  SimplexFactorization f = affine_factorize(p, static_cast<VertexIndex>(o.origin));
  if (f.status == FactorizationStatus::AffineProductOnly && is_smooth(p)) f = unimodular_normalize(p, f);
  json factors = json::array();
  for (const auto& factor : f.factors) {
    json row{{"face", vertex_set_to_json(factor.face)}, {"dim", factor.dim}};
    if (!factor.coords.empty()) {
      json coords = json::array();
      for (const auto& x : factor.coords) coords.push_back(vector_to_json(x));
      row["coords"] = std::move(coords);
    }
    factors.push_back(std::move(row));
  }
  json verdicts{{"status", to_string(f.status)}, {"origin", f.origin}, {"factorDims", f.factor_dims()}, {"factors", factors}};
  if (f.frame) {
    json matrix = json::array();
    for (const auto& row : f.frame->matrix) matrix.push_back(vector_to_json(row));
    verdicts["frame"] = {{"matrix", matrix}, {"translation", vector_to_json(f.frame->translation)}};
  }
  return report("factorize", {{"polytope", polytope_to_json(p)}, {"origin", o.origin}}, std::move(verdicts));
}

json cmd_graph_check(const Options& o) {
  json raw = read_json(o.graph);
  // A `graph` report is accepted as well as a bare graph.
  if (raw.is_object() && raw.contains("verdicts") && raw["verdicts"].is_object() && raw["verdicts"].contains("graph")) {
    raw = raw["verdicts"]["graph"];
  }
  FlowGraph g = FlowGraph::from_json(raw);
  auto ids = [&](const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(g.nodes[i].id);
    return out;
  };
  Filterability f = is_filterable(g);
  NumericStrat s = numeric_strat_condition(g);
  json strat_violations = json::array();
  for (auto [a, b] : s.violations) strat_violations.push_back({g.nodes[a].id, g.nodes[b].id});

  CellCensus census;
  try {
    census = cells_per_dimension(g);
  } catch (const InternalConsistencyError& e) {
    // A hand-written filterable graph without cells in some dimension cannot
    // be the flow graph of a smooth projective variety.
    throw InputError(std::string("graph is filterable but inconsistent: ") + e.what());
  }
  json cells = json::object();
  for (auto [d, n] : census.counts) cells[std::to_string(d)] = n;

  json verdicts{{"filterable", f.filterable},
                {"numericStrat", {{"holds", s.holds}, {"violations", strat_violations}}},
                {"cellsPerDimension", cells},
                {"everyDimensionPresent", census.every_dimension_present}};
  if (f.filterable) {
    verdicts["topologicalOrder"] = ids(f.order);
  } else {
    verdicts["cycle"] = ids(f.cycle);
  }
  return report("graph-check", {{"graph", g.to_json()}}, std::move(verdicts));
}

void emit(const json& j, const Options& o, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file || !(file << text)) throw InputError("cannot write " + o.output);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bialynicki-Birula decompositions of smooth toric varieties from lattice polytopes", "toricbb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "Write the report to FILE"); };
  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("--polytope", o.polytope, "Polytope JSON file ('-' for stdin)")->required();
  };
  auto add_v = [&](CLI::App* sub) {
    sub->add_option("--v", o.v, "Cocharacter as comma-separated integers")->required();
  };

  auto* construct = app.add_subcommand("construct", "Emit a generated or fixture polytope as JSON");
  construct->add_flag("--list", o.list, "List available constructions");
  construct->add_option("--name", o.name, "Fixture or generator name");
  construct->add_option("--n", o.n, "Size parameter for simplex, cube, permutahedron");
  construct->add_option("--polytope", o.polytope, "Start from a polytope JSON file");
  construct->add_option("--dilate", o.dilate, "Dilate by K")->check(CLI::PositiveNumber);
  construct->add_option("--blowup", o.blowup, "Truncate the given vertex");
  construct->add_flag("--pop", o.pop, "Truncate every vertex");
  construct->add_option("--times", o.times, "Multiply by the polytope in FILE");
  add_output(construct);

  auto* facets = app.add_subcommand("facets", "Facets, edges, 2-faces, simplicity and smoothness");
  add_polytope(facets);
  add_output(facets);

  auto* bb = app.add_subcommand("bb", "BB faces and cell dimensions for a cocharacter");
  add_polytope(bb);
  add_v(bb);
  bb->add_option("--sign", o.sign, "plus, minus or both")
      ->check(CLI::IsMember({"plus", "minus", "both", "+", "-"}));
  add_output(bb);

  auto* graph = app.add_subcommand("graph", "Orbit graph for a cocharacter");
  add_polytope(graph);
  add_v(graph);
  add_output(graph);

  auto* check = app.add_subcommand("check", "Stratification and convexity criteria");
  add_polytope(check);
  add_v(check);
  check->add_option("--what", o.what, "stratify, convex, wellrounded or wellrounded3d")
      ->required()
      ->check(CLI::IsMember({"stratify", "convex", "wellrounded", "wellrounded3d"}));
  check->add_option("--face", o.face, "Vertex indices of the face E for --what convex");
  add_output(check);

  auto* classify = app.add_subcommand("classify", "2-face census and stratification classes");
  add_polytope(classify);
  classify->add_option("--bound", o.bound, "Also search for a stratifying cocharacter up to this bound");
  add_output(classify);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a goal over all cocharacter behaviours within a bound");
  add_polytope(sweep);
  sweep->add_option("--bound", o.bound, "Coordinate bound")->required();
  sweep->add_option("--goal", o.goal, "wellrounded, notwellrounded or stratifies")
      ->required()
      ->check(CLI::IsMember({"wellrounded", "notwellrounded", "stratifies"}));
  add_output(sweep);

  auto* factorize = app.add_subcommand("factorize", "Product-of-simplices recognition");
  add_polytope(factorize);
  factorize->add_option("--origin", o.origin, "Origin vertex index");
  add_output(factorize);

  auto* graph_check = app.add_subcommand("graph-check", "Filterability and numeric tests on a flow graph");
  graph_check->add_option("--graph", o.graph, "Flow graph JSON file ('-' for stdin)")->required();
  add_output(graph_check);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    json result;
    if (construct->parsed()) {
      result = cmd_construct(o);
    } else if (facets->parsed()) {
      result = cmd_facets(o);
    } else if (bb->parsed()) {
      result = cmd_bb(o);
    } else if (graph->parsed()) {
      result = cmd_graph(o);
    } else if (check->parsed()) {
      result = cmd_check(o);
    } else if (classify->parsed()) {
      result = cmd_classify(o);
    } else if (sweep->parsed()) {
      result = cmd_sweep(o);
    } else if (factorize->parsed()) {
      result = cmd_factorize(o);
    } else {
      result = cmd_graph_check(o);
    }
    emit(result, o, out);
    return kExitOk;
  } catch (const InadmissibleCocharacter& e) {
    err << "error: inadmissible cocharacter: " << e.what() << " (edge " << e.edge().first << "-" << e.edge().second
        << ")\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace toricbb::cli

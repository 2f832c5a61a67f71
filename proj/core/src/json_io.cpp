#include "cone_runge/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "cone_runge/errors.hpp"

namespace cone_runge {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const json& member(const json& obj, const char* key, const std::string& at) {
  if (!obj.is_object()) throw SchemaError(at, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(at, key), "missing field");
  return *it;
}

double number(const json& v, const std::string& at) {
  if (!v.is_number()) throw SchemaError(at, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(at, "expected a finite number");
  return d;
}

std::vector<double> numbers(const json& v, std::size_t n, const std::string& at) {
  if (!v.is_array() || v.size() != n) throw SchemaError(at, "expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(number(v[i], child(at, i)));
  return out;
}

Shape shape_from_json(const json& doc, const std::string& at) {
  int found = 0;
  Shape shape;
  if (doc.contains("disk")) {
    ++found;
    const std::string p = child(at, "disk");
    const json& d = doc["disk"];
    const auto c = numbers(member(d, "c", p), 2, child(p, "c"));
    const double r = number(member(d, "r", p), child(p, "r"));
    if (!(r > 0)) throw SchemaError(child(p, "r"), "radius must be positive");
    shape = Disk{c[0], c[1], r};
  }
  if (doc.contains("rect")) {
    ++found;
    const std::string p = child(at, "rect");
    const json& d = doc["rect"];
    const auto lo = numbers(member(d, "min", p), 2, child(p, "min"));
    const auto hi = numbers(member(d, "max", p), 2, child(p, "max"));
    if (!(lo[0] < hi[0]) || !(lo[1] < hi[1])) throw SchemaError(child(p, "max"), "max must exceed min componentwise");
    shape = Rect{lo[0], lo[1], hi[0], hi[1]};
  }
  if (doc.contains("halfplane")) {
    ++found;
    const std::string p = child(at, "halfplane");
    const json& d = doc["halfplane"];
    const auto n = numbers(member(d, "n", p), 2, child(p, "n"));
    const double c = number(member(d, "c", p), child(p, "c"));
    if (n[0] == 0.0 && n[1] == 0.0) throw SchemaError(child(p, "n"), "normal must be non-zero");
    shape = HalfPlane{n[0], n[1], c};
  }
  if (found != 1) throw SchemaError(at, "expected exactly one of disk, rect, halfplane");
  return shape;
}

json pair_of(double x, double y) { return json::array({x, y}); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string yes_no(const json& v) { return v.get<bool>() ? "yes" : "no"; }

std::string betti_text(const json& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < b["b"].size(); ++k) os << (k ? "," : "") << b["b"][k].get<int>();
  os << ")  h2=" << b["h2"].get<int>() << " h4=" << b["h4"].get<int>();
  return os.str();
}

std::string point_text(const json& p) {
  if (p.is_null()) return "-";
  return "(" + fmt(p[0].get<double>()) + ", " + fmt(p[1].get<double>()) + ")";
}

}  // namespace

DomainSpec domain_spec_from_json(const json& doc, const std::string& at) {
  if (!doc.is_object()) throw SchemaError(at, "expected an object");
  DomainSpec spec;
  const auto w = numbers(member(doc, "window", at), 4, child(at, "window"));
  spec.window = {w[0], w[1], w[2], w[3]};
  const json& res = member(doc, "resolution", at);
  if (!res.is_number_integer() || res.get<long long>() < 1) {
    throw SchemaError(child(at, "resolution"), "expected a positive integer");
  }
  spec.resolution = static_cast<int>(res.get<long long>());
  const json& shapes = member(doc, "shapes", at);
  if (!shapes.is_array()) throw SchemaError(child(at, "shapes"), "expected an array");
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const std::string p = child(child(at, "shapes"), i);
    const json& s = shapes[i];
    const json& op = member(s, "op", p);
    ShapeEntry e;
    if (op == "add") {
      e.op = ShapeOp::kAdd;
    } else if (op == "subtract") {
      e.op = ShapeOp::kSubtract;
    } else {
      throw SchemaError(child(p, "op"), "expected \"add\" or \"subtract\"");
    }
    e.shape = shape_from_json(s, p);
    spec.shapes.push_back(e);
  }
  return spec;
}

SlicePolynomial slice_polynomial_from_json(const json& doc, const std::string& at) {
  const json& c = member(doc, "coeffs", at);
  const std::string p = child(at, "coeffs");
  if (!c.is_array() || c.empty()) throw SchemaError(p, "expected a non-empty array of coefficients");
  std::vector<Cl3Element> coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto v = numbers(c[k], kCl3Dim, child(p, k));
    Cl3Element a;
    for (std::size_t i = 0; i < kCl3Dim; ++i) a[i] = v[i];
    coeffs.push_back(a);
  }
  return SlicePolynomial(std::move(coeffs));
}

SliceFunction slice_function_from_json(const json& doc, const std::string& at) {
  if (!doc.is_object()) throw SchemaError(at, "expected an object");
  if (doc.contains("coeffs")) return SliceFunction(StemFunction(slice_polynomial_from_json(doc, at)));
  const SlicePolynomial a = slice_polynomial_from_json(member(doc, "A", at), child(at, "A"));
  const SlicePolynomial b = slice_polynomial_from_json(member(doc, "B", at), child(at, "B"));
  return SliceFunction(StemFunction(RationalSliceFunction::build(a, b)));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const DomainSpec& spec) {
  json shapes = json::array();
  for (const ShapeEntry& e : spec.shapes) {
    json s;
    s["op"] = e.op == ShapeOp::kAdd ? "add" : "subtract";
    if (const Disk* d = std::get_if<Disk>(&e.shape)) {
      s["disk"] = {{"c", pair_of(d->cx, d->cy)}, {"r", d->r}};
    } else if (const Rect* r = std::get_if<Rect>(&e.shape)) {
      s["rect"] = {{"min", pair_of(r->x0, r->y0)}, {"max", pair_of(r->x1, r->y1)}};
    } else {
      const HalfPlane& h = std::get<HalfPlane>(e.shape);
      s["halfplane"] = {{"n", pair_of(h.nx, h.ny)}, {"c", h.c}};
    }
    shapes.push_back(s);
  }
  const Window& w = spec.window;
  return {{"window", {w.xmin, w.xmax, w.ymin, w.ymax}}, {"resolution", spec.resolution}, {"shapes", shapes}};
}

json to_json(const SlicePolynomial& p) {
  json c = json::array();
  for (const Cl3Element& a : p.coeffs()) c.push_back(a.coeffs());
  return {{"coeffs", c}};
}

json to_json(const RationalSliceFunction& r) { return {{"A", to_json(r.a())}, {"B", to_json(r.b())}}; }

json to_json(const PlanePoint& p) { return pair_of(p.x, p.y); }

json to_json(const TopoSummary& s) {
  json holes = json::array();
  for (const ComplementComponent& c : s.bounded_complement_components) {
    holes.push_back({{"representative", to_json(c.representative)}, {"cells", c.cells}, {"meets_real", c.meets_real}});
  }
  return {{"b0_D", s.b0_D},
          {"b1_D", s.b1_D},
          {"b0_Dreal", s.b0_Dreal},
          {"b0_Dplus", s.b0_Dplus},
          {"k_offreal", s.k_offreal},
          {"euler_D", s.euler_D},
          {"b1_Dplus", s.b1_Dplus},
          {"bounded_complement_components", holes}};
}

json to_json(const OmegaBetti& b) {
  json comps = json::array();
  for (const BettiContribution& c : b.components) {
    comps.push_back({{"meets_real", c.meets_real}, {"b1_plane", c.b1_plane}, {"r", c.r}, {"b", c.b}});
  }
  return {{"b", b.b},
          {"h2", b.h2_rank},
          {"h4", b.h4_rank},
          {"components", comps},
          {"exact_sequences_agree", b.exact_sequences_agree}};
}

json to_json(const Verdict& v) {
  return {{"holds", v.holds}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}, {"detail", v.detail}};
}

json to_json(const RungeReport& r) {
  json witnesses = json::array();
  for (const PlanePoint& p : r.witnesses()) witnesses.push_back(to_json(p));
  return {{"runge_pair", r.runge_pair()},
          {"cond3", to_json(r.cond3)},
          {"cond5", to_json(r.cond5)},
          {"cond6", to_json(r.cond6)},
          {"cond4_derived", r.cond4_derived},
          {"betti_D", to_json(r.betti_D)},
          {"betti_D1", to_json(r.betti_D1)},
          {"consistency", r.consistency},
          {"witnesses", witnesses}};
}

json to_json(const ApproxResult& r) {
  return {{"degree", r.degree}, {"sup_error", r.sup_error}, {"stem_error", r.stem_error}};
}

json to_json(const ExperimentRecord& r) {
  json rows = json::array();
  for (const ApproxResult& a : r.rows) rows.push_back(to_json(a));
  json poles = json::array();
  for (const Pole& p : r.poles) poles.push_back({{"alpha", p.alpha}, {"beta", p.beta}});
  return {{"rows", rows},
          {"poles", poles},
          {"pole_at_infinity", true},
          {"noise_floor", r.noise_floor},
          {"verdict", std::string(to_string(r.verdict))},
          {"runge_pair", r.report.runge_pair()},
          {"agrees_with_runge_verdict", r.agrees_with_report()}};
}

json to_json(const SelftestReport& r) {
  json checks = json::array();
  for (const SelftestCheck& c : r.checks) {
    json j = {{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    checks.push_back(j);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json analysis_json(const DomainGrid& grid) {
  const TopoSummary s = summarize(grid);
  return {{"topology", to_json(s)}, {"betti", to_json(betti_omega(s))}, {"warnings", grid.warnings()}};
}

std::string render_analysis_text(const json& doc) {
  const json& t = doc["topology"];
  std::ostringstream os;
  os << "b0(D)        " << t["b0_D"].get<int>() << "\n"
     << "b1(D)        " << t["b1_D"].get<int>() << "\n"
     << "b0(D_R)      " << t["b0_Dreal"].get<int>() << "\n"
     << "b0(D+)       " << t["b0_Dplus"].get<int>() << "\n"
     << "k (off R)    " << t["k_offreal"].get<int>() << "\n"
     << "betti        " << betti_text(doc["betti"]) << "\n";
  for (const json& h : t["bounded_complement_components"]) {
    os << "hole         " << point_text(h["representative"]) << "  cells=" << h["cells"].get<std::size_t>() << "\n";
  }
  for (const json& w : doc["warnings"]) os << "warning      " << w.get<std::string>() << "\n";
  return os.str();
}

std::string render_pair_text(const json& doc) {
  std::ostringstream os;
  os << "condition  holds  witness\n";
  for (const char* key : {"cond3", "cond5", "cond6"}) {
    const json& c = doc[key];
    os << std::left << std::setw(11) << key << std::setw(7) << yes_no(c["holds"]) << point_text(c["witness"])
       << "\n";
  }
  os << std::left << std::setw(11) << "cond4" << std::setw(7) << yes_no(doc["cond4_derived"]) << "(from cond3)\n";
  os << "runge pair " << yes_no(doc["runge_pair"]) << "\n"
     << "betti D    " << betti_text(doc["betti_D"]) << "\n"
     << "betti D1   " << betti_text(doc["betti_D1"]) << "\n";
  return os.str();
}

std::string render_experiment_text(const json& doc) {
  std::ostringstream os;
  os << "degree  sup_error     stem_error\n";
  for (const json& r : doc["rows"]) {
    os << std::left << std::setw(8) << r["degree"].get<int>() << std::setw(14) << fmt(r["sup_error"].get<double>())
       << fmt(r["stem_error"].get<double>()) << "\n";
  }
  os << "verdict     " << doc["verdict"].get<std::string>() << "\n"
     << "noise floor " << fmt(doc["noise_floor"].get<double>()) << "\n"
     << "runge pair  " << yes_no(doc["runge_pair"]) << "\n"
     << "agreement   " << yes_no(doc["agrees_with_runge_verdict"]) << "\n";
  return os.str();
}

std::string render_selftest_text(const json& doc) {
  std::ostringstream os;
  for (const json& c : doc["checks"]) {
    os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
       << c["cases"].get<long>() << " cases)";
    if (c.contains("counterexample")) os << ": " << c["counterexample"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

}  // namespace cone_runge

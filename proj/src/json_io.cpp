#include "qhyp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qhyp/error.hpp"

namespace qhyp::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
  return j;
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.t, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidArgument("quaternion must be a 4-array");
  return {number(j[0], "quaternion"), number(j[1], "quaternion"), number(j[2], "quaternion"),
          number(j[3], "quaternion")};
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

QMatrix matrix_from_json(const json& j) {
  const int rows = integer(field(j, "rows"), "rows");
  const int cols = integer(field(j, "cols"), "cols");
  if (rows <= 0 || cols <= 0) throw InvalidArgument("matrix shape must be positive");
  const json& e = array(field(j, "entries"), "entries");
  if (e.size() != static_cast<std::size_t>(rows)) throw InvalidArgument("entries do not match rows");
  QMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const json& row = array(e[r], "matrix row");
    if (row.size() != m.cols()) throw InvalidArgument("matrix row does not match cols");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = quaternion_from_json(row[c]);
  }
  return m;
}

json points_to_json(std::span<const LiftVector> points) {
  if (points.empty()) throw InvalidArgument("no points to write");
  json pts = json::array();
  for (const LiftVector& p : points) {
    json v = json::array();
    for (const Quaternion& q : p.coords()) v.push_back(to_json(q));
    pts.push_back(std::move(v));
  }
  return {{"n", points.front().form().n()}, {"form", to_string(points.front().form().tag())}, {"points", pts}};
}

std::vector<LiftVector> points_from_json(const json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 1) throw InvalidArgument("n must be positive");
  const json& f = field(j, "form");
  if (!f.is_string()) throw InvalidArgument("form must be a string");
  const HermitianForm form(parse_form_tag(f.get<std::string>()), n);
  std::vector<LiftVector> out;
  for (const json& p : array(field(j, "points"), "points")) {
    const json& a = array(p, "point");
    if (a.size() != form.dim()) throw InvalidArgument("point has the wrong number of coordinates");
    QVector v;
    for (const json& q : a) v.push_back(quaternion_from_json(q));
    out.emplace_back(form, std::move(v));
  }
  if (out.empty()) throw InvalidArgument("points list is empty");
  return out;
}

json gram_to_json(const SpecialGram& g) {
  json out = to_json(g.matrix().matrix());
  return {{"m", g.m()}, {"form", to_string(g.form())}, {"entries", out["entries"]}};
}

SpecialGram gram_from_json(const json& j) {
  const int m = integer(field(j, "m"), "m");
  FormTag tag = FormTag::H1;
  if (j.contains("form")) {
    if (!j["form"].is_string()) throw InvalidArgument("form must be a string");
    tag = parse_form_tag(j["form"].get<std::string>());
  }
  const QMatrix g = matrix_from_json({{"rows", m}, {"cols", m}, {"entries", field(j, "entries")}});
  return SpecialGram(HermitianQMatrix(g), tag);
}

json to_json(const ModuliCoordinates& w) {
  json x2 = json::array();
  json x3 = json::array();
  json xk = json::array();
  for (const CrossRatio& x : w.x2) x2.push_back(to_json(x.value));
  for (const CrossRatio& x : w.x3) x3.push_back(to_json(x.value));
  for (const CrossRatio& x : w.xk) xk.push_back(json::array({x.k, x.j, to_json(x.value)}));
  return {{"m", w.m},   {"n", w.n},   {"x2", x2},           {"x3", x3},
          {"xk", xk},   {"u", to_json(w.u.quaternion())}, {"cartan", w.cartan}, {"r", w.r}};
}

ModuliCoordinates coordinates_from_json(const json& j) {
  ModuliCoordinates w;
  w.m = integer(field(j, "m"), "m");
  w.n = integer(field(j, "n"), "n");
  w.cartan = number(field(j, "cartan"), "cartan");
  w.r = number(field(j, "r"), "r");
  const Quaternion u = quaternion_from_json(field(j, "u"));
  if (std::abs(u.t) > 1e-8) throw InvalidArgument("u must be a pure quaternion");
  w.u = UnitPureQuaternion(u.x, u.y, u.z);
  int j_label = 4;
  for (const json& q : array(field(j, "x2"), "x2")) w.x2.push_back({CrossRatio::Kind::X2, 2, j_label++, quaternion_from_json(q)});
  j_label = 4;
  for (const json& q : array(field(j, "x3"), "x3")) w.x3.push_back({CrossRatio::Kind::X3, 3, j_label++, quaternion_from_json(q)});
  for (const json& e : array(field(j, "xk"), "xk")) {
    if (!e.is_array() || e.size() != 3) throw InvalidArgument("xk entries are [k, j, q]");
    w.xk.push_back({CrossRatio::Kind::Xk, integer(e[0], "k"), integer(e[1], "j"), quaternion_from_json(e[2])});
  }
  w.validate();
  return w;
}

json to_json(const MembershipReport& r) {
  json v = json::array();
  for (const MinorViolation& mv : r.violations) {
    v.push_back({{"I", mv.set.indices}, {"value", mv.value}, {"need", mv.need == Requirement::zero ? "=0" : "≥0"}});
  }
  return {{"member", r.member}, {"rank", r.rank}, {"violations", v}};
}

json generators_to_json(std::span<const QMatrix> generators) {
  json g = json::array();
  for (const QMatrix& m : generators) g.push_back(to_json(m));
  return {{"k", generators.size()}, {"generators", g}};
}

std::vector<QMatrix> generators_from_json(const json& j) {
  const int k = integer(field(j, "k"), "k");
  std::vector<QMatrix> out;
  for (const json& m : array(field(j, "generators"), "generators")) out.push_back(matrix_from_json(m));
  if (k < 1 || out.size() != static_cast<std::size_t>(k)) throw InvalidArgument("k does not match generators");
  return out;
}

json to_json(const RepCoordinates& rc) {
  json out;
  out["coordinates"] = rc.points_part ? to_json(*rc.points_part) : json(nullptr);
  out["radii"] = rc.radii;
  out["angles"] = rc.angles;
  out["points"] = points_to_json(rc.points)["points"];
  return out;
}

json to_json(const LoxodromicClass& c) { return {{"r", c.r}, {"beta", c.beta}, {"theta", c.theta}}; }

LoxodromicClass class_from_json(const json& j) {
  LoxodromicClass c{number(field(j, "r"), "r"), number(field(j, "beta"), "beta"),
                    number(field(j, "theta"), "theta")};
  c.validate();
  return c;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qhyp::io

// qhyp: batch front-end for boundary configurations in quaternionic
// hyperbolic space. JSON in, JSON out.
//
// Exit codes: 0 success / member / congruent, 1 negative verdict,
// 2 input error, 3 mathematical precondition violated.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "qhyp/error.hpp"
#include "qhyp/json_io.hpp"
#include "qhyp/loxodromic.hpp"
#include "qhyp/moduli.hpp"

namespace {

using qhyp::io::json;

struct Config {
  qhyp::Tolerances tol;
  std::uint64_t seed = 1;
  std::string form = "H1";
  int max_m = 12;
  std::string output;
};

void emit(const Config& cfg, const json& j) {
  if (cfg.output.empty()) std::cout << j.dump(2) << '\n';
  else qhyp::io::write_file(cfg.output, j);
}

void check_m(const Config& cfg, std::size_t m) {
  if (m > static_cast<std::size_t>(cfg.max_m)) throw qhyp::CapExceeded("m exceeds --max-m");
}

int cmd_invariants(const Config& cfg, const std::string& path) {
  const auto points = qhyp::io::points_from_json(qhyp::io::read_file(path));
  check_m(cfg, points.size());
  emit(cfg, qhyp::io::to_json(qhyp::coordinates(points, cfg.tol)));
  return 0;
}

int cmd_check(const Config& cfg, const std::string& path, int n) {
  const auto w = qhyp::io::coordinates_from_json(qhyp::io::read_file(path));
  check_m(cfg, static_cast<std::size_t>(w.m));
  const auto report = qhyp::is_member(w, n, cfg.tol);
  emit(cfg, qhyp::io::to_json(report));
  return report.member ? 0 : 1;
}

int cmd_reconstruct(const Config& cfg, const std::string& path, int n) {
  const auto w = qhyp::io::coordinates_from_json(qhyp::io::read_file(path));
  check_m(cfg, static_cast<std::size_t>(w.m));
  const auto report = qhyp::is_member(w, n, cfg.tol);
  if (!report.member) {
    std::cerr << "qhyp: coordinates are not in the moduli space\n";
    std::cout << qhyp::io::to_json(report).dump(2) << '\n';
    return 1;
  }
  emit(cfg, qhyp::io::points_to_json(qhyp::realize(w, n, qhyp::parse_form_tag(cfg.form), cfg.tol)));
  return 0;
}

int cmd_congruent(const Config& cfg, const std::string& a, const std::string& b, const std::string& mode) {
  const auto pa = qhyp::io::points_from_json(qhyp::io::read_file(a));
  const auto pb = qhyp::io::points_from_json(qhyp::io::read_file(b));
  check_m(cfg, std::max(pa.size(), pb.size()));
  const auto m = mode == "gauge" ? qhyp::CongruenceMode::gauge : qhyp::CongruenceMode::strict;
  const auto r = qhyp::congruence_test(pa, pb, m, 1e-6, cfg.tol);
  emit(cfg, {{"congruent", r.congruent}, {"discrepancy", r.discrepancy}, {"mode", mode}});
  return r.congruent ? 0 : 1;
}

int cmd_random(const Config& cfg, int n, int m) {
  check_m(cfg, static_cast<std::size_t>(m));
  emit(cfg, qhyp::io::points_to_json(qhyp::random_boundary_tuple(n, m, cfg.seed, qhyp::parse_form_tag(cfg.form))));
  return 0;
}

int cmd_moore_det(const Config& cfg, const std::string& path) {
  const qhyp::HermitianQMatrix h(qhyp::io::matrix_from_json(qhyp::io::read_file(path)), cfg.tol.tol);
  if (h.size() > qhyp::kMaxMooreOrder) throw qhyp::CapExceeded("matrix exceeds the Moore determinant cap");
  const double d = qhyp::moore_det(h);
  if (cfg.output.empty()) std::cout << d << '\n';
  else qhyp::io::write_file(cfg.output, {{"moore_det", d}});
  return 0;
}

int cmd_lox_build(const Config& cfg, const qhyp::LoxodromicClass& c) {
  emit(cfg, qhyp::io::to_json(qhyp::normal_form(c)));
  return 0;
}

int cmd_lox_classify(const Config& cfg, const std::string& path) {
  const qhyp::QMatrix m = qhyp::io::matrix_from_json(qhyp::io::read_file(path));
  const auto cls = qhyp::classify(m, cfg.tol);
  if (!cls) {
    emit(cfg, {{"loxodromic", false}});
    return 1;
  }
  const auto fp = qhyp::fixed_points(m, cfg.tol);
  json out = qhyp::io::to_json(*cls);
  out["loxodromic"] = true;
  out["attracting"] = qhyp::io::points_to_json(std::vector{fp.attracting})["points"][0];
  out["repelling"] = qhyp::io::points_to_json(std::vector{fp.repelling})["points"][0];
  emit(cfg, out);
  return 0;
}

int cmd_lox_rep(const Config& cfg, const std::string& path) {
  const auto gens = qhyp::io::generators_from_json(qhyp::io::read_file(path));
  check_m(cfg, 2 * gens.size());
  emit(cfg, qhyp::io::to_json(qhyp::rep_coordinates(gens, cfg.tol)));
  return 0;
}

int cmd_lox_random(const Config& cfg, int k) {
  qhyp::Rng rng(cfg.seed);
  std::vector<qhyp::QMatrix> gens;
  for (int i = 0; i < k; ++i) gens.push_back(qhyp::random_loxodromic(rng));
  emit(cfg, qhyp::io::generators_to_json(gens));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary configurations in quaternionic hyperbolic space"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--tol", cfg.tol.tol, "Inequality tolerance")->capture_default_str();
  app.add_option("--tol-eq", cfg.tol.tol_eq, "Equality tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--form", cfg.form, "Hermitian form H1..H4")->capture_default_str();
  app.add_option("--max-m", cfg.max_m, "Largest accepted tuple size")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Output file (default stdout)");

  std::string in_a;
  std::string in_b;
  int n = 2;
  int m = 4;
  int k = 2;
  std::string mode = "strict";
  qhyp::LoxodromicClass cls;

  auto* inv = app.add_subcommand("invariants", "Coordinates of a points file");
  inv->add_option("points", in_a)->required();
  auto* chk = app.add_subcommand("check", "Membership of a coordinates file");
  chk->add_option("coordinates", in_a)->required();
  chk->add_option("--n", n)->required();
  auto* rec = app.add_subcommand("reconstruct", "Points realizing a coordinates file");
  rec->add_option("coordinates", in_a)->required();
  rec->add_option("--n", n)->required();
  auto* con = app.add_subcommand("congruent", "Congruence of two points files");
  con->add_option("a", in_a)->required();
  con->add_option("b", in_b)->required();
  con->add_option("--mode", mode)->check(CLI::IsMember({"strict", "gauge"}))->capture_default_str();
  auto* rnd = app.add_subcommand("random", "Random boundary tuple");
  rnd->add_option("--n", n)->required();
  rnd->add_option("--m", m)->required();
  auto* mdet = app.add_subcommand("moore-det", "Moore determinant of a Hermitian matrix file");
  mdet->add_option("matrix", in_a)->required();

  auto* lox = app.add_subcommand("lox", "Loxodromic elements of Sp(2,1)");
  lox->require_subcommand(1);
  lox->fallthrough();
  auto* lbuild = lox->add_subcommand("build", "Normal form matrix");
  lbuild->add_option("--r", cls.r)->required();
  lbuild->add_option("--beta", cls.beta)->capture_default_str();
  lbuild->add_option("--theta", cls.theta)->capture_default_str();
  auto* lclass = lox->add_subcommand("classify", "Class and fixed points of a matrix file");
  lclass->add_option("matrix", in_a)->required();
  auto* lrep = lox->add_subcommand("rep-coords", "Coordinates of a generators file");
  lrep->add_option("generators", in_a)->required();
  auto* lrand = lox->add_subcommand("random", "Random conjugated normal forms");
  lrand->add_option("--k", k)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.tol.validate();
    if (*inv) return cmd_invariants(cfg, in_a);
    if (*chk) return cmd_check(cfg, in_a, n);
    if (*rec) return cmd_reconstruct(cfg, in_a, n);
    if (*con) return cmd_congruent(cfg, in_a, in_b, mode);
    if (*rnd) return cmd_random(cfg, n, m);
    if (*mdet) return cmd_moore_det(cfg, in_a);
    if (*lbuild) return cmd_lox_build(cfg, cls);
    if (*lclass) return cmd_lox_classify(cfg, in_a);
    if (*lrep) return cmd_lox_rep(cfg, in_a);
    if (*lrand) return cmd_lox_random(cfg, k);
  } catch (const qhyp::InvalidArgument& e) {
    std::cerr << "qhyp: " << e.what() << '\n';
    return 2;
  } catch (const qhyp::CapExceeded& e) {
    std::cerr << "qhyp: " << e.what() << '\n';
    return 2;
  } catch (const qhyp::ZeroDivisor& e) {
    std::cerr << "qhyp: " << e.what() << '\n';
    return 2;
  } catch (const qhyp::Error& e) {
    std::cerr << "qhyp: " << e.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "qhyp: malformed input: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

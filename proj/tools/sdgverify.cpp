// sdgverify: runs the verification checks, evaluates JSON scenes, and draws
// planar scenes.  Exit status 0 when everything behaved as expected, 1 on a
// check failure, 2 on usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdg/contact.hpp"
#include "sdg/errors.hpp"
#include "sdg/render.hpp"
#include "sdg/scene.hpp"
#include "sdg/suite.hpp"
#include "sdg/synthetic.hpp"

namespace {

using sdg::scene::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// "builtin:NAME" selects a built-in scene, anything else is a file path.
sdg::scene::Scene open_scene(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return sdg::scene::load(sdg::scene::builtin(ref.substr(prefix.size())));
  return sdg::scene::load_file(ref);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sdg::UsageError("cannot write " + path);
  out << text;
}

int run_axioms(const sdg::suite::Options& opts, const std::string& report, bool timing) {
  auto records = sdg::suite::run_suite(opts);
  std::ostringstream os;
  for (const auto& r : records) os << sdg::suite::to_json(r, timing).dump() << '\n';
  Json sum = sdg::suite::summary(records);
  os << sum.dump() << '\n';
  write_text(report, os.str());
  if (!report.empty() && report != "-") std::cout << sum.dump() << '\n';
  return sdg::suite::all_as_expected(records) ? kPass : kFail;
}

int run_scene(const std::string& ref, const std::vector<std::string>& checks) {
  auto s = open_scene(ref);
  auto results = sdg::scene::evaluate(s, checks);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << sdg::scene::to_json(r).dump() << '\n';
    ok = ok && r.passed();
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed() ? 1 : 0;
  Json sum;
  sum["summary"] = true;
  sum["scene"] = s.name;
  sum["claims"] = results.size();
  sum["pass"] = passed;
  sum["fail"] = results.size() - passed;
  sum["ok"] = ok;
  std::cout << sum.dump() << '\n';
  return ok ? kPass : kFail;
}

const sdg::Point& named_point(const sdg::scene::Scene& s, const std::string& name) {
  const sdg::Point* p = s.find_point(name);
  if (p == nullptr) throw sdg::UsageError("unknown point: " + name);
  return *p;
}

int run_collinear(const std::string& ref, const std::vector<std::string>& triple) {
  auto s = open_scene(ref);
  const auto &a = named_point(s, triple[0]), &b = named_point(s, triple[1]), &c = named_point(s, triple[2]);
  Json out;
  out["triangle_equality"] = sdg::triangle_equality(a, b, c);
  for (auto w : sdg::kAllConditions) {
    bool holds = sdg::collinear_condition(s.table, a, b, c, w);
    out["conditions"][std::string(sdg::to_string(w))] = holds;
  }
  out["collinear"] = sdg::collinear(s.table, a, b, c);
  out["aligned"] = sdg::aligned(s.table, a, b, c);
  std::cout << out.dump() << '\n';
  return out["collinear"].get<bool>() ? kPass : kFail;
}

int run_op(const std::string& op, const std::string& ref, const std::vector<std::string>& names,
           const std::string& param) {
  auto s = open_scene(ref);
  auto need = [&](std::size_t n) {
    if (names.size() != n) throw sdg::UsageError(op + " takes " + std::to_string(n) + " point names");
  };
  auto scalar = [&] {
    if (param.empty()) throw sdg::UsageError(op + " needs --s");
    return sdg::NilElement(sdg::Scalar::parse(param));
  };
  Json out;
  out["op"] = op;
  if (op == "extrapolate" || op == "interpolate") {
    need(2);
    const auto &a = named_point(s, names[0]), &b = named_point(s, names[1]);
    auto r = op == "extrapolate" ? sdg::extrapolate(a, b, scalar()) : sdg::interpolate(a, b, scalar());
    out["result"] = r.str(&s.table);
  } else if (op == "dist") {
    need(2);
    out["result"] = sdg::dist(named_point(s, names[0]), named_point(s, names[1])).str(&s.table);
  } else if (op == "apart" || op == "neighbour") {
    need(2);
    const auto &a = named_point(s, names[0]), &b = named_point(s, names[1]);
    out["result"] = op == "apart" ? sdg::apart(a, b) : sdg::neighbour(a, b);
  } else {
    throw sdg::UsageError("unknown op: " + op + " (extrapolate, interpolate, dist, apart, neighbour)");
  }
  std::cout << out.dump() << '\n';
  return kPass;
}

int run_huygens(const std::string& r_text, const std::string& s_text, std::size_t m, bool csv) {
  using sdg::NilElement;
  sdg::BatchTable table;
  NilElement r(sdg::Scalar::parse(r_text)), s(sdg::Scalar::parse(s_text));
  sdg::Point a = sdg::Point::zero(2);
  auto rec = sdg::huygens_sphere_envelope(table, a, r, s, sdg::clock_samples(a, r, m),
                                          sdg::clock_samples(a, r + s, m));
  if (csv) {
    std::cout << "kind,k,b,c,forward,converse,unique\n";
    auto rows = [&](const char* kind, const std::vector<sdg::HuygensSample>& xs) {
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& x = xs[k];
        std::cout << kind << ',' << k << ",\"" << x.b.str() << "\",\"" << x.c.str() << "\"," << x.forward << ','
                  << x.converse << ',' << x.unique << '\n';
      }
    };
    rows("inner", rec.samples);
    rows("outer", rec.converse_samples);
  } else {
    Json out;
    out["r"] = r.str();
    out["s"] = s.str();
    out["m"] = m;
    out["checks"] = rec.checks();
    out["ok"] = rec.all_pass();
    std::cout << out.dump() << '\n';
  }
  return rec.all_pass() ? kPass : kFail;
}

std::vector<std::string> split_list(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    std::stringstream ss(x);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of synthetic differential geometry in the coordinate model"};
  app.require_subcommand(1);

  auto* axioms = app.add_subcommand("axioms", "run the randomized check suite");
  std::vector<std::size_t> dims{2, 3};
  sdg::suite::Options opts;
  std::vector<std::string> checks;
  std::string report;
  bool no_timing = false;
  axioms->add_option("--dim", dims, "dimensions (comma separated, 2..6)")->delimiter(',');
  axioms->add_option("--trials", opts.trials, "random configurations per check")->capture_default_str();
  axioms->add_option("--seed", opts.seed, "seed; determines every configuration")->capture_default_str();
  axioms->add_option("--checks", checks, "check ids (comma separated); default all")->delimiter(',');
  axioms->add_option("--jobs", opts.jobs, "worker threads")->capture_default_str();
  axioms->add_option("--report", report, "write JSON lines here instead of stdout");
  axioms->add_flag("--no-timing", no_timing, "omit time_ms for byte-identical reports");

  auto* scene = app.add_subcommand("scene", "evaluate scene claims");
  scene->require_subcommand(1);
  auto* scene_run = scene->add_subcommand("run", "evaluate the claims of a scene");
  std::string scene_ref;
  std::vector<std::string> claim_filter;
  scene_run->add_option("scene", scene_ref, "scene file or builtin:NAME")->required();
  scene_run->add_option("--checks", claim_filter, "claim types to evaluate")->delimiter(',');

  auto* plot = app.add_subcommand("plot", "draw a planar scene as SVG");
  std::string plot_ref = "builtin:basic", svg_out;
  sdg::render::Options ropts;
  plot->add_option("scene", plot_ref, "scene file or builtin:NAME")->capture_default_str();
  plot->add_option("--svg", svg_out, "output file (default stdout)");
  plot->add_option("--figure", ropts.figures, "figures to draw (default all)")->delimiter(',');
  plot->add_option("--nil-display", ropts.nil_display, "value drawn for each generator")->capture_default_str();

  auto* list = app.add_subcommand("list-checks", "list registered check ids");

  auto* check = app.add_subcommand("check", "evaluate one predicate on a scene");
  check->require_subcommand(1);
  auto* check_col = check->add_subcommand("collinear", "triangle equality, the six conditions and [abc]");
  std::string check_ref;
  std::vector<std::string> triple;
  check_col->add_option("--scene", check_ref, "scene file or builtin:NAME")->required();
  check_col->add_option("--triple", triple, "three point names")->required()->expected(3);

  auto* op = app.add_subcommand("op", "apply an operation to named scene points");
  std::string op_name, op_ref, op_param;
  std::vector<std::string> op_points;
  op->add_option("name", op_name, "extrapolate, interpolate, dist, apart, neighbour")->required();
  op->add_option("points", op_points, "point names");
  op->add_option("--scene", op_ref, "scene file or builtin:NAME")->required();
  op->add_option("--s", op_param, "distance parameter, e.g. 5/2");

  auto* huygens = app.add_subcommand("huygens", "wavefront of a circle at clock samples");
  std::string h_r = "2", h_s = "1";
  std::size_t h_m = 12;
  bool h_csv = false;
  huygens->add_option("--r", h_r, "inner radius")->capture_default_str();
  huygens->add_option("--s", h_s, "offset distance")->capture_default_str();
  huygens->add_option("--m", h_m, "number of samples (1, 2, 3, 4, 6, 8, 12)")->capture_default_str();
  huygens->add_flag("--csv", h_csv, "one row per sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*axioms) {
      opts.dims = dims;
      opts.checks = split_list(checks);
      return run_axioms(opts, report, !no_timing);
    }
    if (*scene_run) return run_scene(scene_ref, split_list(claim_filter));
    if (*plot) {
      auto s = open_scene(plot_ref);
      write_text(svg_out, sdg::render::svg(s, ropts));
      return kPass;
    }
    if (*list) {
      for (const auto& c : sdg::suite::registry()) std::cout << c.id << "\t" << c.claim << '\n';
      return kPass;
    }
    if (*check_col) return run_collinear(check_ref, triple);
    if (*op) return run_op(op_name, op_ref, op_points, op_param);
    if (*huygens) return run_huygens(h_r, h_s, h_m, h_csv);
  } catch (const sdg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const sdg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

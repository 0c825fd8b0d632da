#include "zc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "zc/chow.hpp"
#include "zc/cubic.hpp"
#include "zc/descent.hpp"
#include "zc/points.hpp"

namespace zc::cli {

namespace {

struct Config {
  std::string surface;
  std::string out;
  std::string x, y, point, line, axis;
  std::string cert;
  std::string seeds;
  std::string goal;
  std::string u, v, w;
  std::string degrees = "6,6,6";
  long height = 10;
  long ceiling = 200;
  long degree = 0;
  long threshold = 0;
  long samples = 0;
  long cap = 400;
  int rounds = 1;
  int dS = 3;
  bool with_x4 = false;
  bool abstract = false;
  bool even_only = false;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

CubicForm load_surface(const Config& c) {
  if (c.surface.empty() || c.surface == "fermat") return CubicForm::fermat();
  return CubicForm::from_json(read_json_file(c.surface));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

// A point as JSON ("[...]") or comma-separated rationals.
ProjPoint parse_point(const std::string& text, const std::string& flag) {
  if (text.empty()) throw InvalidInput(flag + " is required");
  if (text.front() == '[') {
    try {
      return ProjPoint::from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw InvalidInput(flag + ": " + e.what());
    }
  }
  auto parts = split(text, ',');
  if (parts.size() != 4) throw InvalidInput(flag + " needs 4 coordinates");
  return ProjPoint::rational({Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
                              Rational::parse(parts[3])});
}

// A line as JSON ("[[...], [...]]") or two points separated by ';'.
Line parse_line(const std::string& text, const std::string& flag) {
  if (text.empty()) throw InvalidInput(flag + " is required");
  if (text.front() == '[') {
    try {
      return Line::from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw InvalidInput(flag + ": " + e.what());
    }
  }
  auto parts = split(text, ';');
  if (parts.size() != 2) throw InvalidInput(flag + " needs two points separated by ';'");
  return Line(parse_point(parts[0], flag), parse_point(parts[1], flag));
}

std::array<Rational, 2> parse_pair(const std::string& text, const std::string& flag) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidInput(flag + " needs two comma-separated rationals");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

Json point_json(const ProjPoint& p) {
  if (p.is_rational()) return PointRecord::make(p, PointSource::Enumerated).point.to_json();
  return p.normalized().to_json();
}

Json pair_json(const std::array<Rational, 2>& p) { return Json::array({p[0].str(), p[1].str()}); }

descent::DelPezzo surface_of(const Config& c) {
  descent::DelPezzo S{c.dS, c.with_x4};
  S.validate();
  return S;
}

std::string goal_of(const Config& c, const descent::DelPezzo& S) {
  return c.goal.empty() ? descent::default_goal_name(S) : c.goal;
}

// Each command returns its JSON and whether the run counts as a success.
struct Outcome {
  Json json;
  bool ok = true;
};

Outcome geom_third_point(const Config& c) {
  CubicForm S = load_surface(c);
  ProjPoint r = third_point(S, parse_point(c.x, "--x"), parse_point(c.y, "--y"));
  return {{{"point", point_json(r)}}};
}

Outcome geom_tangent_residual(const Config& c) {
  CubicForm S = load_surface(c);
  ProjPoint r = tangent_residual(S, PlanePencil{parse_line(c.axis, "--axis")}, parse_point(c.point, "--point"));
  return {{{"point", point_json(r)}}};
}

Outcome geom_delta(const Config& c) {
  CubicForm S = load_surface(c);
  return {delta_point(S, parse_line(c.line, "--line")).to_json()};
}

Outcome geom_psi(const Config& c) {
  CubicForm S = load_surface(c);
  return {psi_minus_one(S, PlanePencil{parse_line(c.axis, "--axis")}, parse_line(c.line, "--line")).to_json()};
}

Outcome chow_report_cmd(const Config& c) {
  auto parts = split(c.degrees, ',');
  if (parts.size() != 3) throw InvalidInput("--degrees needs three integers");
  CurveDegrees d;
  try {
    d = {std::stol(parts[0]), std::stol(parts[1]), std::stol(parts[2])};
  } catch (const std::exception&) {
    throw InvalidInput("--degrees needs three integers");
  }
  return {chow_report(d)};
}

Outcome chow_pencil_cmd(const Config& c) {
  if (c.samples > 0) {
    std::mt19937_64 rng(c.seed);
    auto rnd = [&] {
      for (;;) {
        std::array<Rational, 2> p{Rational(std::uniform_int_distribution<long>(-30, 30)(rng)),
                                  Rational(std::uniform_int_distribution<long>(-30, 30)(rng))};
        if (!p[0].is_zero() || !p[1].is_zero()) return p;
      }
    };
    auto scale = [&](const std::array<Rational, 2>& p) {
      Rational k(std::uniform_int_distribution<long>(1, 9)(rng));
      return std::array<Rational, 2>{k * p[0], k * p[1]};
    };
    long diag_rank2 = 0, off_rank3 = 0;
    for (long i = 0; i < c.samples; ++i) {
      auto u = rnd();
      if (pencil_rank(u, scale(u), scale(u)) == 2) ++diag_rank2;
      auto v = rnd(), w = rnd();
      while (u[0] * v[1] == u[1] * v[0]) v = rnd();
      if (pencil_rank(u, v, w) == 3) ++off_rank3;
    }
    Json j;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["diagonal_rank2"] = diag_rank2;
    j["off_diagonal_rank3"] = off_rank3;
    return {j, diag_rank2 == c.samples && off_rank3 == c.samples};
  }
  auto u = parse_pair(c.u.empty() ? "1,1" : c.u, "--u");
  Json j;
  if (!c.v.empty() || !c.w.empty()) {
    auto v = parse_pair(c.v, "--v"), w = parse_pair(c.w, "--w");
    j["u"] = pair_json(u);
    j["v"] = pair_json(v);
    j["w"] = pair_json(w);
    j["rank"] = pencil_rank(u, v, w);
    j["in_pencil"] = j["rank"] == 2;
    return {j};
  }
  PencilSolution s = pencil_condition_solve(standard_skew_lines(), u);
  j["u"] = pair_json(s.u);
  j["v"] = pair_json(s.v);
  j["w"] = pair_json(s.w);
  j["rank"] = s.rank;
  j["diagonal"] = s.diagonal;
  return {j};
}

Outcome descent_certify(const Config& c) {
  auto S = surface_of(c);
  auto goal = descent::goal_by_name(goal_of(c, S));
  auto start = c.abstract ? descent::CycleState::abstract_class(c.degree) : descent::CycleState::entry(c.degree);
  if (!c.abstract && c.degree < 0) throw InvalidInput("--degree must be >= 0");
  auto res = descent::find_certificate(S, start, goal);
  if (!res.certificate) {
    Json frontier = res.frontier;
    throw Error("NotFound", "no certificate for degree " + std::to_string(c.degree) + " and goal " + goal.name +
                                "; frontier " + frontier.dump());
  }
  return {res.certificate->to_json()};
}

Outcome descent_verify(const Config& c) {
  auto cert = descent::Certificate::from_json(read_json_file(c.cert));
  auto rep = descent::verify_certificate(cert);
  return {rep.to_json(), rep.ok};
}

Outcome descent_suite(const Config& c) {
  auto S = surface_of(c);
  if (c.ceiling < 1) throw InvalidInput("--ceiling must be >= 1");
  auto rep = descent::prove_bound_suite(S, descent::goal_by_name(goal_of(c, S)), c.ceiling, c.threads);
  return {rep.to_json(), rep.all_ok()};
}

Outcome descent_threshold(const Config& c) {
  auto S = surface_of(c);
  auto rep = descent::replay_threshold(S, descent::goal_by_name(goal_of(c, S)), c.threshold, c.ceiling, c.even_only);
  return {rep.to_json(), rep.ok};
}

Json records_json(const std::vector<PointRecord>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.to_json());
  return arr;
}

Outcome points_enum(const Config& c) {
  if (c.height < 1) throw InvalidInput("--height must be >= 1");
  return {records_json(enumerate_rational(load_surface(c), c.height, c.threads))};
}

Outcome points_saturate(const Config& c) {
  CubicForm S = load_surface(c);
  std::vector<PointRecord> seeds;
  if (!c.seeds.empty()) {
    Json j = read_json_file(c.seeds);
    if (!j.is_array()) throw InvalidInput("--seeds must hold a JSON list of point records");
    for (const auto& e : j) seeds.push_back(PointRecord::from_json(e));
  } else {
    seeds = enumerate_rational(S, c.height, c.threads);
  }
  SaturateOptions opt;
  opt.cap = static_cast<std::size_t>(c.cap);
  return {records_json(saturate(S, seeds, c.rounds, opt))};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact constructions on cubic surfaces and 0-cycle descent certificates", "zc"};
  app.require_subcommand(1);
  std::function<Outcome(const Config&)> action;

  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", c.surface, "Surface JSON file (default: Fermat cubic)")->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", c.out, "Write the JSON here instead of stdout"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome(const Config&)> f) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&action, f] { action = f; });
    add_out(cmd);
    return cmd;
  };

  CLI::App* geom = app.add_subcommand("geom", "Constructions on a cubic surface");
  geom->require_subcommand(1);
  {
    auto* cmd = leaf(geom, "third-point", "Residual point of the secant through x and y", geom_third_point);
    add_surface(cmd);
    cmd->add_option("--x", c.x, "First point")->required();
    cmd->add_option("--y", c.y, "Second point")->required();
    cmd = leaf(geom, "tangent-residual", "Tangent process along a plane pencil", geom_tangent_residual);
    add_surface(cmd);
    cmd->add_option("--point", c.point, "Point on the surface")->required();
    cmd->add_option("--axis", c.axis, "Pencil axis (two points separated by ';')")->required();
    cmd = leaf(geom, "delta", "Length-3 intersection scheme of a rational line", geom_delta);
    add_surface(cmd);
    cmd->add_option("--line", c.line, "Line (two points separated by ';')")->required();
    cmd = leaf(geom, "psi", "Tangent process applied to the intersection scheme of a line", geom_psi);
    add_surface(cmd);
    cmd->add_option("--axis", c.axis, "Pencil axis")->required();
    cmd->add_option("--line", c.line, "Line W'")->required();
  }

  CLI::App* chow = app.add_subcommand("chow", "Degree computations on the triple product");
  chow->require_subcommand(1);
  {
    auto* cmd = leaf(chow, "report", "Degrees of the degeneracy and diagonal loci", chow_report_cmd);
    cmd->add_option("--degrees", c.degrees, "Curve degrees dx,dy,dz");
    cmd = leaf(chow, "pencil", "Pencil condition for the standard skew triple", chow_pencil_cmd);
    cmd->add_option("--u", c.u, "Parameter of the first plane (a,b)");
    cmd->add_option("--v", c.v, "Parameter of the second plane (a,b)");
    cmd->add_option("--w", c.w, "Parameter of the third plane (a,b)");
    cmd->add_option("--samples", c.samples, "Random diagonal/off-diagonal samples")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", c.seed, "Random seed");
  }

  CLI::App* descent = app.add_subcommand("descent", "0-cycle descent certificates");
  descent->require_subcommand(1);
  {
    auto surface_flags = [&](CLI::App* cmd) {
      cmd->add_option("--dS", c.dS, "Degree of the del Pezzo surface")->check(CLI::Range(1, 3));
      cmd->add_flag("--with-x4", c.with_x4, "Allow the degree-4 basis cycle (dS = 3)");
      cmd->add_option("--goal", c.goal, "Goal name (default: the main bound for dS)");
    };
    auto* cmd = leaf(descent, "certify", "Search a certificate from one start degree", descent_certify);
    surface_flags(cmd);
    cmd->add_option("--degree", c.degree, "Start degree")->required();
    cmd->add_flag("--abstract", c.abstract, "Start from an arbitrary class of this degree");
    cmd = leaf(descent, "verify", "Replay and check a certificate", descent_verify);
    cmd->add_option("cert", c.cert, "Certificate JSON file")->required()->check(CLI::ExistingFile);
    cmd = leaf(descent, "suite", "Certificates for every start degree up to the ceiling", descent_suite);
    surface_flags(cmd);
    cmd->add_option("--ceiling", c.ceiling, "Largest start degree")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", c.threads, "Worker threads (0: all cores)");
    cmd = leaf(descent, "threshold", "Effectivity threshold replay", descent_threshold);
    surface_flags(cmd);
    cmd->add_option("--threshold", c.threshold, "Class degree threshold")->required();
    cmd->add_option("--ceiling", c.ceiling, "Largest degree replayed")->check(CLI::PositiveNumber);
    cmd->add_flag("--even-only", c.even_only, "Only even class degrees");
  }

  CLI::App* points = app.add_subcommand("points", "Point search on a cubic surface");
  points->require_subcommand(1);
  {
    auto* cmd = leaf(points, "enum", "Rational points up to a height bound", points_enum);
    add_surface(cmd);
    cmd->add_option("--height", c.height, "Height bound")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", c.threads, "Worker threads (0: all cores)");
    cmd = leaf(points, "saturate", "Secant and tangent closure", points_saturate);
    add_surface(cmd);
    cmd->add_option("--seeds", c.seeds, "Seed point records (default: enumerate up to --height)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--height", c.height, "Height bound for enumerated seeds")->check(CLI::PositiveNumber);
    cmd->add_option("--rounds", c.rounds, "Rounds")->check(CLI::NonNegativeNumber);
    cmd->add_option("--cap", c.cap, "Maximum number of points")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", c.threads, "Worker threads (0: all cores)");
  }

  std::vector<std::string> storage{"zc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (app.get_subcommands().size() == 1) {
      for (CLI::App* sub = app.get_subcommands().front(); sub;) {
        auto subs = sub->get_subcommands();
        if (subs.empty()) {
          err << sub->help();
          break;
        }
        sub = subs.front();
      }
    }
    err << msg << "\n";
    emit(out, error_json("UsageError", msg));
    return 2;
  }

  Outcome result;
  try {
    result = action(c);
  } catch (const Error& e) {
    emit(out, error_json(e.code(), e.what()));
    return 1;
  } catch (const Json::exception& e) {
    emit(out, error_json("InvalidInput", e.what()));
    return 1;
  } catch (const std::exception& e) {
    emit(out, error_json("InternalError", e.what()));
    return 1;
  }
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) {
      emit(out, error_json("IOError", "cannot write " + c.out));
      return 1;
    }
    emit(f, result.json);
    emit(out, Json{{"written", c.out}, {"ok", result.ok}});
  } else {
    emit(out, result.json);
  }
  return result.ok ? 0 : 1;
}

}  // namespace zc::cli

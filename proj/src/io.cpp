#include "chowkit/io.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chowkit/fixtures.hpp"
#include "chowkit/scene.hpp"

namespace chowkit {

namespace fs = std::filesystem;

json to_json(const Polynomial& f) { return f.to_string(); }

json to_json(const Ideal& I) {
  json a = json::array();
  for (auto& g : I.generators()) a.push_back(g.to_string());
  return a;
}

json to_json(const Cycle& Z) {
  json terms = json::array();
  for (auto& t : Z.terms())
    terms.push_back({{"multiplicity", t.multiplicity},
                     {"dimension", t.component.dimension},
                     {"degree", t.component.degree},
                     {"prime", to_json(t.component.prime)}});
  return {{"terms", terms}, {"degree", Z.empty() ? 0 : cycle_degree(Z)}};
}

json to_json(const NullResult& r) {
  json out = {{"bound", r.bound}, {"arith_degrees", r.arith_degrees}, {"degrees_tried", r.degrees_tried}};
  if (!r.certificate) {
    out["status"] = "NO_CERTIFICATE";
    return out;
  }
  out["status"] = "CERTIFICATE";
  auto& c = *r.certificate;
  json ideals = json::array();
  for (size_t j = 0; j < c.generators.size(); ++j) {
    json gens = json::array();
    for (size_t k = 0; k < c.generators[j].size(); ++k)
      gens.push_back({{"generator", to_json(c.generators[j][k])}, {"cofactor", to_json(c.cofactors[j][k])}});
    ideals.push_back(gens);
  }
  out["ideals"] = ideals;
  out["achieved_degree"] = c.achieved_degree;
  out["verified"] = verify_certificate(c);
  return out;
}

json to_json(const BezoutCertificate& c) {
  json factors = json::array();
  for (auto& f : c.factors)
    factors.push_back({{"prime", to_json(f.prime)},
                       {"exponent", f.exponent},
                       {"multiplicity", f.multiplicity},
                       {"degree", f.degree}});
  json prod = json::array();
  for (auto& g : c.product_generators) prod.push_back(to_json(g));
  return {{"target", to_json(c.target)},
          {"factors", factors},
          {"product_generators", prod},
          {"exponent_sum", c.exponent_sum()},
          {"bound", c.bound},
          {"arith_degrees", c.arith_degrees},
          {"verified", verify_certificate(c)}};
}

json to_json(const ClosureVerdict& v) {
  json out = {{"verdict", to_string(v.verdict)}};
  if (!v.note.empty()) out["note"] = v.note;
  json certs = json::array();
  for (auto& c : v.certificates) {
    json coeffs = json::array();
    for (int j = 1; j <= c.degree; ++j) coeffs.push_back(to_json(c.coefficient(j)));
    certs.push_back({{"element", to_json(c.element)}, {"degree", c.degree}, {"coefficients", coeffs}});
  }
  if (!certs.empty()) out["certificates"] = certs;
  if (v.witness) {
    json scalars = json::array();
    for (auto& s : v.witness->scalars) scalars.push_back(s.get_str());
    json w = {{"weights", v.witness->weights}, {"scalars", scalars}};
    w["order_element"] = v.witness->order_element ? json(*v.witness->order_element) : json("infinity");
    w["order_ideal"] = v.witness->order_ideal ? json(*v.witness->order_ideal) : json("infinity");
    out["witness"] = w;
  }
  return out;
}

json to_json(const ExponentEstimate& e) {
  json samples = json::array();
  for (auto& s : e.samples) samples.push_back({{"radius", s.radius}, {"distance", s.distance}, {"value", s.value}});
  return {{"slope", e.slope},
          {"band", {e.band_low, e.band_high}},
          {"D", e.D},
          {"tolerance", e.tolerance},
          {"pass", e.within_bound},
          {"excluded", e.excluded},
          {"oracle_failures", e.oracle_failures},
          {"samples", samples}};
}

std::string stable_hash(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream o;
  o << std::hex;
  o.width(16);
  o.fill('0');
  o << h;
  return o.str();
}

FileCache::FileCache(std::string dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {
  fs::create_directories(dir_);
}

std::string FileCache::path(const std::string& kind, const std::string& key) const {
  return (fs::path(dir_) / kind / (stable_hash(version_ + "|" + key) + ".json")).string();
}

std::optional<json> FileCache::load(const std::string& kind, const std::string& key) {
  std::string p = path(kind, key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  json entry;
  try {
    entry = json::parse(in);
    if (entry.at("version") != version_ || entry.at("key") != key || !entry.contains("value"))
      throw std::runtime_error("stale entry");
  } catch (const std::exception&) {
    in.close();
    std::error_code ec;
    fs::remove(p, ec);
    ++evictions_;
    return std::nullopt;
  }
  return entry["value"];
}

void FileCache::save(const std::string& kind, const std::string& key, const json& value) {
  std::string p = path(kind, key);
  fs::create_directories(fs::path(p).parent_path());
  // write then rename so a crash never leaves a half-written entry
  std::string tmp = p + ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"version", version_}, {"key", key}, {"value", value}}.dump();
  }
  fs::rename(tmp, p);
}

bool FileBasisStore::load(const std::string& key, const RingPtr& ring, std::vector<Polynomial>& out) {
  auto v = cache_->load("bases", key);
  if (!v) return false;
  try {
    std::vector<Polynomial> basis;
    for (auto& s : *v) basis.push_back(parse_polynomial(s.get<std::string>(), ring));
    out = std::move(basis);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void FileBasisStore::save(const std::string& key, const std::vector<Polynomial>& basis) {
  json a = json::array();
  for (auto& g : basis) a.push_back(g.to_string());
  cache_->save("bases", key, a);
}

json RunRecord::to_json() const {
  return {{"tool", "chowkit"},     {"version", version},     {"subcommand", subcommand}, {"input_hash", input_hash},
          {"seed", seed},          {"wall_time", wall_time}, {"cache_hit", cache_hit},   {"exit_code", exit_code},
          {"result", payload}};
}

namespace {

struct TaskError : std::runtime_error {
  TaskError(std::string code, const std::string& msg) : std::runtime_error(msg), code(std::move(code)) {}
  std::string code;
};

bool randomized(const std::string& sub) {
  return sub == "chow-ideal" || sub == "intersect" || sub == "loja-estimate" || sub == "intclose-test" ||
         sub == "bezout-cert";
}

std::vector<std::string> names_or_all(const Scene& sc, const std::string& key, const std::vector<std::string>& all) {
  std::string v = sc.arg(key);
  return v.empty() ? all : split_names(v);
}

std::string first_or(const Scene& sc, const std::string& key, const std::vector<std::string>& all,
                     const std::string& what) {
  std::string v = sc.arg(key);
  if (!v.empty()) return v;
  if (all.empty()) throw TaskError("missing_input", "scene has no " + what);
  return all.front();
}

std::vector<Ideal> ideals_of(const Scene& sc) {
  std::vector<Ideal> out;
  for (auto& n : names_or_all(sc, "ideals", sc.ideal_names)) out.push_back(sc.ideal(n));
  if (out.empty()) throw TaskError("missing_input", "scene has no ideals");
  return out;
}

json run_scene_task(const RunOptions& o, const Scene& sc, int& exit_code) {
  const std::string& sub = o.subcommand;
  if (sub == "groebner") {
    std::string name = first_or(sc, "ideal", sc.ideal_names, "ideals");
    const Ideal& I = sc.ideal(name);
    json basis = json::array();
    for (auto& g : I.groebner()) basis.push_back(g.to_string());
    auto h = hilbert_data(I);
    return {{"ideal", name}, {"basis", basis}, {"dimension", h.dimension}, {"degree", h.degree}};
  }
  if (sub == "chow-ideal") {
    std::string name = first_or(sc, "cycle", sc.cycle_names, "cycles");
    ChowConfig cfg;
    cfg.seed = o.seed;
    auto r = chow_ideal(sc.cycle(name), cfg);
    json gens = json::array();
    for (auto& g : r.ideal.groebner()) gens.push_back(g.to_string());
    return {{"cycle", name}, {"generators", gens}, {"rounds", r.rounds}, {"stabilized", r.stabilized}, {"seed", o.seed}};
  }
  if (sub == "intersect") {
    std::vector<Cycle> cycles;
    for (auto& n : names_or_all(sc, "cycles", sc.cycle_names)) cycles.push_back(sc.cycle(n));
    if (cycles.empty()) throw TaskError("missing_input", "scene has no cycles");
    std::string choice = sc.arg("choice", "standard");
    if (choice != "standard" && choice != "random") throw TaskError("invalid_input", "choice must be standard or random");
    Cycle X = vt_intersection(cycles, choice == "standard" ? DiagonalChoice::Standard : DiagonalChoice::SeededRandom,
                              o.seed);
    json out = to_json(X);
    long bound = 1;
    for (auto& c : cycles) bound *= cycle_degree(c);
    out["degree_bound"] = bound;
    return out;
  }
  if (sub == "ncap") {
    std::string name = first_or(sc, "cycle", sc.cycle_names, "cycles");
    std::string el = first_or(sc, "element", sc.element_names, "elements");
    return to_json(ncap(sc.cycle(name), sc.element(el)));
  }
  if (sub == "bezout-cert") {
    return to_json(bezout_certificate(ideals_of(sc), DiagonalChoice::Standard, o.seed));
  }
  if (sub == "null-cert") {
    auto r = null_certificate(ideals_of(sc));
    if (!r.certificate) exit_code = kExitNoCertificate;
    return to_json(r);
  }
  if (sub == "intclose-test") {
    std::string name = first_or(sc, "ideal", sc.ideal_names, "ideals");
    std::string el = first_or(sc, "element", sc.element_names, "elements");
    ClosureBounds b;
    b.seed = o.seed;
    if (!sc.arg("max_k").empty()) b.max_k = std::stoi(sc.arg("max_k"));
    const Ideal& I = sc.ideal(name);
    const Polynomial& f = sc.element(el);
    auto v = closure_membership(f, I, b);
    if (v.verdict == Verdict::Unknown) exit_code = kExitUnknown;
    json out = to_json(v);
    out["member"] = I.contains(f);
    out["verified"] = verify_verdict(v, f, I);
    return out;
  }
  if (sub == "loja-estimate") {
    NumericScene ns;
    ns.ideals = ideals_of(sc);
    for (auto& n : names_or_all(sc, "intersection", {})) ns.intersection.push_back(sc.parametrization(n));
    ns.center = sc.center ? *sc.center : CVec(sc.ring->nvars(), 0.0);
    ns.radius = sc.radius;
    ns.shells = o.shells;
    ns.per_shell = o.per_shell;
    ns.seed = o.seed;
    return to_json(estimate_exponent(ns));
  }
  throw TaskError("unknown_subcommand", "unknown subcommand '" + sub + "'");
}

json run_fixtures(const RunOptions& o, int& exit_code) {
  if (o.suite != "paper") throw TaskError("invalid_input", "unknown suite '" + o.suite + "'");
  json rows = json::array();
  for (auto& r : run_fixture_suite(o.scenes_dir)) {
    std::string status = r.passed ? (r.expected_failure ? "UNEXPECTED PASS" : "PASS")
                                  : (r.expected_failure ? "EXPECTED FAIL" : "FAIL");
    if (status == "FAIL" || status == "UNEXPECTED PASS") exit_code = kExitError;
    rows.push_back({{"name", r.name}, {"status", status}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  return {{"suite", o.suite}, {"fixtures", rows}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TaskError("io_error", "cannot read scene '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RunRecord run_task(const RunOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.version = o.version;
  rec.subcommand = o.subcommand;
  rec.seed = o.seed;
  try {
    std::string text;
    if (o.subcommand != "fixtures") text = o.scene_text ? *o.scene_text : read_file(o.scene_path);
    std::string key = o.subcommand + "|" + o.field.value_or("") + "|" + text;
    if (o.subcommand == "loja-estimate")
      key += "|" + std::to_string(o.shells) + "|" + std::to_string(o.per_shell);
    if (o.subcommand == "fixtures") key += "|" + o.suite;
    if (randomized(o.subcommand)) key += "|seed=" + std::to_string(o.seed);
    rec.input_hash = stable_hash(key);

    std::shared_ptr<FileCache> cache;
    std::optional<std::string> dir = o.cache_dir;
    if (dir && dir->empty()) dir.reset();
    if (!dir)
      if (const char* env = std::getenv("CHOWKIT_CACHE_DIR"); env && *env) dir = env;
    if (dir && !o.no_cache && o.subcommand != "fixtures") cache = std::make_shared<FileCache>(*dir, o.version);

    if (cache) {
      if (auto hit = cache->load("results", key)) {
        rec.payload = (*hit)["payload"];
        rec.exit_code = (*hit)["exit_code"].get<int>();
        rec.cache_hit = true;
      }
    }
    if (!rec.cache_hit) {
      int code = kExitOk;
      if (cache) set_basis_store(std::make_shared<FileBasisStore>(cache));
      try {
        if (o.subcommand == "fixtures") {
          rec.payload = run_fixtures(o, code);
        } else {
          std::optional<Field> field;
          if (o.field) {
            try {
              field = Field::parse(*o.field);
            } catch (const std::exception& e) {
              throw TaskError("invalid_input", e.what());
            }
          }
          Scene sc = parse_scene(text, field);
          if (!sc.task.empty() && sc.task != o.subcommand) sc.task_args.clear();
          rec.payload = run_scene_task(o, sc, code);
        }
      } catch (...) {
        set_basis_store(nullptr);
        throw;
      }
      set_basis_store(nullptr);
      rec.exit_code = code;
      if (cache) cache->save("results", key, {{"payload", rec.payload}, {"exit_code", code}});
    }
  } catch (const ParseError& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "parse_error"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}}}};
  } catch (const TaskError& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", e.code}, {"message", e.what()}}}};
  } catch (const ChowNotStabilized& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "not_stabilized"}, {"message", e.what()}}}};
  } catch (const DecompositionError& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "decomposition_failed"}, {"message", e.what()}}}};
  } catch (const OracleFailure& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "oracle_failed"}, {"message", e.what()}}}};
  } catch (const std::invalid_argument& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "invalid_input"}, {"message", e.what()}}}};
  } catch (const std::exception& e) {
    rec.exit_code = kExitError;
    rec.payload = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
  }
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace chowkit

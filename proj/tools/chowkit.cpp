#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "chowkit/io.hpp"

#ifndef CHOWKIT_SCENES_DIR
#define CHOWKIT_SCENES_DIR "scenes"
#endif

int main(int argc, char** argv) {
  using namespace chowkit;
  CLI::App app{"chowkit: Chow ideals, intersection cycles and effective certificates"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunOptions o;
  o.scenes_dir = CHOWKIT_SCENES_DIR;
  std::string out_path, field, cache_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "worker cap")->check(CLI::PositiveNumber);
    sub->add_option("--field", field, "override the scene field: Q or Fp:<p>");
    sub->add_option("--out", out_path, "write the JSON record here instead of stdout");
    sub->add_flag("--no-cache", o.no_cache, "skip the result cache");
    sub->add_option("--cache-dir", cache_dir, "cache directory (default $CHOWKIT_CACHE_DIR)");
  };

  const char* scene_tasks[][2] = {
      {"groebner", "reduced Groebner basis, dimension and degree of an ideal"},
      {"chow-ideal", "ideal of Chow equations of a cycle"},
      {"intersect", "intersection cycle of the scene's cycles"},
      {"ncap", "intersection of a cycle with the divisor of an element"},
      {"bezout-cert", "product-of-powers certificate for an intersection"},
      {"null-cert", "Nullstellensatz certificate (exit 2 when none exists)"},
      {"intclose-test", "integral closure membership (exit 3 when unknown)"},
      {"loja-estimate", "numeric Lojasiewicz exponent estimate"},
  };
  for (auto& [name, help] : scene_tasks) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("scene", o.scene_path, "scene file")->required()->check(CLI::ExistingFile);
    common(sub);
    if (std::string(name) == "loja-estimate") {
      sub->add_option("--shells", o.shells)->check(CLI::Range(3, 1000));
      sub->add_option("--per-shell", o.per_shell)->check(CLI::Range(4, 100000));
    }
  }
  auto* fx = app.add_subcommand("fixtures", "run the built-in fixture suite and print a table");
  fx->add_option("--suite", o.suite)->capture_default_str();
  fx->add_option("--scenes-dir", o.scenes_dir)->capture_default_str();
  common(fx);

  CLI11_PARSE(app, argc, argv);
  o.subcommand = app.get_subcommands().front()->get_name();
  if (!field.empty()) o.field = field;
  if (!cache_dir.empty()) o.cache_dir = cache_dir;

  RunRecord rec = run_task(o);

  if (o.subcommand == "fixtures" && rec.payload.contains("fixtures")) {
    for (auto& row : rec.payload["fixtures"])
      std::cerr << row["status"].get<std::string>() << "  " << row["name"].get<std::string>() << "  ("
                << row["detail"].get<std::string>() << ")\n";
  }
  std::string text = rec.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitError;
    }
    f << text;
  }
  return rec.exit_code;
}

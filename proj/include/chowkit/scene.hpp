#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/cycles.hpp"
#include "chowkit/loja.hpp"
#include "chowkit/parse.hpp"

namespace chowkit {

// Line-oriented scene format:
//
//   field Q | field Fp:<p>
//   vars x y z
//   ideal I = x^2 - y^3, z
//   element f = x*y
//   param C (u, v) = u^3, u^2, u*v, v
//   cycle Z = 2*I + C
//   center = 0, 0, 0
//   radius = 1
//   task null-cert ideals=I,J
//
// `#` starts a comment. A line ending in `,`, `+` or `=` continues on the
// next line. Cycle terms name ideals (taken as prime) or parametrizations.
struct SceneParam {
  std::vector<std::string> params;
  std::vector<std::string> images;
};

struct SceneCycleTerm {
  std::string name;
  long multiplicity = 1;
};

class Scene {
 public:
  RingPtr ring;
  std::vector<std::string> ideal_names, element_names, param_names, cycle_names;  // declaration order
  std::optional<CVec> center;
  double radius = 1.0;
  std::string task;
  std::map<std::string, std::string> task_args;

  const Ideal& ideal(const std::string& name) const;
  const Polynomial& element(const std::string& name) const;
  const SceneParam& param(const std::string& name) const;
  Cycle cycle(const std::string& name) const;
  // The parametrization as a map into the scene ring, for the numeric oracle.
  Parametrization parametrization(const std::string& name) const;

  // Argument lookup: the task block, then the fallback.
  std::string arg(const std::string& key, const std::string& fallback = "") const;

 private:
  friend Scene parse_scene(const std::string&, std::optional<Field>);
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, Polynomial> elements_;
  std::map<std::string, SceneParam> params_;
  std::map<std::string, std::vector<SceneCycleTerm>> cycles_;
};

// Throws ParseError with line and column.
Scene parse_scene(const std::string& text, std::optional<Field> field_override = std::nullopt);
Scene load_scene(const std::string& path, std::optional<Field> field_override = std::nullopt);

std::vector<std::string> split_names(const std::string& list);

}  // namespace chowkit

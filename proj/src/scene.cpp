#include "chowkit/scene.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace chowkit {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

struct Line {
  int number;
  std::string text;
};

// Comments stripped, continuations joined; blank lines dropped.
std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  bool continuing = false;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (continuing) {
      out.back().text += " " + t;
    } else {
      if (t.empty()) continue;
      out.push_back({number, raw.substr(0, raw.find_last_not_of(" \t\r") + 1)});
    }
    std::string cur = trim(out.back().text);
    char last = cur.empty() ? '\0' : cur.back();
    continuing = last == ',' || last == '+' || last == '=';
  }
  return out;
}

int col(size_t pos) { return static_cast<int>(pos) + 1; }

}  // namespace

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

const Ideal& Scene::ideal(const std::string& name) const {
  auto it = ideals_.find(name);
  if (it == ideals_.end()) throw std::invalid_argument("scene: no ideal named '" + name + "'");
  return it->second;
}

const Polynomial& Scene::element(const std::string& name) const {
  auto it = elements_.find(name);
  if (it == elements_.end()) throw std::invalid_argument("scene: no element named '" + name + "'");
  return it->second;
}

const SceneParam& Scene::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw std::invalid_argument("scene: no parametrization named '" + name + "'");
  return it->second;
}

Cycle Scene::cycle(const std::string& name) const {
  auto it = cycles_.find(name);
  if (it == cycles_.end()) throw std::invalid_argument("scene: no cycle named '" + name + "'");
  Cycle Z(ring);
  for (auto& t : it->second) {
    if (ideals_.count(t.name)) {
      Z.add(make_component(ideals_.at(t.name)), t.multiplicity);
    } else {
      auto& p = param(t.name);
      Z.add(make_component(parametrization_ideal(ring, p.params, p.images)), t.multiplicity);
    }
  }
  return Z;
}

Parametrization Scene::parametrization(const std::string& name) const {
  auto& p = param(name);
  auto R = make_ring(p.params);
  Parametrization out;
  for (auto& img : p.images) out.coords.push_back(parse_polynomial(img, R));
  return out;
}

std::string Scene::arg(const std::string& key, const std::string& fallback) const {
  auto it = task_args.find(key);
  return it == task_args.end() ? fallback : it->second;
}

Scene parse_scene(const std::string& text, std::optional<Field> field_override) {
  Scene sc;
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::set<std::string> names;
  auto need_ring = [&](const Line& l) {
    if (sc.ring) return;
    if (vars.empty()) throw ParseError(l.number, 1, "variables must be declared before use");
    sc.ring = make_ring(vars, field_override ? *field_override : field.value_or(Field::rationals()));
  };
  auto declare = [&](const Line& l, const std::string& name, size_t pos) {
    if (!is_name(name)) throw ParseError(l.number, col(pos), "bad name '" + name + "'");
    if (!names.insert(name).second) throw ParseError(l.number, col(pos), "duplicate name '" + name + "'");
  };

  for (auto& l : logical_lines(text)) {
    const std::string& s = l.text;
    size_t k0 = s.find_first_not_of(" \t");
    size_t k1 = s.find_first_of(" \t=", k0);
    std::string key = s.substr(k0, k1 == std::string::npos ? std::string::npos : k1 - k0);
    std::string rest = k1 == std::string::npos ? "" : s.substr(k1);
    size_t rest_pos = k1 == std::string::npos ? s.size() : k1;

    // NAME = value, with the value's column
    auto assignment = [&](std::string& name, std::string& value, size_t& value_pos) {
      size_t eq = s.find('=', rest_pos);
      if (eq == std::string::npos) throw ParseError(l.number, col(rest_pos), "expected '='");
      name = trim(s.substr(rest_pos, eq - rest_pos));
      value = s.substr(eq + 1);
      value_pos = eq + 1;
    };

    if (key == "field") {
      if (sc.ring) throw ParseError(l.number, 1, "field must precede the first ideal");
      try {
        field = Field::parse(trim(rest));
      } catch (const std::exception& e) {
        throw ParseError(l.number, col(rest_pos) + 1, e.what());
      }
    } else if (key == "vars") {
      if (!vars.empty()) throw ParseError(l.number, 1, "variables declared twice");
      std::istringstream in(rest);
      std::string v;
      while (in >> v) {
        if (!is_name(v)) throw ParseError(l.number, col(s.find(v, rest_pos)), "bad variable '" + v + "'");
        vars.push_back(v);
      }
      if (vars.empty()) throw ParseError(l.number, 1, "empty variable list");
    } else if (key == "ideal" || key == "element") {
      need_ring(l);
      std::string name, value;
      size_t vp;
      assignment(name, value, vp);
      declare(l, name, rest_pos + 1);
      if (key == "ideal") {
        sc.ideals_.emplace(name, Ideal(sc.ring, parse_polynomial_list(value, sc.ring, l.number, static_cast<int>(vp))));
        sc.ideal_names.push_back(name);
      } else {
        sc.elements_.emplace(name, parse_polynomial(value, sc.ring, l.number, static_cast<int>(vp)));
        sc.element_names.push_back(name);
      }
    } else if (key == "param") {
      need_ring(l);
      size_t open = s.find('(', rest_pos), close = s.find(')', rest_pos), eq = s.find('=', rest_pos);
      if (open == std::string::npos || close == std::string::npos || eq == std::string::npos || !(open < close && close < eq))
        throw ParseError(l.number, col(rest_pos), "expected: param NAME (u, v) = images");
      std::string name = trim(s.substr(rest_pos, open - rest_pos));
      declare(l, name, rest_pos + 1);
      SceneParam p;
      p.params = split_names(s.substr(open + 1, close - open - 1));
      for (auto& q : p.params) {
        if (!is_name(q)) throw ParseError(l.number, col(open + 1), "bad parameter '" + q + "'");
        if (sc.ring->index_of(q) >= 0)
          throw ParseError(l.number, col(open + 1), "parameter '" + q + "' clashes with a variable");
      }
      auto R = make_ring(p.params);
      auto images = parse_polynomial_list(s.substr(eq + 1), R, l.number, static_cast<int>(eq + 1));
      if (static_cast<int>(images.size()) != sc.ring->nvars())
        throw ParseError(l.number, col(eq + 1), "need one image per variable");
      for (auto& img : images) p.images.push_back(img.to_string());
      sc.params_.emplace(name, std::move(p));
      sc.param_names.push_back(name);
    } else if (key == "cycle") {
      need_ring(l);
      std::string name, value;
      size_t vp;
      assignment(name, value, vp);
      declare(l, name, rest_pos + 1);
      std::vector<SceneCycleTerm> terms;
      size_t pos = 0;
      while (pos <= value.size()) {
        size_t plus = value.find('+', pos);
        std::string term = trim(value.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        int term_col = col(vp + pos);
        SceneCycleTerm t;
        auto star = term.find('*');
        try {
          if (star != std::string::npos) {
            size_t used = 0;
            std::string m = trim(term.substr(0, star));
            t.multiplicity = std::stol(m, &used);
            if (used != m.size() || t.multiplicity <= 0) throw std::invalid_argument("multiplicity");
            t.name = trim(term.substr(star + 1));
          } else {
            t.name = term;
          }
        } catch (const std::exception&) {
          throw ParseError(l.number, term_col, "bad cycle term '" + term + "'");
        }
        if (!sc.ideals_.count(t.name) && !sc.params_.count(t.name))
          throw ParseError(l.number, term_col, "unknown component '" + t.name + "'");
        terms.push_back(t);
        if (plus == std::string::npos) break;
        pos = plus + 1;
      }
      sc.cycles_.emplace(name, std::move(terms));
      sc.cycle_names.push_back(name);
    } else if (key == "center") {
      std::string name, value;
      size_t vp;
      assignment(name, value, vp);
      if (!name.empty()) throw ParseError(l.number, col(rest_pos), "expected: center = values");
      CVec c;
      for (auto& v : split_names(value)) {
        try {
          size_t used = 0;
          c.push_back(std::stod(v, &used));
          if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::exception&) {
          throw ParseError(l.number, col(vp), "bad coordinate '" + v + "'");
        }
      }
      sc.center = c;
    } else if (key == "radius") {
      std::string name, value;
      size_t vp;
      assignment(name, value, vp);
      try {
        sc.radius = std::stod(trim(value));
      } catch (const std::exception&) {
        throw ParseError(l.number, col(vp), "bad radius");
      }
    } else if (key == "task") {
      if (!sc.task.empty()) throw ParseError(l.number, 1, "second task block");
      std::istringstream in(rest);
      std::string word;
      in >> sc.task;
      if (sc.task.empty()) throw ParseError(l.number, 1, "task needs a subcommand");
      while (in >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos || eq == 0)
          throw ParseError(l.number, col(s.find(word, rest_pos)), "expected key=value, got '" + word + "'");
        sc.task_args[word.substr(0, eq)] = word.substr(eq + 1);
      }
    } else {
      throw ParseError(l.number, col(k0), "unknown key '" + key + "'");
    }
  }
  if (!sc.ring) {
    if (vars.empty()) throw ParseError(1, 1, "scene declares no variables");
    sc.ring = make_ring(vars, field_override ? *field_override : field.value_or(Field::rationals()));
  }
  if (sc.center && static_cast<int>(sc.center->size()) != sc.ring->nvars())
    throw ParseError(1, 1, "center has the wrong number of coordinates");
  return sc;
}

Scene load_scene(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read scene '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str(), field_override);
}

}  // namespace chowkit

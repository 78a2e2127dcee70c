#ifndef LCVA_PRESENTATION_HPP
#define LCVA_PRESENTATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcva/lpoly.hpp"

namespace lcva {

struct GeneratorDecl {
  std::string name;
  int parity = 0;       // 0 even, 1 odd
  bool central = false;  // central => d(generator) = 0 and all brackets vanish
};

/// Action of a derivation on generators; extended by Leibniz in the engine.
struct DerivationSpec {
  int parity = 1;
  std::map<int, VElement> action;  // generator index -> value
};

/// A Lie conformal algebra by generators and a bracket table.  Only one
/// orientation per pair needs to be stored; the other is derived by
/// skew-symmetry at lookup.  Fully explicit tables are allowed and the
/// axiom checker validates both orientations against each other.
struct LcaPresentation {
  std::vector<GeneratorDecl> gens;
  std::map<std::pair<int, int>, LPoly> table;
  std::map<int, Scalar> central_values;             // specializations C -> c
  std::map<std::string, DerivationSpec> derivations;  // named (derive D ...)

  int add_gen(std::string name, int parity, bool central = false) {
    if (find(name) >= 0)
      throw std::invalid_argument("duplicate generator: " + name);
    gens.push_back({std::move(name), parity, central});
    return static_cast<int>(gens.size()) - 1;
  }
  int find(const std::string& name) const {
    for (size_t j = 0; j < gens.size(); ++j)
      if (gens[j].name == name) return static_cast<int>(j);
    return -1;
  }
  int require(const std::string& name) const {
    int j = find(name);
    if (j < 0) throw std::invalid_argument("undeclared generator: " + name);
    return j;
  }
  int parity(int gen) const { return gens.at(static_cast<size_t>(gen)).parity; }
  bool central(int gen) const {
    return gens.at(static_cast<size_t>(gen)).central;
  }

  void set_bracket(int a, int b, LPoly value) {
    table[{a, b}] = std::move(value);
  }
  const LPoly* stored(int a, int b) const {
    auto it = table.find({a, b});
    return it == table.end() ? nullptr : &it->second;
  }

  void specialize(int gen, Scalar value) {
    if (!central(gen))
      throw std::invalid_argument("specialize: generator is not central");
    central_values[gen] = std::move(value);
  }
};

}  // namespace lcva

#endif  // LCVA_PRESENTATION_HPP

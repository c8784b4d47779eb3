#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stab/geometry.hpp"
#include "stab/rational.hpp"

namespace stab {

enum class ModelKind { Rpst, Rpst2, Conforming };

std::string model_name(ModelKind kind);
std::optional<ModelKind> model_from_name(const std::string& name);

enum class VarKind { Edge, Stab };
enum class Orientation { Horizontal, Vertical, None };

struct Variable {
  int id = 0;
  std::string name;
  VarKind kind = VarKind::Edge;
  Orientation orientation = Orientation::None;
  Rational lower;
  std::optional<Rational> upper;  // nullopt = unbounded
  bool integral = true;

  bool operator==(const Variable&) const = default;
};

enum class Sense { Ge, Le, Eq };
enum class RowTag { Reflex, Steiner, Planarity, Stab };

struct Constraint {
  std::vector<std::pair<int, Rational>> coeffs;  // (variable id, coefficient)
  Sense sense = Sense::Ge;
  Rational rhs;
  RowTag tag = RowTag::Reflex;

  bool operator==(const Constraint&) const = default;
};

struct LinearProgram {
  ModelKind model_kind = ModelKind::Rpst;
  std::vector<Variable> variables;  // edge variables by edge index, k last
  std::vector<Constraint> constraints;
  int objective_var = 0;  // minimize this variable (k)
  bool relaxed = false;

  // Geometric meaning of each edge variable and the internal edges it selects.
  std::vector<Segment> columns;
  std::vector<std::vector<int>> column_cover;

  int stab_var() const { return objective_var; }
  int edge_count() const { return int(columns.size()); }

  // Structural equality: the optimization problem itself, not the geometric
  // column annotations (the text format carries only the former).
  bool operator==(const LinearProgram& o) const {
    return model_kind == o.model_kind && variables == o.variables &&
           constraints == o.constraints && objective_var == o.objective_var &&
           relaxed == o.relaxed;
  }
};

LinearProgram build_rpst(const Arrangement& arr);
LinearProgram build_rpst2(const Arrangement& arr);
LinearProgram build_conforming(const Arrangement& arr);

// Conforming column set: the border-to-border grid segments with the internal
// edges each one selects.
void conforming_columns(const Arrangement& arr, std::vector<Segment>& cols,
                        std::vector<std::vector<int>>& cover);

// Drops integrality from every variable; idempotent.
LinearProgram relax(const LinearProgram& ip);

std::string export_lp_text(const LinearProgram& lp);
LinearProgram parse_lp_text(const std::string& text);

}  // namespace stab

#include <map>
#include <sstream>

#include "stab/formulation.hpp"

namespace stab {

bool parse_rational(const std::string& text, Rational& out) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty()) return false;
  try {
    Rational r(t);
    r.canonicalize();
    out = r;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

const char* tag_name(RowTag t) {
  switch (t) {
    case RowTag::Reflex: return "reflex";
    case RowTag::Steiner: return "steiner";
    case RowTag::Planarity: return "planarity";
    case RowTag::Stab: return "stab";
  }
  return "?";
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::Ge: return ">=";
    case Sense::Le: return "<=";
    case Sense::Eq: return "=";
  }
  return "?";
}

const char* kind_name(VarKind k) { return k == VarKind::Edge ? "edge" : "stab"; }

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Horizontal: return "horizontal";
    case Orientation::Vertical: return "vertical";
    case Orientation::None: return "none";
  }
  return "?";
}

std::string signed_rat(const Rational& r) {
  Rational a = abs(r);
  return (sgn(r) < 0 ? "-" : "+") + a.get_str();
}

[[noreturn]] void bad_line(int lineno, const std::string& why) {
  throw Error(Errc::SyntaxError, "lp text line " + std::to_string(lineno) + ": " + why);
}

struct PendingRow {
  RowTag tag;
  Sense sense;
  Rational rhs;
  std::vector<std::pair<Rational, std::string>> terms;
  int lineno;
};

}  // namespace

std::string export_lp_text(const LinearProgram& lp) {
  std::ostringstream out;
  out << "model " << model_name(lp.model_kind) << "\n";
  out << "relaxed " << (lp.relaxed ? 1 : 0) << "\n";
  out << "minimize " << lp.variables[lp.objective_var].name << "\n";
  out << "subject to\n";
  for (const Constraint& c : lp.constraints) {
    out << tag_name(c.tag) << ":";
    for (const auto& [id, coef] : c.coeffs)
      out << " " << signed_rat(coef) << " " << lp.variables[id].name;
    out << " " << sense_text(c.sense) << " " << c.rhs.get_str() << "\n";
  }
  out << "bounds\n";
  for (const Variable& v : lp.variables) {
    out << v.lower.get_str() << " <= " << v.name;
    if (v.upper) out << " <= " << v.upper->get_str();
    out << " # " << kind_name(v.kind) << " " << orientation_name(v.orientation) << "\n";
  }
  out << "integers\n";
  for (const Variable& v : lp.variables)
    if (v.integral) out << v.name << "\n";
  out << "end\n";
  return out.str();
}

LinearProgram parse_lp_text(const std::string& text) {
  LinearProgram lp;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  enum class Section { Head, Rows, Bounds, Integers, Done } section = Section::Head;
  std::map<std::string, int> ids;
  std::string objective_name;
  std::vector<PendingRow> pending;

  while (section != Section::Done && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;

    switch (section) {
      case Section::Head:
        if (word == "model") {
          std::string name;
          ls >> name;
          auto kind = model_from_name(name);
          if (!kind) bad_line(lineno, "unknown model '" + name + "'");
          lp.model_kind = *kind;
        } else if (word == "relaxed") {
          int r = 0;
          if (!(ls >> r)) bad_line(lineno, "expected 0 or 1 after 'relaxed'");
          lp.relaxed = r != 0;
        } else if (word == "minimize") {
          if (!(ls >> objective_name)) bad_line(lineno, "missing objective variable");
        } else if (word == "subject") {
          section = Section::Rows;
        } else {
          bad_line(lineno, "unexpected '" + word + "'");
        }
        break;

      case Section::Rows: {
        if (word == "bounds") {
          section = Section::Bounds;
          break;
        }
        if (word.empty() || word.back() != ':') bad_line(lineno, "expected 'tag:'");
        PendingRow row;
        row.lineno = lineno;
        std::string tag = word.substr(0, word.size() - 1);
        if (tag == "reflex") row.tag = RowTag::Reflex;
        else if (tag == "steiner") row.tag = RowTag::Steiner;
        else if (tag == "planarity") row.tag = RowTag::Planarity;
        else if (tag == "stab") row.tag = RowTag::Stab;
        else bad_line(lineno, "unknown tag '" + tag + "'");
        std::vector<std::string> toks;
        while (ls >> word) toks.push_back(word);
        if (toks.size() < 2 || (toks.size() - 2) % 2 != 0) bad_line(lineno, "malformed constraint");
        const std::string& sense_tok = toks[toks.size() - 2];
        if (sense_tok == ">=") row.sense = Sense::Ge;
        else if (sense_tok == "<=") row.sense = Sense::Le;
        else if (sense_tok == "=") row.sense = Sense::Eq;
        else bad_line(lineno, "bad sense '" + sense_tok + "'");
        if (!parse_rational(toks.back(), row.rhs)) bad_line(lineno, "bad rhs '" + toks.back() + "'");
        for (size_t i = 0; i + 2 < toks.size(); i += 2) {
          Rational coef;
          if (!parse_rational(toks[i], coef)) bad_line(lineno, "bad coefficient '" + toks[i] + "'");
          row.terms.emplace_back(coef, toks[i + 1]);
        }
        pending.push_back(std::move(row));
        break;
      }

      case Section::Bounds: {
        if (word == "integers") {
          section = Section::Integers;
          break;
        }
        Variable v;
        std::string le1, name;
        if (!parse_rational(word, v.lower)) bad_line(lineno, "bad lower bound '" + word + "'");
        if (!(ls >> le1 >> name) || le1 != "<=") bad_line(lineno, "malformed bound line");
        v.name = name;
        std::string tok;
        if (!(ls >> tok)) bad_line(lineno, "missing variable annotation");
        if (tok == "<=") {
          std::string up;
          if (!(ls >> up)) bad_line(lineno, "missing upper bound");
          Rational u;
          if (!parse_rational(up, u)) bad_line(lineno, "bad upper bound '" + up + "'");
          v.upper = u;
          if (!(ls >> tok)) bad_line(lineno, "missing variable annotation");
        }
        if (tok != "#") bad_line(lineno, "missing variable annotation");
        std::string kind, orientation;
        if (!(ls >> kind >> orientation)) bad_line(lineno, "missing kind/orientation");
        v.kind = kind == "edge" ? VarKind::Edge : VarKind::Stab;
        if (orientation == "horizontal") v.orientation = Orientation::Horizontal;
        else if (orientation == "vertical") v.orientation = Orientation::Vertical;
        else v.orientation = Orientation::None;
        v.integral = false;
        v.id = int(lp.variables.size());
        ids[v.name] = v.id;
        lp.variables.push_back(std::move(v));
        break;
      }

      case Section::Integers: {
        if (word == "end") {
          section = Section::Done;
          break;
        }
        auto it = ids.find(word);
        if (it == ids.end()) bad_line(lineno, "unknown integer variable '" + word + "'");
        lp.variables[it->second].integral = true;
        break;
      }

      case Section::Done:
        break;
    }
  }
  if (section != Section::Done) throw Error(Errc::SyntaxError, "lp text missing 'end'");

  for (const PendingRow& row : pending) {
    Constraint c;
    c.tag = row.tag;
    c.sense = row.sense;
    c.rhs = row.rhs;
    for (const auto& [coef, name] : row.terms) {
      auto it = ids.find(name);
      if (it == ids.end()) bad_line(row.lineno, "unknown variable '" + name + "'");
      c.coeffs.emplace_back(it->second, coef);
    }
    lp.constraints.push_back(std::move(c));
  }

  auto obj = ids.find(objective_name);
  if (obj == ids.end())
    throw Error(Errc::SyntaxError, "objective variable '" + objective_name + "' not declared");
  lp.objective_var = obj->second;
  return lp;
}

}  // namespace stab

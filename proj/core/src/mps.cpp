// Copyright 2026 The rankinglp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankinglp/mps.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace rankinglp {

namespace {

constexpr const char* kObjectiveRow = "OBJ";

std::string number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

char sense_code(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual:
      return 'L';
    case RowSense::kGreaterEqual:
      return 'G';
    case RowSense::kEqual:
      return 'E';
  }
  return 'L';
}

double parse_number(const std::string& token, int line) {
  double value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    if (token == "Inf" || token == "inf" || token == "Infinity" ||
        token == "1e+30" || token == "1e30") {
      return kInfinity;
    }
    if (token == "-Inf" || token == "-inf" || token == "-Infinity") {
      return -kInfinity;
    }
    throw InvalidArgument("MPS line " + std::to_string(line) +
                          ": bad number '" + token + "'");
  }
  if (value >= 1e30) return kInfinity;
  if (value <= -1e30) return -kInfinity;
  return value;
}

}  // namespace

void write_mps(const LpProblem& problem, std::ostream& out) {
  problem.validate();
  const auto& vars = problem.variables();
  const auto& rows = problem.constraints();

  // Column-major view of the matrix.
  std::vector<std::vector<std::pair<int, double>>> by_column(vars.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const LpTerm& t : rows[r].terms) {
      by_column[static_cast<std::size_t>(t.var)].emplace_back(
          static_cast<int>(r), t.coef);
    }
  }
  std::vector<double> objective(vars.size(), 0.0);
  for (const LpTerm& t : problem.objective()) {
    objective[static_cast<std::size_t>(t.var)] = t.coef;
  }

  const LpMetadata& meta = problem.metadata();
  out << "* generator " << meta.generator;
  if (meta.family) out << " family " << family_name(*meta.family);
  if (meta.dims) out << " dims " << meta.dims->m() << "x" << meta.dims->n();
  out << "\n";
  out << "NAME rankinglp\n";
  out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n";
  out << " N " << kObjectiveRow << "\n";
  for (const LpConstraint& row : rows) {
    out << " " << sense_code(row.sense) << " " << row.name << "\n";
  }
  out << "COLUMNS\n";
  for (std::size_t c = 0; c < vars.size(); ++c) {
    const std::string& name = vars[c].name;
    if (objective[c] != 0.0) {
      out << " " << name << " " << kObjectiveRow << " " << number(objective[c])
          << "\n";
    }
    for (const auto& [r, coef] : by_column[c]) {
      out << " " << name << " " << rows[static_cast<std::size_t>(r)].name
          << " " << number(coef) << "\n";
    }
    if (objective[c] == 0.0 && by_column[c].empty()) {
      // Keep empty columns declared.
      out << " " << name << " " << kObjectiveRow << " 0\n";
    }
  }
  out << "RHS\n";
  for (const LpConstraint& row : rows) {
    if (row.rhs != 0.0) {
      out << " RHS " << row.name << " " << number(row.rhs) << "\n";
    }
  }
  out << "BOUNDS\n";
  for (const LpVariable& v : vars) {
    const bool lo_inf = v.lower == -kInfinity;
    const bool up_inf = v.upper == kInfinity;
    if (lo_inf && up_inf) {
      out << " FR BND " << v.name << "\n";
      continue;
    }
    if (!lo_inf && !up_inf && v.lower == v.upper) {
      out << " FX BND " << v.name << " " << number(v.lower) << "\n";
      continue;
    }
    if (lo_inf) {
      out << " MI BND " << v.name << "\n";
    } else if (v.lower != 0.0) {
      out << " LO BND " << v.name << " " << number(v.lower) << "\n";
    }
    if (!up_inf) out << " UP BND " << v.name << " " << number(v.upper) << "\n";
  }
  out << "ENDATA\n";
  if (!out) throw Error("failed writing MPS stream");
}

void write_mps(const LpProblem& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_mps(problem, out);
}

LpProblem read_mps(std::istream& in) {
  enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kBounds,
                       kEnd };
  Section section = Section::kNone;

  std::string objective_row;
  bool maximize = false;
  std::unordered_map<std::string, int> row_index;
  std::vector<std::string> row_names;
  std::vector<RowSense> senses;
  std::vector<std::vector<LpTerm>> row_terms;
  std::vector<double> rhs;

  std::unordered_map<std::string, int> col_index;
  std::vector<LpVariable> vars;
  std::vector<LpTerm> objective;

  auto column = [&](const std::string& name) {
    auto [it, fresh] = col_index.try_emplace(name, static_cast<int>(vars.size()));
    if (fresh) vars.push_back({name, 0.0, kInfinity});
    return it->second;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto fail = [&](const std::string& what) {
      throw InvalidArgument("MPS line " + std::to_string(lineno) + ": " + what);
    };

    if (line[0] != ' ' && line[0] != '\t') {
      const std::string& head = tok[0];
      if (head == "NAME") {
        section = Section::kName;
      } else if (head == "OBJSENSE") {
        section = Section::kObjSense;
        if (tok.size() > 1) maximize = tok[1] == "MAX" || tok[1] == "MAXIMIZE";
      } else if (head == "ROWS") {
        section = Section::kRows;
      } else if (head == "COLUMNS") {
        section = Section::kColumns;
      } else if (head == "RHS") {
        section = Section::kRhs;
      } else if (head == "BOUNDS") {
        section = Section::kBounds;
      } else if (head == "ENDATA") {
        section = Section::kEnd;
        break;
      } else if (head == "RANGES") {
        fail("RANGES are not supported");
      } else if (section == Section::kObjSense) {
        maximize = head == "MAX" || head == "MAXIMIZE";
      } else {
        fail("unknown section '" + head + "'");
      }
      continue;
    }

    switch (section) {
      case Section::kObjSense:
        maximize = tok[0] == "MAX" || tok[0] == "MAXIMIZE";
        break;
      case Section::kRows: {
        if (tok.size() != 2) fail("expected '<type> <name>'");
        if (tok[0] == "N") {
          if (objective_row.empty()) objective_row = tok[1];
          break;
        }
        RowSense sense;
        if (tok[0] == "L") {
          sense = RowSense::kLessEqual;
        } else if (tok[0] == "G") {
          sense = RowSense::kGreaterEqual;
        } else if (tok[0] == "E") {
          sense = RowSense::kEqual;
        } else {
          fail("bad row type '" + tok[0] + "'");
        }
        if (!row_index.try_emplace(tok[1], static_cast<int>(row_names.size()))
                 .second) {
          fail("duplicate row '" + tok[1] + "'");
        }
        row_names.push_back(tok[1]);
        senses.push_back(sense);
        row_terms.emplace_back();
        rhs.push_back(0.0);
        break;
      }
      case Section::kColumns: {
        if (tok.size() >= 3 && tok[1] == "'MARKER'") fail("integer markers");
        if (tok.size() != 3 && tok.size() != 5) fail("expected column entries");
        const int col = column(tok[0]);
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double value = parse_number(tok[k + 1], lineno);
          if (tok[k] == objective_row) {
            objective.push_back({col, value});
            continue;
          }
          auto it = row_index.find(tok[k]);
          if (it == row_index.end()) fail("unknown row '" + tok[k] + "'");
          row_terms[static_cast<std::size_t>(it->second)].push_back(
              {col, value});
        }
        break;
      }
      case Section::kRhs: {
        if (tok.size() != 3 && tok.size() != 5) fail("expected rhs entries");
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double value = parse_number(tok[k + 1], lineno);
          if (tok[k] == objective_row) continue;  // objective offset, unused
          auto it = row_index.find(tok[k]);
          if (it == row_index.end()) fail("unknown row '" + tok[k] + "'");
          rhs[static_cast<std::size_t>(it->second)] = value;
        }
        break;
      }
      case Section::kBounds: {
        if (tok.size() < 3) fail("expected '<type> <set> <column> [value]'");
        auto it = col_index.find(tok[2]);
        if (it == col_index.end()) fail("unknown column '" + tok[2] + "'");
        LpVariable& v = vars[static_cast<std::size_t>(it->second)];
        const std::string& type = tok[0];
        const bool has_value = tok.size() >= 4;
        const double value = has_value ? parse_number(tok[3], lineno) : 0.0;
        if ((type == "UP" || type == "LO" || type == "FX") && !has_value) {
          fail("bound " + type + " needs a value");
        }
        if (type == "UP") {
          v.upper = value;
        } else if (type == "LO") {
          v.lower = value;
        } else if (type == "FX") {
          v.lower = v.upper = value;
        } else if (type == "FR") {
          v.lower = -kInfinity;
          v.upper = kInfinity;
        } else if (type == "MI") {
          v.lower = -kInfinity;
        } else if (type == "PL") {
          v.upper = kInfinity;
        } else {
          fail("unsupported bound type '" + type + "'");
        }
        break;
      }
      default:
        if (section != Section::kName) fail("data outside a section");
    }
  }
  if (section != Section::kEnd) throw InvalidArgument("MPS input lacks ENDATA");

  LpProblem problem;
  for (LpVariable& v : vars) problem.add_variable(std::move(v.name), v.lower, v.upper);
  for (std::size_t r = 0; r < row_names.size(); ++r) {
    problem.add_constraint(std::move(row_names[r]), std::move(row_terms[r]),
                           senses[r], rhs[r]);
  }
  if (!maximize) {
    for (LpTerm& t : objective) t.coef = -t.coef;
  }
  problem.set_objective(std::move(objective));
  return problem;
}

LpProblem read_mps(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_mps(in);
}

}  // namespace rankinglp

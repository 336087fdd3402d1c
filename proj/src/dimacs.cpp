#include <charconv>
#include <fstream>
#include <sstream>

#include "tnvqa/oracle.hpp"

namespace tnvqa {

namespace {

long parse_int(std::string_view token, std::size_t line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

void SatInstance::validate() const {
  if (num_vars < 0) throw ValidationError("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].empty()) throw ValidationError("clause " + std::to_string(c + 1) + " is empty");
    for (int lit : clauses[c]) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw ValidationError("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                              " outside [1, " + std::to_string(num_vars) + "]");
      }
    }
  }
}

SatInstance parse_dimacs(std::istream& in) {
  SatInstance sat;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t clause_line = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token[0] == 'c') continue;
    if (token[0] == '%') break;
    if (token == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      std::string format, vars, count, extra;
      if (!(tokens >> format >> vars >> count) || format != "cnf") {
        throw ParseError("problem line must read 'p cnf <vars> <clauses>'", line_no);
      }
      if (tokens >> extra) throw ParseError("trailing tokens on problem line", line_no);
      const long v = parse_int(vars, line_no);
      declared_clauses = parse_int(count, line_no);
      if (v < 0 || declared_clauses < 0) throw ParseError("negative count on problem line", line_no);
      if (v > kMaxQubits * 1000) throw ParseError("variable count too large", line_no);
      sat.num_vars = static_cast<int>(v);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause data before 'p cnf' line", line_no);

    do {
      const long lit = parse_int(token, line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        sat.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > sat.num_vars) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds declared variable count " +
                             std::to_string(sat.num_vars),
                         line_no);
      }
      if (current.empty()) clause_line = line_no;
      current.push_back(static_cast<int>(lit));
    } while (tokens >> token);
  }

  if (!have_header) throw ParseError("missing 'p cnf' problem line", line_no);
  if (!current.empty()) throw ParseError("clause not terminated by 0", clause_line);
  if (static_cast<long>(sat.clauses.size()) != declared_clauses) {
    throw ParseError("clause count mismatch: header declares " + std::to_string(declared_clauses) +
                         ", found " + std::to_string(sat.clauses.size()),
                     line_no);
  }
  return sat;
}

SatInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

SatInstance load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open DIMACS file '" + path + "'");
  return parse_dimacs(in);
}

}  // namespace tnvqa

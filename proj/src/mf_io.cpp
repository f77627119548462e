#include "singcat/mf_io.hpp"

#include <fstream>
#include <sstream>

#include "singcat/parser.hpp"

namespace singcat {

std::string write_mf(const MatrixFactorization& x) {
  std::ostringstream os;
  os << "field: " << x.ambient->field.name() << "\n";
  os << "variables: ";
  for (std::size_t i = 0; i < x.ambient->vars.size(); ++i) {
    if (i) os << ", ";
    os << x.ambient->vars[i];
  }
  os << "\n";
  os << "potential: " << x.potential.str() << "\n";
  os << "rank: " << x.rank() << "\n";
  for (int which = 0; which < 2; ++which) {
    const PolyMatrix& m = which == 0 ? x.a : x.b;
    os << (which == 0 ? "A:" : "B:") << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) os << ", ";
        os << m.at(i, j).str();
      }
      os << "\n";
    }
  }
  return os.str();
}

namespace {

struct LineReader {
  std::istringstream in;
  std::size_t lineno = 0;
  explicit LineReader(const std::string& text) : in(text) {}
  std::string next(const char* what) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;  // skip blank lines
      std::size_t b = line.find_last_not_of(" \t\r");
      return line.substr(a, b - a + 1);
    }
    throw ParseError(std::string("unexpected end of document, expected ") + what, 0);
  }
};

std::string expect_field(LineReader& r, const std::string& key) {
  std::string line = r.next(key.c_str());
  if (line.rfind(key, 0) != 0)
    throw ParseError("expected '" + key + "' on line " + std::to_string(r.lineno), 0);
  std::string val = line.substr(key.size());
  std::size_t a = val.find_first_not_of(" \t");
  return a == std::string::npos ? "" : val.substr(a);
}

PolyMatrix read_matrix(LineReader& r, const AmbientPtr& amb, std::size_t rank) {
  PolyMatrix m(amb, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::string line = r.next("matrix row");
    auto entries = parse_polynomial_list(line, amb);
    if (entries.size() != rank)
      throw ParseError("matrix row " + std::to_string(i) + " has " +
                           std::to_string(entries.size()) + " entries, expected " +
                           std::to_string(rank),
                       0);
    for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = entries[j];
  }
  return m;
}

}  // namespace

MatrixFactorization read_mf(const std::string& text) {
  LineReader r(text);
  std::string field_name = expect_field(r, "field:");
  Field field = Field::rationals();
  if (field_name == "QQ") {
    field = Field::rationals();
  } else if (field_name.size() > 1 && field_name[0] == 'F') {
    field = Field::prime(std::stoul(field_name.substr(1)));
  } else {
    throw ParseError("unknown field '" + field_name + "'", 0);
  }

  std::string vars_line = expect_field(r, "variables:");
  std::vector<std::string> vars;
  std::istringstream vs(vars_line);
  std::string v;
  while (std::getline(vs, v, ',')) {
    std::size_t a = v.find_first_not_of(" \t");
    std::size_t b = v.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty variable name", 0);
    vars.push_back(v.substr(a, b - a + 1));
  }
  AmbientPtr amb = make_ambient(field, std::move(vars));

  Polynomial potential = parse_polynomial(expect_field(r, "potential:"), amb);
  unsigned long rank = std::stoul(expect_field(r, "rank:"));

  if (!expect_field(r, "A:").empty()) throw ParseError("unexpected text after 'A:'", 0);
  PolyMatrix a = read_matrix(r, amb, rank);
  if (!expect_field(r, "B:").empty()) throw ParseError("unexpected text after 'B:'", 0);
  PolyMatrix b = read_matrix(r, amb, rank);

  MatrixFactorization x{amb, std::move(potential), std::move(a), std::move(b)};
  if (!validate(x)) throw HypothesisError("document is not a matrix factorization: AB != f*I");
  return x;
}

MatrixFactorization read_mf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open MF file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_mf(buf.str());
}

}  // namespace singcat

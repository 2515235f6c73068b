#include "suptrop/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "suptrop/errors.hpp"

namespace suptrop {

Matrix parse_stm(std::string_view text) {
  std::vector<Vec> rows;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;

    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    Vec row;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::string_view tok = line.substr(start, i - start);
      try {
        row.push_back(Element::parse(tok));
      } catch (const Error&) {
        throw ParseError(lineno, static_cast<int>(start) + 1,
                         "bad scalar '" + std::string(tok) + "'");
      }
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows[0].size())
        throw ParseError(lineno, 1,
                         "row has " + std::to_string(row.size()) +
                             " entries, expected " +
                             std::to_string(rows[0].size()));
      rows.push_back(std::move(row));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (rows.empty()) throw ParseError(lineno, 1, "empty matrix");
  return Matrix::from_rows(rows);
}

Matrix load_stm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_stm(ss.str());
}

std::string format_stm(const Matrix& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out += " ";
      out += a.at(i, j).str();
    }
    out += "\n";
  }
  return out;
}

Vec parse_stm_vector(std::string_view text) {
  Matrix m = parse_stm(text);
  if (m.rows() != 1 && m.cols() != 1)
    throw ParseError(1, 1, "vector must be a single row or single column, got " +
                               m.shape_str());
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Vec load_stm_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_stm_vector(ss.str());
}

}  // namespace suptrop

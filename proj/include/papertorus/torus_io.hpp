#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "papertorus/configuration.hpp"
#include "papertorus/errors.hpp"

namespace papertorus {

// Torus file format (text, line oriented):
//   papertorus v1
//   precision <digits>
//   vertices <n>
//   <idx> <x> <y> <z>          (n lines, decimal strings)
//   faces <m>
//   <a> <b> <c>                (m lines)
// Decimal strings are preserved verbatim, so write(read(f)) == f for
// canonical files.

inline std::string write_torus_string(const Configuration& c) {
  std::ostringstream os;
  os << "papertorus v1\n";
  os << "precision " << c.precision << '\n';
  os << "vertices " << c.triangulation.vertex_count() << '\n';
  for (int i = 0; i < c.triangulation.vertex_count(); ++i) {
    const auto& p = c.coordinates[i];
    os << i << ' ' << p[0].text() << ' ' << p[1].text() << ' ' << p[2].text()
       << '\n';
  }
  os << "faces " << c.triangulation.face_count() << '\n';
  for (const auto& f : c.triangulation.faces())
    os << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  return os.str();
}

inline void write_torus(const Configuration& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << write_torus_string(c);
}

inline Configuration read_torus_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file");
    ++lineno;
    return line;
  };

  if (next_line() != "papertorus v1")
    throw ParseError(lineno, "expected header 'papertorus v1'");

  unsigned precision = 0;
  {
    std::istringstream ls(next_line());
    std::string key;
    if (!(ls >> key >> precision) || key != "precision" || precision == 0)
      throw ParseError(lineno, "expected 'precision <digits>'");
  }

  int n = 0;
  {
    std::istringstream ls(next_line());
    std::string key;
    if (!(ls >> key >> n) || key != "vertices" || n <= 0)
      throw ParseError(lineno, "expected 'vertices <n>'");
  }

  std::vector<std::array<Decimal, 3>> coords;
  for (int i = 0; i < n; ++i) {
    std::istringstream ls(next_line());
    int idx;
    std::string x, y, z;
    if (!(ls >> idx >> x >> y >> z) || idx != i)
      throw ParseError(lineno, "expected '<idx> <x> <y> <z>' with idx " +
                                   std::to_string(i));
    try {
      coords.push_back({Decimal(x), Decimal(y), Decimal(z)});
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }

  int m = 0;
  int faces_line = 0;
  {
    std::istringstream ls(next_line());
    faces_line = lineno;
    std::string key;
    if (!(ls >> key >> m) || key != "faces" || m <= 0)
      throw ParseError(lineno, "expected 'faces <m>'");
  }
  if (m != 2 * n)
    throw ParseError(faces_line,
                     "Euler violation: a torus triangulation needs F = 2V, got F = " +
                         std::to_string(m) + ", V = " + std::to_string(n));

  std::vector<FaceTriple> faces;
  for (int i = 0; i < m; ++i) {
    std::istringstream ls(next_line());
    int a, b, c;
    if (!(ls >> a >> b >> c))
      throw ParseError(lineno, "expected face '<a> <b> <c>'");
    faces.push_back({a, b, c});
  }

  try {
    return Configuration(Triangulation(n, std::move(faces)), std::move(coords),
                         precision);
  } catch (const Error& e) {
    throw ParseError(faces_line, e.what());
  }
}

inline Configuration read_torus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_torus_string(ss.str());
}

}  // namespace papertorus

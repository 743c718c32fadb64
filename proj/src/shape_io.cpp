#include "diskcert/shape_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_grid_text(std::string_view s) { return s.find_first_not_of("#.") == std::string_view::npos; }

std::vector<int> parse_ints(std::string_view s, int line) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    int v = 0;
    const auto res = std::from_chars(s.data() + i, s.data() + j, v);
    if (res.ec != std::errc{} || res.ptr != s.data() + j) {
      throw InputError("expected an integer, got '" + std::string(s.substr(i, j - i)) + "'", line);
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

CubicalSet parse_shape(std::string_view text) {
  int width = -1;
  int height = -1;
  int rows_seen = 0;
  std::vector<Cell> cells;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const bool grid_like = is_grid_text(line);
    if (line.front() == '#' && !grid_like) continue;

    if (width < 0) {
      const auto v = parse_ints(line, line_no);
      if (v.size() != 2) throw InputError("header must be 'W H'", line_no);
      if (v[0] < 1 || v[1] < 1 || v[0] > kMaxGridSide || v[1] > kMaxGridSide) {
        throw InputError("grid size must be between 1 and " + std::to_string(kMaxGridSide), line_no);
      }
      width = v[0];
      height = v[1];
      continue;
    }
    if (grid_like) {
      if (rows_seen >= height) throw InputError("more grid rows than the header declares", line_no);
      if (static_cast<int>(line.size()) != width) {
        throw InputError("row has " + std::to_string(line.size()) + " characters, expected " +
                             std::to_string(width),
                         line_no);
      }
      for (int x = 0; x < width; ++x)
        if (line[x] == '#') cells.push_back({x, rows_seen});
      ++rows_seen;
      continue;
    }
    if (rows_seen < height) {
      throw InputError("expected a grid row, got '" + std::string(line) + "'", line_no);
    }
    if (line.front() == 'E' || line.front() == 'V') {
      const auto v = parse_ints(line.substr(1), line_no);
      try {
        if (line.front() == 'E') {
          if (v.size() != 4) throw InputError("E line needs 4 integers", line_no);
          const Vertex a{v[0], v[1]};
          const Vertex b{v[2], v[3]};
          const Edge e = Edge::between(a, b);
          if (a.x < 0 || a.y < 0 || b.x < 0 || b.y < 0 || a.x > width || b.x > width || a.y > height ||
              b.y > height) {
            throw InputError("edge outside the grid", line_no);
          }
          edges.push_back(e);
        } else {
          if (v.size() != 2) throw InputError("V line needs 2 integers", line_no);
          if (v[0] < 0 || v[1] < 0 || v[0] > width || v[1] > height) {
            throw InputError("vertex outside the grid", line_no);
          }
          vertices.push_back({v[0], v[1]});
        }
      } catch (const InputError& e) {
        if (e.line() > 0) throw;
        throw InputError(e.what(), line_no);
      }
      continue;
    }
    throw InputError("unrecognized line '" + std::string(line) + "'", line_no);
  }
  if (width < 0) throw InputError("missing header", line_no);
  if (rows_seen < height) {
    throw InputError("expected " + std::to_string(height) + " grid rows, found " + std::to_string(rows_seen),
                     line_no);
  }
  return build_cubical_set(width, height, std::move(cells), std::move(edges), std::move(vertices));
}

std::string serialize_shape(const CubicalSet& set) {
  std::string out = std::to_string(set.width()) + " " + std::to_string(set.height()) + "\n";
  for (int y = 0; y < set.height(); ++y) {
    for (int x = 0; x < set.width(); ++x) out += set.cell(x, y) ? '#' : '.';
    out += '\n';
  }
  for (const Edge& e : set.extra_edges()) out += BoundaryElement::of(e).label() + "\n";
  for (const Vertex& v : set.extra_vertices()) out += BoundaryElement::of(v).label() + "\n";
  return out;
}

CubicalSet load_shape_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_shape(buf.str());
}

std::string shape_digest(const CubicalSet& set) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_shape(set)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace diskcert

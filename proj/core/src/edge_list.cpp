#include "turan_forge/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan_forge::edge_list {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("edge list: bad " + what + " '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::runtime_error("edge list: bad " + what + " '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::string field(const std::string& token, const char* key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw std::runtime_error("edge list header: expected " + prefix +
                             "..., got '" + token + "'");
  }
  return token.substr(prefix.size());
}

}  // namespace

void write(std::ostream& out, const BipartiteGraph& g,
           const std::string& family, std::uint64_t p) {
  out << "turan-forge v1\n";
  out << "p=" << p << " left=" << g.left_size << " right=" << g.right_size
      << " family=" << family << "\n";
  for (std::uint32_t u = 0; u < g.left_size; ++u) {
    for_each_bit(g.adj.row(u), g.adj.words_per_row(), [&](std::uint32_t v) {
      out << u << " " << v << "\n";
    });
  }
}

EdgeListData read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "turan-forge v1") {
    throw std::runtime_error("edge list: missing 'turan-forge v1' header");
  }
  if (!std::getline(in, line)) {
    throw std::runtime_error("edge list: missing size header");
  }
  std::istringstream header(line);
  std::string tp, tl, tr, tf;
  if (!(header >> tp >> tl >> tr >> tf)) {
    throw std::runtime_error("edge list: malformed size header '" + line + "'");
  }
  std::string extra;
  if (header >> extra) {
    throw std::runtime_error("edge list: trailing token '" + extra +
                             "' in size header");
  }

  EdgeListData data;
  data.p = parse_u64(field(tp, "p"), "p");
  const std::uint64_t left = parse_u64(field(tl, "left"), "left size");
  const std::uint64_t right = parse_u64(field(tr, "right"), "right size");
  data.family = field(tf, "family");
  if (data.family.empty()) {
    throw std::runtime_error("edge list header: empty family");
  }
  if (left == 0 || right == 0) {
    throw std::runtime_error("edge list: sides must be nonempty");
  }
  if (left > (std::uint64_t{1} << 21) || right > (std::uint64_t{1} << 21)) {
    throw std::runtime_error("edge list: graph too large");
  }

  data.graph.left_size = static_cast<std::uint32_t>(left);
  data.graph.right_size = static_cast<std::uint32_t>(right);
  data.graph.adj = BitRows(data.graph.left_size, data.graph.right_size);

  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::uint64_t u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra)) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected '<u> <v>', got '" + line + "'");
    }
    if (u >= left || v >= right) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": vertex out of range");
    }
    data.graph.adj.set(static_cast<std::uint32_t>(u),
                       static_cast<std::uint32_t>(v));
  }
  return data;
}

void write_file(const std::string& path, const BipartiteGraph& g,
                const std::string& family, std::uint64_t p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(out, g, family, p);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

EdgeListData read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read(in);
}

}  // namespace turan_forge::edge_list

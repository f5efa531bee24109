#include "cp2tri/io.hpp"

#include <istream>
#include <iterator>
#include <sstream>

#include "cp2tri/error.hpp"

namespace cp2 {

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i].to_string();
  }
  return out + "}";
}

std::string serialize(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "sc dim=" << k.dim() << " nverts=" << k.num_vertices() << '\n';
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) os << ',';
      os << k.vertex(f[i]).to_string();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& why) {
  throw Error(ErrorKind::MalformedInput,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + why);
}

bool takes_second_piece(std::string_view piece) {
  std::size_t i = 0;
  while (i < piece.size() && (piece[i] == ' ' || piece[i] == '\t')) ++i;
  piece.remove_prefix(i);
  return piece.size() >= 2 && piece[1] == ':' && (piece[0] == 'v' || piece[0] == 'm' || piece[0] == 'u');
}

int parse_header_field(std::string_view header, std::string_view key, std::size_t line) {
  const auto pos = header.find(key);
  if (pos == std::string_view::npos) fail_at(line, 1, "header lacks '" + std::string(key) + "'");
  std::size_t end = pos + key.size();
  std::string digits;
  if (end < header.size() && header[end] == '-') digits += header[end++];
  while (end < header.size() && std::isdigit(static_cast<unsigned char>(header[end]))) digits += header[end++];
  try {
    return std::stoi(digits);
  } catch (const std::exception&) {
    fail_at(line, pos + key.size() + 1, "bad integer after '" + std::string(key) + "'");
  }
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  int dim = -1;
  int nverts = 0;
  std::vector<Simplex> facets;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!have_header) {
      if (line.substr(0, 3) != "sc ") fail_at(line_no, 1, "expected header 'sc dim=<d> nverts=<n>'");
      dim = parse_header_field(line, "dim=", line_no);
      nverts = parse_header_field(line, "nverts=", line_no);
      have_header = true;
      continue;
    }
    Simplex facet;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      if (comma == std::string_view::npos) comma = line.size();
      std::size_t token_end = comma;
      if (takes_second_piece(line.substr(pos, comma - pos))) {
        if (comma == line.size()) fail_at(line_no, pos + 1, "label is missing its second coordinate");
        token_end = line.find(',', comma + 1);
        if (token_end == std::string_view::npos) token_end = line.size();
      }
      try {
        facet.push_back(VertexLabel::parse(line.substr(pos, token_end - pos)));
      } catch (const Error& e) {
        fail_at(line_no, pos + 1, e.what());
      }
      pos = token_end + 1;
    }
    try {
      facets.push_back(make_simplex(std::move(facet)));
    } catch (const Error& e) {
      fail_at(line_no, 1, e.what());
    }
  }
  if (!have_header) fail_at(line_no + 1, 1, "missing header");
  auto k = SimplicialComplex::from_facets(facets);
  if (k.dim() != dim) {
    throw Error(ErrorKind::MalformedInput, "header says dim=" + std::to_string(dim) + " but facets give " +
                                               std::to_string(k.dim()));
  }
  if (static_cast<int>(k.num_vertices()) != nverts) {
    throw Error(ErrorKind::MalformedInput, "header says nverts=" + std::to_string(nverts) + " but facets give " +
                                               std::to_string(k.num_vertices()));
  }
  return k;
}

SimplicialComplex read_complex(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_complex(text);
}

nlohmann::json to_json(const SimplicialComplex& k) {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : k.facets()) {
    nlohmann::json row = nlohmann::json::array();
    for (int v : f) row.push_back(k.vertex(v).to_string());
    facets.push_back(std::move(row));
  }
  return {{"dim", k.dim()}, {"nverts", k.num_vertices()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "JSON complex needs a 'facets' array");
  }
  std::vector<Simplex> facets;
  for (const auto& row : j["facets"]) {
    if (!row.is_array()) throw Error(ErrorKind::MalformedInput, "each facet must be an array of labels");
    Simplex s;
    for (const auto& t : row) {
      if (!t.is_string()) throw Error(ErrorKind::MalformedInput, "labels must be strings");
      s.push_back(VertexLabel::parse(t.get<std::string>()));
    }
    facets.push_back(make_simplex(std::move(s)));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace cp2

#include "cp2tri/label.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "cp2tri/error.hpp"

namespace cp2 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::NotAFace: return "not-a-face";
    case ErrorKind::NotPure: return "not-pure";
    case ErrorKind::LabelCollision: return "label-collision";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::IncompleteMap: return "incomplete-map";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::InvalidColouring: return "invalid-colouring";
    case ErrorKind::DegenerateQuotient: return "degenerate-quotient";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::NotAnAutomorphism: return "not-an-automorphism";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_label(std::string_view token, const std::string& why) {
  throw Error(ErrorKind::MalformedInput,
              "bad vertex label '" + std::string(token) + "': " + why);
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::MalformedInput, what);
}

int parse_small(std::string_view token, std::string_view digits) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    bad_label(token, "expected an integer, got '" + std::string(digits) + "'");
  }
  return value;
}

std::pair<int, int> parse_two(std::string_view token, std::string_view body) {
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) bad_label(token, "expected 'x,y'");
  return {parse_small(token, body.substr(0, comma)), parse_small(token, body.substr(comma + 1))};
}

// Parses a product of disjoint cycles over single-digit symbols [lo, lo+n).
template <std::size_t N>
std::array<int, N> parse_cycles(std::string_view token, std::string_view body, int lo) {
  std::array<int, N> images{};
  for (std::size_t i = 0; i < N; ++i) images[i] = static_cast<int>(i) + lo;
  if (body == "e") return images;
  std::array<bool, N> seen{};
  std::size_t pos = 0;
  if (body.empty()) bad_label(token, "empty permutation");
  while (pos < body.size()) {
    if (body[pos] != '(') bad_label(token, "expected '('");
    const auto close = body.find(')', pos);
    if (close == std::string_view::npos) bad_label(token, "unterminated cycle");
    const auto cycle = body.substr(pos + 1, close - pos - 1);
    if (cycle.size() < 2) bad_label(token, "cycle of length < 2");
    std::vector<int> elems;
    for (char ch : cycle) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad_label(token, "non-digit in cycle");
      const int v = ch - '0';
      if (v < lo || v >= lo + static_cast<int>(N)) bad_label(token, "symbol out of range");
      if (seen[v - lo]) bad_label(token, "cycles are not disjoint");
      seen[v - lo] = true;
      elems.push_back(v);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      images[elems[i] - lo] = elems[(i + 1) % elems.size()];
    }
    pos = close + 1;
  }
  return images;
}

}  // namespace

VertexLabel VertexLabel::integer(std::int64_t n) {
  require(n >= 0, "Int label must be nonnegative");
  VertexLabel l;
  l.kind_ = LabelKind::Int;
  l.x_ = n;
  return l;
}

VertexLabel VertexLabel::perm(int partner_of_one) {
  require(partner_of_one >= 2 && partner_of_one <= 4, "Perm label: nu(1) must be 2, 3 or 4");
  VertexLabel l;
  l.kind_ = LabelKind::Perm;
  l.x_ = partner_of_one;
  return l;
}

VertexLabel VertexLabel::pair(int a, int b) {
  require(a >= 1 && a <= 4 && b >= 1 && b <= 3, "Pair label out of range");
  VertexLabel l;
  l.kind_ = LabelKind::Pair;
  l.x_ = a;
  l.y_ = b;
  return l;
}

VertexLabel VertexLabel::mid(int a1, int a2, int b) {
  if (a1 > a2) std::swap(a1, a2);
  require(a1 >= 1 && a2 <= 4 && a1 != a2 && b >= 1 && b <= 3, "Mid label out of range");
  VertexLabel l;
  l.kind_ = LabelKind::Mid;
  l.x_ = a1;
  l.y_ = a2;
  l.z_ = b;
  return l;
}

VertexLabel VertexLabel::grid(int a, int b) {
  VertexLabel l;
  l.kind_ = LabelKind::GridU;
  l.x_ = ((a % 3) + 3) % 3;
  l.y_ = ((b % 3) + 3) % 3;
  return l;
}

VertexLabel VertexLabel::perm_u(std::array<int, 3> images) {
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == std::array<int, 3>{0, 1, 2}, "PermU label must be a permutation of {0,1,2}");
  VertexLabel l;
  l.kind_ = LabelKind::PermU;
  l.x_ = images[0];
  l.y_ = images[1];
  l.z_ = images[2];
  return l;
}

std::int64_t VertexLabel::int_value() const {
  require(kind_ == LabelKind::Int, "not an Int label");
  return x_;
}

int VertexLabel::perm_partner() const {
  require(kind_ == LabelKind::Perm, "not a Perm label");
  return static_cast<int>(x_);
}

std::array<int, 4> VertexLabel::perm_images() const {
  switch (perm_partner()) {
    case 2: return {2, 1, 4, 3};
    case 3: return {3, 4, 1, 2};
    default: return {4, 3, 2, 1};
  }
}

int VertexLabel::a() const {
  require(kind_ == LabelKind::Pair || kind_ == LabelKind::GridU, "label has no 'a' coordinate");
  return static_cast<int>(x_);
}

int VertexLabel::b() const {
  switch (kind_) {
    case LabelKind::Pair:
    case LabelKind::GridU: return y_;
    case LabelKind::Mid: return z_;
    default: throw Error(ErrorKind::MalformedInput, "label has no 'b' coordinate");
  }
}

int VertexLabel::a1() const {
  require(kind_ == LabelKind::Mid, "not a Mid label");
  return static_cast<int>(x_);
}

int VertexLabel::a2() const {
  require(kind_ == LabelKind::Mid, "not a Mid label");
  return y_;
}

std::array<int, 3> VertexLabel::perm_u_images() const {
  require(kind_ == LabelKind::PermU, "not a PermU label");
  return {static_cast<int>(x_), y_, z_};
}

std::string perm3_cycle_string(std::array<int, 3> images) {
  if (images == std::array<int, 3>{0, 1, 2}) return "e";
  std::string out;
  std::array<bool, 3> done{};
  for (int start = 0; start < 3; ++start) {
    if (done[start] || images[start] == start) continue;
    out += '(';
    for (int v = start; !done[v]; v = images[v]) {
      done[v] = true;
      out += static_cast<char>('0' + v);
    }
    out += ')';
  }
  return out;
}

std::string VertexLabel::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case LabelKind::Int: os << x_; break;
    case LabelKind::Perm: {
      int rest[2];
      int k = 0;
      for (int v = 2; v <= 4; ++v)
        if (v != x_) rest[k++] = v;
      os << "p:(1" << x_ << ")(" << rest[0] << rest[1] << ')';
      break;
    }
    case LabelKind::Pair: os << "v:" << x_ << ',' << y_; break;
    case LabelKind::Mid: os << "m:" << x_ << y_ << ',' << z_; break;
    case LabelKind::GridU: os << "u:" << x_ << ',' << y_; break;
    case LabelKind::PermU: os << "k:" << perm3_cycle_string(perm_u_images()); break;
  }
  return os.str();
}

VertexLabel VertexLabel::parse(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  if (token.empty()) bad_label(token, "empty token");
  if (token.size() >= 2 && token[1] == ':') {
    const char tag = token[0];
    const auto body = token.substr(2);
    try {
      switch (tag) {
        case 'p': {
          const auto img = parse_cycles<4>(token, body, 1);
          for (int i = 0; i < 4; ++i) {
            if (img[i] == i + 1 || img[img[i] - 1] != i + 1) bad_label(token, "not a double transposition");
          }
          return perm(img[0]);
        }
        case 'v': {
          auto [a, b] = parse_two(token, body);
          return pair(a, b);
        }
        case 'm': {
          const auto comma = body.find(',');
          if (comma != 2) bad_label(token, "expected 'a1a2,b'");
          return mid(parse_small(token, body.substr(0, 1)), parse_small(token, body.substr(1, 1)),
                     parse_small(token, body.substr(3)));
        }
        case 'u': {
          auto [a, b] = parse_two(token, body);
          if (a < 0 || a > 2 || b < 0 || b > 2) bad_label(token, "GridU coordinates must be in 0..2");
          return grid(a, b);
        }
        case 'k': return perm_u(parse_cycles<3>(token, body, 0));
        default: bad_label(token, "unknown tag");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).find("bad vertex label") == 0) throw;
      bad_label(token, e.what());
    }
  }
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
  if (ec != std::errc() || ptr != token.data() + token.size() || n < 0) bad_label(token, "not a label");
  return integer(n);
}

}  // namespace cp2

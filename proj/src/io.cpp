#include "cyl/io.hpp"

#include <cctype>
#include <charconv>

namespace cyl {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string join_ints(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

namespace {

std::string_view strip_wrappers(std::string_view t, char open, char close) {
  if (t.size() >= 2 && t.front() == open && t.back() == close) t = t.substr(1, t.size() - 2);
  return t;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::string s = trim(text);
  std::string_view t = s;
  if (t.starts_with("c=")) t.remove_prefix(2);
  t = strip_wrappers(t, '(', ')');
  t = strip_wrappers(t, '[', ']');
  std::vector<int> out;
  if (trim(t).empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t next = t.find(',', pos);
    if (next == std::string_view::npos) next = t.size();
    std::string item = trim(t.substr(pos, next - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("bad integer '" + item + "' in '" + std::string(text) + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

std::string to_string(const Profile& c) { return "(" + join_ints(c.parts()) + ")"; }
std::string to_string(const Shape& s) { return "(" + join_ints(s.parts()) + ")"; }
std::string to_string(const Partition& p) { return join_ints(p.parts()); }

std::string to_text(const CylindricPartition& L) {
  std::string out = "c=" + to_string(L.profile()) + " ";
  for (int i = 0; i < L.profile().rank(); ++i) {
    if (i) out += "|";
    out += to_string(L.row(i));
  }
  return out;
}

std::string to_text(const Slice& s) { return "c=" + to_string(s.profile()) + " [" + join_ints(s.lengths()) + "]"; }

Profile parse_profile(std::string_view text) { return Profile(parse_int_list(text)); }
Shape parse_shape(std::string_view text) { return Shape(parse_int_list(text)); }
Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

CylindricPartition parse_rows(std::string_view text, const Profile& c) {
  std::vector<Partition> rows;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find('|', pos);
    rows.push_back(parse_partition(text.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return validate(std::move(rows), c);
}

CylindricPartition parse_cylindric(std::string_view text) {
  std::string s = trim(text);
  if (!s.starts_with("c=")) throw ParseError("expected 'c=(...)' prefix in '" + s + "'");
  const std::size_t close = s.find(')');
  if (close == std::string::npos) throw ParseError("unterminated profile in '" + s + "'");
  Profile c = parse_profile(std::string_view(s).substr(0, close + 1));
  return parse_rows(trim(std::string_view(s).substr(close + 1)), c);
}

Slice parse_slice(std::string_view text, const Profile& c) {
  std::string s = trim(text);
  std::string_view t = s;
  if (t.starts_with("c=")) {
    const std::size_t close = t.find(')');
    if (close == std::string_view::npos) throw ParseError("unterminated profile in '" + s + "'");
    if (parse_profile(t.substr(0, close + 1)) != c) throw ParseError("slice profile differs");
    t.remove_prefix(close + 1);
  }
  return Slice(c, parse_int_list(t));
}

}  // namespace cyl

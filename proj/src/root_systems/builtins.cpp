#include <cctype>
#include <string>

#include "k3le/root_system.hpp"

namespace k3le {

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      s += '-';
      i += 2;
    } else if (text.substr(i, 3) == "\xE2\x8A\x95") {  // U+2295 circled plus
      s += '+';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  return s;
}

std::vector<std::string> split_sum(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '<' || ch == '(') ++depth;
    if (ch == '>' || ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);
  return terms;
}

Int parse_int(const std::string& s, std::string_view whole) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument("unknown lattice name: " + std::string(whole));
  return v;
}

IntMatrix base_gram(const std::string& base, std::string_view whole) {
  if (base == "U") return IntMatrix{{0, 1}, {1, 0}};
  if (base == "E10") return e10::lattice().gram();
  if (base == "II_1_9") return block_diagonal(IntMatrix{{0, 1}, {1, 0}}, -ade_gram({RootFamily::E, 8}));
  if (base.size() >= 3 && base.front() == '<' && base.back() == '>') {
    const Int m = parse_int(base.substr(1, base.size() - 2), whole);
    if (m == 0) throw InvalidArgument("rank one lattice <0> is degenerate");
    return IntMatrix{{m}};
  }
  if (base.size() >= 2 && (base[0] == 'A' || base[0] == 'D' || base[0] == 'E')) {
    const Int n = parse_int(base.substr(1), whole);
    const RootFamily fam = base[0] == 'A' ? RootFamily::A : base[0] == 'D' ? RootFamily::D : RootFamily::E;
    try {
      const RootSystemLabel label({{fam, static_cast<int>(n)}});
      return ade_gram(label.components().front());
    } catch (const InvalidArgument&) {
      throw InvalidArgument("unknown lattice name: " + std::string(whole));
    }
  }
  throw InvalidArgument("unknown lattice name: " + std::string(whole));
}

GramLattice parse_term(const std::string& term, std::string_view whole) {
  if (term.empty()) throw InvalidArgument("unknown lattice name: " + std::string(whole));
  std::size_t pos = 0;
  Int mult = 1;
  if (std::isdigit(static_cast<unsigned char>(term[0]))) {
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    mult = parse_int(term.substr(0, pos), whole);
    if (mult == 0) throw InvalidArgument("zero multiplicity in " + std::string(whole));
  }
  std::string base = term.substr(pos);
  Int scale = 1;
  if (!base.empty() && base.back() == ')') {
    const std::size_t open = base.rfind('(');
    if (open == std::string::npos || open == 0) throw InvalidArgument("unknown lattice name: " + std::string(whole));
    scale = parse_int(base.substr(open + 1, base.size() - open - 2), whole);
    base = base.substr(0, open);
  }
  GramLattice one(base_gram(base, whole));
  if (scale != 1) one = rescale(one, scale);
  IntMatrix g;
  for (Int i = 0; i < mult; ++i) g = block_diagonal(g, one.gram());
  return GramLattice(std::move(g));
}

}  // namespace

GramLattice builtin_gram(std::string_view name) {
  const std::string s = normalize(name);
  if (s.empty()) throw InvalidArgument("empty lattice name");
  IntMatrix g;
  for (const std::string& term : split_sum(s)) g = block_diagonal(g, parse_term(term, name).gram());
  return GramLattice(std::move(g));
}

}  // namespace k3le

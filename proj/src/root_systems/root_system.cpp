#include "k3le/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "k3le/short_vectors.hpp"

namespace k3le {

RootSystemLabel::RootSystemLabel(std::vector<RootComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    const bool ok = c.rank >= 1 && (c.family != RootFamily::D || c.rank >= 4) &&
                    (c.family != RootFamily::E || (c.rank >= 6 && c.rank <= 8));
    if (!ok) throw InvalidArgument("not a finite ADE component");
  }
  std::sort(components_.begin(), components_.end(), [](const RootComponent& a, const RootComponent& b) {
    if (a.family != b.family) return a.family > b.family;
    return a.rank > b.rank;
  });
}

RootSystemLabel RootSystemLabel::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // "⊕" is three bytes in UTF-8
    if (text.substr(i, 3) == "\xE2\x8A\x95") {
      s += '+';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  std::vector<RootComponent> out;
  if (s.empty()) return RootSystemLabel();
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::size_t pos = 0;
    int mult = 1;
    if (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
      mult = 0;
      while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) mult = mult * 10 + (term[pos++] - '0');
    }
    if (pos >= term.size()) throw InvalidArgument("bad root system label: " + std::string(text));
    RootFamily fam;
    switch (term[pos]) {
      case 'A': fam = RootFamily::A; break;
      case 'D': fam = RootFamily::D; break;
      case 'E': fam = RootFamily::E; break;
      default: throw InvalidArgument("bad root system label: " + std::string(text));
    }
    ++pos;
    if (pos >= term.size()) throw InvalidArgument("bad root system label: " + std::string(text));
    int rank = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) rank = rank * 10 + (term[pos++] - '0');
    if (pos != term.size() || rank == 0) throw InvalidArgument("bad root system label: " + std::string(text));
    for (int m = 0; m < mult; ++m) out.push_back({fam, rank});
  }
  return RootSystemLabel(std::move(out));
}

int RootSystemLabel::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string RootSystemLabel::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!first) os << '+';
    first = false;
    if (j - i > 1) os << (j - i);
    const char letter = components_[i].family == RootFamily::A ? 'A' : components_[i].family == RootFamily::D ? 'D' : 'E';
    os << letter << components_[i].rank;
    i = j;
  }
  return os.str();
}

Int root_count_formula(const RootComponent& c) {
  const Int n = c.rank;
  switch (c.family) {
    case RootFamily::A:
      return n * (n + 1);
    case RootFamily::D:
      return 2 * n * (n - 1);
    case RootFamily::E:
      return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

Int root_count_formula(const RootSystemLabel& label) {
  Int total = 0;
  for (const auto& c : label.components()) total += root_count_formula(c);
  return total;
}

IntMatrix ade_gram(const RootComponent& c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  auto edge = [&](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = -1; };
  switch (c.family) {
    case RootFamily::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case RootFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case RootFamily::E:
      // Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4
      edge(0, 2);
      edge(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
  }
  return g;
}

GramLattice builtin_gram(const RootSystemLabel& label) {
  IntMatrix g;
  for (const auto& c : label.components()) g = block_diagonal(g, ade_gram(c));
  return GramLattice(std::move(g));
}

std::vector<Vector> enumerate_roots(const GramLattice& lattice) {
  if (!lattice.is_definite()) throw InvalidArgument("root enumeration needs a definite lattice");
  const IntMatrix g = lattice.is_positive_definite() ? lattice.gram() : -lattice.gram();
  const ShortVectorEnumerator enumerator(g);
  std::vector<Vector> roots;
  enumerator.walk(2, true, [&](std::span<const Int> y, Int) {
    roots.push_back(enumerator.to_original(y));
    return true;
  });
  std::sort(roots.begin(), roots.end());
  return roots;
}

Int orthogonal_root_count(const GramLattice& lattice, std::span<const Int> d) {
  if (is_zero(d)) throw InvalidArgument("orthogonal_root_count of the zero vector");
  const Vector dv(d.begin(), d.end());
  const Complement comp = orthogonal_complement(lattice, std::span<const Vector>(&dv, 1));
  if (comp.lattice.rank() == 0) return 0;
  if (!comp.lattice.is_definite()) {
    throw InvalidArgument("orthogonal complement is not definite (vector of non-positive norm?)");
  }
  const IntMatrix g = comp.lattice.is_positive_definite() ? comp.lattice.gram() : -comp.lattice.gram();
  return static_cast<Int>(ShortVectorEnumerator(g).count_shell(2));
}

}  // namespace k3le

#include "picc/catalog.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "picc/errors.hpp"

namespace picc {

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("cyclic order must be >= 1");
  return {Family::cyclic, n, {}};
}

GroupSpec GroupSpec::dihedral(std::uint64_t order) {
  if (order < 4 || order % 2 != 0)
    throw InvalidArgument("dihedral order must be even and >= 4");
  return {Family::dihedral, order, {}};
}

GroupSpec GroupSpec::quaternion() { return {Family::quaternion, 8, {}}; }

GroupSpec GroupSpec::symmetric(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("symmetric degree must be >= 1");
  return {Family::symmetric, n, {}};
}

GroupSpec GroupSpec::alternating(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("alternating degree must be >= 1");
  return {Family::alternating, n, {}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.size() < 2)
    throw InvalidArgument("a direct product needs at least two factors");
  std::vector<GroupSpec> flat;
  for (auto& f : factors) {
    if (f.family == Family::product)
      flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    else
      flat.push_back(std::move(f));
  }
  return {Family::product, 0, std::move(flat)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

GroupSpec parse_factor(std::string_view name) {
  name = trim(name);
  if (name.size() < 2) throw InvalidArgument("bad group name '" + std::string(name) + "'");
  std::uint64_t n = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidArgument("bad group name '" + std::string(name) + "'");
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
    if (n > 1'000'000) throw InvalidArgument("group parameter too large");
  }
  switch (name[0]) {
    case 'C':
      return GroupSpec::cyclic(n);
    case 'D':
      return GroupSpec::dihedral(n);
    case 'Q':
      if (n != 8) throw InvalidArgument("only Q8 is in the catalog");
      return GroupSpec::quaternion();
    case 'S':
      return GroupSpec::symmetric(n);
    case 'A':
      return GroupSpec::alternating(n);
    default:
      throw InvalidArgument("unknown group family '" + std::string(name) + "'");
  }
}

BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view name) {
  std::vector<GroupSpec> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = name.find(" x ", start);
    parts.push_back(parse_factor(name.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 3;
  }
  if (parts.size() == 1) return parts.front();
  return product(std::move(parts));
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::cyclic:
      return "C" + std::to_string(parameter);
    case Family::dihedral:
      return "D" + std::to_string(parameter);
    case Family::quaternion:
      return "Q8";
    case Family::symmetric:
      return "S" + std::to_string(parameter);
    case Family::alternating:
      return "A" + std::to_string(parameter);
    case Family::product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].name();
      }
      return s;
    }
  }
  return {};
}

BigInt GroupSpec::expected_order() const {
  switch (family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::quaternion:
      return parameter;
    case Family::symmetric:
      return factorial(parameter);
    case Family::alternating:
      return parameter < 2 ? BigInt(1) : BigInt(factorial(parameter) / 2);
    case Family::product: {
      BigInt n = 1;
      for (const auto& f : factors) n *= f.expected_order();
      return n;
    }
  }
  return 0;
}

std::size_t GroupSpec::degree() const {
  switch (family) {
    case Family::cyclic:
    case Family::symmetric:
    case Family::alternating:
      return parameter;
    case Family::dihedral:
      return parameter == 4 ? 4 : parameter / 2;
    case Family::quaternion:
      return 8;
    case Family::product: {
      std::size_t d = 0;
      for (const auto& f : factors) d += f.degree();
      return d;
    }
  }
  return 0;
}

namespace {

Permutation cycle_on(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> v;
  for (Point i = from; i < to; ++i) v.push_back(i);
  return v;
}

PermGroup build_quaternion() {
  // Units 1, -1, i, -i, j, -j, k, -k indexed 0..7; each unit is a sign and
  // an axis (0 = real, 1 = i, 2 = j, 3 = k).
  auto unit = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
  auto multiply = [&](int a, int b) {
    int sa = (a % 2) ? -1 : 1, xa = a / 2;
    int sb = (b % 2) ? -1 : 1, xb = b / 2;
    int sign = sa * sb, axis;
    if (xa == 0) {
      axis = xb;
    } else if (xb == 0) {
      axis = xa;
    } else if (xa == xb) {
      axis = 0;
      sign = -sign;
    } else {
      // i*j = k, j*k = i, k*i = j; reversed order flips the sign
      axis = 6 - xa - xb;
      if ((xb - xa + 3) % 3 != 1) sign = -sign;
    }
    return unit(sign, axis);
  };
  std::vector<Permutation> gens;
  for (int g : {unit(1, 1), unit(1, 2)}) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) images[x] = static_cast<Point>(multiply(g, x));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(8, std::move(gens));
}

PermGroup build_family(const GroupSpec& spec) {
  const auto n = static_cast<Point>(spec.parameter);
  const std::size_t d = spec.degree();
  switch (spec.family) {
    case GroupSpec::Family::cyclic:
      return PermGroup(d, {cycle_on(d, range(0, n))});
    case GroupSpec::Family::dihedral: {
      if (spec.parameter == 4)
        return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                             Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
      // rotation and the reflection i -> -i mod m
      const Point m = n / 2;
      std::vector<Point> reflect(m);
      for (Point i = 0; i < m; ++i) reflect[i] = (m - i) % m;
      return PermGroup(d, {cycle_on(d, range(0, m)), Permutation(reflect)});
    }
    case GroupSpec::Family::quaternion:
      return build_quaternion();
    case GroupSpec::Family::symmetric:
      if (n < 2) return PermGroup::trivial(d);
      if (n == 2) return PermGroup(d, {cycle_on(d, {0, 1})});
      return PermGroup(d, {cycle_on(d, {0, 1}), cycle_on(d, range(0, n))});
    case GroupSpec::Family::alternating:
      if (n < 3) return PermGroup::trivial(d);
      if (n == 3) return PermGroup(d, {cycle_on(d, {0, 1, 2})});
      // (0 1 2) with an n-cycle (n odd) or an (n-1)-cycle on 1..n-1 (n even)
      return PermGroup(d, {cycle_on(d, {0, 1, 2}),
                           n % 2 ? cycle_on(d, range(0, n))
                                 : cycle_on(d, range(1, n))});
    case GroupSpec::Family::product:
      break;
  }
  throw InvalidArgument("not a family spec");
}

}  // namespace

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      if (g.is_identity()) continue;
      std::vector<Point> images(degree);
      for (Point x = 0; x < degree; ++x) images[x] = x;
      for (Point x = 0; x < f.degree(); ++x)
        images[offset + x] = static_cast<Point>(offset + g(x));
      gens.push_back(Permutation::from_images_unchecked(std::move(images)));
    }
    offset += f.degree();
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup build(const GroupSpec& spec, const Limits& limits) {
  if (spec.degree() > limits.max_degree)
    throw ResourceLimit("degree cap", spec.name() + " needs " +
                                          std::to_string(spec.degree()) +
                                          " points > " +
                                          std::to_string(limits.max_degree));
  if (spec.family != GroupSpec::Family::product) return build_family(spec);
  std::vector<PermGroup> parts;
  for (const auto& f : spec.factors) parts.push_back(build(f, limits));
  return direct_product(parts);
}

// --- GroupFile -------------------------------------------------------------

namespace {

Permutation parse_generator_line(std::string_view line, std::size_t degree,
                                 std::size_t line_no) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
  };
  skip_space();
  if (i == line.size()) throw ParseError(line_no, "malformed cycle: empty generator");
  while (i < line.size()) {
    if (line[i] != '(') throw ParseError(line_no, "malformed cycle: expected '('");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i == line.size()) throw ParseError(line_no, "malformed cycle: missing ')'");
      if (line[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError(line_no, std::string("malformed cycle: unexpected '") +
                                      line[i] + "'");
      std::uint64_t x = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        x = x * 10 + static_cast<std::uint64_t>(line[i] - '0');
        if (x > degree) x = degree;  // saturate; reported below
        ++i;
      }
      if (x >= degree)
        throw ParseError(line_no, "point out of range (degree " +
                                      std::to_string(degree) + ")");
      if (seen[x])
        throw ParseError(line_no, "duplicate point " + std::to_string(x) +
                                      " within a cycle line");
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

PermGroup parse_group_file(std::string_view text, const Limits& limits) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!degree) {
      if (line.substr(0, 6) != "degree" || line.size() < 8 ||
          !std::isspace(static_cast<unsigned char>(line[6])))
        throw ParseError(line_no, "expected 'degree <n>'");
      std::string_view num = trim(line.substr(6));
      std::uint64_t n = 0;
      if (num.empty()) throw ParseError(line_no, "expected 'degree <n>'");
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(line_no, "degree is not a number");
        n = n * 10 + static_cast<std::uint64_t>(c - '0');
        if (n > limits.max_degree)
          throw ResourceLimit("degree cap", "line " + std::to_string(line_no) +
                                                ": degree above " +
                                                std::to_string(limits.max_degree));
      }
      if (n == 0) throw ParseError(line_no, "degree must be positive");
      degree = n;
      continue;
    }
    gens.push_back(parse_generator_line(line, *degree, line_no));
  }
  if (!degree) throw ParseError(line_no, "missing 'degree <n>' line");
  return PermGroup(*degree, std::move(gens));
}

PermGroup read_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), limits);
}

std::string serialize_group_file(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) out += p.to_cycle_string() + "\n";
  return out;
}

// --- Census ----------------------------------------------------------------

std::vector<CensusEntry> census(const CensusConfig& config,
                                const Limits& limits) {
  std::vector<GroupSpec> families;
  for (auto n : config.cyclic) families.push_back(GroupSpec::cyclic(n));
  for (auto n : config.dihedral) families.push_back(GroupSpec::dihedral(n));
  if (config.quaternion) families.push_back(GroupSpec::quaternion());
  for (auto n : config.symmetric) families.push_back(GroupSpec::symmetric(n));
  for (auto n : config.alternating) families.push_back(GroupSpec::alternating(n));

  std::vector<GroupSpec> kept;
  for (auto& f : families)
    if (f.expected_order() <= config.max_order && f.degree() <= limits.max_degree)
      kept.push_back(std::move(f));

  std::vector<GroupSpec> specs = kept;
  if (config.products) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (kept[i].expected_order() == 1) continue;
      for (std::size_t j = i; j < kept.size(); ++j) {
        if (kept[j].expected_order() == 1) continue;
        auto p = GroupSpec::product({kept[j], kept[i]});
        if (p.expected_order() <= config.max_order &&
            p.degree() <= limits.max_degree)
          specs.push_back(std::move(p));
      }
    }
  }
  std::vector<CensusEntry> out;
  for (auto& s : specs) {
    PermGroup g = build(s, limits);
    out.push_back({s.name(), std::move(s), std::move(g)});
  }
  return out;
}

}  // namespace picc

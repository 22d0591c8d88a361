#include "pvalg/pv_catalog.hpp"

#include <charconv>
#include <sstream>

#include "pvalg/errors.hpp"

namespace pvalg {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D1: return "D1";
    case Family::D2: return "D2";
    case Family::E7: return "E7";
    case Family::Custom: return "custom";
  }
  return "?";
}

Rational structure_constant(int n, int k) {
  if (n < 1) throw OutOfRange("structure constant needs n >= 1");
  return Rational(2) * Rational(k - (n + 1)) / Rational(n * (n + 1));
}

namespace {

PVType make(Family f, int size, int n, int k) {
  PVType pv{f, size, n, k, Rational(0)};
  if (n >= 1) pv.d = structure_constant(n, k);
  return pv;
}

void require_size(bool ok, Family f, int size) {
  if (!ok)
    throw OutOfRange("size parameter " + std::to_string(size) + " out of range for family " +
                     family_name(f));
}

}  // namespace

PVType builtin(Family family, int size) {
  switch (family) {
    case Family::A:
      require_size(size >= 1, family, size);
      return make(family, size, size - 1, size * size);
    case Family::B:
      require_size(size >= 3, family, size);
      return make(family, size, 1, 2 * size - 2);
    case Family::C:
      require_size(size >= 1, family, size);
      return make(family, size, size - 1, size * (size + 1) / 2);
    case Family::D1:
      require_size(size >= 2, family, size);
      return make(family, size, 1, 2 * size - 1);
    case Family::E7:
      return make(family, 0, 2, 27);
    case Family::D2:
      throw OutOfRange("the D2 row is only available through custom(n, k)");
    case Family::Custom:
      throw OutOfRange("use custom(n, k) for custom entries");
  }
  throw OutOfRange("unknown family");
}

PVType custom(int n, int k) {
  if (n < 1) throw OutOfRange("custom entries need n >= 1");
  if (k <= n + 1) throw OutOfRange("custom entries need k > n+1");
  return make(Family::Custom, 0, n, k);
}

PVType quadratic(int k) {
  if (k < 3) throw OutOfRange("quadratic family needs k >= 3");
  if (k % 2 == 0) return builtin(Family::B, (k + 2) / 2);
  return builtin(Family::D1, (k + 1) / 2);
}

std::string PVType::name() const {
  switch (family) {
    case Family::E7: return "E7";
    case Family::Custom: return "custom:" + std::to_string(n) + ":" + std::to_string(k);
    default: return family_name(family) + ":" + std::to_string(size);
  }
}

std::string PVType::to_json() const {
  std::ostringstream os;
  os << R"({"name":")" << name() << R"(","family":")" << family_name(family) << R"(","n":)" << n
     << R"(,"k":)" << k << R"(,"d":")" << d.to_string() << R"("})";
  return os.str();
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer in PV selector '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(':', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

PVType parse_pv(std::string_view selector) {
  const auto parts = split(selector);
  const std::string_view head = parts[0];
  if (head == "E7" && parts.size() == 1) return builtin(Family::E7);
  if (head == "custom" && parts.size() == 3)
    return custom(parse_int(parts[1], selector), parse_int(parts[2], selector));
  if ((head == "quadratic" || head == "quad") && parts.size() == 2)
    return quadratic(parse_int(parts[1], selector));
  if (parts.size() == 2) {
    const int size = parse_int(parts[1], selector);
    if (head == "A") return builtin(Family::A, size);
    if (head == "B") return builtin(Family::B, size);
    if (head == "C") return builtin(Family::C, size);
    if (head == "D1") return builtin(Family::D1, size);
    if (head == "D2") return builtin(Family::D2, size);
  }
  throw ParseError("unknown PV selector '" + std::string(selector) + "'");
}

std::vector<PVType> builtin_entries() {
  return {builtin(Family::A, 2),  builtin(Family::A, 3),  builtin(Family::A, 4),
          builtin(Family::B, 3),  builtin(Family::B, 4),  builtin(Family::C, 2),
          builtin(Family::C, 3),  builtin(Family::C, 4),  builtin(Family::D1, 3),
          builtin(Family::E7)};
}

}  // namespace pvalg

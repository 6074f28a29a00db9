#include "padicfrac/algorithm.hpp"

#include <charconv>
#include <stdexcept>

namespace padicfrac {

AlgorithmId AlgorithmId::rblock(int r) {
  if (r < 3) throw std::invalid_argument("rblock: block length must be >= 3");
  return {Kind::kRBlock, r};
}

std::optional<AlgorithmId> AlgorithmId::parse(const std::string& name) {
  if (name == "browkin1") return browkin1();
  if (name == "browkin4") return browkin4();
  if (name == "murru") return murru();
  if (name == "new") return new_alg();
  if (name == "neww") return neww();
  if (name == "modified") return modified();
  if (name.rfind("rblock", 0) == 0) {
    std::string tail = name.substr(6);
    if (!tail.empty() && tail[0] == ':') tail.erase(0, 1);
    int r = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), r);
    if (tail.empty() || ec != std::errc() || ptr != tail.data() + tail.size() || r < 3) return std::nullopt;
    return rblock(r);
  }
  return std::nullopt;
}

std::string AlgorithmId::name() const {
  switch (kind) {
    case Kind::kBrowkin1: return "browkin1";
    case Kind::kBrowkin4: return "browkin4";
    case Kind::kMurru: return "murru";
    case Kind::kNew: return "new";
    case Kind::kNeww: return "neww";
    case Kind::kModified: return "modified";
    case Kind::kRBlock: return "rblock" + std::to_string(r);
  }
  return "?";
}

long AlgorithmId::phase_modulus() const {
  switch (kind) {
    case Kind::kNew: return 1;
    case Kind::kModified: return 3;
    case Kind::kRBlock: return r;
    default: return 2;
  }
}

}  // namespace padicfrac

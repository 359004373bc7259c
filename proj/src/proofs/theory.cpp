#include <charconv>

#include "twb/proofs.hpp"

namespace twb {

namespace {

struct BaseName {
  TheoryBase base;
  const char* name;
};

constexpr BaseName kBases[] = {
    {TheoryBase::BT, "BT"},       {TheoryBase::BTcl, "BTcl"},           {TheoryBase::SA, "SA"},
    {TheoryBase::Ar, "Ar"},       {TheoryBase::ArACBang, "ArACBang"}, {TheoryBase::ArDelta11C, "ArDelta11C"},
    {TheoryBase::PATr, "PATr"},
};

bool isArBase(TheoryBase b) {
  return b == TheoryBase::Ar || b == TheoryBase::ArACBang || b == TheoryBase::ArDelta11C;
}

}  // namespace

Language TheoryId::language() const {
  switch (base) {
    case TheoryBase::BT:
    case TheoryBase::BTcl: return Language::BT;
    case TheoryBase::SA: return Language::SA;
    case TheoryBase::PATr: return Language::PATr;
    default: return Language::Ar;
  }
}

bool TheoryId::classical() const { return base != TheoryBase::BT; }

TheoryId parseTheoryId(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  TheoryId id;
  bool found = false;
  for (const auto& b : kBases) {
    if (parts[0] == b.name) {
      id.base = b.base;
      found = true;
    }
  }
  if (!found) throw DomainError("unknown theory '" + std::string(text) + "'");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto p = parts[i];
    if (p == "r" && !id.restrictedInduction) {
      id.restrictedInduction = true;
    } else if (!p.empty() && !id.level && !id.restrictedInduction) {
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
      if (ec != std::errc{} || ptr != p.data() + p.size() || v > 4096)
        throw DomainError("bad fragment level in theory '" + std::string(text) + "'");
      id.level = v;
    } else {
      throw DomainError("malformed theory '" + std::string(text) + "'");
    }
  }
  if (isArBase(id.base) && (id.level || id.restrictedInduction))
    throw DomainError("the Ar theories take neither a level nor the restricted-induction flag");
  return id;
}

std::string theoryName(const TheoryId& t) {
  std::string out;
  for (const auto& b : kBases)
    if (b.base == t.base) out = b.name;
  if (t.level) out += ":" + std::to_string(*t.level);
  if (t.restrictedInduction) out += ":r";
  return out;
}

}  // namespace twb

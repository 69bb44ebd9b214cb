#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pm {

enum class BKCase { Ia, Ib, Ic, Id, IIa, IIb, IIIa, IIIb, IIIc, IIId };
enum class ReprCase { GIa, GIb, GIc, GId, CIa, CIb, GIIa, GIIb, GIIc, GIId };

inline constexpr std::array<BKCase, 10> kAllBKCases = {BKCase::Ia,   BKCase::Ib,   BKCase::Ic,   BKCase::Id,
                                                      BKCase::IIa,  BKCase::IIb,  BKCase::IIIa, BKCase::IIIb,
                                                      BKCase::IIIc, BKCase::IIId};

std::string to_string(BKCase c);
std::string to_string(ReprCase c);
std::optional<BKCase> parse_bk(std::string_view s);
std::optional<ReprCase> parse_repr(std::string_view s);

ReprCase to_repr(BKCase c);
BKCase to_bk(ReprCase c);

}  // namespace pm

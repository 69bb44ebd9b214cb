#include "polymaass/labels.hpp"

namespace pm {

namespace {
constexpr std::array<const char*, 10> kBKNames = {"Ia", "Ib", "Ic", "Id", "IIa", "IIb", "IIIa", "IIIb", "IIIc", "IIId"};
constexpr std::array<const char*, 10> kReprNames = {"GIa", "GIb", "GIc", "GId", "CIa",
                                                    "CIb", "GIIa", "GIIb", "GIIc", "GIId"};
// Position i of the BK list maps to the representation label at kBKToRepr[i].
constexpr std::array<ReprCase, 10> kBKToRepr = {ReprCase::GIa,  ReprCase::GIc,  ReprCase::GId,  ReprCase::GIb,
                                                ReprCase::CIa,  ReprCase::CIb,  ReprCase::GIIa, ReprCase::GIIb,
                                                ReprCase::GIIc, ReprCase::GIId};
}  // namespace

std::string to_string(BKCase c) { return kBKNames[static_cast<size_t>(c)]; }
std::string to_string(ReprCase c) { return kReprNames[static_cast<size_t>(c)]; }

std::optional<BKCase> parse_bk(std::string_view s) {
    for (size_t i = 0; i < kBKNames.size(); ++i)
        if (s == kBKNames[i]) return static_cast<BKCase>(i);
    return std::nullopt;
}

std::optional<ReprCase> parse_repr(std::string_view s) {
    for (size_t i = 0; i < kReprNames.size(); ++i)
        if (s == kReprNames[i]) return static_cast<ReprCase>(i);
    return std::nullopt;
}

ReprCase to_repr(BKCase c) { return kBKToRepr[static_cast<size_t>(c)]; }

BKCase to_bk(ReprCase c) {
    for (size_t i = 0; i < kBKToRepr.size(); ++i)
        if (kBKToRepr[i] == c) return static_cast<BKCase>(i);
    return BKCase::Ia;
}

}  // namespace pm

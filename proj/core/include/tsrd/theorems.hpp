#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tsrd {

// One id per checkable statement; order here fixes report column order.
enum class TheoremId {
    OBS1,
    OBS_O2,
    OBS_AB,
    NEW1,
    OBS_O3,
    PATH_R,
    PATH_TR,
    AH_EQ_N_TR,
    TH4,
    TH5,
    TH6,
    THM_S,
    THM_GIRTH_EQ,
    PROP_MINDEG,
    PROP_DIAM2,
    PROP_DIAMPATH,
    PROP_GIRTH,
    THM_TSTRD_EQ_N,
    PROP_NG,
    THM_2STRD,
    PROP_EQ_GT,
    PROP_GT_PLUS1,
    PROP_CEIL_GT,
    THM_THREE,
    PROP_3N2,
    LEM_LEAVES_ZERO,
    THM_TREE_GT,
    THM_TREE_NS,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);
const std::vector<TheoremId>& all_theorems();

}  // namespace tsrd

#include "tsrd/theorems.hpp"

namespace tsrd {

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::OBS1: return "OBS1";
        case TheoremId::OBS_O2: return "OBS_O2";
        case TheoremId::OBS_AB: return "OBS_AB";
        case TheoremId::NEW1: return "NEW1";
        case TheoremId::OBS_O3: return "OBS_O3";
        case TheoremId::PATH_R: return "PATH_R";
        case TheoremId::PATH_TR: return "PATH_TR";
        case TheoremId::AH_EQ_N_TR: return "AH_EQ_N_TR";
        case TheoremId::TH4: return "TH4";
        case TheoremId::TH5: return "TH5";
        case TheoremId::TH6: return "TH6";
        case TheoremId::THM_S: return "THM_S";
        case TheoremId::THM_GIRTH_EQ: return "THM_GIRTH_EQ";
        case TheoremId::PROP_MINDEG: return "PROP_MINDEG";
        case TheoremId::PROP_DIAM2: return "PROP_DIAM2";
        case TheoremId::PROP_DIAMPATH: return "PROP_DIAMPATH";
        case TheoremId::PROP_GIRTH: return "PROP_GIRTH";
        case TheoremId::THM_TSTRD_EQ_N: return "THM_TSTRD_EQ_N";
        case TheoremId::PROP_NG: return "PROP_NG";
        case TheoremId::THM_2STRD: return "THM_2STRD";
        case TheoremId::PROP_EQ_GT: return "PROP_EQ_GT";
        case TheoremId::PROP_GT_PLUS1: return "PROP_GT_PLUS1";
        case TheoremId::PROP_CEIL_GT: return "PROP_CEIL_GT";
        case TheoremId::THM_THREE: return "THM_THREE";
        case TheoremId::PROP_3N2: return "PROP_3N2";
        case TheoremId::LEM_LEAVES_ZERO: return "LEM_LEAVES_ZERO";
        case TheoremId::THM_TREE_GT: return "THM_TREE_GT";
        case TheoremId::THM_TREE_NS: return "THM_TREE_NS";
    }
    return "";
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> all = {
        TheoremId::OBS1,         TheoremId::OBS_O2,       TheoremId::OBS_AB,
        TheoremId::NEW1,         TheoremId::OBS_O3,       TheoremId::PATH_R,
        TheoremId::PATH_TR,      TheoremId::AH_EQ_N_TR,   TheoremId::TH4,
        TheoremId::TH5,          TheoremId::TH6,          TheoremId::THM_S,
        TheoremId::THM_GIRTH_EQ, TheoremId::PROP_MINDEG,  TheoremId::PROP_DIAM2,
        TheoremId::PROP_DIAMPATH, TheoremId::PROP_GIRTH,  TheoremId::THM_TSTRD_EQ_N,
        TheoremId::PROP_NG,      TheoremId::THM_2STRD,    TheoremId::PROP_EQ_GT,
        TheoremId::PROP_GT_PLUS1, TheoremId::PROP_CEIL_GT, TheoremId::THM_THREE,
        TheoremId::PROP_3N2,     TheoremId::LEM_LEAVES_ZERO, TheoremId::THM_TREE_GT,
        TheoremId::THM_TREE_NS,
    };
    return all;
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
    for (TheoremId id : all_theorems())
        if (name == to_string(id)) return id;
    return std::nullopt;
}

}  // namespace tsrd

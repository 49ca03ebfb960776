#pragma once

#include <string>

#include "voa/halfint.hpp"

namespace voa {

// Mode-index conventions. "formal" indexes the z^{-n-1} coefficient of the
// field; "weighted" shifts by wt(u)-1 so that weight-preserving action sits
// at index 0. Conversion requires a homogeneous operator state.
enum class Conv { formal, weighted };

struct ModeIndex {
    HalfInt value;
    Conv conv = Conv::formal;

    static ModeIndex formal(HalfInt v) { return {v, Conv::formal}; }
    static ModeIndex formal(long v) { return {HalfInt(v), Conv::formal}; }
    static ModeIndex weighted(HalfInt v) { return {v, Conv::weighted}; }
    static ModeIndex weighted(long v) { return {HalfInt(v), Conv::weighted}; }

    // The formal index of this mode for an operator of weight wt.
    HalfInt formal_for_weight(HalfInt wt) const {
        return conv == Conv::formal ? value : value + wt - HalfInt(1);
    }

    std::string str() const {
        return value.str() + (conv == Conv::formal ? " (formal)" : " (weighted)");
    }
};

}  // namespace voa

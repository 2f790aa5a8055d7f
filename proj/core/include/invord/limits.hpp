#pragma once

namespace invord::limits {

// Hard storage bound: relations are bit matrices with one 64-bit row mask.
inline constexpr int kUniverseHard = 64;

// Default cap for relations given directly (files, constructors). Powerset
// universes of up to 2^5 = 32 points arise internally and exceed it.
inline constexpr int kDirectRelation = 16;

// Linear-extension enumeration is factorial; keep it at desk scale.
inline constexpr int kEnumeration = 7;

// Group closure size bound.
inline constexpr int kGroupClosure = 4096;

// Base-set bound for powerset constructions (2^5 subsets).
inline constexpr int kPowersetBase = 5;

// Universe bound for the intersection-of-extensions characterization.
inline constexpr int kIntersection = 6;

// Lattice-cone bounds.
inline constexpr int kConeDim = 6;
inline constexpr int kConeGens = 12;

} // namespace invord::limits

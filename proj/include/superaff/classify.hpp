#pragma once

#include "superaff/admissible.hpp"
#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace superaff {

struct CanonicalWeight {
    Rational level;
    std::vector<Rational> pairings;  // (lambda, alpha_i) in simple-root order

    bool is_vacuum() const;
    friend bool operator==(const CanonicalWeight&, const CanonicalWeight&) = default;
    /// Lexicographic on pairings, then level.
    friend bool operator<(const CanonicalWeight& a, const CanonicalWeight& b);
};

CanonicalWeight canonical(const RootSystem& rs, const AffineWeight& w);

struct Classification {
    std::vector<CanonicalWeight> weights;  // sorted, deduplicated
    std::size_t candidates = 0;
    std::size_t survivors = 0;  // before deduplication
    std::size_t duplicates = 0;
};

struct ClassifyOptions {
    LevelCheck level_check = LevelCheck::Enforce;
    unsigned threads = 0;
};

Classification classify_detailed(const RootSystem& rs, const WeylGroup& w, int u, const ClassifyOptions& opts = {});
Classification classify_detailed(const RootSystem& rs, int u, const ClassifyOptions& opts = {});
std::vector<CanonicalWeight> classify(const RootSystem& rs, int u, const ClassifyOptions& opts = {});

/// Type I: u weights with -(p/u) h∨ at the odd node; everything else: the vacuum alone.
std::vector<CanonicalWeight> expected_closed_form(const RootSystem& rs, int u);

enum class Verdict { Pass, CountMismatch, WeightMismatch };
std::string to_string(Verdict v);

struct Report {
    FamilySpec family;
    int u = 1;
    Rational level;
    std::vector<CanonicalWeight> found;
    std::vector<CanonicalWeight> expected;
    std::vector<CanonicalWeight> unexpected;  // found but not expected
    std::vector<CanonicalWeight> missing;     // expected but not found
    Verdict verdict = Verdict::Pass;
    std::size_t candidates = 0;
    std::size_t survivors = 0;
    std::size_t duplicates = 0;
};

Report verify(const RootSystem& rs, const WeylGroup& w, int u, const ClassifyOptions& opts = {});
Report verify(const RootSystem& rs, int u, const ClassifyOptions& opts = {});

}  // namespace superaff

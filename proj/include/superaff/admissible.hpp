#pragma once

#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"
#include "superaff/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superaff {

enum class LevelKind { Principal, Subprincipal };

struct BoundaryLevel {
    int u = 1;
    Rational level;
    LevelKind kind = LevelKind::Principal;
};

std::vector<BoundaryLevel> boundary_levels(const RootSystem& rs, int u_max);

/// Reason u fails to define a principal boundary level, or nullopt when it does.
std::optional<std::string> principal_level_violation(const RootSystem& rs, int u);
bool is_subprincipal_u(const RootSystem& rs, int u);
/// h_dual/u - h_dual.
Rational principal_level(const RootSystem& rs, int u);

struct Candidate {
    std::size_t y_index = 0;  // position of y in the group's BFS order
    WeylElement y;
    std::vector<int> d;
    Vector beta;
    AffineWeight weight;  // delta coefficient dropped
};

/// Skip bypasses the coprimality test and runs the enumeration at h_dual/u - h_dual anyway.
enum class LevelCheck { Enforce, Skip };

struct EnumerateOptions {
    LevelCheck level_check = LevelCheck::Enforce;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// All (y, d) solutions at level h_dual/u - h_dual, sorted by (y_index, d).
std::vector<Candidate> enumerate_candidates(const RootSystem& rs, const WeylGroup& w, int u,
                                            const EnumerateOptions& opts = {});
std::vector<Candidate> enumerate_candidates(const RootSystem& rs, int u, const EnumerateOptions& opts = {});

/// The beta in span(Pi) with (beta, y alpha_i) = -d_i.
Vector beta_from_marks(const RootSystem& rs, const WeylElement& y, const std::vector<int>& d);

AffineWeight candidate_weight(const RootSystem& rs, const WeylElement& y, const Vector& beta, int u);

/// gamma + c delta is a positive real affine root: gamma in Delta, c integral, and c > 0 or (c = 0, gamma > 0).
bool is_positive_affine_root(const RootSystem& rs, const Vector& gamma, const Rational& c);

/// Checks directly that t_beta y maps u delta - theta and every alpha_i to positive affine roots.
bool maps_simple_affine_roots_positive(const RootSystem& rs, const WeylElement& y, const Vector& beta, int u);

}  // namespace superaff

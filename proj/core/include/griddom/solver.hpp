#pragma once

// Exact search for k-distance domatic colorings of small grids.
//
// Domains are 64-bit color sets, so palettes are limited to 64 colors. The
// search propagates three ball rules to a fixpoint: every color must remain
// possible somewhere in every ball, a color with a single possible cell in a
// ball is forced there, and a ball with as many open cells as missing colors
// restricts those cells to the missing colors.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "griddom/bounds.hpp"
#include "griddom/grid.hpp"

namespace griddom {

struct SolveConfig
{
    std::chrono::milliseconds timeout{60000};
    /// Lex-leader pruning over the rectangle's dihedral symmetries.
    bool symmetry_breaking = false;
    /// Search nodes allowed per feasibility run; exceeding it reports Timeout.
    std::optional<std::uint64_t> node_limit;
    unsigned workers = 1;
};

enum class SolveStatus { Feasible, Infeasible, Timeout };

std::string_view to_string(SolveStatus s);

struct SolveResult
{
    SolveStatus status = SolveStatus::Timeout;
    /// Present exactly when status is Feasible.
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{};
};

/// Is there a proper coloring of G with t colors at radius k?
SolveResult feasible(const GridDims & dims, int k, int t, const SolveConfig & cfg = {});

/// The search space for this palette was exhausted without a solution.
struct ExhaustedSearch
{
    std::uint64_t nodes = 0;
};

using InfeasibilityEvidence = std::variant<Certificate, ExhaustedSearch>;

struct DomaticResult
{
    /// Feasible when the value is exact, Timeout when only a bracket is known.
    SolveStatus status = SolveStatus::Timeout;
    int value = 0;
    /// Bracket on d_k. lower == upper == value when exact.
    int lower = 0;
    int upper = 0;
    int min_degree = 0;
    /// A proper coloring with `lower` colors.
    std::optional<Coloring> witness;
    /// Why value + 1 fails. Empty when the value equals min_degree, or on timeout.
    std::optional<InfeasibilityEvidence> next;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{};
};

/// Descends from min_k_degree, trying certificates before search at every
/// palette. The timeout applies to the whole descent.
DomaticResult exact_domatic_number(const GridDims & dims, int k, const SolveConfig & cfg = {});

} // namespace griddom

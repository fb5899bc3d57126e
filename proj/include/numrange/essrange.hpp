#pragma once

#include <optional>
#include <string>

#include "numrange/support.hpp"

namespace numrange {

enum class FamilyKind { diagonal, weighted_shift, direct_sum_blocks, finite_plus_diagonal };

enum class DiagonalRuleName { exp_i_over_k, one_then_i_over_k };

// Entry rule for a diagonal operator family, 1-based in k.
struct DiagonalRule {
    DiagonalRuleName name;
    cplx entry(int k) const;
    std::vector<cplx> limit_points() const;
    bool compact() const; // entries tend to 0
};

// A structured infinite operator given by a finite description; truncations
// are its leading principal sections.
struct OperatorFamily {
    FamilyKind kind;
    std::optional<DiagonalRule> rule;           // diagonal / finite_plus_diagonal
    std::vector<cplx> shift_weights;            // weighted_shift, cycled
    std::vector<ComplexMatrix> blocks;          // direct_sum_blocks, cycled
    std::optional<ComplexMatrix> head;          // finite_plus_diagonal
    std::string descriptor;

    static OperatorFamily diagonal(DiagonalRuleName rule);
    static OperatorFamily unit_shift();
    static OperatorFamily weighted_shift(std::vector<cplx> weights);
    static OperatorFamily block_diagonal(std::vector<ComplexMatrix> blocks);
    static OperatorFamily finite_plus_diagonal(ComplexMatrix head, DiagonalRuleName rule);
};

// Leading N x N section.
ComplexMatrix truncate(const OperatorFamily& fam, int n);

// Compression onto the tail window span{e_n, ..., e_N} (1-based), realized as
// the corresponding block of the N x N section.
ComplexMatrix tail_compression(const OperatorFamily& fam, int n, int N);

struct EssRangeEstimate {
    std::vector<std::pair<int, int>> schedule; // (n, N) windows
    std::vector<std::vector<cplx>> polygons;   // per-window support polygons
    std::vector<std::vector<cplx>> running_intersection;
    std::vector<cplx> intersection;
    std::vector<double> drift;     // Hausdorff distance between adjacent polygons
    std::vector<double> inflation; // per-window dilation applied before intersecting
    bool empty = false;
};

struct EssOptions {
    int grid = 128;
    bool drift_inflation = true;
};

// Outer estimate of the essential numerical range: intersect the (optionally
// drift-inflated) support polygons of tail compressions over the window
// schedule. Throws NumericalError when the intersection degenerates with
// inflation disabled.
EssRangeEstimate ess_range_estimate(const OperatorFamily& fam,
                                    const std::vector<std::pair<int, int>>& schedule,
                                    const EssOptions& opt = {});

// Known limit of the essential numerical range for families where it has a
// closed form.
struct EssOracle {
    enum class Kind { point, polygon, disk } kind;
    std::vector<cplx> vertices; // point / polygon
    cplx center;                // disk
    double radius = 0.0;        // disk
    std::vector<cplx> as_polygon(int samples = 256) const;
};

EssOracle ess_oracle(const OperatorFamily& fam);

enum class SupportVerdict { essential, discrete, inconclusive };

struct SupportCheckWindow {
    int lo, hi;
    double mu_full; // support of the full section at this angle
    double mu_tail; // support of the tail compression
    double gap;     // top-eigenvalue isolation gap of the full section
};

struct SupportCheckReport {
    SupportVerdict verdict;
    std::vector<SupportCheckWindow> windows;
    double floor;
    double delta_slope; // trend of mu_full - mu_tail over the last windows
    double gap_slope;
};

// Decide whether the support line of the family at angle theta is attained
// essentially (tail compressions keep reaching it) or by a discrete spectral
// component of the head. Needs at least 3 windows.
SupportCheckReport essential_support_check(const OperatorFamily& fam, double theta,
                                           const std::vector<std::pair<int, int>>& schedule,
                                           const EssOptions& opt = {});

std::vector<std::pair<int, int>> default_schedule();

} // namespace numrange

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/laurent_series.hpp"

namespace stirling {

enum class FamilyId {
    // n! ~ sqrt(2 pi n) (n/e + a/n + b/n^3)^n, parameters alpha = a e, beta = b e
    MorticiAB,
    // MorticiAB with beta pinned to 0
    MorticiA,
    // n! ~ sqrt(2 pi (n + b/n^4)) (n/e + alpha/(e n) + beta/(e n^3))^n
    SqrtCorrection,
};

std::string_view family_name(FamilyId id);
FamilyId parse_family(std::string_view name);

// Every parameter of the family, in elimination order.
std::vector<std::string> family_parameters(FamilyId id);

struct FamilySpec {
    FamilyId id;
    std::vector<std::string> symbols;       // free, eliminated in this order
    std::map<std::string, Rational> fixed;  // pre-substituted values

    // The family with its customary free/fixed split.
    static FamilySpec standard(FamilyId id);

    // Throws unless symbols and fixed partition the family's parameters.
    void validate() const;
};

// Exact expansion of the consecutive log-error difference (z_n - z_{n+1},
// or t_n - t_{n+1}) in x = 1/n, valid through x^order, with the fixed
// parameters already substituted.
LaurentSeries build_difference_series(const FamilySpec& spec, int order);

// True when the series has no x^0, x^1 or negative-power residue.
bool has_stirling_normalization(const LaurentSeries& diff);
bool validate_cancellation(const FamilySpec& spec, int order);

namespace detail {

// Knobs for exercising the pipeline; production code uses the defaults.
struct PipelineOptions {
    bool include_constant = true;  // the -1 from the (n+1) - n linear terms
};

// Pipeline behind build_difference_series, without the nonzero check.
LaurentSeries assemble_difference_series(const FamilySpec& spec, int order,
                                         const PipelineOptions& options = {});

}  // namespace detail

}  // namespace stirling

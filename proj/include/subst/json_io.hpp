#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "subst/constructions.hpp"
#include "subst/decomposition.hpp"
#include "subst/density.hpp"
#include "subst/growth.hpp"
#include "subst/sequence.hpp"

namespace subst {

using Json = nlohmann::ordered_json;

// {poly: [...], interval: ["lo", "hi"], approx: "..."} with exact rational
// interval endpoints and >= `digits` significant decimal digits.
Json algebraic_json(const AlgebraicReal& x, int digits = 15);

Json growth_report_json(const Substitution& s, const GrowthReport& r, int digits = 15);
Json decomposition_json(const Substitution& s, const ComponentDecomposition& d,
                        std::optional<int> condition_c_k, int digits = 15);
Json goodness_json(const Substitution& s, const GoodnessVerdict& v, int digits = 15);
Json periodicity_json(const Substitution& s, const PeriodicityCertificate& c);
Json return_words_json(const Substitution& s, const ReturnWordSet& r);
Json gap_json(const Substitution& s, const Word& target, size_t horizon, size_t gap);
Json starlike_json(const Substitution& s, const StarlikeDecomposition& d);
Json density_witness_json(const DensityWitness& w);
Json intertwined_sidecar_json(const IntertwinedSystem& sys);
Json zeta_sidecar_json(const ZetaSystem& sys);
Json block_sidecar_json(const BlockSystem& bs, const std::optional<Word>& indicator_word);

}  // namespace subst

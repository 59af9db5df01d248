#pragma once

// JSON renderings of results. Every function returns a document indented
// by two spaces with a trailing newline; key order is fixed.

#include <optional>
#include <string>
#include <vector>

#include "gkm2/cohomology.hpp"
#include "gkm2/moment_graph.hpp"
#include "gkm2/symdiff.hpp"

namespace gkm2 {

/// {"degrees": [{"d", "dim", "basis"?}], "numerator", "stabilized", "betti"}
/// `bases` (one per degree) adds the optional basis arrays; each class is an
/// object mapping vertex id to polynomial string. `betti` is [] when absent.
std::string cohomology_json(const HilbertData& hilbert, const std::vector<GradedBasis>* bases,
                            const std::optional<std::vector<std::size_t>>& betti);

std::string validation_json(const ValidationReport& report);

std::string exact_json(const SymDiffInstance& inst, const ExactResult& result);
std::string relaxed_json(const SymDiffInstance& inst, const RelaxedResult& result);

std::string crosscheck_json(const H1CrossCheck& check);

std::string restriction_json(const MomentGraph& g, const Restriction& r);

std::string ring_table_json(const RingTable& table);

}  // namespace gkm2

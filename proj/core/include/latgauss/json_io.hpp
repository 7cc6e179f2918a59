// JSON input/output for the command-line tool and downstream consumers.
// Integers outside the 53-bit safe range are serialized as decimal strings
// (and accepted back in that form); floating-point vertex entries are
// rejected outright. Serialization is deterministic: the same value always
// produces the same bytes. Schemas for every document live in docs/schemas.

#pragma once

#include "latgauss/certify.hpp"
#include "latgauss/enumerate.hpp"
#include "latgauss/gaussmap.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latgauss {

// Parses {"vertices": [[int|decimal-string, ...], ...]}.
// Throws invalid_argument with a distinct message per defect: malformed JSON,
// wrong shape, floating-point entries, non-integer strings.
std::vector<IntVec> parse_vertices_json(const std::string& text);

// Pretty-printed (2-space indent) certificate; faces are reported by vertex
// coordinates, so the polytope the report was computed from is required.
std::string certificate_to_json(const CertificateReport& report, const LatticePolytope& p);

// One compact line per class, for streaming output.
std::string simplex_class_to_json(const SimplexClass& c);

std::string lemma_result_to_json(const LemmaResult& result, const EnumerateOptions& opts);

std::string decompositions_to_json(const Int& vol,
                                   const std::vector<std::pair<Int, Int>>& decompositions);

std::string probe_report_to_json(const ProbeReport& report);

}  // namespace latgauss

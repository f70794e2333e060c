// The `compute` verbs on document entities, with JSON results.
#ifndef SIMPCAT_HARNESS_COMPUTE_HPP_
#define SIMPCAT_HARNESS_COMPUTE_HPP_

#include <string>
#include <vector>

#include "simpcat/harness/document.hpp"

namespace simpcat::harness {

const std::vector<std::string>& compute_ops();

// Runs one verb on the named entity. Results that are entities (nerve, diag,
// wbar, dec, dstar) come back in explicit document form; all numbers are
// exact integers. Throws InputError for an unknown op or an entity of the
// wrong kind.
json compute(const WorkbenchDocument& doc, const Request& request, const HarnessConfig& config);

// Every request of the document, in order.
json compute_requests(const WorkbenchDocument& doc, const HarnessConfig& config);

}  // namespace simpcat::harness

#endif  // SIMPCAT_HARNESS_COMPUTE_HPP_

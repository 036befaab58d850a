#pragma once

#include <cstdint>

namespace locprior::counters {

// Process-wide instrumentation used by the perf harness and the single-pass
// tests. Correlation MACs are accumulated inside cross_correlate, backbone
// MACs inside extract_features stage by stage, and backbone_passes counts
// extract_features invocations.
void reset();

void add_correlation_macs(std::uint64_t n);
void add_backbone_macs(std::uint64_t n);
void add_backbone_pass();

std::uint64_t correlation_macs();
std::uint64_t backbone_macs();
std::uint64_t backbone_passes();

}  // namespace locprior::counters

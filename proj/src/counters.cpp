#include "locprior/counters.hpp"

#include <atomic>

namespace locprior::counters {

namespace {
std::atomic<std::uint64_t> g_correlation_macs{0};
std::atomic<std::uint64_t> g_backbone_macs{0};
std::atomic<std::uint64_t> g_backbone_passes{0};
}  // namespace

void reset() {
    g_correlation_macs.store(0, std::memory_order_relaxed);
    g_backbone_macs.store(0, std::memory_order_relaxed);
    g_backbone_passes.store(0, std::memory_order_relaxed);
}

void add_correlation_macs(std::uint64_t n) {
    g_correlation_macs.fetch_add(n, std::memory_order_relaxed);
}

void add_backbone_macs(std::uint64_t n) {
    g_backbone_macs.fetch_add(n, std::memory_order_relaxed);
}

void add_backbone_pass() { g_backbone_passes.fetch_add(1, std::memory_order_relaxed); }

std::uint64_t correlation_macs() { return g_correlation_macs.load(std::memory_order_relaxed); }
std::uint64_t backbone_macs() { return g_backbone_macs.load(std::memory_order_relaxed); }
std::uint64_t backbone_passes() { return g_backbone_passes.load(std::memory_order_relaxed); }

}  // namespace locprior::counters

#include "isolab/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace isolab::kernels {

namespace scalar {

void max_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    for (size_t i = 0; i < n; ++i) dst[i] = std::max(dst[i], src[i]);
}

void min_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    for (size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                         uint8_t target, size_t n)
{
    uint8_t best = 0;
    for (size_t i = 0; i < n; ++i) {
        unsigned s = std::min(255u, static_cast<unsigned>(da[i]) + db[i]);
        if (s == target) best = std::max(best, std::min(wa[i], wb[i]));
    }
    return best;
}

size_t popcount(const uint64_t* words, size_t n)
{
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<size_t>(__builtin_popcountll(words[i]));
    return c;
}

} // namespace scalar

namespace {

std::atomic<int> g_active{-1};

} // namespace

Isa detected_isa()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") ? Isa::Avx2 : Isa::Scalar;
}

Isa active_isa()
{
    int v = g_active.load(std::memory_order_relaxed);
    if (v < 0) {
        v = static_cast<int>(detected_isa());
        g_active.store(v, std::memory_order_relaxed);
    }
    return static_cast<Isa>(v);
}

void force_isa(Isa isa)
{
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
    g_active.store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void max_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    if (active_isa() == Isa::Avx2) avx2::max_into(dst, src, n);
    else scalar::max_into(dst, src, n);
}

void min_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    if (active_isa() == Isa::Avx2) avx2::min_into(dst, src, n);
    else scalar::min_into(dst, src, n);
}

uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                         uint8_t target, size_t n)
{
    if (active_isa() == Isa::Avx2) return avx2::interval_max_min(wa, wb, da, db, target, n);
    return scalar::interval_max_min(wa, wb, da, db, target, n);
}

size_t popcount(const uint64_t* words, size_t n)
{
    if (active_isa() == Isa::Avx2) return avx2::popcount(words, n);
    return scalar::popcount(words, n);
}

} // namespace isolab::kernels

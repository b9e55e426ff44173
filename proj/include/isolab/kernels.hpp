#pragma once

#include <cstddef>
#include <cstdint>

namespace isolab::kernels {

enum class Isa { Scalar, Avx2 };

// Best instruction set supported by this CPU.
Isa detected_isa();
// Currently dispatched set; force_isa overrides detection (tests, benchmarks).
Isa active_isa();
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// dst[i] = max(dst[i], src[i])
void max_into(uint8_t* dst, const uint8_t* src, size_t n);
// dst[i] = min(dst[i], src[i])
void min_into(uint8_t* dst, const uint8_t* src, size_t n);
// max over i with sat(da[i] + db[i]) == target of min(wa[i], wb[i]); 0 if no such i.
uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                         uint8_t target, size_t n);
size_t popcount(const uint64_t* words, size_t n);

namespace scalar {
void max_into(uint8_t* dst, const uint8_t* src, size_t n);
void min_into(uint8_t* dst, const uint8_t* src, size_t n);
uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                         uint8_t target, size_t n);
size_t popcount(const uint64_t* words, size_t n);
} // namespace scalar

namespace avx2 {
void max_into(uint8_t* dst, const uint8_t* src, size_t n);
void min_into(uint8_t* dst, const uint8_t* src, size_t n);
uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                         uint8_t target, size_t n);
size_t popcount(const uint64_t* words, size_t n);
} // namespace avx2

} // namespace isolab::kernels

#include "isolab/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

#define ISOLAB_AVX2 __attribute__((target("avx2,popcnt")))

namespace isolab::kernels::avx2 {

ISOLAB_AVX2 void max_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_max_epu8(a, b));
    }
    for (; i < n; ++i) dst[i] = std::max(dst[i], src[i]);
}

ISOLAB_AVX2 void min_into(uint8_t* dst, const uint8_t* src, size_t n)
{
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu8(a, b));
    }
    for (; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

ISOLAB_AVX2 uint8_t interval_max_min(const uint8_t* wa, const uint8_t* wb, const uint8_t* da, const uint8_t* db,
                                     uint8_t target, size_t n)
{
    const __m256i t = _mm256_set1_epi8(static_cast<char>(target));
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(da + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(db + i));
        __m256i on = _mm256_cmpeq_epi8(_mm256_adds_epu8(a, b), t);
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(wa + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(wb + i));
        acc = _mm256_max_epu8(acc, _mm256_and_si256(on, _mm256_min_epu8(x, y)));
    }
    alignas(32) uint8_t lanes[32];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint8_t best = *std::max_element(lanes, lanes + 32);
    for (; i < n; ++i) {
        unsigned s = std::min(255u, static_cast<unsigned>(da[i]) + db[i]);
        if (s == target) best = std::max(best, std::min(wa[i], wb[i]));
    }
    return best;
}

ISOLAB_AVX2 size_t popcount(const uint64_t* words, size_t n)
{
    // Nibble lookup popcount (Mula).
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                         2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i total = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
        __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
        total = _mm256_add_epi64(total, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
    }
    alignas(32) uint64_t parts[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(parts), total);
    size_t c = parts[0] + parts[1] + parts[2] + parts[3];
    for (; i < n; ++i) c += static_cast<size_t>(_mm_popcnt_u64(words[i]));
    return c;
}

} // namespace isolab::kernels::avx2

#include "isolab/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace isolab::kernels;

namespace {

std::vector<uint8_t> random_bytes(std::mt19937& rng, size_t n, int hi)
{
    std::uniform_int_distribution<int> d(0, hi);
    std::vector<uint8_t> v(n);
    for (auto& x : v) x = static_cast<uint8_t>(d(rng));
    return v;
}

const size_t kSizes[] = {0, 1, 7, 31, 32, 33, 63, 64, 65, 100, 257, 1000};

bool have_avx2() { return detected_isa() == Isa::Avx2; }

} // namespace

TEST(Kernels, MaxMinMatchScalar)
{
    if (!have_avx2()) GTEST_SKIP() << "no AVX2";
    std::mt19937 rng(1);
    for (size_t n : kSizes) {
        auto a = random_bytes(rng, n, 255), b = random_bytes(rng, n, 255);
        auto s = a, v = a;
        scalar::max_into(s.data(), b.data(), n);
        avx2::max_into(v.data(), b.data(), n);
        EXPECT_EQ(s, v) << n;
        s = a;
        v = a;
        scalar::min_into(s.data(), b.data(), n);
        avx2::min_into(v.data(), b.data(), n);
        EXPECT_EQ(s, v) << n;
    }
}

TEST(Kernels, IntervalMaxMinMatchesScalar)
{
    if (!have_avx2()) GTEST_SKIP() << "no AVX2";
    std::mt19937 rng(2);
    for (size_t n : kSizes)
        for (int rep = 0; rep < 20; ++rep) {
            auto wa = random_bytes(rng, n, 20), wb = random_bytes(rng, n, 20);
            // Large distances exercise the saturating add.
            auto da = random_bytes(rng, n, rep % 2 ? 255 : 6), db = random_bytes(rng, n, rep % 2 ? 255 : 6);
            for (uint8_t target : {0, 3, 6, 255})
                EXPECT_EQ(scalar::interval_max_min(wa.data(), wb.data(), da.data(), db.data(), target, n),
                          avx2::interval_max_min(wa.data(), wb.data(), da.data(), db.data(), target, n))
                    << n << " " << int(target);
        }
}

TEST(Kernels, PopcountMatchesScalar)
{
    std::mt19937_64 rng(3);
    for (size_t n : kSizes) {
        std::vector<uint64_t> w(n);
        for (auto& x : w) x = rng();
        size_t expect = 0;
        for (uint64_t x : w) expect += static_cast<size_t>(__builtin_popcountll(x));
        EXPECT_EQ(scalar::popcount(w.data(), n), expect);
        if (have_avx2()) EXPECT_EQ(avx2::popcount(w.data(), n), expect);
    }
}

TEST(Kernels, IntervalScalarOracle)
{
    uint8_t wa[] = {1, 5, 2, 9}, wb[] = {4, 3, 7, 9}, da[] = {1, 2, 0, 3}, db[] = {2, 1, 3, 3};
    // Entries 0..2 sum to 3: mins are 1, 3, 2.
    EXPECT_EQ(scalar::interval_max_min(wa, wb, da, db, 3, 4), 3);
    EXPECT_EQ(scalar::interval_max_min(wa, wb, da, db, 6, 4), 9);
    EXPECT_EQ(scalar::interval_max_min(wa, wb, da, db, 5, 4), 0);
}

TEST(Kernels, ForceIsaDispatches)
{
    Isa before = active_isa();
    force_isa(Isa::Scalar);
    EXPECT_EQ(active_isa(), Isa::Scalar);
    uint8_t d[3] = {1, 5, 3}, s[3] = {4, 2, 3};
    max_into(d, s, 3);
    EXPECT_EQ(d[0], 4);
    EXPECT_EQ(d[1], 5);
    if (have_avx2()) {
        force_isa(Isa::Avx2);
        EXPECT_EQ(active_isa(), Isa::Avx2);
        min_into(d, s, 3);
        EXPECT_EQ(d[0], 4);
        EXPECT_EQ(d[1], 2);
    }
    force_isa(before);
    EXPECT_STREQ(isa_name(Isa::Scalar), "scalar");
}

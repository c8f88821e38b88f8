// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "ellgen/code_kernels.hpp"

namespace ellgen::kernels {

namespace {

// Nibble-table popcount, summed per 64-bit lane.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_shuffle_epi8(table, _mm256_and_si256(v, low));
  const __m256i hi = _mm256_shuffle_epi8(table, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
  return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

}  // namespace

void popcount_avx2(const std::uint64_t* words, std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(v));
    for (int k = 0; k < 4; ++k) out[i + static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(lanes[k]);
  }
  popcount_scalar(words + i, out + i, n - i);
}

std::size_t sublinear_violations_avx2(std::uint64_t a, const std::uint64_t* words, std::size_t n) {
  const __m256i va = _mm256_set1_epi64x(static_cast<long long>(a));
  const __m256i wa = popcount_epi64(va);
  std::size_t bad = 0, j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + j));
    const __m256i lhs = popcount_epi64(_mm256_xor_si256(va, w));
    const __m256i rhs = _mm256_add_epi64(wa, popcount_epi64(w));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(lhs, rhs)));
    bad += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  return bad + sublinear_violations_scalar(a, words + j, n - j);
}

}  // namespace ellgen::kernels

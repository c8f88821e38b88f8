#include "ellgen/code_kernels.hpp"

#include <bit>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace ellgen::kernels {

void popcount_scalar(const std::uint64_t* words, std::uint32_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(std::popcount(words[i]));
}

std::size_t sublinear_violations_scalar(std::uint64_t a, const std::uint64_t* words, std::size_t n) {
  const int wa = std::popcount(a);
  std::size_t bad = 0;
  for (std::size_t j = 0; j < n; ++j) bad += std::popcount(a ^ words[j]) > wa + std::popcount(words[j]) ? 1 : 0;
  return bad;
}

#if defined(__aarch64__)
namespace {
inline uint64x2_t popcount_u64x2(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}
}  // namespace

void popcount_neon(const std::uint64_t* words, std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t c = popcount_u64x2(vld1q_u64(words + i));
    out[i] = static_cast<std::uint32_t>(vgetq_lane_u64(c, 0));
    out[i + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(c, 1));
  }
  popcount_scalar(words + i, out + i, n - i);
}

std::size_t sublinear_violations_neon(std::uint64_t a, const std::uint64_t* words, std::size_t n) {
  const uint64x2_t va = vdupq_n_u64(a);
  const uint64x2_t wa = popcount_u64x2(va);
  std::size_t bad = 0, j = 0;
  for (; j + 2 <= n; j += 2) {
    const uint64x2_t w = vld1q_u64(words + j);
    const uint64x2_t lhs = popcount_u64x2(veorq_u64(va, w));
    const uint64x2_t rhs = vaddq_u64(wa, popcount_u64x2(w));
    const uint64x2_t gt = vcgtq_u64(lhs, rhs);
    bad += (vgetq_lane_u64(gt, 0) ? 1 : 0) + (vgetq_lane_u64(gt, 1) ? 1 : 0);
  }
  return bad + sublinear_violations_scalar(a, words + j, n - j);
}
#endif

namespace {

using PopcountFn = void (*)(const std::uint64_t*, std::uint32_t*, std::size_t);
using ViolationsFn = std::size_t (*)(std::uint64_t, const std::uint64_t*, std::size_t);

struct Backend {
  PopcountFn popcount;
  ViolationsFn violations;
  const char* name;
};

Backend select_backend() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return {popcount_avx2, sublinear_violations_avx2, "avx2"};
#endif
#if defined(__aarch64__)
  return {popcount_neon, sublinear_violations_neon, "neon"};
#endif
  return {popcount_scalar, sublinear_violations_scalar, "scalar"};
}

const Backend& backend() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

void popcount(const std::uint64_t* words, std::uint32_t* out, std::size_t n) { backend().popcount(words, out, n); }

std::size_t sublinear_violations(std::uint64_t a, const std::uint64_t* words, std::size_t n) {
  return backend().violations(a, words, n);
}

std::string active_backend() { return backend().name; }

}  // namespace ellgen::kernels

#include "trinb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TRINB_HAVE_AVX2_BUILD 1
#endif

namespace trinb::kernels::detail {

#if defined(TRINB_HAVE_AVX2_BUILD) && defined(__AVX2__)

namespace {

constexpr std::size_t kLanes = 32;

__m256i broadcast16(const std::int8_t* table) {
  return _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(table)));
}

void masks_avx2(const LevelColumns& cols, const AttributeTables& tables, const Reference& ref, MaskRows out) {
  const std::size_t n = cols.count;
  std::size_t x = 0;
  for (; x + kLanes <= n; x += kLanes) {
    __m256i ro = _mm256_setzero_si256(), ao = ro, rv = ro, av = ro;
    for (int i = 0; i < cols.attributes; ++i) {
      const auto si = static_cast<std::size_t>(i);
      const __m256i lx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols.column[si] + x));
      const __m256i bit = _mm256_set1_epi8(static_cast<char>(1u << i));
      const __m256i y = _mm256_set1_epi8(ref.level[si]);
      const __m256i tx = _mm256_shuffle_epi8(broadcast16(tables.threshold[si].data()), lx);
      const __m256i vx = _mm256_shuffle_epi8(broadcast16(tables.veto[si].data()), lx);
      // y_i > t_i(x_i)
      ro = _mm256_or_si256(ro, _mm256_and_si256(_mm256_cmpgt_epi8(y, tx), bit));
      // x_i > t_i(y_i)
      ao = _mm256_or_si256(ao, _mm256_and_si256(_mm256_cmpgt_epi8(lx, _mm256_set1_epi8(ref.threshold[si])), bit));
      // x_i <= v_i(y_i)
      rv = _mm256_or_si256(rv, _mm256_andnot_si256(_mm256_cmpgt_epi8(lx, _mm256_set1_epi8(ref.veto[si])), bit));
      // y_i <= v_i(x_i)
      av = _mm256_or_si256(av, _mm256_andnot_si256(_mm256_cmpgt_epi8(y, vx), bit));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.ref_over_alt + x), ro);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.alt_over_ref + x), ao);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.ref_vetoes_alt + x), rv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.alt_vetoes_ref + x), av);
  }
  if (x < n) {
    LevelColumns tail = cols;
    tail.count = n - x;
    for (int i = 0; i < cols.attributes; ++i) tail.column[static_cast<std::size_t>(i)] += x;
    masks_scalar(tail, tables, ref,
                 {out.ref_over_alt + x, out.alt_over_ref + x, out.ref_vetoes_alt + x, out.alt_vetoes_ref + x});
  }
}

// 32 lanes of "coalition byte c is in F": byte c>>3 of the table, bit c&7.
__m256i membership(__m256i c, __m256i table_lo, __m256i table_hi, __m256i bit_weights) {
  const __m256i byte_index = _mm256_and_si256(_mm256_srli_epi16(c, 3), _mm256_set1_epi8(0x1F));
  const __m256i low4 = _mm256_and_si256(byte_index, _mm256_set1_epi8(0x0F));
  const __m256i upper = _mm256_cmpeq_epi8(_mm256_and_si256(byte_index, _mm256_set1_epi8(0x10)), _mm256_set1_epi8(0x10));
  const __m256i bytes =
      _mm256_blendv_epi8(_mm256_shuffle_epi8(table_lo, low4), _mm256_shuffle_epi8(table_hi, low4), upper);
  const __m256i bit = _mm256_shuffle_epi8(bit_weights, _mm256_and_si256(c, _mm256_set1_epi8(0x07)));
  const __m256i absent = _mm256_cmpeq_epi8(_mm256_and_si256(bytes, bit), _mm256_setzero_si256());
  return _mm256_xor_si256(absent, _mm256_set1_epi8(-1));
}

void outrank_avx2(ConstMaskRows in, std::size_t count, const CoalitionTable& table, std::uint64_t* ref_S_alt,
                  std::uint64_t* alt_S_ref) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t k = 0; k < words; ++k) ref_S_alt[k] = alt_S_ref[k] = 0;

  const auto* raw = reinterpret_cast<const __m128i*>(table.data());
  const __m256i table_lo = _mm256_broadcastsi128_si256(_mm_loadu_si128(raw));
  const __m256i table_hi = _mm256_broadcastsi128_si256(_mm_loadu_si128(raw + 1));
  const __m256i bit_weights = _mm256_setr_epi8(1, 2, 4, 8, 16, 32, 64, -128, 1, 2, 4, 8, 16, 32, 64, -128, 1, 2, 4, 8,
                                               16, 32, 64, -128, 1, 2, 4, 8, 16, 32, 64, -128);
  const __m256i zero = _mm256_setzero_si256();

  std::size_t x = 0;
  for (; x + kLanes <= count; x += kLanes) {
    auto load = [&](const std::uint8_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + x)); };
    const __m256i fwd = _mm256_and_si256(membership(load(in.ref_over_alt), table_lo, table_hi, bit_weights),
                                         _mm256_cmpeq_epi8(load(in.alt_vetoes_ref), zero));
    const __m256i bwd = _mm256_and_si256(membership(load(in.alt_over_ref), table_lo, table_hi, bit_weights),
                                         _mm256_cmpeq_epi8(load(in.ref_vetoes_alt), zero));
    const auto f = static_cast<std::uint64_t>(static_cast<std::uint32_t>(_mm256_movemask_epi8(fwd)));
    const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(_mm256_movemask_epi8(bwd)));
    ref_S_alt[x >> 6] |= f << (x & 63);
    alt_S_ref[x >> 6] |= b << (x & 63);
  }
  auto member = [&](std::uint8_t c) { return (table[c >> 6] >> (c & 63)) & 1u; };
  for (; x < count; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (member(in.ref_over_alt[x]) && in.alt_vetoes_ref[x] == 0) ref_S_alt[x >> 6] |= bit;
    if (member(in.alt_over_ref[x]) && in.ref_vetoes_alt[x] == 0) alt_S_ref[x >> 6] |= bit;
  }
}

const KernelSet kAvx2{Isa::avx2, masks_avx2, outrank_avx2};

}  // namespace

const KernelSet* avx2_set() { return &kAvx2; }

#else

const KernelSet* avx2_set() { return nullptr; }

#endif

}  // namespace trinb::kernels::detail

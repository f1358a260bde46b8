#include "trinb/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace trinb::kernels::detail {

#if defined(__aarch64__) && defined(__ARM_NEON)

namespace {

constexpr std::size_t kLanes = 16;

// Packs 16 all-ones/all-zeros lanes into a 16-bit mask.
std::uint32_t pack_lanes(uint8x16_t lanes) {
  static const std::uint8_t kWeights[16] = {1, 2, 4, 8, 16, 32, 64, 128, 1, 2, 4, 8, 16, 32, 64, 128};
  const uint8x16_t w = vandq_u8(lanes, vld1q_u8(kWeights));
  return static_cast<std::uint32_t>(vaddv_u8(vget_low_u8(w))) |
         (static_cast<std::uint32_t>(vaddv_u8(vget_high_u8(w))) << 8);
}

void masks_neon(const LevelColumns& cols, const AttributeTables& tables, const Reference& ref, MaskRows out) {
  const std::size_t n = cols.count;
  std::size_t x = 0;
  for (; x + kLanes <= n; x += kLanes) {
    uint8x16_t ro = vdupq_n_u8(0), ao = ro, rv = ro, av = ro;
    for (int i = 0; i < cols.attributes; ++i) {
      const auto si = static_cast<std::size_t>(i);
      const uint8x16_t lx = vld1q_u8(cols.column[si] + x);
      const uint8x16_t bit = vdupq_n_u8(static_cast<std::uint8_t>(1u << i));
      const int8x16_t y = vdupq_n_s8(ref.level[si]);
      const int8x16_t sx = vreinterpretq_s8_u8(lx);
      const int8x16_t tx =
          vreinterpretq_s8_u8(vqtbl1q_u8(vreinterpretq_u8_s8(vld1q_s8(tables.threshold[si].data())), lx));
      const int8x16_t vx = vreinterpretq_s8_u8(vqtbl1q_u8(vreinterpretq_u8_s8(vld1q_s8(tables.veto[si].data())), lx));
      ro = vorrq_u8(ro, vandq_u8(vcgtq_s8(y, tx), bit));
      ao = vorrq_u8(ao, vandq_u8(vcgtq_s8(sx, vdupq_n_s8(ref.threshold[si])), bit));
      rv = vorrq_u8(rv, vbicq_u8(bit, vcgtq_s8(sx, vdupq_n_s8(ref.veto[si]))));
      av = vorrq_u8(av, vbicq_u8(bit, vcgtq_s8(y, vx)));
    }
    vst1q_u8(out.ref_over_alt + x, ro);
    vst1q_u8(out.alt_over_ref + x, ao);
    vst1q_u8(out.ref_vetoes_alt + x, rv);
    vst1q_u8(out.alt_vetoes_ref + x, av);
  }
  if (x < n) {
    LevelColumns tail = cols;
    tail.count = n - x;
    for (int i = 0; i < cols.attributes; ++i) tail.column[static_cast<std::size_t>(i)] += x;
    masks_scalar(tail, tables, ref,
                 {out.ref_over_alt + x, out.alt_over_ref + x, out.ref_vetoes_alt + x, out.alt_vetoes_ref + x});
  }
}

uint8x16_t membership(uint8x16_t c, uint8x16x2_t table, uint8x16_t bit_weights) {
  const uint8x16_t bytes = vqtbl2q_u8(table, vshrq_n_u8(c, 3));
  const uint8x16_t bit = vqtbl1q_u8(bit_weights, vandq_u8(c, vdupq_n_u8(7)));
  return vtstq_u8(bytes, bit);
}

void outrank_neon(ConstMaskRows in, std::size_t count, const CoalitionTable& table, std::uint64_t* ref_S_alt,
                  std::uint64_t* alt_S_ref) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t k = 0; k < words; ++k) ref_S_alt[k] = alt_S_ref[k] = 0;

  const auto* raw = reinterpret_cast<const std::uint8_t*>(table.data());
  const uint8x16x2_t tbl{{vld1q_u8(raw), vld1q_u8(raw + 16)}};
  static const std::uint8_t kBits[16] = {1, 2, 4, 8, 16, 32, 64, 128, 1, 2, 4, 8, 16, 32, 64, 128};
  const uint8x16_t bit_weights = vld1q_u8(kBits);

  std::size_t x = 0;
  for (; x + kLanes <= count; x += kLanes) {
    const uint8x16_t fwd = vandq_u8(membership(vld1q_u8(in.ref_over_alt + x), tbl, bit_weights),
                                    vceqq_u8(vld1q_u8(in.alt_vetoes_ref + x), vdupq_n_u8(0)));
    const uint8x16_t bwd = vandq_u8(membership(vld1q_u8(in.alt_over_ref + x), tbl, bit_weights),
                                    vceqq_u8(vld1q_u8(in.ref_vetoes_alt + x), vdupq_n_u8(0)));
    ref_S_alt[x >> 6] |= static_cast<std::uint64_t>(pack_lanes(fwd)) << (x & 63);
    alt_S_ref[x >> 6] |= static_cast<std::uint64_t>(pack_lanes(bwd)) << (x & 63);
  }
  auto member = [&](std::uint8_t c) { return (table[c >> 6] >> (c & 63)) & 1u; };
  for (; x < count; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (member(in.ref_over_alt[x]) && in.alt_vetoes_ref[x] == 0) ref_S_alt[x >> 6] |= bit;
    if (member(in.alt_over_ref[x]) && in.ref_vetoes_alt[x] == 0) alt_S_ref[x >> 6] |= bit;
  }
}

const KernelSet kNeon{Isa::neon, masks_neon, outrank_neon};

}  // namespace

const KernelSet* neon_set() { return &kNeon; }

#else

const KernelSet* neon_set() { return nullptr; }

#endif

}  // namespace trinb::kernels::detail

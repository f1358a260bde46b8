#pragma once

// Data-parallel kernels behind outranking-relation evaluation.
//
// For a fixed reference alternative y and a batch of alternatives x (stored
// column-wise, one byte per level), the mask kernel computes per x the
// attribute bitmasks
//
//   ref_over_alt[x]   = { i : y_i S_i x_i }   (y_i > t_i(x_i))
//   alt_over_ref[x]   = { i : x_i S_i y_i }   (x_i > t_i(y_i))
//   ref_vetoes_alt[x] = { i : y_i V_i x_i }   (x_i <= v_i(y_i))
//   alt_vetoes_ref[x] = { i : x_i V_i y_i }   (y_i <= v_i(x_i))
//
// and the outranking kernel turns those masks into two bitsets over x using a
// 256-entry coalition membership table:
//
//   ref_S_alt bit x  <=>  ref_over_alt[x] in F  and  alt_vetoes_ref[x] == 0
//   alt_S_ref bit x  <=>  alt_over_ref[x] in F  and  ref_vetoes_alt[x] == 0
//
// Every ISA variant must produce bit-identical output to the scalar one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace trinb::kernels {

inline constexpr int kMaxAttributes = 8;
inline constexpr int kMaxLevels = 16;

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);

struct LevelColumns {
  int attributes = 0;
  std::size_t count = 0;
  std::array<const std::uint8_t*, kMaxAttributes> column{};
};

/// Per-attribute lookup tables indexed by level; -1 means "no level".
struct AttributeTables {
  std::array<std::array<std::int8_t, kMaxLevels>, kMaxAttributes> threshold{};
  std::array<std::array<std::int8_t, kMaxLevels>, kMaxAttributes> veto{};
};

/// The reference alternative y, with its own thresholds pre-looked-up.
struct Reference {
  std::array<std::int8_t, kMaxAttributes> level{};
  std::array<std::int8_t, kMaxAttributes> threshold{};  // t_i(y_i)
  std::array<std::int8_t, kMaxAttributes> veto{};       // v_i(y_i)
};

struct MaskRows {
  std::uint8_t* ref_over_alt = nullptr;
  std::uint8_t* alt_over_ref = nullptr;
  std::uint8_t* ref_vetoes_alt = nullptr;
  std::uint8_t* alt_vetoes_ref = nullptr;
};

struct ConstMaskRows {
  const std::uint8_t* ref_over_alt = nullptr;
  const std::uint8_t* alt_over_ref = nullptr;
  const std::uint8_t* ref_vetoes_alt = nullptr;
  const std::uint8_t* alt_vetoes_ref = nullptr;
};

/// Bit c set <=> coalition with attribute mask c belongs to F.
using CoalitionTable = std::array<std::uint64_t, 4>;

using MaskKernel = void (*)(const LevelColumns&, const AttributeTables&, const Reference&, MaskRows);
/// Writes ceil(count/64) words to each output; bits past `count` are zero.
using OutrankKernel = void (*)(ConstMaskRows, std::size_t count, const CoalitionTable&, std::uint64_t* ref_S_alt,
                               std::uint64_t* alt_S_ref);

struct KernelSet {
  Isa isa;
  MaskKernel masks;
  OutrankKernel outrank;
};

const KernelSet& scalar();
/// Variants compiled into this binary and supported by the running CPU,
/// scalar first.
std::vector<const KernelSet*> available();
/// Best available variant, picked once. TRINB_ISA=scalar|avx2|neon overrides.
const KernelSet& active();

namespace detail {
void masks_scalar(const LevelColumns&, const AttributeTables&, const Reference&, MaskRows);
void outrank_scalar(ConstMaskRows, std::size_t, const CoalitionTable&, std::uint64_t*, std::uint64_t*);
const KernelSet* avx2_set();  // nullptr when not compiled in
const KernelSet* neon_set();
}  // namespace detail

}  // namespace trinb::kernels

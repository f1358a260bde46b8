#include "trinb/kernels.hpp"

namespace trinb::kernels::detail {

void masks_scalar(const LevelColumns& cols, const AttributeTables& tables, const Reference& ref, MaskRows out) {
  for (std::size_t x = 0; x < cols.count; ++x) {
    std::uint8_t ro = 0, ao = 0, rv = 0, av = 0;
    for (int i = 0; i < cols.attributes; ++i) {
      const auto si = static_cast<std::size_t>(i);
      const int lx = cols.column[si][x];
      const auto bit = static_cast<std::uint8_t>(1u << i);
      if (ref.level[si] > tables.threshold[si][static_cast<std::size_t>(lx)]) ro |= bit;
      if (lx > ref.threshold[si]) ao |= bit;
      if (lx <= ref.veto[si]) rv |= bit;
      if (ref.level[si] <= tables.veto[si][static_cast<std::size_t>(lx)]) av |= bit;
    }
    out.ref_over_alt[x] = ro;
    out.alt_over_ref[x] = ao;
    out.ref_vetoes_alt[x] = rv;
    out.alt_vetoes_ref[x] = av;
  }
}

void outrank_scalar(ConstMaskRows in, std::size_t count, const CoalitionTable& table, std::uint64_t* ref_S_alt,
                    std::uint64_t* alt_S_ref) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t k = 0; k < words; ++k) ref_S_alt[k] = alt_S_ref[k] = 0;
  auto member = [&](std::uint8_t c) { return (table[c >> 6] >> (c & 63)) & 1u; };
  for (std::size_t x = 0; x < count; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (member(in.ref_over_alt[x]) && in.alt_vetoes_ref[x] == 0) ref_S_alt[x >> 6] |= bit;
    if (member(in.alt_over_ref[x]) && in.ref_vetoes_alt[x] == 0) alt_S_ref[x >> 6] |= bit;
  }
}

}  // namespace trinb::kernels::detail

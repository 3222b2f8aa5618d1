#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/prime.hpp"

namespace narayana {

/// Row n of the Narayana triangle reduced to survivors: mask[k] is true iff
/// p does not divide N(n, k).
struct RowImage {
  std::uint64_t n = 0;
  PrimeBase p{2};
  std::vector<bool> mask;
  std::size_t survivor_count = 0;
};

RowImage build_row(std::uint64_t n, PrimeBase p);

/// Rows 1..rows. With threads > 1 rows are evaluated concurrently; the
/// result is identical to the serial one.
std::vector<RowImage> build_triangle(std::uint64_t rows, PrimeBase p,
                                     unsigned threads = 1);

/// Every entry of row p^m - 1 survives. Throws std::overflow_error if p^m
/// does not fit in 64 bits.
bool check_corollary_notdiv(PrimeBase p, unsigned m);

/// Row p^m survives only at k = 0 and k = p^m - 1. Throws
/// std::overflow_error if p^m does not fit in 64 bits.
bool check_corollary_div(PrimeBase p, unsigned m);

enum class RenderFormat { ascii, csv, pbm };

/// Parses "ascii", "csv" or "pbm"; throws std::invalid_argument otherwise.
RenderFormat parse_render_format(std::string_view name);
std::string_view to_string(RenderFormat f) noexcept;

/// Rows 1..rows drawn left-aligned in a rows x rows grid.
struct RenderSpec {
  RenderFormat format = RenderFormat::ascii;
  std::uint64_t rows = 1;
  char survivor_symbol = '#';
  char nonsurvivor_symbol = '.';

  /// Throws std::invalid_argument unless rows >= 1 and the symbols are
  /// distinct printable characters.
  void validate() const;
};

/// ascii: one line per row, cells past the row end are spaces.
/// csv:   header "n,k,nondivisible,order", one record per entry.
/// pbm:   plain P1, 1 marks a survivor, padding pixels are 0.
void render(const RenderSpec& spec, PrimeBase p, std::ostream& out);
std::string render(const RenderSpec& spec, PrimeBase p);

/// Renders one row on its own: ascii is a single line of n cells, csv lists
/// the row's records, pbm is an n x 1 image.
void render_row(const RowImage& row, RenderFormat format, char survivor,
                char nonsurvivor, std::ostream& out);

/// CSV records for selected entries of row n in the order given; intended
/// for rows too long to build in full.
void render_entries(std::uint64_t n, std::span<const std::uint64_t> ks,
                    PrimeBase p, std::ostream& out);

}  // namespace narayana

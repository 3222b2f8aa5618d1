#include "narayana/triangle.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "narayana/digits.hpp"
#include "narayana/narayana.hpp"

namespace narayana {

RowImage build_row(std::uint64_t n, PrimeBase p) {
  if (n == 0) throw std::invalid_argument("rows start at n = 1");
  RowImage row{n, p, std::vector<bool>(n), 0};
  for (std::uint64_t k = 0; k < n; ++k) {
    const bool survives = !prime_divides_narayana({p, n, k}).divisible;
    row.mask[k] = survives;
    if (survives) ++row.survivor_count;
  }
  return row;
}

std::vector<RowImage> build_triangle(std::uint64_t rows, PrimeBase p,
                                     unsigned threads) {
  std::vector<RowImage> out(rows);
  if (threads <= 1 || rows < 2) {
    for (std::uint64_t n = 1; n <= rows; ++n) out[n - 1] = build_row(n, p);
    return out;
  }
  // Each worker pulls the next unclaimed row; slots are disjoint.
  std::atomic<std::uint64_t> next{1};
  std::vector<std::jthread> pool;
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, rows));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t n = next++; n <= rows; n = next++) {
        out[n - 1] = build_row(n, p);
      }
    });
  }
  pool.clear();  // joins
  return out;
}

bool check_corollary_notdiv(PrimeBase p, unsigned m) {
  const std::uint64_t n = checked_power(p, m) - 1;
  if (n == 0) return true;  // m = 0 gives an empty row
  return build_row(n, p).survivor_count == n;
}

bool check_corollary_div(PrimeBase p, unsigned m) {
  const std::uint64_t n = checked_power(p, m);
  const RowImage row = build_row(n, p);
  for (std::uint64_t k = 0; k < n; ++k) {
    const bool edge = k == 0 || k == n - 1;
    if (row.mask[k] != edge) return false;
  }
  return true;
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "csv") return RenderFormat::csv;
  if (name == "pbm") return RenderFormat::pbm;
  throw std::invalid_argument("unknown render format '" + std::string(name) +
                              "'");
}

std::string_view to_string(RenderFormat f) noexcept {
  switch (f) {
    case RenderFormat::ascii:
      return "ascii";
    case RenderFormat::csv:
      return "csv";
    case RenderFormat::pbm:
      break;
  }
  return "pbm";
}

void RenderSpec::validate() const {
  if (rows == 0) throw std::invalid_argument("rows must be at least 1");
  const auto printable = [](char c) {
    return std::isgraph(static_cast<unsigned char>(c)) != 0;
  };
  if (!printable(survivor_symbol) || !printable(nonsurvivor_symbol)) {
    throw std::invalid_argument("render symbols must be printable characters");
  }
  if (survivor_symbol == nonsurvivor_symbol) {
    throw std::invalid_argument("render symbols must differ");
  }
}

namespace {

constexpr std::string_view kCsvHeader = "n,k,nondivisible,order\n";

void write_csv_record(std::uint64_t n, std::uint64_t k, PrimeBase p,
                      std::ostream& out) {
  const NarayanaQuery q{p, n, k};
  const bool survives = !prime_divides_narayana(q).divisible;
  out << n << ',' << k << ',' << (survives ? 1 : 0) << ','
      << narayana_valuation(q).omega_narayana << '\n';
}

// One grid line: the row's cells, then spaces up to `width`.
void write_ascii_line(const RowImage& row, std::uint64_t width, char on,
                      char off, std::ostream& out) {
  std::string line(width, ' ');
  for (std::uint64_t k = 0; k < row.n; ++k) line[k] = row.mask[k] ? on : off;
  out << line << '\n';
}

void write_pbm_line(const RowImage& row, std::uint64_t width,
                    std::ostream& out) {
  std::string line;
  line.reserve(2 * width);
  for (std::uint64_t x = 0; x < width; ++x) {
    if (x != 0) line.push_back(' ');
    line.push_back(x < row.n && row.mask[x] ? '1' : '0');
  }
  out << line << '\n';
}

}  // namespace

void render(const RenderSpec& spec, PrimeBase p, std::ostream& out) {
  spec.validate();
  const std::uint64_t width = spec.rows;
  switch (spec.format) {
    case RenderFormat::ascii:
      for (std::uint64_t n = 1; n <= spec.rows; ++n) {
        write_ascii_line(build_row(n, p), width, spec.survivor_symbol,
                         spec.nonsurvivor_symbol, out);
      }
      return;
    case RenderFormat::csv:
      out << kCsvHeader;
      for (std::uint64_t n = 1; n <= spec.rows; ++n) {
        for (std::uint64_t k = 0; k < n; ++k) write_csv_record(n, k, p, out);
      }
      return;
    case RenderFormat::pbm:
      out << "P1\n" << width << ' ' << spec.rows << '\n';
      for (std::uint64_t n = 1; n <= spec.rows; ++n) {
        write_pbm_line(build_row(n, p), width, out);
      }
      return;
  }
  throw std::invalid_argument("unknown render format");
}

std::string render(const RenderSpec& spec, PrimeBase p) {
  std::ostringstream out;
  render(spec, p, out);
  return std::move(out).str();
}

void render_row(const RowImage& row, RenderFormat format, char survivor,
                char nonsurvivor, std::ostream& out) {
  switch (format) {
    case RenderFormat::ascii:
      write_ascii_line(row, row.n, survivor, nonsurvivor, out);
      return;
    case RenderFormat::csv:
      out << kCsvHeader;
      for (std::uint64_t k = 0; k < row.n; ++k) {
        write_csv_record(row.n, k, row.p, out);
      }
      return;
    case RenderFormat::pbm:
      out << "P1\n" << row.n << " 1\n";
      write_pbm_line(row, row.n, out);
      return;
  }
  throw std::invalid_argument("unknown render format");
}

void render_entries(std::uint64_t n, std::span<const std::uint64_t> ks,
                    PrimeBase p, std::ostream& out) {
  // Validate everything before the first byte goes out.
  for (std::uint64_t k : ks) NarayanaQuery{p, n, k};
  out << kCsvHeader;
  for (std::uint64_t k : ks) write_csv_record(n, k, p, out);
}

}  // namespace narayana

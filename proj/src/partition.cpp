#include "gsnf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gsnf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string_view::npos)
      throw std::invalid_argument("Partition: empty part in list");
    tok = tok.substr(b, e - b + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("Partition: bad part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
  if (empty()) return Partition();
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<size_t>(size()));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

int Partition::rank() const {
  int r = 0;
  while (part(r + 1) >= r + 1) ++r;
  return r;
}

FrobeniusNotation Partition::frobenius() const {
  FrobeniusNotation fr;
  const Partition conj = conjugate();
  const int r = rank();
  fr.alphas.reserve(r);
  fr.betas.reserve(r);
  for (int i = 1; i <= r; ++i) {
    fr.alphas.push_back(part(i) - i);
    fr.betas.push_back(conj.part(i) - i);
  }
  return fr;
}

Partition Partition::from_frobenius(const FrobeniusNotation& fr) {
  const int r = fr.rank();
  if (static_cast<int>(fr.betas.size()) != r)
    throw std::invalid_argument("from_frobenius: arm/leg length mismatch");
  for (int i = 0; i < r; ++i) {
    if (fr.alphas[i] < 0 || fr.betas[i] < 0)
      throw std::invalid_argument("from_frobenius: negative coordinate");
    if (i > 0 && (fr.alphas[i] >= fr.alphas[i - 1] || fr.betas[i] >= fr.betas[i - 1]))
      throw std::invalid_argument("from_frobenius: coordinates must strictly decrease");
  }
  if (r == 0) return Partition();
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(fr.alphas[i - 1] + i);
  for (int i = r + 1; i <= fr.betas[0] + 1; ++i) {
    int cnt = 0;
    for (int j = 1; j <= r; ++j)
      if (j + fr.betas[j - 1] >= i) ++cnt;
    if (cnt == 0) break;
    parts.push_back(cnt);
  }
  return Partition(std::move(parts));
}

std::vector<Cell> Partition::diagonal_hook(int i) const {
  if (i < 1) throw std::invalid_argument("diagonal_hook: index must be >= 1");
  std::vector<Cell> out;
  if (i > rank()) return out;
  const Partition conj = conjugate();
  for (int row = conj.part(i); row > i; --row) out.push_back({row, i});
  for (int col = i; col <= part(i); ++col) out.push_back({i, col});
  return out;
}

int Partition::hook_length(const Cell& c) const {
  if (!contains(c)) throw std::invalid_argument("hook_length: cell outside diagram");
  return (part(c.row) - c.col) + (conjugate().part(c.col) - c.row) + 1;
}

std::vector<BorderStrip> Partition::rim_decomposition() const {
  std::vector<BorderStrip> out;
  Partition cur = *this;
  while (!cur.empty()) {
    // rim = cells whose lower-right diagonal neighbour is absent; one
    // cell per diagonal, ordered by ascending content
    std::vector<Cell> rim;
    for (int c = cur.min_content(); c <= cur.max_content(); ++c) {
      Cell cell{0, 0};
      for (int row = 1; row <= cur.length(); ++row) {
        Cell cand{row, row + c};
        if (cur.contains(cand) && !cur.contains({row + 1, row + 1 + c})) {
          cell = cand;
          break;
        }
      }
      if (cell.row == 0) throw std::logic_error("rim_decomposition: missing rim cell");
      rim.push_back(cell);
    }
    out.emplace_back(std::move(rim));
    std::vector<int> next;
    for (int i = 2; i <= cur.length(); ++i)
      if (cur.part(i) > 1) next.push_back(cur.part(i) - 1);
    cur = Partition(std::move(next));
  }
  return out;
}

long Partition::b_exponent() const {
  long b = 0;
  for (int k = 1; k <= length(); ++k) b += static_cast<long>(k - 1) * part(k);
  return b;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("SkewShape: inner not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  return out;
}

std::string SkewShape::str() const {
  return inner_.empty() ? outer_.str() : outer_.str() + "/" + inner_.str();
}

BorderStrip::BorderStrip(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("BorderStrip: empty cell list");
  for (const Cell& c : cells_)
    if (c.row < 1 || c.col < 1)
      throw std::invalid_argument("BorderStrip: cell outside the quadrant");
  for (size_t i = 1; i < cells_.size(); ++i) {
    const Cell& a = cells_[i - 1];
    const Cell& b = cells_[i];
    const bool right = (b.row == a.row && b.col == a.col + 1);
    const bool up = (b.col == a.col && b.row == a.row - 1);
    if (!right && !up)
      throw std::invalid_argument("BorderStrip: cells must step up or right");
  }
}

const Cell& BorderStrip::cell_at_content(int c) const {
  if (c < p() || c > q())
    throw std::out_of_range("BorderStrip: content outside strip");
  return cells_[static_cast<size_t>(c - p())];
}

BorderStrip BorderStrip::segment(int from, int to) const {
  if (from > to) throw std::invalid_argument("BorderStrip::segment: empty range");
  if (from < p() || to > q())
    throw std::out_of_range("BorderStrip::segment: range outside strip");
  return BorderStrip(std::vector<Cell>(cells_.begin() + (from - p()),
                                       cells_.begin() + (to - p() + 1)));
}

RibbonAsSkew ribbon_to_skew(const BorderStrip& strip) {
  int rmin = strip.cells().front().row, rmax = strip.cells().front().row;
  int cmin = strip.cells().front().col;
  for (const Cell& c : strip.cells()) {
    rmin = std::min(rmin, c.row);
    rmax = std::max(rmax, c.row);
    cmin = std::min(cmin, c.col);
  }
  const int nrows = rmax - rmin + 1;
  std::vector<int> lo(nrows, 0), hi(nrows, 0);
  for (const Cell& c : strip.cells()) {
    const int r = c.row - rmin;  // 0-based normalized row
    const int col = c.col - cmin + 1;
    if (lo[r] == 0) {
      lo[r] = hi[r] = col;
    } else {
      lo[r] = std::min(lo[r], col);
      hi[r] = std::max(hi[r], col);
    }
  }
  std::vector<int> outer(hi), inner;
  for (int r = 0; r < nrows; ++r)
    if (lo[r] > 1) inner.push_back(lo[r] - 1);
  RibbonAsSkew out;
  out.shape = SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
  out.content_offset = cmin - rmin;
  return out;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    gen_partitions(remaining - p, p, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

}  // namespace gsnf

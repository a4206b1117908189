#include "gsnf/outside_decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gsnf {

Step DirectionVector::at(int content) const {
  const long i = static_cast<long>(content) - min_content;
  if (i < 0 || i >= static_cast<long>(steps.size()))
    throw std::out_of_range("DirectionVector: content outside range");
  return steps[static_cast<size_t>(i)];
}

DirectionVector DirectionVector::parse(std::string_view s, int min_content) {
  DirectionVector dv;
  dv.min_content = min_content;
  dv.steps.reserve(s.size());
  for (char ch : s) {
    if (ch == 'U' || ch == 'u')
      dv.steps.push_back(Step::Up);
    else if (ch == 'R' || ch == 'r')
      dv.steps.push_back(Step::Right);
    else
      throw std::invalid_argument(std::string("DirectionVector: bad step '") + ch + "'");
  }
  return dv;
}

std::string DirectionVector::str() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s += (st == Step::Up ? 'U' : 'R');
  return s;
}

std::string_view kind_name(DecompKind k) {
  switch (k) {
    case DecompKind::Horizontal: return "horizontal";
    case DecompKind::Hook: return "hook";
    case DecompKind::Rim: return "rim";
  }
  return "?";
}

std::optional<DecompKind> parse_kind(std::string_view s) {
  if (s == "horizontal") return DecompKind::Horizontal;
  if (s == "hook") return DecompKind::Hook;
  if (s == "rim") return DecompKind::Rim;
  return std::nullopt;
}

DirectionVector canonical_direction(const Partition& p, DecompKind kind) {
  if (p.empty()) throw std::invalid_argument("canonical_direction: empty partition");
  DirectionVector dv;
  dv.min_content = p.min_content();
  const int d = p.num_diagonals();
  dv.steps.reserve(d - 1);
  switch (kind) {
    case DecompKind::Horizontal:
      dv.steps.assign(d - 1, Step::Right);
      break;
    case DecompKind::Hook:
      for (int c = p.min_content(); c < p.max_content(); ++c)
        dv.steps.push_back(c < 0 ? Step::Up : Step::Right);
      break;
    case DecompKind::Rim: {
      const BorderStrip rim = p.rim_decomposition().front();
      for (int c = rim.p(); c < rim.q(); ++c) {
        const Cell& a = rim.cell_at_content(c);
        const Cell& b = rim.cell_at_content(c + 1);
        dv.steps.push_back(b.row == a.row - 1 ? Step::Up : Step::Right);
      }
      break;
    }
  }
  return dv;
}

namespace {

// The unique length-d ribbon on the shape's diagonals whose steps follow
// the direction vector; cells carry true contents.
BorderStrip make_cutting_strip(const Partition& p, const DirectionVector& dir) {
  int ups = 0;
  for (Step s : dir.steps)
    if (s == Step::Up) ++ups;
  int row = 1 + ups;
  int col = row + p.min_content();
  if (col < 1) {
    row += 1 - col;
    col = 1;
  }
  std::vector<Cell> cells{{row, col}};
  for (Step s : dir.steps) {
    if (s == Step::Up)
      --row;
    else
      ++col;
    cells.push_back({row, col});
  }
  return BorderStrip(std::move(cells));
}

}  // namespace

OutsideDecomposition OutsideDecomposition::build(const Partition& p, DirectionVector dir) {
  if (p.empty()) throw std::invalid_argument("OutsideDecomposition: empty partition");
  const int d = p.num_diagonals();
  if (static_cast<int>(dir.steps.size()) != d - 1)
    throw std::invalid_argument("OutsideDecomposition: direction length must be " +
                                std::to_string(d - 1));
  dir.min_content = p.min_content();

  auto successor = [&](const Cell& c) -> std::optional<Cell> {
    if (c.content() >= p.max_content()) return std::nullopt;
    const Cell next = dir.at(c.content()) == Step::Up ? Cell{c.row - 1, c.col}
                                                      : Cell{c.row, c.col + 1};
    if (!p.contains(next)) return std::nullopt;
    return next;
  };

  std::set<Cell> has_pred;
  for (const Cell& c : p.cells())
    if (auto n = successor(c)) has_pred.insert(*n);

  std::vector<BorderStrip> strips;
  for (const Cell& c : p.cells()) {
    if (has_pred.count(c)) continue;
    std::vector<Cell> chain{c};
    while (auto n = successor(chain.back())) chain.push_back(*n);
    strips.emplace_back(std::move(chain));
  }
  std::sort(strips.begin(), strips.end(),
            [](const BorderStrip& a, const BorderStrip& b) { return a.p() > b.p(); });

  OutsideDecomposition out;
  out.shape_ = p;
  out.cutting_ = make_cutting_strip(p, dir);
  out.dir_ = std::move(dir);
  out.strips_ = std::move(strips);
  return out;
}

OutsideDecomposition OutsideDecomposition::canonical(const Partition& p, DecompKind kind) {
  return build(p, canonical_direction(p, kind));
}

OutsideDecomposition OutsideDecomposition::from_strips(const Partition& p,
                                                       const std::vector<BorderStrip>& strips) {
  std::set<Cell> seen;
  long total = 0;
  for (const BorderStrip& s : strips) {
    for (const Cell& c : s.cells()) {
      if (!p.contains(c))
        throw std::invalid_argument("from_strips: cell outside the diagram");
      if (!seen.insert(c).second)
        throw std::invalid_argument("from_strips: strips overlap");
      ++total;
    }
  }
  if (total != p.size())
    throw std::invalid_argument("from_strips: strips do not cover the diagram");

  // derive the direction each diagonal must take
  std::map<int, Step> forced;
  auto force = [&](int content, Step st) {
    auto [it, inserted] = forced.emplace(content, st);
    if (!inserted && it->second != st)
      throw std::invalid_argument("from_strips: conflicting directions on a diagonal");
  };
  for (const BorderStrip& s : strips) {
    const auto& cells = s.cells();
    for (size_t i = 1; i < cells.size(); ++i)
      force(cells[i - 1].content(),
            cells[i].row == cells[i - 1].row - 1 ? Step::Up : Step::Right);
    const Cell& e = cells.back();
    if (e.content() < p.max_content()) {
      const bool right_in = p.contains({e.row, e.col + 1});
      const bool up_in = p.contains({e.row - 1, e.col});
      if (right_in && up_in)
        throw std::invalid_argument("from_strips: strip ends inside the diagram");
      if (right_in) force(e.content(), Step::Up);
      if (up_in) force(e.content(), Step::Right);
    }
  }
  DirectionVector dir;
  dir.min_content = p.min_content();
  for (int c = p.min_content(); c < p.max_content(); ++c) {
    auto it = forced.find(c);
    dir.steps.push_back(it == forced.end() ? Step::Right : it->second);
  }

  OutsideDecomposition rebuilt = build(p, dir);
  auto key = [](const std::vector<BorderStrip>& v) {
    std::vector<std::vector<Cell>> k;
    for (const BorderStrip& s : v) k.push_back(s.cells());
    std::sort(k.begin(), k.end());
    return k;
  };
  if (key(rebuilt.strips_) != key(strips))
    throw std::invalid_argument("from_strips: strip list is not an outside decomposition");
  return rebuilt;
}

std::vector<OutsideDecomposition> OutsideDecomposition::enumerate(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("enumerate: empty partition");
  const int n = p.num_diagonals() - 1;
  if (n > 24) throw std::invalid_argument("enumerate: too many diagonals");
  std::vector<OutsideDecomposition> out;
  out.reserve(1u << n);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    DirectionVector dir;
    dir.min_content = p.min_content();
    dir.steps.reserve(n);
    for (int i = 0; i < n; ++i)
      dir.steps.push_back(((mask >> (n - 1 - i)) & 1) ? Step::Up : Step::Right);
    out.push_back(build(p, std::move(dir)));
  }
  return out;
}

ThetaSegment OutsideDecomposition::theta_segment(int from, int to) const {
  if (from == to + 1) return ThetaSegment::make_empty();
  if (from > to + 1) return ThetaSegment::make_undefined();
  const BorderStrip& cs = *cutting_;
  if (from < cs.p() || to > cs.q())
    throw std::out_of_range("theta_segment: contents outside the cutting strip");
  return ThetaSegment::make_strip(cs.segment(from, to));
}

}  // namespace gsnf

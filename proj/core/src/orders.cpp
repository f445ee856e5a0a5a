#include "proxyvote/orders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace proxyvote {

namespace {

void require_alternatives(int m) {
  if (m < 0 || m > kMaxAlternatives) {
    throw OrderError(OrderErrc::LimitExceeded,
                     "number of alternatives must be in [0, 8], got " +
                         std::to_string(m));
  }
}

void require_edge(const Edge& e, int m) {
  if (e.above < 0 || e.above >= m || e.below < 0 || e.below >= m) {
    throw OrderError(OrderErrc::OutOfRange, "edge endpoint outside [0, m)");
  }
  if (e.above == e.below) {
    throw OrderError(OrderErrc::Reflexive, "reflexive edge");
  }
}

std::uint64_t row_mask() { return (std::uint64_t{1} << kMaxAlternatives) - 1; }

std::uint64_t row(std::uint64_t bits, int a) {
  return (bits >> (a * kMaxAlternatives)) & row_mask();
}

bool closed(std::uint64_t bits, int m) {
  for (int a = 0; a < m; ++a) {
    std::uint64_t ra = row(bits, a);
    for (int b = 0; b < m; ++b) {
      if ((ra >> b & 1) && (row(bits, b) & ~ra)) return false;
    }
  }
  return true;
}

bool antisymmetric(std::uint64_t bits, int m) {
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if ((bits & EdgeSet::bit(a, b)) && (bits & EdgeSet::bit(b, a))) return false;
    }
  }
  return true;
}

}  // namespace

EdgeSet::EdgeSet(int m) : m_(m) { require_alternatives(m); }

EdgeSet::EdgeSet(int m, std::span<const Edge> edges) : EdgeSet(m) {
  for (const Edge& e : edges) insert(e);
}

void EdgeSet::insert(Edge e) {
  require_edge(e, m_);
  bits_ |= bit(e.above, e.below);
}

std::size_t EdgeSet::size() const { return std::popcount(bits_); }

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    int index = std::countr_zero(rest);
    out.push_back({index / kMaxAlternatives, index % kMaxAlternatives});
  }
  return out;
}

PartialOrder::PartialOrder(int m) : edges_(m) {}

PartialOrder PartialOrder::from_closed_bits(int m, std::uint64_t bits) {
  PartialOrder p;
  p.edges_ = EdgeSet::from_bits(m, bits);
  return p;
}

bool PartialOrder::is_linear() const {
  int m = alternatives();
  return size() == static_cast<std::size_t>(m * (m - 1) / 2);
}

LinearOrder::LinearOrder(std::span<const int> ranking) {
  if (ranking.size() > static_cast<std::size_t>(kMaxRankingSize) ||
      !is_permutation(ranking)) {
    throw OrderError(OrderErrc::NotPermutation, "ranking is not a permutation");
  }
  size_ = static_cast<std::uint8_t>(ranking.size());
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    items_[p] = static_cast<std::uint8_t>(ranking[p]);
  }
}

LinearOrder LinearOrder::identity(int size) {
  std::vector<int> r(size);
  std::iota(r.begin(), r.end(), 0);
  return LinearOrder(r);
}

int LinearOrder::position(int item) const {
  for (int p = 0; p < size_; ++p) {
    if (items_[p] == item) return p;
  }
  return -1;
}

std::vector<int> LinearOrder::ranking() const { return {begin(), end()}; }

std::uint64_t LinearOrder::relation_bits() const {
  std::uint64_t bits = 0;
  for (int p = 0; p < size_; ++p) {
    for (int q = p + 1; q < size_; ++q) bits |= EdgeSet::bit(items_[p], items_[q]);
  }
  return bits;
}

PartialOrder LinearOrder::to_partial_order() const {
  require_alternatives(size_);
  return PartialOrder::from_closed_bits(size_, relation_bits());
}

Axis::Axis(std::span<const Alternative> order) : order_(order.begin(), order.end()) {
  if (order.size() > static_cast<std::size_t>(kMaxAlternatives) ||
      !is_permutation(order)) {
    throw OrderError(OrderErrc::NotPermutation, "axis is not a permutation");
  }
  for (int p = 0; p < size(); ++p) position_[order_[p]] = p;
}

PartialOrder make_partial_order(std::span<const Edge> edges, int m) {
  EdgeSet set(m, edges);
  if (!antisymmetric(set.bits(), m)) {
    throw OrderError(OrderErrc::Conflict, "both a>b and b>a present");
  }
  if (!closed(set.bits(), m)) {
    throw OrderError(OrderErrc::NotClosed, "edge set is not transitively closed");
  }
  return PartialOrder::from_closed_bits(m, set.bits());
}

PartialOrder transitive_closure(std::span<const Edge> edges, int m) {
  EdgeSet set(m, edges);
  std::array<std::uint64_t, kMaxAlternatives> reach{};
  for (int a = 0; a < m; ++a) reach[a] = row(set.bits(), a);
  // Warshall over bit rows.
  for (int k = 0; k < m; ++k) {
    for (int a = 0; a < m; ++a) {
      if (reach[a] >> k & 1) reach[a] |= reach[k];
    }
  }
  std::uint64_t bits = 0;
  for (int a = 0; a < m; ++a) {
    if (reach[a] >> a & 1) {
      throw OrderError(OrderErrc::CycleDetected, "edges contain a cycle");
    }
    bits |= reach[a] << (a * kMaxAlternatives);
  }
  return PartialOrder::from_closed_bits(m, bits);
}

namespace {

// Depth-first topological sorts, smallest available alternative first, which
// yields the extensions in lexicographic order.
void extend(const PartialOrder& p, std::array<std::uint64_t, kMaxAlternatives>& preds,
            std::uint64_t placed, std::array<int, kMaxAlternatives>& prefix, int depth,
            std::vector<LinearOrder>& out) {
  int m = p.alternatives();
  if (depth == m) {
    out.emplace_back(std::span<const int>(prefix.data(), m));
    return;
  }
  for (int a = 0; a < m; ++a) {
    if ((placed >> a & 1) || (preds[a] & ~placed)) continue;
    prefix[depth] = a;
    extend(p, preds, placed | (std::uint64_t{1} << a), prefix, depth + 1, out);
  }
}

}  // namespace

std::vector<LinearOrder> linear_extensions(const PartialOrder& p) {
  std::array<std::uint64_t, kMaxAlternatives> preds{};
  for (const Edge& e : p.edges()) preds[e.below] |= std::uint64_t{1} << e.above;
  std::array<int, kMaxAlternatives> prefix{};
  std::vector<LinearOrder> out;
  extend(p, preds, 0, prefix, 0, out);
  return out;
}

LinearOrder guided_extension(const PartialOrder& p, const LinearOrder& guide) {
  int m = p.alternatives();
  std::array<std::uint64_t, kMaxAlternatives> preds{};
  for (const Edge& e : p.edges()) preds[e.below] |= std::uint64_t{1} << e.above;
  std::array<int, kMaxAlternatives> ranking{};
  std::uint64_t placed = 0;
  for (int depth = 0; depth < m; ++depth) {
    for (int g = 0; g < m; ++g) {
      int a = guide[g];
      if ((placed >> a & 1) || (preds[a] & ~placed)) continue;
      ranking[depth] = a;
      placed |= std::uint64_t{1} << a;
      break;
    }
  }
  return LinearOrder(std::span<const int>(ranking.data(), m));
}

std::optional<PartialOrder> with_edge(const PartialOrder& p, Edge e) {
  const int m = p.alternatives();
  require_edge(e, m);
  if (p.prefers(e.above, e.below) || p.prefers(e.below, e.above)) return std::nullopt;
  std::uint64_t bits = p.bits() | EdgeSet::bit(e.above, e.below);
  if (!closed(bits, m)) return std::nullopt;
  return PartialOrder::from_closed_bits(m, bits);
}

std::optional<PartialOrder> without_edge(const PartialOrder& p, Edge e) {
  const int m = p.alternatives();
  require_edge(e, m);
  if (!p.prefers(e.above, e.below)) return std::nullopt;
  std::uint64_t bits = p.bits() & ~EdgeSet::bit(e.above, e.below);
  if (!closed(bits, m)) return std::nullopt;
  return PartialOrder::from_closed_bits(m, bits);
}

bool is_subset(const PartialOrder& p, const PartialOrder& q) {
  return p.edge_set().is_subset_of(q.edge_set());
}

bool extends(const LinearOrder& l, const PartialOrder& p) {
  return (p.bits() & ~l.relation_bits()) == 0;
}

EdgeSet agree(const PartialOrder& p, const PartialOrder& q) {
  return EdgeSet::from_bits(p.alternatives(), p.bits() & q.bits());
}

EdgeSet disagree(const PartialOrder& p, const PartialOrder& q) {
  std::uint64_t out = 0;
  for (const Edge& e : p.edges()) {
    if (q.prefers(e.below, e.above)) out |= EdgeSet::bit(e.above, e.below);
  }
  return EdgeSet::from_bits(p.alternatives(), out);
}

PartialOrder apply_alt_bijection(std::span<const int> psi, const PartialOrder& p) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = p.bits(); rest != 0; rest &= rest - 1) {
    int index = std::countr_zero(rest);
    out |= EdgeSet::bit(psi[index / kMaxAlternatives], psi[index % kMaxAlternatives]);
  }
  return PartialOrder::from_closed_bits(p.alternatives(), out);
}

LinearOrder apply_alt_bijection(std::span<const int> psi, const LinearOrder& l) {
  return rename_items(psi, l);
}

LinearOrder rename_items(std::span<const int> psi, const LinearOrder& l) {
  std::array<int, kMaxRankingSize> r{};
  for (int p = 0; p < l.size(); ++p) r[p] = psi[l[p]];
  return LinearOrder(std::span<const int>(r.data(), l.size()));
}

std::vector<LinearOrder> permute_proxy_choices(std::span<const int> psi,
                                               const std::vector<LinearOrder>& s) {
  std::vector<LinearOrder> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(rename_items(psi, s[psi[i]]));
  return out;
}

std::vector<PartialOrder> enumerate_partial_orders(int m) {
  if (m < 0 || m > 5) {
    throw OrderError(OrderErrc::LimitExceeded,
                     "partial order enumeration is limited to m <= 5");
  }
  // Each unordered pair is unrelated, a>b or b>a; keep the closed assignments.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::uint64_t> found;
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) bits |= EdgeSet::bit(pairs[k].first, pairs[k].second);
      if (state[k] == 2) bits |= EdgeSet::bit(pairs[k].second, pairs[k].first);
    }
    if (closed(bits, m)) found.push_back(bits);
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  std::sort(found.begin(), found.end());
  std::vector<PartialOrder> out;
  out.reserve(found.size());
  for (std::uint64_t bits : found) out.push_back(PartialOrder::from_closed_bits(m, bits));
  return out;
}

std::vector<LinearOrder> enumerate_linear_orders(int m) {
  if (m < 0 || m > kMaxAlternatives) {
    throw OrderError(OrderErrc::LimitExceeded,
                     "linear order enumeration is limited to m <= 8");
  }
  std::vector<int> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::vector<LinearOrder> out;
  do {
    out.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

std::size_t linear_order_rank(const LinearOrder& l) {
  std::size_t rank = 0;
  int n = l.size();
  for (int p = 0; p < n; ++p) {
    int smaller_later = 0;
    for (int q = p + 1; q < n; ++q) smaller_later += l[q] < l[p];
    rank = rank * (n - p) + smaller_later;
  }
  return rank;
}

bool is_permutation(std::span<const int> items) {
  std::vector<bool> seen(items.size(), false);
  for (int x : items) {
    if (x < 0 || static_cast<std::size_t>(x) >= items.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> inverse_permutation(std::span<const int> psi) {
  std::vector<int> inv(psi.size());
  for (std::size_t x = 0; x < psi.size(); ++x) inv[psi[x]] = static_cast<int>(x);
  return inv;
}

Alternative peak(const LinearOrder& l) { return l.top(); }

bool is_single_peaked(const LinearOrder& l, const Axis& axis) {
  int m = l.size();
  std::array<int, kMaxAlternatives> rank{};
  for (int p = 0; p < m; ++p) rank[l[p]] = p;
  int top = axis.position(l.top());
  // Each alternative must be beaten by its axis neighbour on the peak side.
  for (int pos = 0; pos < m; ++pos) {
    if (pos == top) continue;
    int toward = pos < top ? pos + 1 : pos - 1;
    if (rank[axis.at(toward)] > rank[axis.at(pos)]) return false;
  }
  return true;
}

bool is_single_peaked(std::span<const LinearOrder> profile, const Axis& axis) {
  return std::all_of(profile.begin(), profile.end(),
                     [&](const LinearOrder& l) { return is_single_peaked(l, axis); });
}

std::optional<Axis> find_axis(std::span<const LinearOrder> profile) {
  if (profile.empty()) return std::nullopt;
  int m = profile.front().size();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (m > 1 && order.front() > order.back()) continue;
    Axis axis(order);
    if (is_single_peaked(profile, axis)) return axis;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::string to_string(const PartialOrder& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Edge& e : p.edges()) {
    if (!first) os << ", ";
    first = false;
    os << e.above << '>' << e.below;
  }
  os << '}';
  return os.str();
}

std::string to_string(const LinearOrder& l) {
  std::ostringstream os;
  for (int p = 0; p < l.size(); ++p) {
    if (p) os << '>';
    os << l[p];
  }
  return os.str();
}

}  // namespace proxyvote

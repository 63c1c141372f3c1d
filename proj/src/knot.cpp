#include "jonesmod/knot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "jonesmod/error.hpp"

namespace jonesmod {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns true when x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

LaurentPoly delta() { return LaurentPoly({-1, 0, 0, 0, -1}, -2); }

}  // namespace

PDCode::PDCode(std::vector<PdCrossing> crossings)
    : crossings_(std::move(crossings)) {
  const std::size_t edges = 2 * crossings_.size();
  std::vector<int> seen(edges + 1, 0);
  for (const auto& x : crossings_) {
    for (int label : x) {
      if (label < 1 || static_cast<std::size_t>(label) > edges) {
        throw DiagramError("label " + std::to_string(label) +
                           " outside 1.." + std::to_string(edges));
      }
      ++seen[static_cast<std::size_t>(label)];
    }
  }
  for (std::size_t label = 1; label <= edges; ++label) {
    if (seen[label] != 2) {
      throw DiagramError("label " + std::to_string(label) + " appears " +
                         std::to_string(seen[label]) + " times, expected 2");
    }
  }
  orient();  // rejects links
}

PDCode::Orientation PDCode::orient() const {
  const std::size_t n = crossings_.size();
  Orientation out{std::vector<bool>(n, false), std::vector<bool>(n, false)};
  if (n == 0) return out;

  // Each label occurs in exactly two slots; index them by label.
  std::vector<std::vector<Slot>> where(2 * n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (int pos = 0; pos < 4; ++pos) {
      where[static_cast<std::size_t>(crossings_[c][pos])].push_back({c, pos});
    }
  }

  std::size_t visited = 0;
  Slot enter{0, 0};
  do {
    if (enter.position % 2 == 0) {
      out.under_forward[enter.crossing] = enter.position == 0;
    } else {
      out.over_forward[enter.crossing] = enter.position == 3;
    }
    visited += 2;
    const Slot exit{enter.crossing, (enter.position + 2) % 4};
    const auto& pair = where[static_cast<std::size_t>(
        crossings_[exit.crossing][exit.position])];
    const Slot& next =
        (pair[0].crossing == exit.crossing && pair[0].position == exit.position)
            ? pair[1]
            : pair[0];
    enter = next;
    if (visited > 4 * n) break;
  } while (!(enter.crossing == 0 && enter.position == 0));

  if (visited != 4 * n) {
    throw DiagramError("diagram has more than one component (links are not "
                       "supported)");
  }
  return out;
}

std::vector<int> PDCode::signs() const {
  const Orientation o = orient();
  std::vector<int> out(crossings_.size());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    out[c] = o.under_forward[c] == o.over_forward[c] ? 1 : -1;
  }
  return out;
}

int PDCode::writhe() const {
  const auto s = signs();
  return std::accumulate(s.begin(), s.end(), 0);
}

PDCode PDCode::mirrored() const {
  const Orientation o = orient();
  std::vector<PdCrossing> out;
  out.reserve(crossings_.size());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& [a, b, cc, d] = crossings_[c];
    // The old over-strand becomes the under-strand; start at its entry.
    out.push_back(o.over_forward[c] ? PdCrossing{d, a, b, cc}
                                    : PdCrossing{b, cc, d, a});
  }
  return PDCode(std::move(out));
}

std::string PDCode::to_string() const {
  std::string out = "PD[";
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (c != 0) out += ',';
    out += "X[";
    for (int pos = 0; pos < 4; ++pos) {
      if (pos != 0) out += ',';
      out += std::to_string(crossings_[c][pos]);
    }
    out += ']';
  }
  return out + "]";
}

namespace {

class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected an integer", start);
    if (pos_ - digits > 9) throw ParseError("integer out of range", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  ListParser in(text);
  in.accept("PD");
  in.expect('[');
  std::vector<PdCrossing> crossings;
  if (!in.accept(']')) {
    do {
      in.accept('X');
      in.expect('[');
      PdCrossing x{};
      for (int pos = 0; pos < 4; ++pos) {
        if (pos != 0) in.expect(',');
        x[pos] = in.integer();
      }
      in.expect(']');
      crossings.push_back(x);
    } while (in.accept(','));
    in.expect(']');
  }
  in.finish();
  return PDCode(std::move(crossings));
}

int BraidWord::strand_count() const {
  int top = 0;
  for (int g : generators) top = std::max(top, std::abs(g));
  return top + 1;
}

BraidWord parse_braid(std::string_view text) {
  ListParser in(text);
  const bool bracketed = in.accept('[');
  BraidWord out;
  if (!(bracketed && in.accept(']'))) {
    do {
      const std::size_t at = in.position();
      const int g = in.integer();
      if (g == 0) throw ParseError("braid generator 0 is not allowed", at);
      out.generators.push_back(g);
    } while (in.accept(','));
    if (bracketed) in.expect(']');
  }
  in.finish();
  return out;
}

PDCode braid_to_pd(const BraidWord& word) {
  const int strands = word.strand_count();
  if (word.generators.empty()) return PDCode();

  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word.generators) {
    const auto k = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(perm[k], perm[k + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycle = 0;
  for (std::size_t j = 0; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
    seen[j] = true;
    ++cycle;
  }
  if (cycle != perm.size()) {
    throw DiagramError("braid closure has more than one component");
  }

  // Raw edge ids: 1..strands label the bottom of each position.
  std::vector<int> current(static_cast<std::size_t>(strands));
  std::iota(current.begin(), current.end(), 1);
  int next_id = strands + 1;
  std::vector<PdCrossing> raw;
  for (int g : word.generators) {
    const auto k = static_cast<std::size_t>(std::abs(g) - 1);
    const int sw = current[k];
    const int se = current[k + 1];
    const int nw = next_id++;
    const int ne = next_id++;
    raw.push_back(g > 0 ? PdCrossing{se, ne, nw, sw}
                        : PdCrossing{sw, se, ne, nw});
    current[k] = nw;
    current[k + 1] = ne;
  }
  // Close up: the top edge at position j is the bottom edge at position j.
  std::map<int, int> closure;
  for (int j = 0; j < strands; ++j) {
    closure[current[static_cast<std::size_t>(j)]] = j + 1;
  }
  std::map<int, int> compact;
  for (auto& x : raw) {
    for (int& label : x) {
      if (auto it = closure.find(label); it != closure.end()) label = it->second;
      compact.emplace(label, 0);
    }
  }
  int fresh = 1;
  for (auto& [label, value] : compact) value = fresh++;
  for (auto& x : raw) {
    for (int& label : x) label = compact[label];
  }
  return PDCode(std::move(raw));
}

BracketPoly kauffman_bracket(const PDCode& pd) {
  const auto& xs = pd.crossings();
  const std::size_t n = xs.size();
  if (n == 0) return {LaurentPoly::constant(1)};
  if (n > 30) throw DiagramError("naive state sum limited to 30 crossings");

  // histogram[a][loops]: number of states with a A-smoothings and `loops`
  // circles.
  const std::size_t labels = 2 * n;
  std::vector<std::vector<std::uint64_t>> histogram(
      n + 1, std::vector<std::uint64_t>(labels + 1, 0));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    UnionFind uf(labels + 1);
    std::size_t components = labels;
    std::size_t a_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& [a, b, cc, d] = xs[c];
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      const auto uc = static_cast<std::size_t>(cc);
      const auto ud = static_cast<std::size_t>(d);
      if ((state >> c) & 1U) {
        ++a_count;
        components -= uf.unite(ua, ub);
        components -= uf.unite(uc, ud);
      } else {
        components -= uf.unite(ua, ud);
        components -= uf.unite(ub, uc);
      }
    }
    ++histogram[a_count][components];
  }

  std::vector<LaurentPoly> delta_powers{LaurentPoly::constant(1)};
  for (std::size_t k = 1; k <= labels; ++k) {
    delta_powers.push_back(delta_powers.back() * delta());
  }
  LaurentPoly out;
  for (std::size_t a_count = 0; a_count <= n; ++a_count) {
    const Degree exponent =
        static_cast<Degree>(a_count) - static_cast<Degree>(n - a_count);
    for (std::size_t loops = 1; loops <= labels; ++loops) {
      const std::uint64_t count = histogram[a_count][loops];
      if (count == 0) continue;
      out += delta_powers[loops - 1]
                 .shifted(exponent)
                 .scaled(Integer(static_cast<unsigned long>(count)));
    }
  }
  return {out};
}

namespace {

// Open endpoints of the partially contracted diagram: partner[x] is the
// label at the other end of the arc that ends at x.
using Matching = std::map<int, int>;

// Adds an arc between two label occurrences; returns the number of closed
// loops produced (0 or 1).
int add_arc(Matching& partner, int x, int y) {
  if (x == y) return 1;
  const auto xi = partner.find(x);
  const auto yi = partner.find(y);
  const bool x_open = xi != partner.end();
  const bool y_open = yi != partner.end();
  if (x_open && xi->second == y) {
    partner.erase(x);
    partner.erase(y);
    return 1;
  }
  const int u = x_open ? xi->second : x;
  const int v = y_open ? yi->second : y;
  if (x_open) partner.erase(x);
  if (y_open) partner.erase(y);
  partner[u] = v;
  partner[v] = u;
  return 0;
}

std::vector<std::size_t> contraction_order(const std::vector<PdCrossing>& xs) {
  std::vector<std::size_t> order;
  std::vector<bool> used(xs.size(), false);
  std::map<int, int> open_count;
  for (std::size_t step = 0; step < xs.size(); ++step) {
    std::size_t best = xs.size();
    int best_score = -1;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      if (used[c]) continue;
      int score = 0;
      for (int label : xs[c]) score += open_count.contains(label) ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int label : xs[best]) {
      if (++open_count[label] == 2) open_count.erase(label);
    }
  }
  return order;
}

}  // namespace

BracketPoly kauffman_bracket_contracted(const PDCode& pd) {
  const auto& xs = pd.crossings();
  if (xs.empty()) return {LaurentPoly::constant(1)};

  const LaurentPoly d = delta();
  const LaurentPoly a_weight = LaurentPoly::monomial(1, 1);
  const LaurentPoly b_weight = LaurentPoly::monomial(1, -1);

  std::map<Matching, LaurentPoly> states{{Matching{}, LaurentPoly::constant(1)}};
  for (std::size_t c : contraction_order(xs)) {
    const auto& [a, b, cc, dd] = xs[c];
    std::map<Matching, LaurentPoly> next;
    for (const auto& [matching, weight] : states) {
      for (bool a_smoothing : {true, false}) {
        Matching m = matching;
        int loops = a_smoothing ? add_arc(m, a, b) + add_arc(m, cc, dd)
                                : add_arc(m, a, dd) + add_arc(m, b, cc);
        LaurentPoly term = weight * (a_smoothing ? a_weight : b_weight);
        for (; loops > 0; --loops) term *= d;
        auto [it, inserted] = next.try_emplace(std::move(m), term);
        if (!inserted) it->second += term;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty()) {
    throw DiagramError("contraction left open endpoints");
  }
  // The state sum counted every loop; <D> uses delta^(loops - 1).
  const DivisionResult q = divide_by(states.begin()->second, d);
  if (!q.divisible) throw DiagramError("state sum not divisible by delta");
  return {q.quotient};
}

LaurentPoly jones_from_bracket(const BracketPoly& bracket, int writhe) {
  LaurentPoly normalized = bracket.poly.shifted(-3 * static_cast<Degree>(writhe));
  if (writhe % 2 != 0) normalized = -normalized;
  if (normalized.is_zero()) {
    throw DiagramError("bracket vanished");
  }
  const Degree lo = *normalized.min_degree();
  const Degree hi = *normalized.max_degree();
  if (lo % 4 != 0 || hi % 4 != 0) {
    throw DiagramError("bracket exponents not divisible by 4; link or sign "
                       "convention error");
  }
  // A^e -> t^(-e/4): reverse and compress.
  std::vector<Integer> coeffs(static_cast<std::size_t>((hi - lo) / 4 + 1));
  for (std::size_t i = 0; i < normalized.coeffs().size(); ++i) {
    if (normalized.coeffs()[i] == 0) continue;
    const Degree e = lo + static_cast<Degree>(i);
    if (e % 4 != 0) {
      throw DiagramError("bracket exponent " + std::to_string(e) +
                         " not divisible by 4");
    }
    coeffs[static_cast<std::size_t>((hi - e) / 4)] = normalized.coeffs()[i];
  }
  return {std::move(coeffs), -hi / 4};
}

LaurentPoly jones(const PDCode& pd) {
  const BracketPoly bracket = pd.size() <= 12 ? kauffman_bracket(pd)
                                              : kauffman_bracket_contracted(pd);
  return jones_from_bracket(bracket, pd.writhe());
}

LaurentPoly connected_sum(const LaurentPoly& v1, const LaurentPoly& v2) {
  return v1 * v2;
}

LaurentPoly mirror(const LaurentPoly& v) { return v.inverted(); }

}  // namespace jonesmod

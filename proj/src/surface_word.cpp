#include "genuslab/surface_word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "genuslab/errors.hpp"

namespace genuslab {

namespace {

constexpr char kFreshMark = '#';  // reserved for symbols minted by T2

struct Position {
  std::size_t polygon;
  std::size_t index;
};

std::map<std::string, std::vector<Position>> occurrences(const std::vector<Polygon>& polys) {
  std::map<std::string, std::vector<Position>> out;
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t i = 0; i < polys[p].size(); ++i) out[polys[p][i].symbol].push_back({p, i});
  return out;
}

std::pair<Position, Position> locate(const OrientedWordSystem& w, const std::string& symbol) {
  const auto occ = occurrences(w.polygons());
  const auto it = occ.find(symbol);
  if (it == occ.end()) throw std::invalid_argument("symbol '" + symbol + "' not in word");
  return {it->second[0], it->second[1]};
}

void check_polygon(const OrientedWordSystem& w, std::size_t polygon) {
  if (polygon >= w.polygons().size()) throw std::invalid_argument("polygon index out of range");
}

bool cancels(const Letter& x, const Letter& y) { return x.symbol == y.symbol && x.inverse != y.inverse; }

Polygon rotated(const Polygon& p, std::size_t start) {
  Polygon out(p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
  out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

// Raw rewrites on polygons; callers have checked the pattern.

Polygon cancel_at(const Polygon& p, std::size_t i) {
  const std::size_t j = (i + 1) % p.size();
  Polygon out;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (k != i && k != j) out.push_back(p[k]);
  return out;
}

Polygon merge_on(const Polygon& with_letter, std::size_t at, const Polygon& with_inverse, std::size_t inv_at) {
  // (A x)(x- B) -> (A B)
  Polygon a = rotated(with_letter, (at + 1) % with_letter.size());
  a.pop_back();
  Polygon b = rotated(with_inverse, inv_at);
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

struct Extraction {
  Polygon residue;
  Handle handle;
};

std::optional<Extraction> extract_handle(const Polygon& p, const std::string& s, const std::string& t) {
  std::vector<std::size_t> ps, ts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].symbol == s) ps.push_back(i);
    if (p[i].symbol == t) ts.push_back(i);
  }
  if (ps.size() != 2 || ts.size() != 2) return std::nullopt;
  if (ts[0] < ps[0]) std::swap(ps, ts);
  if (!(ps[0] < ts[0] && ts[0] < ps[1] && ps[1] < ts[1])) return std::nullopt;
  const auto slice = [&](std::size_t from, std::size_t to) {
    return Polygon(p.begin() + static_cast<std::ptrdiff_t>(from), p.begin() + static_cast<std::ptrdiff_t>(to));
  };
  const Polygon A = slice(0, ps[0]);
  const Polygon B = slice(ps[0] + 1, ts[0]);
  const Polygon C = slice(ts[0] + 1, ps[1]);
  const Polygon D = slice(ps[1] + 1, ts[1]);
  const Polygon E = slice(ts[1] + 1, p.size());
  Extraction out;
  for (const Polygon* part : {&A, &D, &C, &B, &E}) out.residue.insert(out.residue.end(), part->begin(), part->end());
  out.handle = {p[ps[0]], p[ts[0]], p[ps[1]], p[ts[1]]};
  return out;
}

std::string render_state(const std::vector<Polygon>& polys, const std::vector<Handle>& handles) {
  std::vector<Polygon> shown = polys;
  if (shown.empty()) shown.emplace_back();
  for (const Handle& h : handles) shown.back().insert(shown.back().end(), h.begin(), h.end());
  std::string out;
  for (const Polygon& p : shown) {
    if (shown.size() > 1) out += "(" + render_letters(p) + ")";
    else out += render_letters(p);
  }
  return out;
}

}  // namespace

OrientedWordSystem::OrientedWordSystem(std::vector<Polygon> polygons) : polygons_(std::move(polygons)) {
  if (polygons_.empty()) throw std::invalid_argument("word system needs at least one polygon");
  std::map<std::string, std::pair<int, int>> signs;
  for (const auto& p : polygons_) {
    for (const auto& l : p) {
      if (l.symbol.empty()) throw std::invalid_argument("empty symbol");
      auto& [pos, neg] = signs[l.symbol];
      ++(l.inverse ? neg : pos);
    }
  }
  for (const auto& [sym, count] : signs) {
    if (count.first != 1 || count.second != 1) {
      throw std::invalid_argument("orientability: symbol '" + sym + "' must occur once as " + sym +
                                  " and once as " + sym + "-");
    }
  }
}

std::size_t OrientedWordSystem::pair_count() const noexcept {
  std::size_t letters = 0;
  for (const auto& p : polygons_) letters += p.size();
  return letters / 2;
}

std::string render_letters(const std::vector<Letter>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.text();
  }
  return out;
}

std::string render_word(const OrientedWordSystem& w) { return render_state(w.polygons(), {}); }

OrientedWordSystem parse_word(std::string_view text) {
  std::vector<Polygon> polys;
  Polygon bare;
  std::optional<Polygon> open;
  bool saw_paren = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in word");
      open.emplace();
      saw_paren = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')' in word");
      polys.push_back(std::move(*open));
      open.reset();
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      Letter l;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        l.symbol += text[i++];
      }
      if (i < text.size() && text[i] == '-') {
        l.inverse = true;
        ++i;
      }
      (open ? *open : bare).push_back(std::move(l));
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
    }
  }
  if (open) throw std::invalid_argument("unterminated '(' in word");
  if (saw_paren && !bare.empty()) throw std::invalid_argument("letters outside parentheses");
  if (!saw_paren) polys.push_back(std::move(bare));
  return OrientedWordSystem(std::move(polys));
}

OrientedWordSystem apply_transform1(const OrientedWordSystem& w, std::size_t polygon, std::size_t position) {
  check_polygon(w, polygon);
  const Polygon& p = w.polygons()[polygon];
  if (position >= p.size() || p.size() < 2 || !cancels(p[position], p[(position + 1) % p.size()])) {
    throw std::invalid_argument("T1: no 'a a-' pair at position " + std::to_string(position));
  }
  auto polys = w.polygons();
  polys[polygon] = cancel_at(p, position);
  return OrientedWordSystem(std::move(polys));
}

OrientedWordSystem apply_transform2(const OrientedWordSystem& w, std::size_t polygon, std::size_t first,
                                    std::size_t second) {
  check_polygon(w, polygon);
  const Polygon& p = w.polygons()[polygon];
  const std::size_t L = p.size();
  if (L < 4 || first >= L || second >= L) throw std::invalid_argument("T2: position out of range");
  const std::size_t f1 = (first + 1) % L, s1 = (second + 1) % L;
  const bool disjoint = first != second && f1 != second && s1 != first;
  if (!disjoint || p[first].symbol == p[f1].symbol || !cancels(p[f1], p[second]) || !cancels(p[first], p[s1])) {
    throw std::invalid_argument("T2: pattern 'a b ... b- a-' not found at the given positions");
  }
  const auto occ = occurrences(w.polygons());
  int k = 1;
  while (occ.count("c" + std::string(1, kFreshMark) + std::to_string(k)) != 0) ++k;
  const Letter c{"c" + std::string(1, kFreshMark) + std::to_string(k), false};
  Polygon out{c};
  for (std::size_t i = (first + 2) % L; i != second; i = (i + 1) % L) out.push_back(p[i]);
  out.push_back(c.inverted());
  for (std::size_t i = (second + 2) % L; i != first; i = (i + 1) % L) out.push_back(p[i]);
  auto polys = w.polygons();
  polys[polygon] = std::move(out);
  return OrientedWordSystem(std::move(polys));
}

OrientedWordSystem apply_transform3(const OrientedWordSystem& w, std::size_t first_polygon,
                                    std::size_t second_polygon, const std::string& symbol) {
  check_polygon(w, first_polygon);
  check_polygon(w, second_polygon);
  auto [x, y] = locate(w, symbol);
  if (x.polygon == y.polygon || first_polygon == second_polygon) {
    throw std::invalid_argument("T3: '" + symbol + "' does not join two different polygons");
  }
  if (x.polygon != first_polygon) std::swap(x, y);
  if (x.polygon != first_polygon || y.polygon != second_polygon) {
    throw std::invalid_argument("T3: '" + symbol + "' does not join the given polygons");
  }
  auto polys = w.polygons();
  polys[first_polygon] = merge_on(polys[first_polygon], x.index, polys[second_polygon], y.index);
  polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(second_polygon));
  return OrientedWordSystem(std::move(polys));
}

OrientedWordSystem apply_transform4(const OrientedWordSystem& w, std::size_t polygon, const std::string& s,
                                    const std::string& t) {
  check_polygon(w, polygon);
  auto ex = extract_handle(w.polygons()[polygon], s, t);
  if (!ex) throw std::invalid_argument("T4: '" + s + "' and '" + t + "' are not an interlaced pair");
  auto polys = w.polygons();
  ex->residue.insert(ex->residue.end(), ex->handle.begin(), ex->handle.end());
  polys[polygon] = std::move(ex->residue);
  return OrientedWordSystem(std::move(polys));
}

bool is_interlaced(const OrientedWordSystem& w, const std::string& s, const std::string& t) {
  const auto [s1, s2] = locate(w, s);
  const auto [t1, t2] = locate(w, t);
  if (s1.polygon != s2.polygon || t1.polygon != t2.polygon || s1.polygon != t1.polygon) {
    throw std::invalid_argument("is_interlaced: symbols are not in one polygon");
  }
  const std::size_t a = s1.index, b = s2.index, c = t1.index, d = t2.index;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::string standard_form(int genus) {
  if (genus == 0) return "a0 a0-";
  std::string out;
  for (int i = 1; i <= genus; ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    if (!out.empty()) out += ' ';
    out += a + " " + b + " " + a + "- " + b + "-";
  }
  return out;
}

std::string Reduction::standard_form() const { return genuslab::standard_form(genus); }

Reduction reduce_to_standard(const OrientedWordSystem& w) {
  Reduction out;
  std::vector<Polygon> polys = w.polygons();
  auto record = [&](int transform, std::string detail) {
    out.trace.push_back({transform, std::move(detail), render_state(polys, out.handles)});
  };

  while (polys.size() > 1) {
    bool merged = false;
    for (std::size_t i = 0; i < polys.size() && !merged; ++i) {
      for (std::size_t k = 0; k < polys[i].size() && !merged; ++k) {
        for (std::size_t j = 0; j < polys.size() && !merged; ++j) {
          if (j == i) continue;
          for (std::size_t m = 0; m < polys[j].size(); ++m) {
            if (polys[j][m].symbol != polys[i][k].symbol) continue;
            const std::string sym = polys[i][k].symbol;
            polys[i] = merge_on(polys[i], k, polys[j], m);
            polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(j));
            record(3, "merge polygons " + std::to_string(i) + "," + std::to_string(j) + " along " + sym);
            merged = true;
            break;
          }
        }
      }
    }
    if (!merged) throw std::invalid_argument("word system is disconnected: polygons share no symbol");
  }

  Polygon& word = polys.front();
  while (true) {
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = 0; word.size() >= 2 && i < word.size(); ++i) {
        if (cancels(word[i], word[(i + 1) % word.size()])) {
          const std::string shown = word[i].text() + " " + word[(i + 1) % word.size()].text();
          word = cancel_at(word, i);
          record(1, "cancel " + shown);
          again = true;
          break;
        }
      }
    }
    if (word.empty()) break;
    std::optional<Extraction> ex;
    for (std::size_t i = 0; i < word.size() && !ex; ++i)
      for (std::size_t j = i + 1; j < word.size() && !ex; ++j)
        if (word[i].symbol != word[j].symbol) ex = extract_handle(word, word[i].symbol, word[j].symbol);
    if (!ex) throw InternalError("word reduction stuck: no cancellation and no interlaced pair");
    word = std::move(ex->residue);
    out.handles.push_back(ex->handle);
    record(4, "extract handle " + render_letters({ex->handle.begin(), ex->handle.end()}));
  }
  out.genus = static_cast<int>(out.handles.size());
  return out;
}

int genus_oracle(const OrientedWordSystem& w) {
  if (w.polygons().size() != 1) throw std::invalid_argument("genus_oracle needs a single polygon (merge first)");
  const Polygon& p = w.polygons().front();
  if (p.empty()) return 0;
  const std::size_t L = p.size();
  std::vector<std::size_t> parent(L);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  // Side i runs from corner i to corner i+1; an inverse letter runs backwards.
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < L; ++i) {
    const auto [it, fresh] = first.emplace(p[i].symbol, i);
    if (fresh) continue;
    const std::size_t j = it->second;
    const auto tail = [&](std::size_t k) { return p[k].inverse ? (k + 1) % L : k; };
    const auto head = [&](std::size_t k) { return p[k].inverse ? k : (k + 1) % L; };
    unite(tail(i), tail(j));
    unite(head(i), head(j));
  }
  long classes = 0;
  for (std::size_t i = 0; i < L; ++i) classes += find(i) == i;
  const long chi = classes - static_cast<long>(L / 2) + 1;
  if ((2 - chi) % 2 != 0 || chi > 2) throw InternalError("polygon gluing gave an odd Euler characteristic");
  return static_cast<int>((2 - chi) / 2);
}

OrientedWordSystem random_orientable_word(int pairs, std::mt19937_64& rng) {
  Polygon p;
  for (int i = 1; i <= pairs; ++i) {
    const std::string s = "a" + std::to_string(i);
    p.push_back({s, false});
    p.push_back({s, true});
  }
  std::shuffle(p.begin(), p.end(), rng);
  return OrientedWordSystem({std::move(p)});
}

OrientedWordSystem reversed_inverse(const OrientedWordSystem& w) {
  auto polys = w.polygons();
  for (auto& p : polys) {
    std::reverse(p.begin(), p.end());
    for (auto& l : p) l.inverse = !l.inverse;
  }
  return OrientedWordSystem(std::move(polys));
}

}  // namespace genuslab

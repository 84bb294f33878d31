#include "ringlab/funring.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

Rat rat_parse(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw BadShape("not a rational: " + text);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  return q.get_str();
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) {
  return Poly(std::vector<Rat>{c});
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  return *this + (-other);
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly();
  std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Poly(std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::from_pieces(std::vector<Rat> breakpoints,
                                                     std::vector<Poly> pieces) {
  if (breakpoints.empty() && pieces.empty()) return PiecewisePolynomial();
  if (breakpoints.size() != pieces.size() + 1)
    throw BadShape("need one more breakpoint than pieces");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw BadShape("breakpoints must be strictly increasing");

  if (pieces.front().eval(breakpoints.front()) != 0)
    throw DiscontinuousInput("nonzero value at the left support end");
  if (pieces.back().eval(breakpoints.back()) != 0)
    throw DiscontinuousInput("nonzero value at the right support end");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (pieces[i].eval(breakpoints[i + 1]) != pieces[i + 1].eval(breakpoints[i + 1]))
      throw DiscontinuousInput("jump at breakpoint " + rat_str(breakpoints[i + 1]));

  // Canonicalize: merge equal neighbours, trim zero pieces at both ends.
  std::vector<Rat> cb{breakpoints.front()};
  std::vector<Poly> cp;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!cp.empty() && cp.back() == pieces[i]) {
      cb.back() = breakpoints[i + 1];
      continue;
    }
    cp.push_back(pieces[i]);
    cb.push_back(breakpoints[i + 1]);
  }
  std::size_t lo = 0, hi = cp.size();
  while (lo < hi && cp[lo].is_zero()) ++lo;
  while (hi > lo && cp[hi - 1].is_zero()) --hi;
  PiecewisePolynomial out;
  if (lo < hi) {
    out.breaks_.assign(cb.begin() + lo, cb.begin() + hi + 1);
    out.pieces_.assign(cp.begin() + lo, cp.begin() + hi);
  }
  return out;
}

Rat PiecewisePolynomial::eval(const Rat& x) const {
  if (is_zero() || x < breaks_.front() || x > breaks_.back()) return 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (x <= breaks_[i + 1]) return pieces_[i].eval(x);
  return 0;
}

namespace {

/// Pointwise combination over the merged breakpoint grid.
PiecewisePolynomial combine(const PiecewisePolynomial& f, const PiecewisePolynomial& g,
                            bool multiply) {
  auto piece_at = [](const PiecewisePolynomial& h, const Rat& lo) -> Poly {
    if (h.is_zero() || lo < h.support_min() || lo >= h.support_max()) return Poly();
    const auto& breaks = h.breakpoints();
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
      if (lo >= breaks[i] && lo < breaks[i + 1]) return h.pieces()[i];
    return Poly();
  };

  std::vector<Rat> grid;
  if (!f.is_zero())
    grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
  if (!g.is_zero())
    grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
  if (grid.empty()) return PiecewisePolynomial();
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 2) return PiecewisePolynomial();

  std::vector<Poly> pieces;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Poly a = piece_at(f, grid[i]);
    Poly b = piece_at(g, grid[i]);
    pieces.push_back(multiply ? a * b : a + b);
  }
  return PiecewisePolynomial::from_pieces(std::move(grid), std::move(pieces));
}

}  // namespace

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& other) const {
  return combine(*this, other, false);
}

PiecewisePolynomial PiecewisePolynomial::operator-() const {
  return scaled(Rat(-1));
}

PiecewisePolynomial PiecewisePolynomial::operator-(const PiecewisePolynomial& other) const {
  return *this + (-other);
}

PiecewisePolynomial PiecewisePolynomial::operator*(const PiecewisePolynomial& other) const {
  return combine(*this, other, true);
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rat& c) const {
  if (c == 0 || is_zero()) return PiecewisePolynomial();
  std::vector<Poly> pieces;
  pieces.reserve(pieces_.size());
  for (const Poly& p : pieces_) pieces.push_back(p * Poly::constant(c));
  return from_pieces(breaks_, std::move(pieces));
}

PiecewisePolynomial pp_add(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
  return f + g;
}

PiecewisePolynomial pp_mul(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
  return f * g;
}

bool pp_is_idempotent(const PiecewisePolynomial& f) {
  return f * f == f;
}

PiecewisePolynomial bump(const Rat& a, const Rat& b) {
  if (!(a < b)) throw BadInterval();
  // Ramp width fixed at 1: x - (a-1) on [a-1,a], 1 on [a,b], (b+1) - x on
  // [b,b+1].
  Poly rise({Rat(1) - a, Rat(1)});
  Poly fall({b + 1, Rat(-1)});
  return PiecewisePolynomial::from_pieces({a - 1, a, b, b + 1},
                                          {rise, Poly::constant(1), fall});
}

PiecewisePolynomial s_unit_for(std::span<const PiecewisePolynomial> elements) {
  if (elements.empty()) throw EmptyInput("s_unit_for needs at least one function");
  bool any = false;
  Rat lo = 0, hi = 0;
  for (const PiecewisePolynomial& f : elements) {
    if (f.is_zero()) continue;
    if (!any || f.support_min() < lo) lo = f.support_min();
    if (!any || f.support_max() > hi) hi = f.support_max();
    any = true;
  }
  if (!any) return bump(0, 1);  // fixes the zero function
  if (lo == hi) hi = lo + 1;
  PiecewisePolynomial e = bump(lo, hi);
  for (const PiecewisePolynomial& f : elements)
    if (e * f != f || f * e != f)
      throw InternalCheckFailed("bump does not fix an input");
  return e;
}

std::string PiecewisePolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << '\n';
    os << "piece [" << rat_str(breaks_[i]) << ',' << rat_str(breaks_[i + 1]) << ']';
    if (pieces_[i].is_zero()) {
      os << " 0";
    } else {
      for (const Rat& c : pieces_[i].coeffs()) os << ' ' << rat_str(c);
    }
  }
  return os.str();
}

PiecewisePolynomial PiecewisePolynomial::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rat> breaks;
  std::vector<Poly> pieces;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word.empty() || word[0] == '#') continue;
    if (word == "0" && breaks.empty()) return PiecewisePolynomial();
    if (word != "piece") throw BadShape("expected 'piece' line: " + line);
    std::string interval;
    if (!(ls >> interval) || interval.front() != '[' || interval.back() != ']')
      throw BadShape("expected [a,b] interval: " + line);
    auto comma = interval.find(',');
    if (comma == std::string::npos) throw BadShape("expected [a,b] interval: " + line);
    Rat a = rat_parse(interval.substr(1, comma - 1));
    Rat b = rat_parse(interval.substr(comma + 1, interval.size() - comma - 2));
    std::vector<Rat> coeffs;
    while (ls >> word) coeffs.push_back(rat_parse(word));
    if (breaks.empty()) {
      breaks.push_back(a);
    } else if (breaks.back() != a) {
      throw BadShape("pieces must be contiguous");
    }
    breaks.push_back(b);
    pieces.push_back(Poly(std::move(coeffs)));
  }
  if (pieces.empty()) return PiecewisePolynomial();
  return from_pieces(std::move(breaks), std::move(pieces));
}

}  // namespace ringlab

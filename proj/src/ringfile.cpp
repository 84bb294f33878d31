#include "ringlab/ringfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ringlab {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long long parse_int(const std::string& text, std::size_t line, std::size_t column) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(line, column, "expected an integer, got '" + text + "'");
  }
}

std::size_t parse_generator(const std::string& text, std::size_t k, std::size_t line,
                            std::size_t column) {
  if (text.size() < 2 || text[0] != 'e')
    throw SyntaxError(line, column, "expected a generator like e1, got '" + text + "'");
  long long idx = parse_int(text.substr(1), line, column + 1);
  if (idx < 1 || static_cast<std::size_t>(idx) > k)
    throw SyntaxError(line, column, "generator index out of range: " + text);
  return static_cast<std::size_t>(idx - 1);
}

std::vector<long long> parse_tuple(const std::string& text, std::size_t line,
                                   std::size_t column) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw SyntaxError(line, column, "expected an element tuple (c1,...,ck)");
  std::vector<long long> coords;
  std::string inner = text.substr(1, text.size() - 2);
  if (inner.empty()) return coords;  // the trivial ring's element "()"
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    std::string piece = inner.substr(start, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - start);
    // tolerate spaces around coordinates
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.erase(piece.begin());
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.pop_back();
    coords.push_back(parse_int(piece, line, column));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coords;
}

}  // namespace

FiniteRing parse_ring_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  std::optional<std::string> name;
  std::optional<std::vector<long long>> orders;
  bool default_zero = false;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<long long>> products;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;
    const std::string& head = tokens[0].text;

    if (head == "ring") {
      if (name) throw SyntaxError(lineno, tokens[0].column, "duplicate ring line");
      std::string rest = raw.substr(tokens[0].column - 1 + 4);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.erase(rest.begin());
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
        rest.pop_back();
      if (rest.empty())
        throw SyntaxError(lineno, tokens[0].column, "ring line needs a name");
      name = rest;
    } else if (head == "additive") {
      if (!name)
        throw SyntaxError(lineno, tokens[0].column, "ring line must come first");
      if (orders) throw SyntaxError(lineno, tokens[0].column, "duplicate additive line");
      std::vector<long long> ns;
      for (std::size_t t = 1; t < tokens.size(); ++t)
        ns.push_back(parse_int(tokens[t].text, lineno, tokens[t].column));
      orders = std::move(ns);
    } else if (head == "default") {
      if (tokens.size() != 2 || tokens[1].text != "zero")
        throw SyntaxError(lineno, tokens[0].column, "only 'default zero' is supported");
      default_zero = true;
    } else if (head == "mul") {
      if (!orders)
        throw SyntaxError(lineno, tokens[0].column, "additive line must come before mul");
      std::size_t k = orders->size();
      if (tokens.size() < 5 || tokens[3].text != "=")
        throw SyntaxError(lineno, tokens[0].column,
                          "expected: mul e<i> e<j> = (c1,...,ck)");
      std::size_t i = parse_generator(tokens[1].text, k, lineno, tokens[1].column);
      std::size_t j = parse_generator(tokens[2].text, k, lineno, tokens[2].column);
      std::string tuple;
      for (std::size_t t = 4; t < tokens.size(); ++t) tuple += tokens[t].text;
      auto coords = parse_tuple(tuple, lineno, tokens[4].column);
      if (!products.emplace(std::make_pair(i, j), std::move(coords)).second)
        throw SyntaxError(lineno, tokens[1].column, "duplicate product declaration");
    } else {
      throw SyntaxError(lineno, tokens[0].column, "unknown directive '" + head + "'");
    }
  }

  if (!name) throw SyntaxError(lineno + 1, 1, "missing ring line");
  if (!orders) throw SyntaxError(lineno + 1, 1, "missing additive line");

  std::size_t k = orders->size();
  std::vector<std::vector<std::vector<long long>>> table(
      k, std::vector<std::vector<long long>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = products.find({i, j});
      if (it != products.end()) {
        table[i][j] = it->second;
      } else if (default_zero) {
        table[i][j] = std::vector<long long>(k, 0);
      } else {
        throw MissingProduct(i, j);
      }
    }
  return FiniteRing::make(std::move(*orders), table, std::move(*name));
}

FiniteRing load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str());
}

std::string render_ring_file(const FiniteRing& ring) {
  std::ostringstream os;
  os << "ring " << ring.name() << '\n';
  os << "additive";
  for (long long n : ring.group().orders()) os << ' ' << n;
  os << '\n';
  os << "default zero\n";
  for (std::size_t i = 0; i < ring.rank(); ++i)
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      const RingElement& c = ring.structure_constant(i, j);
      if (c.is_zero()) continue;
      os << "mul e" << i + 1 << " e" << j + 1 << " = " << c.str() << '\n';
    }
  return os.str();
}

namespace {

RingElement parse_matrix_terms(const FiniteRing& ring, const MatrixLayout& layout,
                               const std::string& text) {
  RingElement acc = ring.zero();
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t plus = text.find('+', start);
    std::string term = text.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    long long scale = 1;
    std::size_t e = term.find('E');
    if (e == std::string::npos) throw BadShape("expected matrix unit in '" + term + "'");
    if (e > 0) {
      std::string coef = term.substr(0, e);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      try {
        scale = std::stoll(coef);
      } catch (const std::exception&) {
        throw BadShape("bad coefficient in '" + term + "'");
      }
    }
    std::string idx = term.substr(e + 1);
    std::size_t r, c;
    if (!idx.empty() && idx.front() == '(') {
      auto comma = idx.find(',');
      if (comma == std::string::npos || idx.back() != ')')
        throw BadShape("expected E(r,c) in '" + term + "'");
      try {
        r = std::stoul(idx.substr(1, comma - 1));
        c = std::stoul(idx.substr(comma + 1, idx.size() - comma - 2));
      } catch (const std::exception&) {
        throw BadShape("bad indices in '" + term + "'");
      }
    } else if (idx.size() == 2 && std::isdigit(static_cast<unsigned char>(idx[0])) &&
               std::isdigit(static_cast<unsigned char>(idx[1]))) {
      r = idx[0] - '0';
      c = idx[1] - '0';
    } else {
      throw BadShape("expected Erc or E(r,c) in '" + term + "'");
    }
    acc = acc + matrix_unit(ring, layout, r, c).scaled(scale);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return acc;
}

}  // namespace

RingElement parse_element(const FiniteRing& ring, const std::string& text) {
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty()) throw BadShape("empty element");

  if (t.front() == '(') {
    std::vector<long long> coords = parse_tuple(t, 1, 1);
    if (coords.size() != ring.rank()) throw ArityMismatch(ring.rank(), coords.size());
    return ring.element(std::move(coords));
  }
  if (auto layout = matrix_layout_of(ring.name())) {
    if (t == "0") return ring.zero();
    return parse_matrix_terms(ring, *layout, t);
  }
  throw BadShape("cannot parse element '" + text + "' for ring " + ring.name());
}

std::string render_element(const FiniteRing& ring, const RingElement& e) {
  auto layout = matrix_layout_of(ring.name());
  if (!layout) return e.str();
  if (e.is_zero()) return "0";
  std::string out;
  for (std::size_t m = 0; m < ring.rank(); ++m) {
    long long v = e.coord(m);
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (v != 1) out += std::to_string(v) + "*";
    std::size_t r = m / layout->n, c = m % layout->n;
    if (r < 10 && c < 10)
      out += "E" + std::to_string(r) + std::to_string(c);
    else
      out += "E(" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
  return out;
}

}  // namespace ringlab

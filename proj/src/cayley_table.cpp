#include "chein/cayley_table.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chein/errors.hpp"

namespace chein {

CayleyTable::CayleyTable(std::size_t order)
    : order_(order), entries_(order * order, 0) {}

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw std::invalid_argument("Cayley table needs " +
                                std::to_string(order_ * order_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (Element e : entries_) {
    if (e >= order_) {
      throw std::invalid_argument("Cayley table entry " + std::to_string(e) +
                                  " out of range for order " +
                                  std::to_string(order_));
    }
  }
}

Element CayleyTable::at(Element r, Element c) const {
  if (r >= order_ || c >= order_) throw std::out_of_range("CayleyTable::at");
  return (*this)(r, c);
}

void CayleyTable::set(Element r, Element c, Element value) {
  if (r >= order_ || c >= order_ || value >= order_) {
    throw std::out_of_range("CayleyTable::set");
  }
  entries_[static_cast<std::size_t>(r) * order_ + c] = value;
}

CayleyTable CayleyTable::transposed() const {
  CayleyTable t(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) {
      t.entries_[c * order_ + r] = entries_[r * order_ + c];
    }
  }
  return t;
}

std::optional<LatinWitness> find_latin_violation(const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  std::vector<Element> seen(n);
  for (Element r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), n);
    for (Element c = 0; c < n; ++c) {
      Element v = t(r, c);
      if (seen[v] != n) return LatinWitness{r, seen[v], r, c};
      seen[v] = c;
    }
  }
  for (Element c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), n);
    for (Element r = 0; r < n; ++r) {
      Element v = t(r, c);
      if (seen[v] != n) return LatinWitness{seen[v], c, r, c};
      seen[v] = r;
    }
  }
  return std::nullopt;
}

std::optional<Element> find_neutral(const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<std::array<Element, 3>> find_nonassociative_triple(
    const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = t(a, b);
      for (Element c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return true;
  }
  return false;
}

}  // namespace

CayleyTable read_table(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) {
    throw FormatError("empty Cayley table input");
  }
  std::istringstream header(line);
  long long order = 0;
  std::string trailing;
  if (!(header >> order) || order <= 0 || (header >> trailing)) {
    throw FormatError("line " + std::to_string(lineno) +
                      ": expected a positive order");
  }
  const auto n = static_cast<std::size_t>(order);
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_content_line(in, line, lineno)) {
      throw FormatError("expected " + std::to_string(n) + " rows, got " +
                        std::to_string(r));
    }
    std::istringstream row(line);
    long long v = 0;
    std::size_t count = 0;
    while (row >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw FormatError("line " + std::to_string(lineno) + ": entry " +
                          std::to_string(v) + " out of range");
      }
      entries.push_back(static_cast<Element>(v));
      ++count;
    }
    if (!row.eof() || count != n) {
      throw FormatError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(n) + " indices");
    }
  }
  if (next_content_line(in, line, lineno)) {
    throw FormatError("line " + std::to_string(lineno) + ": trailing data");
  }
  return CayleyTable(n, std::move(entries));
}

void write_table(std::ostream& out, const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  out << n << '\n';
  for (Element r = 0; r < n; ++r) {
    for (Element c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << t(r, c);
    }
    out << '\n';
  }
}

}  // namespace chein

#pragma once

// Text input for momentum grids and scalar arguments.
//
// A grid file holds one momentum per line: three fields separated by
// whitespace and/or commas.  A field is an integer, a rational "a/b" or a
// decimal.  '#' starts a comment.  If every field in the file is an integer
// or a rational the grid is exact; otherwise it is read as doubles.

#include "spinrel/momentum.hpp"
#include "spinrel/scalar.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrel {

class GridParseError : public std::invalid_argument {
 public:
  GridParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// True for "12", "-3/4"; false for decimals.
inline bool is_rational_literal(const std::string& s) {
  try {
    parse_rational(s);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// A decimal or rational field as a double.
inline double parse_real(const std::string& s) {
  if (is_rational_literal(s)) return parse_rational(s).convert_to<double>();
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

/// Splits on commas and whitespace, dropping empty pieces.
inline std::vector<std::string> split_fields(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream is(spaced);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

struct MomentumGrid {
  bool exact = false;
  std::vector<Momentum3<Rational>> exact_points;  // filled when exact
  std::vector<Momentum3<double>> float_points;    // always filled
  std::vector<std::size_t> lines;                 // source line of each point
  std::size_t size() const { return float_points.size(); }
};

inline MomentumGrid parse_grid(std::istream& in) {
  std::vector<std::array<std::string, 3>> raw;
  MomentumGrid grid;
  bool all_rational = true;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      throw GridParseError(lineno, "expected 3 fields, found " + std::to_string(fields.size()));
    }
    Momentum3<double> p;
    for (std::size_t k = 0; k < 3; ++k) {
      try {
        p[k] = parse_real(fields[k]);
      } catch (const std::invalid_argument& e) {
        throw GridParseError(lineno, e.what());
      }
      all_rational = all_rational && is_rational_literal(fields[k]);
    }
    grid.float_points.push_back(p);
    grid.lines.push_back(lineno);
    raw.push_back({fields[0], fields[1], fields[2]});
  }
  if (raw.empty()) throw GridParseError(0, "grid has no points");
  grid.exact = all_rational;
  if (grid.exact) {
    for (const auto& r : raw) {
      grid.exact_points.push_back(
          {parse_rational(r[0]), parse_rational(r[1]), parse_rational(r[2])});
    }
  }
  return grid;
}

inline MomentumGrid parse_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open grid file '" + path + "'");
  return parse_grid(in);
}

/// "x", "x+yi", "x-yi", "yi", "i" with x, y decimal or rational.
inline std::pair<std::string, std::string> split_complex(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {s, "0"};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag = [](std::string t) {
    if (t.empty() || t == "+") return std::string("1");
    if (t == "-") return std::string("-1");
    return t[0] == '+' ? t.substr(1) : t;
  };
  if (cut == std::string::npos) return {"0", imag(body)};
  return {body.substr(0, cut), imag(body.substr(cut))};
}

inline Complex<double> parse_complex_float(const std::string& s) {
  const auto [re, im] = split_complex(s);
  return {parse_real(re), parse_real(im)};
}

inline Complex<Rational> parse_complex_exact(const std::string& s) {
  const auto [re, im] = split_complex(s);
  return {parse_rational(re), parse_rational(im)};
}

inline bool is_exact_complex_literal(const std::string& s) {
  try {
    const auto [re, im] = split_complex(s);
    return is_rational_literal(re) && is_rational_literal(im);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace spinrel

#pragma once
// Dynkin type grammar and the Cartan matrix tables. Every orientation choice
// for multiple edges lives in this file and nowhere else. With c[i][j] =
// <alpha_i, alpha_j^vee> (0-based):
//   A_n : chain, all edge entries -1
//   B_n : chain with c[n-1][n-2] = -2            (B2 = [[2,-1],[-2,2]])
//   C_n : chain with c[n-2][n-1] = -2            (transpose of B_n)
//   D_n : chain 0..n-2 plus fork edge (n-3, n-1)
//   E_k : chain 0,2,3,4,...,k-1 plus edge (1,3)  (Bourbaki node 2 hangs off node 4)
//   F_4 : chain with c[2][1] = -2
//   G_2 : c[1][0] = -3                           (G2 = [[2,-1],[-3,2]])

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace cartoric {

struct SimpleType {
  char family = 0;  // 'A'..'G'
  int rank = 0;
};

inline void validate_simple_type(const SimpleType& t) {
  auto bad = [&](const char* why) {
    std::ostringstream os;
    os << "invalid Dynkin component " << t.family << t.rank << ": " << why;
    throw std::invalid_argument(os.str());
  };
  switch (t.family) {
    case 'A':
      if (t.rank < 1) bad("A requires rank >= 1");
      break;
    case 'B':
      if (t.rank < 2) bad("B requires rank >= 2");
      break;
    case 'C':
      if (t.rank < 2) bad("C requires rank >= 2");
      break;
    case 'D':
      if (t.rank < 3) bad("D requires rank >= 3");
      break;
    case 'E':
      if (t.rank < 6 || t.rank > 8) bad("E requires rank in {6,7,8}");
      break;
    case 'F':
      if (t.rank != 4) bad("F requires rank 4");
      break;
    case 'G':
      if (t.rank != 2) bad("G requires rank 2");
      break;
    default:
      bad("unknown family");
  }
}

inline std::vector<SimpleType> parse_type_spec(const std::string& spec) {
  std::vector<SimpleType> out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty Dynkin component in '" + spec + "'");
    tok = tok.substr(b, e - b + 1);
    SimpleType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (tok.size() < 2) throw std::invalid_argument("missing rank in Dynkin component '" + tok + "'");
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("malformed rank in Dynkin component '" + tok + "'");
    t.rank = std::stoi(tok.substr(1));
    validate_simple_type(t);
    out.push_back(t);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty Dynkin type spec");
  return out;
}

inline std::string format_type_spec(const std::vector<SimpleType>& ts) {
  std::ostringstream os;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) os << ',';
    os << ts[i].family << ts[i].rank;
  }
  return os.str();
}

// Edges as (i, j, cij, cji) on 0-based nodes of one component.
inline Mat<Rat> simple_cartan_table(const SimpleType& t) {
  validate_simple_type(t);
  const int n = t.rank;
  Mat<Rat> c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto edge = [&](int i, int j, long cij, long cji) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      edge(0, 2, -1, -1);
      edge(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'F':
      edge(0, 1, -1, -1);
      edge(1, 2, -1, -2);
      edge(2, 3, -1, -1);
      break;
    case 'G':
      edge(0, 1, -1, -3);
      break;
  }
  return c;
}

inline Mat<Rat> cartan_table(const std::vector<SimpleType>& ts) {
  int n = 0;
  for (const SimpleType& t : ts) n += t.rank;
  Mat<Rat> c(n, n);
  int off = 0;
  for (const SimpleType& t : ts) {
    Mat<Rat> blk = simple_cartan_table(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) c(off + i, off + j) = blk(i, j);
    off += t.rank;
  }
  return c;
}

// Classical Weyl group orders; product over components.
inline Int weyl_order_formula(const std::vector<SimpleType>& ts) {
  Int total(1);
  for (const SimpleType& t : ts) {
    Int o(1);
    auto factorial = [](int k) {
      Int f(1);
      for (int i = 2; i <= k; ++i) f *= i;
      return f;
    };
    switch (t.family) {
      case 'A':
        o = factorial(t.rank + 1);
        break;
      case 'B':
      case 'C':
        o = factorial(t.rank);
        for (int i = 0; i < t.rank; ++i) o *= 2;
        break;
      case 'D':
        o = factorial(t.rank);
        for (int i = 0; i < t.rank - 1; ++i) o *= 2;
        break;
      case 'E':
        o = t.rank == 6 ? 51840 : (t.rank == 7 ? 2903040 : 696729600);
        break;
      case 'F':
        o = 1152;
        break;
      case 'G':
        o = 12;
        break;
    }
    total *= o;
  }
  return total;
}

}  // namespace cartoric

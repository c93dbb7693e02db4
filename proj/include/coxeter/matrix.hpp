#pragma once

#include <cctype>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxeter/errors.hpp"

namespace coxeter {

// Symmetric integer matrix (m_rs) defining a Coxeter presentation.
// m_rr = 1, m_rs = m_sr >= 2 for r != s. Infinite bonds are not representable.
struct CoxeterMatrix {
  int rank = 0;
  std::vector<std::vector<int>> m;

  int entry(int r, int s) const { return m[r][s]; }
};

inline void validate(const CoxeterMatrix& cm) {
  if (cm.rank <= 0)
    throw InvalidMatrix("rank must be positive");
  if (static_cast<int>(cm.m.size()) != cm.rank)
    throw InvalidMatrix("matrix has wrong number of rows");
  for (int r = 0; r < cm.rank; ++r) {
    if (static_cast<int>(cm.m[r].size()) != cm.rank)
      throw InvalidMatrix("matrix has wrong number of columns");
    if (cm.m[r][r] != 1)
      throw InvalidMatrix("diagonal entries must be 1");
    for (int s = 0; s < cm.rank; ++s) {
      if (cm.m[r][s] != cm.m[s][r])
        throw InvalidMatrix("matrix must be symmetric");
      if (r != s && cm.m[r][s] < 2)
        throw InvalidMatrix("off-diagonal entries must be >= 2");
    }
  }
}

namespace detail {

inline CoxeterMatrix blank_matrix(int rank) {
  CoxeterMatrix cm;
  cm.rank = rank;
  cm.m.assign(rank, std::vector<int>(rank, 2));
  for (int r = 0; r < rank; ++r)
    cm.m[r][r] = 1;
  return cm;
}

inline void set_bond(CoxeterMatrix& cm, int r, int s, int order) {
  cm.m[r][s] = order;
  cm.m[s][r] = order;
}

}  // namespace detail

// Chain A_n: m_{i,i+1} = 3.
inline CoxeterMatrix type_a_matrix(int n) {
  if (n < 1)
    throw InvalidMatrix("A_n requires n >= 1");
  CoxeterMatrix cm = detail::blank_matrix(n);
  for (int i = 0; i + 1 < n; ++i)
    detail::set_bond(cm, i, i + 1, 3);
  return cm;
}

// Chain B_n: like A_n with the last bond of order 4.
inline CoxeterMatrix type_b_matrix(int n) {
  if (n < 2)
    throw InvalidMatrix("B_n requires n >= 2");
  CoxeterMatrix cm = type_a_matrix(n);
  detail::set_bond(cm, n - 2, n - 1, 4);
  return cm;
}

// Fork D_n: chain 1..n-1 with node n attached to node n-2.
inline CoxeterMatrix type_d_matrix(int n) {
  if (n < 3)
    throw InvalidMatrix("D_n requires n >= 3");
  CoxeterMatrix cm = detail::blank_matrix(n);
  for (int i = 0; i + 2 < n; ++i)
    detail::set_bond(cm, i, i + 1, 3);
  detail::set_bond(cm, n - 3, n - 1, 3);
  return cm;
}

inline CoxeterMatrix type_f4_matrix() {
  CoxeterMatrix cm = detail::blank_matrix(4);
  detail::set_bond(cm, 0, 1, 3);
  detail::set_bond(cm, 1, 2, 4);
  detail::set_bond(cm, 2, 3, 3);
  return cm;
}

inline CoxeterMatrix type_h_matrix(int n) {
  if (n != 3 && n != 4)
    throw InvalidMatrix("H_n exists only for n = 3, 4");
  CoxeterMatrix cm = type_a_matrix(n);
  detail::set_bond(cm, 0, 1, 5);
  return cm;
}

inline CoxeterMatrix type_i2_matrix(int m) {
  if (m < 2)
    throw InvalidMatrix("I2(m) requires m >= 2");
  CoxeterMatrix cm = detail::blank_matrix(2);
  detail::set_bond(cm, 0, 1, m);
  return cm;
}

// Accepts "A5", "B3", "D4", "F4", "H3", "H4", "I2(7)".
inline CoxeterMatrix parse_type_symbol(const std::string& symbol) {
  if (symbol.empty())
    throw InvalidMatrix("empty type symbol");
  char family = static_cast<char>(std::toupper(symbol[0]));
  std::string rest = symbol.substr(1);
  auto parse_int = [&](const std::string& s) {
    try {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size())
        throw InvalidMatrix("bad type symbol: " + symbol);
      return v;
    } catch (const std::logic_error&) {
      throw InvalidMatrix("bad type symbol: " + symbol);
    }
  };
  switch (family) {
    case 'A':
      return type_a_matrix(parse_int(rest));
    case 'B':
    case 'C':
      return type_b_matrix(parse_int(rest));
    case 'D':
      return type_d_matrix(parse_int(rest));
    case 'F':
      if (rest != "4")
        throw InvalidMatrix("only F4 is supported");
      return type_f4_matrix();
    case 'H':
      return type_h_matrix(parse_int(rest));
    case 'I': {
      if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
        throw InvalidMatrix("dihedral symbol must look like I2(m)");
      return type_i2_matrix(parse_int(rest.substr(2, rest.size() - 3)));
    }
    default:
      throw InvalidMatrix("unknown type symbol: " + symbol);
  }
}

// JSON form: {"rank": n, "m": [[...], ...]} with integer entries.
inline CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  CoxeterMatrix cm;
  try {
    cm.rank = j.at("rank").get<int>();
    cm.m = j.at("m").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMatrix(std::string("bad matrix JSON: ") + e.what());
  }
  validate(cm);
  return cm;
}

inline CoxeterMatrix matrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidMatrix("cannot open matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMatrix(std::string("bad matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace coxeter

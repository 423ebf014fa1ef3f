#include "cha/json_io.hpp"

#include <cmath>

namespace cha {

void to_json(json& j, const ChaElement& x) {
  j = json{{"n", x.n()}, {"z", x.z}, {"a", x.a}, {"b", x.b}, {"c", x.c}};
}

void from_json(const json& j, ChaElement& x) {
  const int n = j.at("n").get<int>();
  auto a = j.at("a").get<std::vector<double>>();
  auto b = j.at("b").get<std::vector<double>>();
  if (n < 1 || static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw DimensionError("ChaElement json: need n >= 1 with a, b of length n");
  x = ChaElement(j.at("z").get<double>(), std::move(a), std::move(b),
                 j.at("c").get<double>());
}

void to_json(json& j, const StructuredExpMatrix& m) {
  j = json{{"n", m.n()}, {"m", m.m},   {"m12", m.m12},
           {"m13", m.m13}, {"m24", m.m24}, {"m14", m.m14}};
}

void from_json(const json& j, StructuredExpMatrix& m) {
  const int n = j.at("n").get<int>();
  m.m = j.at("m").get<double>();
  m.m12 = j.at("m12").get<std::vector<double>>();
  m.m13 = j.at("m13").get<std::vector<double>>();
  m.m24 = j.at("m24").get<std::vector<double>>();
  m.m14 = j.at("m14").get<double>();
  if (n < 1 || m.n() != n || static_cast<int>(m.m13.size()) != n ||
      static_cast<int>(m.m24.size()) != n)
    throw DimensionError("StructuredExpMatrix json: inconsistent block sizes");
}

void to_json(json& j, const BchDiagnostics& d) {
  j = json{{"terms_used", d.terms_used},
           {"last_term_norm", d.last_term_norm},
           {"spectral_margin", d.spectral_margin}};
}

json dense_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

DenseMatrix dense_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  const auto& rows = j.at("entries");
  if (d < 1 || static_cast<int>(rows.size()) != d)
    throw DimensionError("DenseMatrix json: entries must be dim rows");
  DenseMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      throw DimensionError("DenseMatrix json: entries must be dim x dim");
    for (int k = 0; k < d; ++k) m(i, k) = rows[i][k].get<double>();
  }
  if (!m.allFinite()) throw NumericError("DenseMatrix json: non-finite entry");
  return m;
}

} // namespace cha

#pragma once
// Presentations of 3-connected 8-dimensional Poincare duality complexes:
// the attaching map L = sum g_ij [a_i,a_j] + sum g_ii nu_i + sum l_i nu'_i
// with unimodular intersection form G, plus the stable invariants sigma,
// tau, and basis change.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "smith.hpp"
#include "wedge.hpp"

namespace su2b {

enum class Parity { Even, Odd };

class ManifoldPresentation {
  Pi7Wedge l_;
  IntMatrix g_;             // cached Gram matrix
  std::vector<R24> v_;      // cached stable vector

  void validate_and_cache() {
    g_ = gram_of(l_);
    i64 d = g_.det();
    if (d != 1 && d != -1)
      throw InputError("intersection form must be unimodular, |det| = " + std::to_string(std::abs(d)));
    v_ = stable_vector(l_);
  }

 public:
  explicit ManifoldPresentation(Pi7Wedge l) : l_(std::move(l)) { validate_and_cache(); }

  // Standard construction from a symmetric unimodular G and l mod 12.
  ManifoldPresentation(const IntMatrix& g, const std::vector<i64>& l) : l_(g.rows()) {
    if (!g.is_symmetric()) throw InputError("intersection form must be symmetric");
    if (int(l.size()) != g.rows()) throw InputError("l length must match rank");
    for (int i = 0; i < g.rows(); ++i) {
      l_.set_nu(i, g.at(i, i));
      l_.set_nu_prime(i, R12(l[i]));
      for (int j = i + 1; j < g.cols(); ++j) l_.set_whitehead(i, j, g.at(i, j));
    }
    validate_and_cache();
  }

  int k() const { return l_.rank(); }
  const Pi7Wedge& attaching_map() const { return l_; }
  const IntMatrix& gram() const { return g_; }
  const std::vector<R24>& stable() const { return v_; }
};

inline Parity parity(const ManifoldPresentation& m) {
  for (int i = 0; i < m.k(); ++i)
    if (m.gram().at(i, i) % 2 != 0) return Parity::Odd;
  return Parity::Even;
}

inline Div24 sigma(const ManifoldPresentation& m) { return gcd_with_modulus(m.stable()); }

inline bool is_stably_trivial(const ManifoldPresentation& m) {
  for (const auto& v : m.stable())
    if (!v.is_zero()) return false;
  return true;
}

// tau(psi) = sum n_i v_i mod 24: the stabilization of compose_class(n, L).
inline R24 tau(const ManifoldPresentation& m, const std::vector<i64>& n) {
  if (int(n.size()) != m.k()) throw PreconditionError("class length must match rank");
  R24 t(0);
  for (int i = 0; i < m.k(); ++i) t += R24(mod_floor(n[i], 24) * m.stable()[i].value());
  return t;
}

inline ManifoldPresentation change_basis(const ManifoldPresentation& m, const IntMatrix& a) {
  if (!a.is_unimodular()) throw PreconditionError("basis change must be unimodular");
  return ManifoldPresentation(pushforward(a, m.attaching_map()));
}

// -- presentation file format ------------------------------------------------
// {"k": int, "G": k x k symmetric with |det| = 1, "l": k ints taken mod 12,
//  optional "whitehead_override": symmetric k x k replacing the off-diagonal
//  Whitehead coefficients (diagonal, if present, must match G's)}

inline ManifoldPresentation manifold_from_json(const nlohmann::json& j) {
  using nlohmann::json;
  if (!j.is_object()) throw InputError("presentation: expected a JSON object");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw InputError("presentation: field \"k\" must be an integer");
  int k = j["k"].get<int>();
  if (k < 1 || k > 64) throw InputError("presentation: field \"k\" out of range");
  if (!j.contains("G") || !j["G"].is_array() || int(j["G"].size()) != k)
    throw InputError("presentation: field \"G\" must be a k x k array");
  IntMatrix g(k, k);
  for (int i = 0; i < k; ++i) {
    const auto& row = j["G"][i];
    if (!row.is_array() || int(row.size()) != k)
      throw InputError("presentation: field \"G\" row " + std::to_string(i) + " must have k entries");
    for (int c = 0; c < k; ++c) {
      if (!row[c].is_number_integer())
        throw InputError("presentation: G[" + std::to_string(i) + "][" + std::to_string(c) + "] must be an integer");
      g.at(i, c) = row[c].get<i64>();
    }
  }
  if (!g.is_symmetric()) throw InputError("presentation: field \"G\" must be symmetric");
  if (!j.contains("l") || !j["l"].is_array() || int(j["l"].size()) != k)
    throw InputError("presentation: field \"l\" must be an array of k integers");
  std::vector<i64> l(k);
  for (int i = 0; i < k; ++i) {
    if (!j["l"][i].is_number_integer())
      throw InputError("presentation: l[" + std::to_string(i) + "] must be an integer");
    l[i] = j["l"][i].get<i64>();
  }
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "k" && key != "G" && key != "l" && key != "whitehead_override")
      throw InputError("presentation: unknown field \"" + key + "\"");
  }
  if (j.contains("whitehead_override")) {
    const auto& o = j["whitehead_override"];
    if (!o.is_array() || int(o.size()) != k)
      throw InputError("presentation: \"whitehead_override\" must be a k x k array");
    IntMatrix w(k, k);
    for (int i = 0; i < k; ++i) {
      if (!o[i].is_array() || int(o[i].size()) != k)
        throw InputError("presentation: \"whitehead_override\" row " + std::to_string(i) + " must have k entries");
      for (int c = 0; c < k; ++c) {
        if (!o[i][c].is_number_integer())
          throw InputError("presentation: whitehead_override[" + std::to_string(i) + "][" +
                           std::to_string(c) + "] must be an integer");
        w.at(i, c) = o[i][c].get<i64>();
      }
    }
    if (!w.is_symmetric())
      throw InputError("presentation: \"whitehead_override\" must be symmetric");
    for (int i = 0; i < k; ++i)
      if (w.at(i, i) != g.at(i, i))
        throw InputError("presentation: \"whitehead_override\" diagonal must match G");
    for (int i = 0; i < k; ++i)
      for (int c = i + 1; c < k; ++c) g.at(i, c) = g.at(c, i) = w.at(i, c);
  }
  return ManifoldPresentation(g, l);
}

inline ManifoldPresentation manifold_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("presentation: JSON parse error in " + path + ": " + e.what());
  }
  return manifold_from_json(j);
}

inline nlohmann::ordered_json manifold_to_json(const ManifoldPresentation& m) {
  nlohmann::ordered_json j;
  j["k"] = m.k();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.k(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.k(); ++c) row.push_back(m.gram().at(i, c));
    rows.push_back(row);
  }
  j["G"] = rows;
  auto l = nlohmann::ordered_json::array();
  for (int i = 0; i < m.k(); ++i) l.push_back(m.attaching_map().nu_prime(i).value());
  j["l"] = l;
  return j;
}

}  // namespace su2b

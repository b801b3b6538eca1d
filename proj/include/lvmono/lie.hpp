#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvmono/linalg.hpp"
#include "lvmono/rep.hpp"

namespace lvmono {

/// Thrown when a wall-clock cap set on a long computation is exceeded.
class TimeCapExceeded : public std::runtime_error {
 public:
  explicit TimeCapExceeded(const std::string& where)
      : std::runtime_error("time cap exceeded during " + where) {}
};

/// Optional wall-clock deadline, checked at loop boundaries.
class Deadline {
 public:
  static Deadline none() { return Deadline(); }

  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }

  void check(const char* where) const {
    if (at_ && std::chrono::steady_clock::now() > *at_)
      throw TimeCapExceeded(where);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

enum class Letter { M1, M2, M1Inv, M2Inv };

/// A word in the two reduced monodromy generators and their inverses.
struct GroupWord {
  std::vector<Letter> letters;

  Matrix eval(const Matrix& m1, const Matrix& m2, const Matrix& m1_inv,
              const Matrix& m2_inv) const {
    Matrix acc = Matrix::identity(m1.rows());
    for (Letter l : letters) {
      switch (l) {
        case Letter::M1: acc = acc * m1; break;
        case Letter::M2: acc = acc * m2; break;
        case Letter::M1Inv: acc = acc * m1_inv; break;
        case Letter::M2Inv: acc = acc * m2_inv; break;
      }
    }
    return acc;
  }

  /// Rendering with runs collapsed: "M2^2 M1 M2^-1".
  std::string str() const {
    if (letters.empty()) return "e";
    auto base = [](Letter l) {
      return (l == Letter::M1 || l == Letter::M1Inv) ? "M1" : "M2";
    };
    auto inverted = [](Letter l) {
      return l == Letter::M1Inv || l == Letter::M2Inv;
    };
    std::string out;
    std::size_t i = 0;
    while (i < letters.size()) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) ++j;
      const std::size_t run = j - i;
      if (!out.empty()) out += " ";
      out += base(letters[i]);
      if (inverted(letters[i]))
        out += run == 1 ? "^-1" : "^-" + std::to_string(run);
      else if (run > 1)
        out += "^" + std::to_string(run);
      i = j;
    }
    return out;
  }
};

/// A nilpotent Lie-algebra element together with the group word it came from.
struct LieSeed {
  Matrix value;
  std::string provenance;
};

namespace detail {

/// All words over {M1, M2, M1^-1, M2^-1} of length 1..max_len, in
/// deterministic order (shorter first, last position varying fastest).
inline std::vector<GroupWord> words_up_to(int max_len) {
  static constexpr Letter kAlphabet[] = {Letter::M1, Letter::M2, Letter::M1Inv,
                                         Letter::M2Inv};
  std::vector<GroupWord> words;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> odo(static_cast<std::size_t>(len), 0);
    while (true) {
      GroupWord w;
      for (std::size_t k : odo) w.letters.push_back(kAlphabet[k]);
      words.push_back(std::move(w));
      int pos = len - 1;
      while (pos >= 0 && ++odo[pos] == 4) odo[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return words;
}

inline bool push_unique(std::vector<LieSeed>& seeds, Matrix value,
                        std::string provenance) {
  for (const LieSeed& s : seeds)
    if (s.value == value) return false;
  seeds.push_back({std::move(value), std::move(provenance)});
  return true;
}

}  // namespace detail

/// Nilpotent logarithms of group elements reachable by short words:
/// every unipotent word of length <= max_word_len, plus M2^p conjugated by
/// every word of length <= max_word_len (those conjugates are unipotent
/// because M2^p is). Exact duplicates keep their first provenance.
inline std::vector<LieSeed> seed_generators(const ReducedRep& rep,
                                            int max_word_len,
                                            const Deadline& deadline = Deadline::none()) {
  if (max_word_len < 1)
    throw std::invalid_argument("seed_generators: max_word_len must be >= 1");
  const Matrix& m1 = rep.m1_red;
  const Matrix& m2 = rep.m2_red;
  const Matrix m1_inv = inverse(m1);
  const Matrix m2_inv = inverse(m2);

  std::vector<LieSeed> seeds;
  const std::vector<GroupWord> words = detail::words_up_to(max_word_len);
  for (const GroupWord& w : words) {
    deadline.check("seed enumeration");
    const Matrix g = w.eval(m1, m2, m1_inv, m2_inv);
    if (!is_unipotent(g)) continue;
    detail::push_unique(seeds, unipotent_log(g), "log(" + w.str() + ")");
  }

  const Matrix m2_p = m2.pow(static_cast<unsigned long>(rep.p));
  const std::string m2_p_str = "M2^" + std::to_string(rep.p);
  detail::push_unique(seeds, unipotent_log(m2_p), "log(" + m2_p_str + ")");
  for (const GroupWord& w : words) {
    deadline.check("seed enumeration");
    const Matrix v = w.eval(m1, m2, m1_inv, m2_inv);
    const Matrix g = v * m2_p * inverse(v);
    if (!is_unipotent(g)) continue;  // always unipotent; kept as a guard
    detail::push_unique(seeds, unipotent_log(g),
                        "log(" + w.str() + " " + m2_p_str + " (" + w.str() + ")^-1)");
  }
  return seeds;
}

/// Independent set of matrices spanning a Lie algebra, with per-element
/// provenance (generating word or bracket expression). Invariant once
/// produced by bracket_closure: closed under the commutator.
struct LieAlgebraBasis {
  std::vector<Matrix> elements;
  std::vector<std::string> provenance;

  std::size_t dim() const { return elements.size(); }

  /// Exact membership of x in the span.
  bool contains(const Matrix& x) const {
    if (elements.empty()) return x.is_zero();
    SpanTracker tracker(x.rows() * x.cols());
    for (const Matrix& e : elements) tracker.insert(e);
    return tracker.contains(x);
  }
};

/// Smallest subspace containing the seeds and closed under the commutator:
/// sift the seeds to an independent set, then repeatedly bracket all pairs
/// of current elements, adjoining independent results, until one full pass
/// adds nothing. Dimension is bounded by n^2, so this terminates.
inline LieAlgebraBasis bracket_closure(const std::vector<LieSeed>& seeds,
                                       const Deadline& deadline = Deadline::none()) {
  LieAlgebraBasis basis;
  if (seeds.empty()) return basis;
  const std::size_t r = seeds.front().value.rows();
  const std::size_t c = seeds.front().value.cols();
  SpanTracker tracker(r * c);
  for (const LieSeed& s : seeds) {
    if (s.value.rows() != r || s.value.cols() != c)
      throw std::invalid_argument("bracket_closure: shape mismatch");
    if (tracker.insert(s.value)) {
      basis.elements.push_back(s.value);
      basis.provenance.push_back(s.provenance);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = basis.elements.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      deadline.check("bracket closure");
      for (std::size_t j = i + 1; j < snapshot; ++j) {
        Matrix cand = bracket(basis.elements[i], basis.elements[j]);
        if (tracker.insert(cand)) {
          basis.elements.push_back(std::move(cand));
          basis.provenance.push_back("[g" + std::to_string(i) + ",g" +
                                     std::to_string(j) + "]");
          grew = true;
        }
      }
    }
  }
  return basis;
}

inline LieAlgebraBasis bracket_closure(const std::vector<Matrix>& seeds,
                                       const Deadline& deadline = Deadline::none()) {
  std::vector<LieSeed> named;
  named.reserve(seeds.size());
  for (std::size_t k = 0; k < seeds.size(); ++k)
    named.push_back({seeds[k], "seed" + std::to_string(k)});
  return bracket_closure(named, deadline);
}

enum class SymplecticVerdict { EqualsSp, ProperSubalgebraOfSp, NotInSp };

inline std::string to_string(SymplecticVerdict v) {
  switch (v) {
    case SymplecticVerdict::EqualsSp: return "equals_sp";
    case SymplecticVerdict::ProperSubalgebraOfSp: return "proper_subalgebra_of_sp";
    case SymplecticVerdict::NotInSp: return "not_in_sp";
  }
  return "?";
}

/// Tests X^T j + j X = 0 for every basis element. If all pass and the
/// dimension equals p(2p+1) for j of size 2p, the algebra is all of sp;
/// a passing basis of smaller dimension is a proper subalgebra.
inline SymplecticVerdict identify_symplectic(const LieAlgebraBasis& basis,
                                             const Matrix& j) {
  if (!j.is_square() || j.rows() % 2 != 0)
    throw std::invalid_argument("identify_symplectic: bad form dimension");
  for (const Matrix& x : basis.elements) {
    if (x.rows() != j.rows() || x.cols() != j.cols())
      throw std::invalid_argument("identify_symplectic: dimension mismatch");
    if (!(x.transpose() * j + j * x).is_zero())
      return SymplecticVerdict::NotInSp;
  }
  const std::size_t two_p = j.rows();
  const std::size_t sp_dim = (two_p / 2) * (two_p + 1);
  return basis.dim() == sp_dim ? SymplecticVerdict::EqualsSp
                               : SymplecticVerdict::ProperSubalgebraOfSp;
}

/// Full symplectic algebra dimension p(2p+1) for a 2p-dimensional space.
inline std::size_t sp_dimension(std::size_t two_p) {
  return (two_p / 2) * (two_p + 1);
}

/// Smallest subspace containing v and stable under every basis element,
/// computed by repeated application and sifting.
inline std::vector<Matrix> cyclic_module(const Matrix& v,
                                         const LieAlgebraBasis& basis) {
  if (!v.is_column()) throw std::invalid_argument("cyclic_module: v must be a column");
  std::vector<Matrix> vectors;
  SpanTracker tracker(v.rows());
  if (!tracker.insert(v)) return vectors;
  vectors.push_back(v);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (const Matrix& x : basis.elements) {
      Matrix w = x * vectors[k];
      if (tracker.insert(w)) vectors.push_back(std::move(w));
    }
  }
  return vectors;
}

/// Minimal degree of the differential operator with algebraic coefficients
/// annihilating the period integrals over the family through v: the
/// dimension of the cyclic module of v under the closure, assuming no
/// integral vanishes identically on a nonzero invariant subspace.
inline std::size_t minimal_pf_degree(const ReducedRep& rep,
                                     const LieAlgebraBasis& basis,
                                     const Matrix& v) {
  if (v.is_zero()) throw std::invalid_argument("minimal_pf_degree: v must be nonzero");
  if (v.rows() != rep.dim)
    throw std::invalid_argument("minimal_pf_degree: dimension mismatch");
  return cyclic_module(v, basis).size();
}

}  // namespace lvmono

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "spherahall/errors.hpp"

namespace spherahall {

/// Dimension d of the spherical generator. The generator t of the Koszul
/// dual algebra sits in degree 1 - d.
struct SphereDim {
  int d = 3;

  constexpr int d_prime() const { return d - 1; }
  constexpr int t_degree() const { return 1 - d; }
  constexpr bool semisimple() const { return d == 0; }

  friend constexpr auto operator<=>(const SphereDim&, const SphereDim&) = default;
};

/// Indecomposable object Σ^shift (Γ / t^len Γ). For d = 0 the indecomposables
/// are the shifted simples, told apart by branch (1 = T, 2 = T').
struct IndecLabel {
  int shift = 0;
  int len = 1;
  int branch = 1;

  friend constexpr auto operator<=>(const IndecLabel&, const IndecLabel&) = default;
};

inline void validate_label(SphereDim dim, const IndecLabel& l) {
  if (l.len < 1) throw InvalidLabel("indecomposable length must be positive");
  if (dim.d == 0) {
    if (l.len != 1) throw InvalidLabel("for d = 0 every indecomposable has length 1");
    if (l.branch != 1 && l.branch != 2) throw InvalidLabel("branch must be 1 or 2 for d = 0");
  } else if (l.branch != 1) {
    throw InvalidLabel("branch must be 1 unless d = 0");
  }
}

/// Isomorphism class of an object: a sorted multiset of indecomposables.
/// The empty multiset is the zero object.
class ObjClass {
 public:
  ObjClass() = default;
  ObjClass(SphereDim dim, std::vector<IndecLabel> labels) : dim_(dim), labels_(std::move(labels)) {
    for (const auto& l : labels_) validate_label(dim_, l);
    std::sort(labels_.begin(), labels_.end());
  }

  static ObjClass zero(SphereDim dim) { return ObjClass(dim, {}); }

  SphereDim dim() const { return dim_; }
  const std::vector<IndecLabel>& summands() const { return labels_; }
  bool is_zero() const { return labels_.empty(); }
  std::size_t num_summands() const { return labels_.size(); }

  /// Total dimension of the homology.
  int total_dim() const {
    int n = 0;
    for (const auto& l : labels_) n += l.len;
    return n;
  }

  ObjClass direct_sum(const ObjClass& o) const {
    if (o.dim_ != dim_) throw InvalidArgument("direct sum across different d");
    std::vector<IndecLabel> all = labels_;
    all.insert(all.end(), o.labels_.begin(), o.labels_.end());
    return ObjClass(dim_, std::move(all));
  }

  /// Distinct labels with their multiplicities, in canonical order.
  std::vector<std::pair<IndecLabel, int>> multiplicities() const {
    std::vector<std::pair<IndecLabel, int>> out;
    for (const auto& l : labels_) {
      if (!out.empty() && out.back().first == l) ++out.back().second;
      else out.emplace_back(l, 1);
    }
    return out;
  }

  std::string str() const {
    if (labels_.empty()) return "0";
    std::string s;
    for (const auto& l : labels_) {
      if (!s.empty()) s += "+";
      s += "(" + std::to_string(l.shift) + "," + std::to_string(l.len);
      if (dim_.d == 0) s += (l.branch == 1 ? ",T" : ",T'");
      s += ")";
    }
    return s;
  }

  friend auto operator<=>(const ObjClass&, const ObjClass&) = default;
  friend bool operator==(const ObjClass&, const ObjClass&) = default;

 private:
  SphereDim dim_{};
  std::vector<IndecLabel> labels_;
};

inline ObjClass make_object(SphereDim dim, std::vector<IndecLabel> labels) {
  return ObjClass(dim, std::move(labels));
}

/// Σ^k applied to every summand.
inline ObjClass shift_obj(const ObjClass& x, int k) {
  std::vector<IndecLabel> labels = x.summands();
  for (auto& l : labels) l.shift += k;
  return ObjClass(x.dim(), std::move(labels));
}

/// Σ^{-shift} of the simple (branch 1) or of T' (branch 2).
inline ObjClass simple(SphereDim dim, int shift = 0, int branch = 1) {
  return ObjClass(dim, {IndecLabel{shift, 1, branch}});
}

struct ObjClassHash {
  std::size_t operator()(const ObjClass& x) const noexcept {
    std::size_t h = std::hash<int>{}(x.dim().d);
    for (const auto& l : x.summands()) {
      h = h * 1000003u ^ std::hash<int>{}(l.shift);
      h = h * 1000003u ^ std::hash<int>{}(l.len);
      h = h * 1000003u ^ std::hash<int>{}(l.branch);
    }
    return h;
  }
};

/// Degree of the homology generator of Σ^s(Γ/t^n): the simple sits in degree 0
/// and (M[1])^i = M^{i+1}, so the generator lands in degree -s.
inline int generator_degree(const IndecLabel& l) { return -l.shift; }

/// Lowest and highest homology degree of an indecomposable.
inline std::pair<int, int> degree_span(SphereDim dim, const IndecLabel& l) {
  int g = generator_degree(l);
  int last = g + (l.len - 1) * dim.t_degree();
  return {std::min(g, last), std::max(g, last)};
}

}  // namespace spherahall

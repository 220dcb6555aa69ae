#pragma once

// Kodaira singular-fiber types that can appear on a low-degree elliptic
// pencil: I_n (a cycle of n rational curves; I_1 is a nodal cubic), II (a
// cuspidal cubic), III (two rational curves tangent at a point), IV (three
// rational curves through a point).

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3bott {

class KodairaType {
 public:
  enum class Kind { In, II, III, IV };

  static KodairaType make_In(int n) {
    if (n < 1) throw std::invalid_argument("I_n requires n >= 1");
    return KodairaType(Kind::In, n);
  }
  static KodairaType II() { return KodairaType(Kind::II, 0); }
  static KodairaType III() { return KodairaType(Kind::III, 0); }
  static KodairaType IV() { return KodairaType(Kind::IV, 0); }

  Kind kind() const { return kind_; }
  int n() const { return n_; }

  // Degree of the non-smooth subscheme of the fibration at this fiber:
  // 1 per node, 2 at a cusp, 3 at a type III point, 4 at a type IV point.
  int s_degree() const {
    switch (kind_) {
      case Kind::In: return n_;
      case Kind::II: return 2;
      case Kind::III: return 3;
      case Kind::IV: return 4;
    }
    return 0;
  }

  int component_count() const {
    switch (kind_) {
      case Kind::In: return n_;
      case Kind::II: return 1;
      case Kind::III: return 2;
      case Kind::IV: return 3;
    }
    return 0;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::In: return "I" + std::to_string(n_);
      case Kind::II: return "II";
      case Kind::III: return "III";
      case Kind::IV: return "IV";
    }
    return "";
  }

  // "I1".."I9", "II", "III", "IV"
  static std::optional<KodairaType> parse(std::string_view s) {
    if (s == "II") return II();
    if (s == "III") return III();
    if (s == "IV") return IV();
    if (s.size() >= 2 && s[0] == 'I') {
      int n = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        n = n * 10 + (c - '0');
      }
      if (n >= 1 && n <= 9) return make_In(n);
    }
    return std::nullopt;
  }

  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;

 private:
  KodairaType(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_;
  int n_;
};

}  // namespace k3bott

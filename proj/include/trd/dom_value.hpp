#pragma once

#include <cassert>
#include <string>

namespace trd {

// Value of a domination-style invariant: a non-negative integer or infinity.
// Infinity arises from the edge-removal convention on pendant edges and from
// distances in disconnected graphs.
class DomValue {
 public:
  static DomValue finite(int v) { return DomValue(v, false); }
  static DomValue infinite() { return DomValue(0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  int value() const {
    assert(!infinite_);
    return value_;
  }

  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

  friend bool operator==(DomValue a, DomValue b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(DomValue a, DomValue b) { return !(a == b); }
  friend bool operator<(DomValue a, DomValue b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(DomValue a, DomValue b) { return b < a; }
  friend bool operator<=(DomValue a, DomValue b) { return !(b < a); }
  friend bool operator>=(DomValue a, DomValue b) { return !(a < b); }

  friend bool operator==(DomValue a, int b) { return a.is_finite() && a.value_ == b; }
  friend bool operator!=(DomValue a, int b) { return !(a == b); }
  friend bool operator>=(DomValue a, int b) { return a.is_infinite() || a.value_ >= b; }
  friend bool operator<=(DomValue a, int b) { return a.is_finite() && a.value_ <= b; }

  // Finite addition; infinity absorbs.
  DomValue operator+(int d) const {
    return infinite_ ? *this : finite(value_ + d);
  }

 private:
  DomValue(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

}  // namespace trd

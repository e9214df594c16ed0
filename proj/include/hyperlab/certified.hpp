#pragma once

#include <string>

namespace hyperlab {

enum class BoundKind { Exact, Lower, Upper };

// A numeric claim together with its direction of validity and provenance.
struct CertifiedBound {
  double value = 0.0;
  BoundKind kind = BoundKind::Exact;
  std::string source;  // formula/lemma tag
  int budget = 0;      // enumeration budget K, when applicable
};

inline const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Exact: return "exact";
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
  }
  return "exact";
}

}  // namespace hyperlab

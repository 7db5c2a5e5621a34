#pragma once

#include <stdexcept>
#include <string>

namespace concave {

/// Raised where a closed-form expression degenerates (a zero denominator,
/// a tan pole). `locus` names the degenerate quantity, e.g. "(-conj x)^alpha = 1".
class SingularityError : public std::domain_error {
public:
  SingularityError(std::string locus, const std::string& detail)
      : std::domain_error(locus + ": " + detail), locus_(std::move(locus)) {}

  const std::string& locus() const noexcept { return locus_; }

private:
  std::string locus_;
};

}  // namespace concave

#pragma once

#include <string>

struct Verdict {
  bool pass = false;
  std::string detail;
};

/// Closed-form regeneration in exact rationals.
Verdict regenerate_closed_forms(bool verbose);

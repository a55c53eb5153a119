#pragma once

// Errata for the reference closed forms: where the printed expression and
// the value produced by the generic pipeline differ.

#include <string>
#include <string_view>
#include <vector>

namespace paretail {

struct TypoEntry {
  std::string id;
  std::string location;
  std::string printed;
  std::string derived;
  std::string verifying_test;
};

const std::vector<TypoEntry>& typo_ledger();

/// nullptr when no entry has this id.
const TypoEntry* find_typo(std::string_view id);

}  // namespace paretail

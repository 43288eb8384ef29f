#pragma once

// One-shot verification suite: each check reproduces one of the pinned
// results end to end and reports expected vs actual. The CLI exposes these
// as `verify all` / `verify <id>`; the acceptance harness runs them one by
// one. A check's anchor is the formula it pins down, spelled out inline.

#include <string>
#include <vector>

namespace gbl {

struct VerifyCheck {
    std::string id;
    std::string anchor;    // the formula/identity this check reproduces
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

// Stable ids, in acceptance order.
const std::vector<std::string>& verify_check_ids();

// scope = "all" or a single check id; unknown ids throw usage-error.
VerifyReport run_verify(const std::string& scope);

}  // namespace gbl

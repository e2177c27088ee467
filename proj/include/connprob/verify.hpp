#pragma once

#include <connprob/models.hpp>

#include <string>
#include <vector>

namespace connprob {

// One series-vs-enumeration comparison.
struct VerifyCheck {
    std::string name;   // e.g. "connected count", "irreducible count"
    long index = 0;     // size / lattice index the check ran at
    Integer expected;   // series value
    Integer actual;     // enumerated value
    bool ok = false;
};

struct VerifyReport {
    std::string model_id;
    bool has_oracle = false;
    std::vector<VerifyCheck> checks;
    bool ok = true;  // true when has_oracle and every check passed (or no oracle)
};

// Cross-checks the model's connected counts and derivative integers against
// the bound exhaustive enumerators, for every index whose state space fits in
// `budget`. Models without an oracle binding return has_oracle = false.
VerifyReport verify_model(const ModelSpec& model, std::int64_t budget = 5'000'000);

}  // namespace connprob

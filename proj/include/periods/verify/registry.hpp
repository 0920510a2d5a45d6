#ifndef PERIODS_VERIFY_REGISTRY_HPP
#define PERIODS_VERIFY_REGISTRY_HPP

#include "periods/matrices/period_matrix.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace periods::verify {

using matrices::CheckResult;
using matrices::Status;

// The body of a check: returns the defect at the given precision and may
// append a short note to `detail`.
using CheckBody = std::function<BigFloat(int prec, std::string& detail)>;

struct CheckSpec {
    std::string name;
    int prec_default = 30;
    int max_prec = 0;       // 0: no cap; otherwise runs at min(prec, max_prec)
    int tolerance_exp = 10; // tolerance 10^(tolerance_exp - prec)
    std::string description;
    std::vector<std::string> dependencies;
    CheckBody body;

    BigFloat tolerance(int prec) const;
    int effective_prec(int prec) const;
};

class UnknownCheckError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMinPrec = 10;
inline constexpr int kMaxPrec = 100;

// All registered checks, sorted by name.
const std::vector<CheckSpec>& registry();
const CheckSpec& find_check(const std::string& name);

// Shell-style glob with * and ?.
bool glob_match(const std::string& pattern, const std::string& name);

// Numeric failures inside the check become Status::fail with the message in
// `detail`. Unknown names raise UnknownCheckError; prec outside [10, 100]
// raises DomainError.
CheckResult run_check(const std::string& name, std::optional<int> prec = std::nullopt);

// Every check (or those matching `filter`) at `prec`, ordered by name. Runs
// on PERIODS_LAB_THREADS workers (default: hardware concurrency).
std::vector<CheckResult> run_all(int prec, const std::string& filter = "");

int worker_count();

} // namespace periods::verify

#endif

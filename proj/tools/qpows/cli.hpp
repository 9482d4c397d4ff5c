#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "qpows/ncqsym.hpp"
#include "qpows/nsym.hpp"
#include "qpows/qsym.hpp"

namespace qpows::cli {

/// One-line diagnostic; the exit code distinguishes error from success.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DualCheckResult {
    int degree = 0;
    std::string order;
    bool ok = false;
};

struct ScalarValue {
    Rational value;
};

using Value = std::variant<ScalarValue, QsymElement, NsymElement, NcqElement,
                           QsymTensor, NcqTensor, DualCheckResult>;

/// Resolved --order flag: an integer-order name applies to P/Pt/Z atoms, a
/// set-order name to Pn atoms; the other kind keeps its default.
struct OrderContext {
    IntOrder int_order = IntOrder::natural();
    SetOrder set_order = SetOrder::dtilde();
    int max_degree = 8; // QPOWS_MAX_DEGREE

    static OrderContext from_flag(const std::optional<std::string>& name);
};

/// Parse and evaluate an expression under the given orders.
Value evaluate(const std::string& input, const OrderContext& ctx);

std::string format_text(const Value& v);
std::string format_json(const Value& v);

/// Parse helpers exposed for direct use by the dualcheck subcommand.
int env_max_degree();

/// Run the oracle suites up to the given degree; returns true when every
/// check passes and writes one line per suite to stdout.
bool selftest(int max_degree);

} // namespace qpows::cli

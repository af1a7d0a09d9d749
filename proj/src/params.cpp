#include "nlbif/params.hpp"

#include <cmath>
#include <sstream>

#include "nlbif/error.hpp"

namespace nlbif {

void validate_family(double b, double p, double q) {
    if (!std::isfinite(b) || !std::isfinite(p) || !std::isfinite(q)) {
        throw InvalidParameter("parameters must be finite");
    }
    if (b < 0.0) throw InvalidParameter("b must be >= 0");
    if (p < 1.0) throw InvalidParameter("p must be >= 1");
    if (!(q > 1.0 - 1.0 / p)) throw InvalidParameter("q must satisfy q > 1 - 1/p");
    if (p == 1.0 && b > 0.0) {
        throw UnsupportedCase("p = 1 with b > 0 is not covered by any closed theory");
    }
}

void ProblemParams::validate() const {
    validate_family(b, p, q);
    if (!std::isfinite(lambda) || !(lambda > 0.0)) throw InvalidParameter("lambda must be > 0");
}

std::string to_string(const ProblemParams& params) {
    std::ostringstream os;
    os << "(b=" << params.b << ", p=" << params.p << ", q=" << params.q
       << ", lambda=" << params.lambda << ")";
    return os.str();
}

}  // namespace nlbif

#ifndef SPHFN_ERRORS_HPP
#define SPHFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphfn {

// Base class for all mathematical failures. `code()` is the stable
// machine-readable name surfaced by the CLI (exit status 1).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SPHFN_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

SPHFN_DEFINE_ERROR(PoleError);            // gamma/pochhammer at a pole
SPHFN_DEFINE_ERROR(NoConvergence);        // series/CF/Newton failed to converge
SPHFN_DEFINE_ERROR(DomainError);          // argument outside the defined domain
SPHFN_DEFINE_ERROR(SingularPoint);        // z = +-1 (Legendre), function singular
SPHFN_DEFINE_ERROR(DivergentFunction);    // qs/Qs with mu+nu a negative integer
SPHFN_DEFINE_ERROR(CscPole);              // csc prefactor vanishes
SPHFN_DEFINE_ERROR(SecPole);              // sec prefactor vanishes
SPHFN_DEFINE_ERROR(RecurrenceBreakdown);  // vanishing recurrence denominator
SPHFN_DEFINE_ERROR(CFBreakdown);          // zero denominator inside a continued fraction
SPHFN_DEFINE_ERROR(BranchAmbiguity);      // homotopy step size underflowed
SPHFN_DEFINE_ERROR(DegenerateOnly);       // tilde coefficients outside the degenerate case
SPHFN_DEFINE_ERROR(SeriesPole);           // resonant nu in the gamma^2 expansion
SPHFN_DEFINE_ERROR(DenominatorPole);      // expansion coefficient denominator vanishes
SPHFN_DEFINE_ERROR(OutsideDomain);        // radial series requested with |z| <= 1
SPHFN_DEFINE_ERROR(SlowConvergence);      // |z| beyond the practical series radius
SPHFN_DEFINE_ERROR(NormalizationSingular);// Flammer omega denominator vanishes
SPHFN_DEFINE_ERROR(ParseError);           // CLI complex-number grammar violation

#undef SPHFN_DEFINE_ERROR

} // namespace sphfn

#endif

#pragma once

#include "latwalk/bigcount.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace latwalk {

/// A moment value: an exact integer when the distribution allows it,
/// otherwise a double.
class Moment {
public:
    Moment() : value_(BigCount(0)) {}
    static Moment exact(BigCount v) { return Moment(std::move(v)); }
    static Moment approx(double v) { return Moment(v); }

    bool is_exact() const noexcept { return std::holds_alternative<BigCount>(value_); }
    /// Requires is_exact().
    const BigCount& exact_value() const;
    double to_double() const;
    /// Decimal integer when exact, 15 significant digits otherwise.
    std::string to_string() const;

    friend Moment operator*(const Moment& a, const Moment& b);
    friend Moment operator+(const Moment& a, const Moment& b);
    friend Moment operator*(const BigCount& c, const Moment& a);

private:
    explicit Moment(BigCount v) : value_(std::move(v)) {}
    explicit Moment(double v) : value_(v) {}
    std::variant<BigCount, double> value_;
};

/// Closed-form product densities on [-4, 4].
enum class DensityKind {
    aa, // arcsine *_M arcsine (= arcsine * arcsine)
    wa, // semicircle *_M arcsine
    ww, // semicircle *_M semicircle
};

std::string to_string(DensityKind kind);
DensityKind parse_density_kind(const std::string& token);

struct Atom {
    double position;
    double weight;
};

/// Symmetric probability distribution described through its moments.
///
/// Composites are lazy: the classical convolution has binomial-convolution
/// moments and the Mellin convolution has multiplicative moments. Values are
/// immutable and cheap to copy.
class SpectralDistribution {
public:
    enum class Kind { arcsine, semicircle, discrete, classical, mellin, named };

    /// Density 1/(pi sqrt(4-x^2)) on (-2,2); moments binom(2m,m).
    static SpectralDistribution arcsine();
    /// Density sqrt(4-x^2)/(2 pi) on [-2,2]; moments C_m.
    static SpectralDistribution semicircle();
    /// Finitely many atoms. Must be symmetric with weights summing to 1.
    static SpectralDistribution discrete(std::vector<Atom> atoms);
    static SpectralDistribution point_mass_at_zero();
    static SpectralDistribution classical(const SpectralDistribution& a,
                                          const SpectralDistribution& b);
    static SpectralDistribution mellin(const SpectralDistribution& a,
                                       const SpectralDistribution& b);
    static SpectralDistribution named(DensityKind kind);

    Kind kind() const noexcept;
    std::string name() const;
    /// Atoms of a discrete distribution (empty otherwise).
    const std::vector<Atom>& atoms() const;
    /// Factors of a composite; named densities expose their Mellin factors.
    const SpectralDistribution& left() const;
    const SpectralDistribution& right() const;

private:
    struct Node;
    explicit SpectralDistribution(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// M_m(d) for m >= 0.
Moment moment(const SpectralDistribution& d, int m);
/// M_0 .. M_{max_m}.
std::vector<Moment> moments(const SpectralDistribution& d, int max_m);

SpectralDistribution mellin_convolve(const SpectralDistribution& a, const SpectralDistribution& b);
SpectralDistribution classical_convolve(const SpectralDistribution& a,
                                        const SpectralDistribution& b);

/// Even moments M_0, M_2, M_4, ...
struct MomentSequence {
    std::vector<Moment> even_moments;
};

MomentSequence moment_sequence(const SpectralDistribution& d, int count);
/// M_{2j} M_{2j+4} - M_{2j+2}^2 >= 0 for every window (within `tol` relative
/// for floating entries).
bool hankel_windows_nonnegative(const MomentSequence& seq, double tol = 1e-12);

inline constexpr int default_moment_window = 30;
inline constexpr double default_moment_tol = 1e-9;

/// |M_m(a) - M_m(b)| <= tol * max(1, |M_m(a)|) for all m <= max_m; exact
/// moments are compared exactly.
bool weak_equality_by_moments(const SpectralDistribution& a, const SpectralDistribution& b,
                              int max_m = default_moment_window,
                              double tol = default_moment_tol);

/// Spectral distribution of the path P_n at an end vertex.
struct PathSpectrum {
    int n = 0;
    /// 2 cos(k pi/(n+1)), k = 1..n (strictly decreasing).
    std::vector<double> eigenvalues;
    /// Weights from the Vandermonde solve.
    std::vector<double> weights;
    /// max |Lambda a - b| relative to max(1, max |b|).
    double residual = 0.0;
    /// 1-norm condition number of the Vandermonde matrix.
    double condition = 0.0;
    /// Set for n above the well-conditioned range.
    bool conditioning_warning = false;

    /// sum_k a_k lambda_k^m from the raw solve.
    double moment(int m) const;
    /// Symmetrized, renormalized discrete distribution.
    SpectralDistribution to_distribution() const;
};

inline constexpr int max_path_spectrum_n = 24;
inline constexpr int well_conditioned_path_n = 12;
inline constexpr double path_spectrum_residual_tol = 1e-9;

/// Eigenvalues 2cos(k pi/(n+1)) and weights solved from the first n moments
/// W_m(0; P_n) = C_{m/2} (even m) by partial-pivoting elimination.
PathSpectrum path_spectrum(int n);

/// CSV with header "m,moment".
void write_moment_table_csv(std::ostream& out, const std::vector<Moment>& table);

} // namespace latwalk

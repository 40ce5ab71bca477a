#ifndef CUBESQ_MORDELL_HPP
#define CUBESQ_MORDELL_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cubesq {

// n = x^3 + y^2 in positive integers (x, y >= 0 with allow_zero).
struct Representation {
    mpz_class x, y, n;
};

// Exact integer floor roots via big-integer Newton with final correction.
mpz_class isqrt(const mpz_class& n);
mpz_class icbrt(const mpz_class& n);
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

// All representations n = x^3 + y^2, sorted by x.
std::vector<Representation> representations(const mpz_class& n, bool allow_zero = false);

// Smallest n <= limit with at least k representations, if any.
std::optional<mpz_class> min_with_reps(int k, const mpz_class& limit, bool allow_zero = false);

}  // namespace cubesq

#endif

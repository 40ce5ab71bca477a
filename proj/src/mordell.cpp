#include "cubesq/mordell.hpp"

#include "cubesq/errors.hpp"

namespace cubesq {

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw Error("isqrt of a negative integer");
    if (n < 2) return n;
    // Newton iteration x <- (x + n/x) / 2 from a power-of-two overestimate.
    mpz_class x = mpz_class(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2);
    while (true) {
        mpz_class y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

mpz_class icbrt(const mpz_class& n) {
    if (n < 0) throw Error("icbrt of a negative integer");
    if (n < 2) return n;
    mpz_class x = mpz_class(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 2) / 3);
    while (true) {
        mpz_class y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
    if (n < 0) return false;
    mpz_class r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::vector<Representation> representations(const mpz_class& n, bool allow_zero) {
    if (n < 1) throw Error("n must be a positive integer");
    std::vector<Representation> out;
    const mpz_class lo = allow_zero ? 0 : 1;
    for (mpz_class x = lo; x * x * x <= n; ++x) {
        mpz_class rest = n - x * x * x;
        mpz_class y;
        if (!is_perfect_square(rest, &y)) continue;
        if (y < lo) continue;
        out.push_back({x, y, n});
    }
    return out;
}

std::optional<mpz_class> min_with_reps(int k, const mpz_class& limit, bool allow_zero) {
    if (k < 1) throw Error("k must be >= 1");
    if (limit < 2) throw Error("limit must be >= 2");
    for (mpz_class n = 1; n <= limit; ++n)
        if (static_cast<int>(representations(n, allow_zero).size()) >= k) return n;
    return std::nullopt;
}

}  // namespace cubesq

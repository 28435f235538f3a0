#include "stressforge/matrix.hpp"

#include <numeric>

namespace stressforge {

RationalVec RationalMatrix::multiply(const RationalVec& v) const {
    RationalVec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational s;
        for (int c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !v[c].is_zero()) s += at(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

RationalVec canonical_integer_vector(const RationalVec& v) {
    mpz_class l = 1;
    bool nonzero = false;
    for (const Rational& x : v) {
        if (!x.is_zero()) {
            nonzero = true;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
            l = l / g * x.den();
        }
    }
    if (!nonzero) return v;
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class content = 0;
    for (const Rational& x : v) {
        mpz_class n = x.num() * (l / x.den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        content = g;
        ints.push_back(n);
    }
    int lead = 0;
    for (const mpz_class& n : ints) {
        int s = sgn(n);
        if (s != 0) {
            lead = s;
            break;
        }
    }
    if (lead < 0) content = -content;
    RationalVec out;
    out.reserve(v.size());
    for (const mpz_class& n : ints) out.emplace_back(mpz_class(n / content));
    return out;
}

namespace {

struct Echelon {
    // Integer echelon rows after Bareiss elimination, plus the pivot column
    // of each row in elimination order.
    std::vector<std::vector<mpz_class>> rows;
    std::vector<int> pivot_cols;
};

Echelon bareiss_echelon(const RationalMatrix& a) {
    const int nr = a.rows(), nc = a.cols();
    std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
    for (int r = 0; r < nr; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < nc; ++c) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), a.at(r, c).den().get_mpz_t());
            l = l / g * a.at(r, c).den();
        }
        for (int c = 0; c < nc; ++c) m[r][c] = a.at(r, c).num() * (l / a.at(r, c).den());
    }

    Echelon e;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int pivot = -1;
        for (int r = row; r < nr; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int r = row + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c) {
                mpz_class t = m[r][c] * m[row][col] - m[r][col] * m[row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = t;
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        e.pivot_cols.push_back(col);
        ++row;
    }
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

} // namespace

int exact_rank(const RationalMatrix& a) {
    return static_cast<int>(bareiss_echelon(a).pivot_cols.size());
}

KernelBasis kernel_basis(const RationalMatrix& a) {
    const int nc = a.cols();
    Echelon e = bareiss_echelon(a);
    const int rank = static_cast<int>(e.pivot_cols.size());

    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    KernelBasis basis;
    basis.ambient_dim = nc;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        RationalVec x(nc, Rational(0));
        x[f] = Rational(1);
        // Back-substitute through the echelon rows in reverse order.
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = e.pivot_cols[r];
            Rational s;
            for (int c = pc + 1; c < nc; ++c) {
                if (e.rows[r][c] != 0 && !x[c].is_zero())
                    s += Rational(e.rows[r][c]) * x[c];
            }
            x[pc] = -s / Rational(e.rows[r][pc]);
        }
        basis.vectors.push_back(canonical_integer_vector(x));
    }
    return basis;
}

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

int rank_mod_p(const RationalMatrix& a, std::uint64_t p) {
    const int nr = a.rows(), nc = a.cols();
    std::vector<std::vector<std::uint64_t>> m(nr, std::vector<std::uint64_t>(nc));
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) {
            std::uint64_t den = reduce_mpz(a.at(r, c).den(), p);
            if (den == 0)
                throw Error(ErrorKind::BadPrime, "denominator vanishes mod prime");
            std::uint64_t num = reduce_mpz(a.at(r, c).num(), p);
            m[r][c] = mulmod(num, invmod(den, p), p);
        }
    }
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = invmod(m[rank][col], p);
        for (int r = rank + 1; r < nr; ++r) {
            if (m[r][col] == 0) continue;
            std::uint64_t f = mulmod(m[r][col], inv, p);
            for (int c = col; c < nc; ++c) {
                std::uint64_t t = mulmod(f, m[rank][c], p);
                m[r][c] = (m[r][c] + p - t) % p;
            }
        }
        ++rank;
    }
    return rank;
}

namespace primes {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime_62(std::uint64_t seed, int index) {
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0xda3e39cb94b95bdbULL * (index + 1);
    for (;;) {
        std::uint64_t cand = splitmix64(state);
        cand = (cand & ((1ULL << 62) - 1)) | (1ULL << 61) | 1ULL;
        if (is_prime(cand)) return cand;
    }
}

} // namespace primes

} // namespace stressforge

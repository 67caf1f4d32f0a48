#include "rxy/oracles.hpp"

#include <random>

namespace rxy {

namespace {

long valuation(long x, long p) {
    long v = 0;
    while (x % p == 0 && x != 0) {
        x /= p;
        ++v;
    }
    return x == 0 ? 1000 : v;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long inv_mod_prime(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod_pos(t, p);
}

// any solution of A s = b mod p^a, by elimination on minimal p-valuation
// pivots; nullopt when inconsistent
std::optional<std::vector<long>> solve_mod_prime_power(std::vector<std::vector<long>> A,
                                                       std::vector<long> b, long p, long a) {
    long q = 1;
    for (long i = 0; i < a; ++i) q *= p;
    const size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    for (auto& row : A)
        for (auto& x : row) x = mod_pos(x, q);
    for (auto& x : b) x = mod_pos(x, q);

    std::vector<std::pair<size_t, long>> pivots;  // (column, valuation)
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rows;
        long best = a;
        for (size_t i = rank; i < rows; ++i) {
            if (A[i][col] == 0) continue;
            long v = valuation(A[i][col], p);
            if (v < best) {
                best = v;
                sel = i;
            }
        }
        if (sel == rows) continue;
        std::swap(A[sel], A[rank]);
        std::swap(b[sel], b[rank]);
        long pv = 1;
        for (long i = 0; i < best; ++i) pv *= p;
        // normalize the row so the pivot entry is exactly p^best; the cofactor
        // is coprime to p, hence invertible mod q (extended Euclid)
        const long unit = A[rank][col] / pv;
        const long inv = inv_mod_prime(mod_pos(unit, q), q);
        for (size_t j = 0; j < cols; ++j) A[rank][j] = mod_pos(A[rank][j] * inv, q);
        b[rank] = mod_pos(b[rank] * inv, q);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            const long f = A[i][col] / pv;  // valuation >= best by minimality
            for (size_t j = 0; j < cols; ++j) A[i][j] = mod_pos(A[i][j] - f * A[rank][j], q);
            b[i] = mod_pos(b[i] - f * b[rank], q);
        }
        pivots.emplace_back(col, best);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (b[i] % q != 0) return std::nullopt;
    std::vector<long> s(cols, 0);
    for (size_t i = rank; i-- > 0;) {
        const auto [col, v] = pivots[i];
        long rhs = b[i];
        for (size_t j = col + 1; j < cols; ++j) rhs = mod_pos(rhs - A[i][j] * s[j], q);
        long pv = 1;
        for (long k = 0; k < v; ++k) pv *= p;
        if (rhs % pv != 0) return std::nullopt;
        s[col] = mod_pos(rhs / pv, q / pv);
    }
    return s;
}

std::vector<std::pair<long, long>> prime_power_split(long n) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.emplace_back(p, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long crt(long r1, long m1, long r2, long m2) {
    // m1, m2 coprime
    for (long k = 0; k < m2; ++k) {
        long x = r1 + m1 * k;
        if (mod_pos(x, m2) == mod_pos(r2, m2)) return x;
    }
    throw Error("internal: crt failed");
}

std::vector<long> y_coeff_vector(const PolyR& f, int upto) {
    std::vector<long> out(static_cast<size_t>(upto) + 1, 0);
    for (const auto& [e, c] : f.terms()) {
        if (e.y > upto) throw Error("internal: degree overflow in oracle");
        out[static_cast<size_t>(e.y)] = c.as_int().get_si();
    }
    return out;
}

}  // namespace

std::optional<PolyR> brute_comp_inverse(const PolyR& Q, long n, int degcap) {
    if (n < 2 || n > 64 || degcap < 0 || degcap > 16) throw Error("brute_comp_inverse: bounds exceeded");
    if (!Q.is_univariate_y()) throw Error("oracle input must be univariate in y");
    const Ring r = Ring::Int;
    const int dq = std::max(0, Q.deg_y());

    for (int ds = 0; ds <= degcap; ++ds) {
        // S(Q(y)) = y mod n is linear in the coefficients of S: the column of
        // s_k is Q^k's coefficient vector
        const int rows = std::max(1, dq * ds) + 1;
        std::vector<std::vector<long>> cols;
        PolyR acc = PolyR::constant(RingElem::one(r));
        for (int k = 0; k <= ds; ++k) {
            cols.push_back(y_coeff_vector(reduce_mod(acc, RingElem(mpz_class(n))).rep(), rows - 1));
            acc = reduce_mod(acc * Q, RingElem(mpz_class(n))).rep();
        }
        std::vector<std::vector<long>> A(static_cast<size_t>(rows),
                                         std::vector<long>(cols.size(), 0));
        for (size_t k = 0; k < cols.size(); ++k)
            for (int i = 0; i < rows; ++i) A[static_cast<size_t>(i)][k] = cols[k][static_cast<size_t>(i)];
        std::vector<long> b(static_cast<size_t>(rows), 0);
        if (rows > 1) b[1] = 1;

        // solve per prime power and combine
        std::optional<std::vector<long>> combined;
        long mod_so_far = 1;
        bool ok = true;
        for (const auto& [p, a] : prime_power_split(n)) {
            long q = 1;
            for (long i = 0; i < a; ++i) q *= p;
            auto sol = solve_mod_prime_power(A, b, p, a);
            if (!sol) {
                ok = false;
                break;
            }
            if (!combined) {
                combined = *sol;
                mod_so_far = q;
            } else {
                for (size_t j = 0; j < combined->size(); ++j)
                    (*combined)[j] = crt((*combined)[j], mod_so_far, (*sol)[j], q);
                mod_so_far *= q;
            }
        }
        if (!ok || !combined) continue;
        PolyR S(r);
        for (size_t j = 0; j < combined->size(); ++j)
            S.add_term({0, static_cast<int>(j)}, RingElem(mpz_class(mod_pos((*combined)[j], n))));
        if (!reduce_mod(compose_y(S, Q) - PolyR::var_y(r), RingElem(mpz_class(n))).is_zero())
            throw Error("internal: oracle solution fails verification");
        return S;
    }
    return std::nullopt;
}

std::vector<PolyR> brute_va1(long n, int degcap) {
    if (n < 2 || n > 12 || degcap < 0 || degcap > 3) throw Error("brute_va1: bounds exceeded");
    const Ring r = Ring::Int;
    const RingElem p = RingElem(mpz_class(n));
    const int inverse_cap = static_cast<int>(2 * nilpotency_bound(p));
    std::vector<PolyR> out;
    std::vector<long> coeffs(static_cast<size_t>(degcap) + 1, 0);
    for (;;) {
        PolyR P(r);
        for (int k = 0; k <= degcap; ++k)
            P.add_term({0, k}, RingElem(mpz_class(coeffs[static_cast<size_t>(k)])));
        if (brute_comp_inverse(P, n, inverse_cap)) out.push_back(P);
        int pos = 0;
        while (pos <= degcap && ++coeffs[static_cast<size_t>(pos)] == n) coeffs[static_cast<size_t>(pos++)] = 0;
        if (pos > degcap) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

namespace {

RingElem small_poly(std::mt19937_64& g, int maxdeg, long height) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<long> dc(-height, height);
    UniPoly p;
    const int d = dd(g);
    std::vector<mpq_class> cs(static_cast<size_t>(d) + 1, mpq_class(0));
    for (auto& c : cs) c = dc(g);
    if (cs.back() == 0) cs.back() = 1;
    return RingElem(UniPoly::from_coeffs(cs));
}

PolyR random_ypoly(std::mt19937_64& g, Ring r, int deg, long height, int zdeg) {
    PolyR out(r);
    std::uniform_int_distribution<long> dc(-height, height);
    for (int k = 0; k <= deg; ++k) {
        RingElem c = (r == Ring::Int) ? RingElem(mpz_class(dc(g))) : small_poly(g, zdeg, height);
        if (k == deg && c.is_zero()) c = RingElem::one(r);
        out.add_term({0, k}, c);
    }
    return out;
}

}  // namespace

Rl2Data random_rl2(Ring r, std::uint64_t seed) {
    std::mt19937_64 g(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_int_distribution<int> pick(0, 5);
    RingElem d = RingElem::one(r), q1 = RingElem::one(r), q2 = RingElem::one(r);
    if (r == Ring::Int) {
        const long primes[6] = {2, 3, 5, 7, 11, 13};
        int a = pick(g), b = pick(g), c = pick(g);
        while (b == a) b = pick(g);
        while (c == a || c == b) c = pick(g);
        std::uniform_int_distribution<int> ex(1, 2);
        d = RingElem(mpz_class(primes[a]));
        q1 = pow(RingElem(mpz_class(primes[b])), static_cast<unsigned>(ex(g)));
        q2 = pow(RingElem(mpz_class(primes[c])), static_cast<unsigned>(ex(g)));
    } else {
        auto lin = [&](long root) {
            return RingElem(UniPoly::from_coeffs({mpq_class(-root), mpq_class(1)}));
        };
        int a = pick(g), b = pick(g), c = pick(g);
        while (b == a) b = pick(g);
        while (c == a || c == b) c = pick(g);
        std::uniform_int_distribution<int> ex(1, 2);
        d = pow(lin(a - 2), static_cast<unsigned>(ex(g)));
        q1 = pow(lin(b - 2), static_cast<unsigned>(ex(g)));
        q2 = pow(lin(c - 2), static_cast<unsigned>(ex(g)));
    }
    std::uniform_int_distribution<int> qdeg(1, 2);
    const PolyR Q3 = random_ypoly(g, r, qdeg(g), 3, 1);
    const RingElem radq2 = *radical(q2);
    const PolyR Q4 = random_ypoly(g, r, 2, 2, 1).scaled(radq2);
    return example2_family(d, q1, q2, Q3, Q4);
}

Quadruplet random_quadruplet(Ring r, std::uint64_t seed) {
    const Rl2Data data = random_rl2(r, seed);
    const FracElem p1 = FracElem(data.d * data.q1);
    const FracElem p2 = FracElem(data.q2, data.d);
    const PolyQ Q1 = promote(data.Q1);
    const PolyQ Q2 = promote(data.Q2).scaled(FracElem(RingElem::one(r), data.d));
    return Quadruplet(p1, p2, Q1, Q2);
}

Quadruplet perturb_equivalent(const Quadruplet& q, std::uint64_t seed) {
    std::mt19937_64 g(seed ^ 0xabcdef1234567890ULL);
    const Ring r = q.ring();
    std::uniform_int_distribution<long> dc(-3, 3);
    const PolyQ y = PolyQ::var_y(r);

    FracElem p1 = q.p1, p2 = q.p2;
    PolyQ Q1 = q.Q1, Q2 = q.Q2;

    // unit move: p1 -> u p1, Q1 -> u Q1, Q2 -> Q2(y/u)
    FracElem u = FracElem::from_rational(r, mpq_class(dc(g) == 0 ? 1 : dc(g)));
    if (r == Ring::Int) u = FracElem::from_int(r, dc(g) >= 0 ? 1 : -1);
    p1 = p1 * u;
    Q1 = Q1.scaled(u);
    Q2 = compose_y(Q2, y.scaled(u.inverse()));

    // scale move: p1 -> p1/m, Q1 -> Q1/m, Q2 -> Q2(m y)
    FracElem m = FracElem::from_int(r, std::max(1L, std::abs(dc(g))) + 1);
    if (r == Ring::PolyZ && dc(g) > 0) m = m * FracElem(RingElem(UniPoly::from_coeffs({1, 1})));
    p1 = p1 / m;
    Q1 = Q1.scaled(m.inverse());
    Q2 = compose_y(Q2, y.scaled(m));

    // shift move: Q1 -> Q1 + c, Q2 -> Q2(y - c)
    const FracElem c = FracElem::from_int(r, dc(g));
    Q1 = Q1 + PolyQ::constant(c);
    Q2 = compose_y(Q2, y - PolyQ::constant(c));

    // additive constant (changes the expansion by an element of R)
    Q2 = Q2 + PolyQ::constant(FracElem::from_int(r, dc(g)));

    return Quadruplet(p1, p2, Q1, Q2);
}

Word random_word(Ring r, std::uint64_t seed, int length) {
    std::mt19937_64 g(seed + 0x51ed2701);
    std::uniform_int_distribution<long> dc(-4, 4);
    Word w{r, {}};
    bool tri = true;
    for (int i = 0; i + 1 < length; ++i) {
        if (tri) {
            FracElem p = FracElem::from_int(r, dc(g) >= 0 ? 2 : -1);
            if (r == Ring::PolyZ && dc(g) > 1)
                p = p * FracElem(RingElem(UniPoly::from_coeffs({0, 1})));  // z
            std::uniform_int_distribution<int> qd(1, 3);
            PolyQ q(r);
            const int d = qd(g);
            for (int k = 0; k <= d; ++k) {
                RingElem cc = (r == Ring::Int) ? RingElem(mpz_class(dc(g)))
                                               : small_poly(g, 3, 2);
                q.add_term({0, k}, FracElem(cc));
            }
            if (q.coeff(0, d).is_zero()) q.add_term({0, d}, FracElem::one(r));
            w.factors.push_back(Triangular{p, q});
        } else {
            w.factors.push_back(Swap{});
        }
        tri = !tri;
    }
    const FracElem one = FracElem::one(r), zero = FracElem::zero(r);
    w.factors.push_back(Affine2{one, zero, zero, zero, one, zero});
    return w;
}

}  // namespace rxy

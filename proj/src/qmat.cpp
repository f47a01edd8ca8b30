#include "syzlab/qmat.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace syzlab {

QMat QMat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int m = static_cast<int>(rows.size());
    int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
    QMat out(m, n);
    for (int r = 0; r < m; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != n)
            throw std::invalid_argument("QMat: ragged rows");
        for (int c = 0; c < n; ++c) out.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return out;
}

QMat QMat::transposed() const {
    QMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Integer matrix with per-row cleared denominators. Row scaling preserves the
// rank and the right kernel, which is all the callers below rely on.
// ---------------------------------------------------------------------------

struct ZMat {
    int m = 0, n = 0;
    std::vector<mpz_class> e;  // row-major

    mpz_class& at(int r, int c) {
        return e[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    }
    const mpz_class& at(int r, int c) const {
        return e[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    }
};

ZMat clear_row_denominators(const QMat& q) {
    ZMat z;
    z.m = q.rows();
    z.n = q.cols();
    z.e.resize(static_cast<size_t>(z.m) * static_cast<size_t>(z.n));
    mpz_class lcm_den;
    for (int r = 0; r < z.m; ++r) {
        lcm_den = 1;
        for (int c = 0; c < z.n; ++c) {
            const mpz_class& d = q.at(r, c).den();
            if (d != 1) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        }
        for (int c = 0; c < z.n; ++c) {
            const Rational& v = q.at(r, c);
            if (v.is_zero()) continue;
            z.at(r, c) = v.num() * (lcm_den / v.den());
        }
    }
    return z;
}

ZMat transpose(const ZMat& a) {
    ZMat t;
    t.m = a.n;
    t.n = a.m;
    t.e.resize(a.e.size());
    for (int r = 0; r < a.m; ++r)
        for (int c = 0; c < a.n; ++c) t.at(c, r) = a.at(r, c);
    return t;
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination. Reference path for small matrices and
// the fallback when modular certification cannot complete.
// ---------------------------------------------------------------------------

struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;
    // echelon rows (integer, fraction-free); rows[i] has its pivot at pivot_cols[i]
    std::vector<std::vector<mpz_class>> rows;
};

Echelon bareiss_echelon(const ZMat& a) {
    int m = a.m, n = a.n;
    std::vector<std::vector<mpz_class>> w(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        w[static_cast<size_t>(r)].resize(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) w[static_cast<size_t>(r)][static_cast<size_t>(c)] = a.at(r, c);
    }
    Echelon out;
    mpz_class prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // largest-magnitude pivot in this column
        int piv = -1;
        for (int r = row; r < m; ++r) {
            const mpz_class& v = w[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (sgn(v) == 0) continue;
            if (piv < 0 || mpz_cmpabs(v.get_mpz_t(),
                                      w[static_cast<size_t>(piv)][static_cast<size_t>(col)].get_mpz_t()) > 0)
                piv = r;
        }
        if (piv < 0) continue;
        std::swap(w[static_cast<size_t>(row)], w[static_cast<size_t>(piv)]);
        const mpz_class pivot = w[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int r = row + 1; r < m; ++r) {
            auto& wr = w[static_cast<size_t>(r)];
            const mpz_class mult = wr[static_cast<size_t>(col)];
            // one-step Bareiss: rescale by pivot/prev_pivot even when mult == 0
            for (int c = col; c < n; ++c) {
                mpz_class v = pivot * wr[static_cast<size_t>(c)] -
                              mult * w[static_cast<size_t>(row)][static_cast<size_t>(c)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                wr[static_cast<size_t>(c)] = v;
            }
        }
        out.pivot_cols.push_back(col);
        out.rows.push_back(w[static_cast<size_t>(row)]);
        prev_pivot = pivot;
        ++row;
    }
    out.rank = row;
    return out;
}

// Standard-form kernel vectors from an integer echelon form, by rational
// back-substitution. Identical to the reduced-echelon kernel.
std::vector<std::vector<Rational>> kernel_from_echelon(const Echelon& e, int n) {
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<size_t>(n));
        v[static_cast<size_t>(f)] = Rational(1);
        for (int i = e.rank - 1; i >= 0; --i) {
            int pc = e.pivot_cols[static_cast<size_t>(i)];
            const auto& row = e.rows[static_cast<size_t>(i)];
            Rational acc;
            for (int c = pc + 1; c <= f; ++c) {
                if (sgn(row[static_cast<size_t>(c)]) == 0 ||
                    v[static_cast<size_t>(c)].is_zero())
                    continue;
                acc += Rational(row[static_cast<size_t>(c)]) * v[static_cast<size_t>(c)];
            }
            if (!acc.is_zero()) v[static_cast<size_t>(pc)] = -acc / Rational(row[static_cast<size_t>(pc)]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Modular fast path. Elimination mod 31-bit primes; results are certified:
//   rank >= r: the r x r pivot submatrix has nonzero determinant mod p, hence
//              nonzero over Z;
//   rank <= r: n - r reconstructed kernel vectors verified exactly over Z,
//              independent by their unit coordinates.
// ---------------------------------------------------------------------------

constexpr uint32_t kPrimes[] = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u,
    2147483543u, 2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u,
    2147483353u, 2147483323u, 2147483269u, 2147483249u, 2147483237u, 2147483179u,
    2147483171u, 2147483137u, 2147483123u, 2147483077u, 2147483069u, 2147483059u,
    2147483053u, 2147483033u, 2147483029u, 2147482951u, 2147482949u, 2147482943u,
    2147482937u, 2147482921u, 2147482877u, 2147482873u, 2147482867u, 2147482859u,
    2147482819u, 2147482817u, 2147482811u, 2147482801u, 2147482763u, 2147482739u,
    2147482697u, 2147482693u, 2147482681u, 2147482663u, 2147482661u, 2147482621u};
constexpr int kNumPrimes = static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0]));

struct Barrett {
    uint64_t p;
    uint64_t magic;  // floor(2^64 / p)

    explicit Barrett(uint64_t p_) : p(p_), magic(~uint64_t{0} / p_) {}

    uint64_t reduce(uint64_t x) const {
        uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
        uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }
};

uint64_t pow_mod(uint64_t b, uint64_t e, const Barrett& br) {
    uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = br.mul(acc, b);
        b = br.mul(b, b);
        e >>= 1;
    }
    return acc;
}

uint64_t inv_mod(uint64_t a, const Barrett& br) { return pow_mod(a, br.p - 2, br); }

struct ModEchelon {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<std::vector<uint32_t>> rows;  // echelon rows, pivot entries normalized to 1
};

// Forward elimination only; kernel extraction back-substitutes per free column.
ModEchelon echelon_mod(std::vector<std::vector<uint32_t>> w, uint64_t p) {
    const Barrett br(p);
    int m = static_cast<int>(w.size());
    int n = m ? static_cast<int>(w[0].size()) : 0;
    ModEchelon out;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (w[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[static_cast<size_t>(row)], w[static_cast<size_t>(piv)]);
        auto& pr = w[static_cast<size_t>(row)];
        uint64_t inv = inv_mod(pr[static_cast<size_t>(col)], br);
        for (int c = col; c < n; ++c)
            pr[static_cast<size_t>(c)] = static_cast<uint32_t>(br.mul(pr[static_cast<size_t>(c)], inv));
        for (int r = row + 1; r < m; ++r) {
            auto& wr = w[static_cast<size_t>(r)];
            uint64_t mult = wr[static_cast<size_t>(col)];
            if (!mult) continue;
            uint64_t neg = p - mult;
            for (int c = col; c < n; ++c)
                wr[static_cast<size_t>(c)] = static_cast<uint32_t>(
                    br.reduce(wr[static_cast<size_t>(c)] + neg * pr[static_cast<size_t>(c)]));
        }
        out.pivot_cols.push_back(col);
        out.rows.push_back(std::move(w[static_cast<size_t>(row)]));
        w[static_cast<size_t>(row)] = {};
        ++row;
    }
    out.rank = row;
    // move pivot rows back into a compact list order (already in order)
    return out;
}

std::vector<std::vector<uint32_t>> residues_mod(const ZMat& a, uint32_t p) {
    std::vector<std::vector<uint32_t>> w(static_cast<size_t>(a.m),
                                         std::vector<uint32_t>(static_cast<size_t>(a.n), 0));
    for (int r = 0; r < a.m; ++r)
        for (int c = 0; c < a.n; ++c) {
            const mpz_class& v = a.at(r, c);
            if (sgn(v) != 0)
                w[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    static_cast<uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
        }
    return w;
}

// kernel vectors mod p in standard form, same layout as kernel_from_echelon
std::vector<std::vector<uint32_t>> kernel_mod(const ModEchelon& e, int n, uint64_t p) {
    const Barrett br(p);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<uint32_t>> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<uint32_t> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(f)] = 1;
        for (int i = e.rank - 1; i >= 0; --i) {
            int pc = e.pivot_cols[static_cast<size_t>(i)];
            const auto& row = e.rows[static_cast<size_t>(i)];
            uint64_t acc = 0;
            for (int c = pc + 1; c <= f; ++c) {
                if (!row[static_cast<size_t>(c)] || !v[static_cast<size_t>(c)]) continue;
                acc = br.reduce(acc + static_cast<uint64_t>(row[static_cast<size_t>(c)]) *
                                          v[static_cast<size_t>(c)]);
            }
            if (acc) v[static_cast<size_t>(pc)] = static_cast<uint32_t>(p - acc);  // pivot entry is 1
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Rational reconstruction of u mod M with |num|, den <= sqrt(M/2).
bool rat_reconstruct(const mpz_class& u, const mpz_class& modulus, Rational& out) {
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    if (bound == 0) return false;
    mpz_class r0 = modulus, r1 = u % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (sgn(s1) == 0) return false;
    mpz_class den = abs(s1);
    if (den > bound) return false;
    mpz_class num = sgn(s1) < 0 ? mpz_class(-r1) : r1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        // candidates must be coprime, otherwise reconstruction is ambiguous
        if (den / g == 0) return false;
        num /= g;
        den /= g;
    }
    out = Rational(num, den);
    return true;
}

// Exact check A * v == 0 after scaling v to integers.
bool verify_kernel_vector(const ZMat& a, const std::vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v)
        if (!x.is_zero() && x.den() != 1)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> w(v.size());
    std::vector<int> support;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        w[i] = v[i].num() * (lcm_den / v[i].den());
        support.push_back(static_cast<int>(i));
    }
    mpz_class acc;
    for (int r = 0; r < a.m; ++r) {
        acc = 0;
        for (int c : support) {
            const mpz_class& e = a.at(r, c);
            if (sgn(e) != 0) mpz_addmul(acc.get_mpz_t(), e.get_mpz_t(), w[static_cast<size_t>(c)].get_mpz_t());
        }
        if (sgn(acc) != 0) return false;
    }
    return true;
}

struct CertifiedKernel {
    int rank = 0;
    std::vector<std::vector<Rational>> vectors;
};

// Certified modular kernel of an integer matrix. nullopt when the prime
// budget is exhausted without certification (callers then fall back to the
// fraction-free path).
std::optional<CertifiedKernel> modular_kernel(const ZMat& a) {
    int n = a.n;
    int best_rank = -1;
    std::vector<int> pivots;
    std::vector<int> free_cols;
    // CRT state for the kernel entries: per free column, per pivot row
    std::vector<std::vector<mpz_class>> residue;
    mpz_class modulus = 1;
    int primes_used = 0;

    for (int pi = 0; pi < kNumPrimes; ++pi) {
        uint32_t p = kPrimes[pi];
        ModEchelon e = echelon_mod(residues_mod(a, p), p);
        if (e.rank < best_rank) continue;  // unlucky prime
        if (e.rank > best_rank || e.pivot_cols != pivots) {
            if (e.rank == best_rank && primes_used > 0) continue;  // different profile, skip
            // adopt (higher-rank) structure and restart accumulation
            best_rank = e.rank;
            pivots = e.pivot_cols;
            free_cols.clear();
            std::vector<bool> is_pivot(static_cast<size_t>(n), false);
            for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
            for (int c = 0; c < n; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
            residue.assign(free_cols.size(),
                           std::vector<mpz_class>(static_cast<size_t>(best_rank), mpz_class(0)));
            modulus = 1;
            primes_used = 0;
        }
        auto kv = kernel_mod(e, n, p);
        // fold residues: entry (f, i) = kernel vector for free_cols[f] at pivots[i]
        mpz_class pz(static_cast<unsigned long>(p));
        for (size_t f = 0; f < free_cols.size(); ++f)
            for (size_t i = 0; i < pivots.size(); ++i) {
                uint32_t rv = kv[f][static_cast<size_t>(pivots[i])];
                mpz_class& cur = residue[f][i];
                if (primes_used == 0) {
                    cur = static_cast<unsigned long>(rv);
                } else {
                    // CRT combine cur (mod modulus) with rv (mod p)
                    mpz_class minv;
                    if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                        return std::nullopt;  // cannot happen, distinct primes
                    mpz_class delta = (static_cast<unsigned long>(rv) - cur % pz) % pz;
                    if (delta < 0) delta += pz;
                    delta = (delta * minv) % pz;
                    cur += modulus * delta;
                }
            }
        modulus *= pz;
        ++primes_used;

        // attempt reconstruction + exact verification
        std::vector<std::vector<Rational>> vecs(free_cols.size(),
                                                std::vector<Rational>(static_cast<size_t>(n)));
        bool ok = true;
        for (size_t f = 0; f < free_cols.size() && ok; ++f) {
            vecs[f][static_cast<size_t>(free_cols[f])] = Rational(1);
            for (size_t i = 0; i < pivots.size() && ok; ++i) {
                if (sgn(residue[f][i]) == 0) continue;
                Rational val;
                if (!rat_reconstruct(residue[f][i], modulus, val)) {
                    ok = false;
                    break;
                }
                vecs[f][static_cast<size_t>(pivots[i])] = val;
            }
        }
        if (!ok) continue;
        for (size_t f = 0; f < free_cols.size() && ok; ++f)
            if (!verify_kernel_vector(a, vecs[f])) ok = false;
        if (!ok) continue;
        return CertifiedKernel{best_rank, std::move(vecs)};
    }
    return std::nullopt;
}

bool use_modular(const ZMat& a) {
    // fraction-free growth is fine for small problems; beyond this the
    // modular path is orders of magnitude faster
    return a.m > 64 || a.n > 64;
}

int rank_int(const ZMat& a) {
    if (a.m == 0 || a.n == 0) return 0;
    if (!use_modular(a)) return bareiss_echelon(a).rank;
    // certify on the side with fewer kernel vectors
    {
        ModEchelon probe = echelon_mod(residues_mod(a, kPrimes[0]), kPrimes[0]);
        bool transpose_cheaper = (a.m - probe.rank) < (a.n - probe.rank);
        if (transpose_cheaper) {
            ZMat t = transpose(a);
            if (auto k = modular_kernel(t)) return k->rank;
        } else {
            if (auto k = modular_kernel(a)) return k->rank;
        }
    }
    return bareiss_echelon(a).rank;
}

std::vector<std::vector<Rational>> kernel_int(const ZMat& a) {
    if (a.n == 0) return {};
    if (a.m == 0) {
        // every column is free
        std::vector<std::vector<Rational>> out;
        for (int c = 0; c < a.n; ++c) {
            std::vector<Rational> v(static_cast<size_t>(a.n));
            v[static_cast<size_t>(c)] = Rational(1);
            out.push_back(std::move(v));
        }
        return out;
    }
    if (use_modular(a)) {
        if (auto k = modular_kernel(a)) return std::move(k->vectors);
    }
    Echelon e = bareiss_echelon(a);
    return kernel_from_echelon(e, a.n);
}

}  // namespace

namespace detail {

int rank_lower_bound(const QMat& m, int attempt) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ZMat a = clear_row_denominators(m);
    uint32_t p = kPrimes[attempt % kNumPrimes];
    return echelon_mod(residues_mod(a, p), p).rank;
}

}  // namespace detail

int rank(const QMat& m) { return rank_int(clear_row_denominators(m)); }

std::vector<std::vector<Rational>> kernel_basis(const QMat& m) {
    return kernel_int(clear_row_denominators(m));
}

int row_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    return rank(QMat::from_rows(rows));
}

bool span_equal(const std::vector<std::vector<Rational>>& a,
                const std::vector<std::vector<Rational>>& b) {
    if (!a.empty() && !b.empty() && a[0].size() != b[0].size())
        throw std::invalid_argument("span_equal: vector length mismatch");
    for (const auto& v : a)
        if (v.size() != (a.empty() ? 0 : a[0].size()))
            throw std::invalid_argument("span_equal: ragged input");
    for (const auto& v : b)
        if (v.size() != (b.empty() ? 0 : b[0].size()))
            throw std::invalid_argument("span_equal: ragged input");
    int ra = row_rank(a);
    int rb = row_rank(b);
    if (ra != rb) return false;
    std::vector<std::vector<Rational>> stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return row_rank(stacked) == ra;
}

}  // namespace syzlab

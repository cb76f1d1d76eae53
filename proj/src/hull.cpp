#include <algorithm>
#include <bit>
#include <numeric>

#include <gmpxx.h>

#include "k33cut/polytope.hpp"

namespace k33cut {

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

int popcount(const Bits& a) {
    int c = 0;
    for (auto w : a) c += std::popcount(w);
    return c;
}

Bits intersect(const Bits& a, const Bits& b) {
    Bits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] & b[i];
    return c;
}

void set_bit(Bits& a, std::size_t i) { a[i / 64] |= std::uint64_t{1} << (i % 64); }

struct Ray {
    std::vector<mpz_class> z;
    Bits zeros;
};

void normalize(std::vector<mpz_class>& z) {
    mpz_class g = 0;
    for (const auto& x : z) g = gcd(g, x);
    if (g > 1)
        for (auto& x : z) x /= g;
}

mpz_class dot(const std::vector<mpz_class>& r, const std::vector<mpz_class>& z) {
    mpz_class s = 0;
    for (std::size_t k = 0; k < r.size(); ++k) s += r[k] * z[k];
    return s;
}

/// Row indices of a maximal independent subset, scanning in order.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<mpz_class>>& rows, std::size_t width) {
    std::vector<std::vector<mpq_class>> basis;
    std::vector<std::size_t> pivots, chosen;
    for (std::size_t i = 0; i < rows.size() && chosen.size() < width; ++i) {
        std::vector<mpq_class> r(rows[i].begin(), rows[i].end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const mpq_class f = r[pivots[b]];
            if (f == 0) continue;
            for (std::size_t k = 0; k < width; ++k) r[k] -= f * basis[b][k];
        }
        std::size_t piv = width;
        for (std::size_t k = 0; k < width; ++k)
            if (r[k] != 0) {
                piv = k;
                break;
            }
        if (piv == width) continue;
        const mpq_class inv = 1 / r[piv];
        for (auto& x : r) x *= inv;
        basis.push_back(std::move(r));
        pivots.push_back(piv);
        chosen.push_back(i);
    }
    return chosen;
}

/// Columns of -B^{-1}, each scaled to a primitive integer vector.
std::vector<std::vector<mpz_class>> negated_inverse_columns(const std::vector<std::vector<mpz_class>>& b) {
    const std::size_t n = b.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) m[i][k] = b[i][k];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        const mpq_class inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const mpq_class f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<std::vector<mpz_class>> cols(n, std::vector<mpz_class>(n));
    for (std::size_t j = 0; j < n; ++j) {
        mpz_class den = 1;
        for (std::size_t i = 0; i < n; ++i) den = lcm(den, m[i][n + j].get_den());
        for (std::size_t i = 0; i < n; ++i) {
            const mpq_class v = -m[i][n + j] * den;
            cols[j][i] = v.get_num();
        }
        normalize(cols[j]);
    }
    return cols;
}

}  // namespace

HullResult brute_hull(const std::vector<Cut>& cuts, int dim, HullLimits limits) {
    if (dim < 1 || dim > limits.max_dim) throw GraphError("hull dimension outside the supported range");
    if (cuts.empty() || cuts.size() > limits.max_vertices) throw GraphError("hull vertex count outside the supported range");
    const std::size_t n = cuts.size();
    const std::size_t d = static_cast<std::size_t>(dim);
    std::vector<std::int64_t> sum(d, 0);
    for (const auto& c : cuts) {
        if (c.indicator.size() != d) throw GraphError("cut vector has wrong dimension");
        for (std::size_t k = 0; k < d; ++k) sum[k] += c.indicator[k];
    }
    // translate the centroid to the origin, scaled by n to stay integral
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k)
            rows[i][k] = static_cast<long>(static_cast<std::int64_t>(n) * cuts[i].indicator[k] - sum[k]);
        rows[i][d] = -1;
    }
    const auto chosen = independent_rows(rows, d + 1);
    if (chosen.size() != d + 1) throw GraphError("vertex set is not full-dimensional");

    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<mpz_class>> basis;
    for (auto i : chosen) basis.push_back(rows[i]);
    std::vector<Ray> rays;
    {
        auto cols = negated_inverse_columns(basis);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Ray r{std::move(cols[j]), Bits(words, 0)};
            for (std::size_t k = 0; k < chosen.size(); ++k)
                if (k != j) set_bit(r.zeros, chosen[k]);
            rays.push_back(std::move(r));
        }
    }

    std::vector<char> used(n, 0);
    for (auto i : chosen) used[i] = 1;
    const int min_common = static_cast<int>(d) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<int> sign(rays.size());
        std::vector<mpz_class> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rows[i], rays[r].z);
            sign[r] = sgn(val[r]);
        }
        std::vector<Ray> next;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (sign[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (sign[q] >= 0) continue;
                Bits common = intersect(rays[p].zeros, rays[q].zeros);
                if (popcount(common) < min_common) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && subset(common, rays[o].zeros)) adjacent = false;
                if (!adjacent) continue;
                std::vector<mpz_class> z(d + 1);
                for (std::size_t k = 0; k <= d; ++k) z[k] = val[p] * rays[q].z[k] - val[q] * rays[p].z[k];
                normalize(z);
                set_bit(common, i);
                next.push_back({std::move(z), std::move(common)});
            }
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (sign[r] > 0) continue;
            if (sign[r] == 0) set_bit(rays[r].zeros, i);
            next.push_back(std::move(rays[r]));
        }
        rays = std::move(next);
        used[i] = 1;
    }

    std::vector<std::pair<LinearInequality, std::vector<int>>> found;
    for (const auto& r : rays) {
        bool zero = true;
        for (std::size_t k = 0; k < d; ++k)
            if (r.z[k] != 0) zero = false;
        if (zero) continue;
        // a.(n x - s) <= a0  becomes  (n a).x <= a0 + a.s
        std::vector<mpz_class> a(d);
        mpz_class rhs = r.z[d];
        for (std::size_t k = 0; k < d; ++k) {
            a[k] = r.z[k] * static_cast<long>(n);
            rhs += r.z[k] * static_cast<long>(sum[k]);
        }
        mpz_class g = rhs;
        for (const auto& x : a) g = gcd(g, x);
        g = abs(g);
        std::vector<Coeff> coeffs(d);
        for (std::size_t k = 0; k < d; ++k) coeffs[k] = mpz_class(a[k] / g).get_si();
        auto q = LinearInequality::make(std::move(coeffs), mpz_class(rhs / g).get_si());
        std::vector<int> tight;
        for (std::size_t v = 0; v < n; ++v)
            if (q.lhs(cuts[v].indicator) == q.rhs) tight.push_back(static_cast<int>(v));
        found.emplace_back(std::move(q), std::move(tight));
    }
    std::sort(found.begin(), found.end());
    HullResult out{InequalitySystem(dim), {}};
    for (auto& [q, tight] : found)
        if (out.facets.add(q)) out.incidence.push_back(std::move(tight));
    return out;
}

}  // namespace k33cut
